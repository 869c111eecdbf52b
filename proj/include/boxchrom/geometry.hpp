#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "boxchrom/error.hpp"

namespace bxc {

using Coord = std::int64_t;

/// Closed integer interval with positive length.
struct Interval {
  Coord lo = 0;
  Coord hi = 0;

  Coord length() const { return hi - lo; }
  bool operator==(const Interval&) const = default;
};

/// Length of the closed overlap of two intervals; negative when separated,
/// zero when they share exactly one point.
Coord overlap(const Interval& a, const Interval& b);

/// Axis-aligned box with integer corner coordinates.
struct Box {
  std::string id;
  std::array<Interval, 3> ext;

  Coord side(int axis) const { return ext[axis].length(); }
  Coord min_side() const;
  Coord surface() const;
  Coord volume() const;
  bool operator==(const Box&) const = default;
};

/// Finite set of pairwise interior-disjoint boxes with named regions.
struct Arrangement {
  std::vector<Box> boxes;
  std::map<std::string, std::set<std::string>> regions;
  Coord scale = 1;
  int floor_axis = 2;

  const Box* find(const std::string& id) const;
};

/// Axis-parallel segment used to carve out a region: runs along `axis` over
/// `range`, at fixed coordinates on the two remaining axes (ascending order).
struct SegmentProbe {
  int axis = 0;
  Interval range;
  std::array<Coord, 2> fixed{};
};

/// Per-axis strictly increasing piecewise-linear integer maps, optionally
/// composed with an axis permutation. Applying the remap never changes the
/// conflict graph of a valid arrangement.
struct AxisRemap {
  // breakpoints[d]: sorted (source, image) pairs, strictly increasing in both.
  std::array<std::vector<std::pair<Coord, Coord>>, 3> breakpoints;
  // Axis d of the source becomes axis perm[d] of the image.
  std::array<int, 3> perm{0, 1, 2};

  static AxisRemap identity_for(const Arrangement& a);
  Coord apply(int axis, Coord c) const;
};

struct Violation {
  std::string kind;  // "overlap", "empty-interval", "duplicate-id", "unknown-region-id"
  std::string a;
  std::string b;
};

/// True iff the boxes share a positive-area piece of wall, floor or ceiling.
/// Edge- and corner-touching do not count. Throws on overlapping interiors.
bool contact(const Box& a, const Box& b);

/// Checks every Arrangement invariant; empty result means valid.
std::vector<Violation> validate(const Arrangement& a);

/// Ids of boxes meeting the probe segment in a set of positive length.
/// Throws EmptyRegion when no box qualifies.
std::set<std::string> region_from_probe(const Arrangement& a, const SegmentProbe& p);

/// Applies the remap to every coordinate; ids and regions carry over.
Arrangement remap(const Arrangement& a, const AxisRemap& m);

}  // namespace bxc
