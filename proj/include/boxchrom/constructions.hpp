#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "boxchrom/conflict.hpp"
#include "boxchrom/geometry.hpp"

namespace bxc {

/// One required complete-bipartite overlap between a top copy's region and a
/// bottom copy's region.
struct ZDemand {
  std::string top_copy;  // e.g. "t3_2"
  int top_region = 0;    // k in 1..3
  int bottom_index = 0;  // bottom copy number, 1..7
  int bottom_region = 0; // j in 1..3
};

/// Copy layout of the two-floor arrangement: which box ids form each copy,
/// the per-copy region id-sets, and the demanded overlaps.
struct ZStructure {
  std::vector<std::string> bottom_copies;  // "b1".."b7"
  std::vector<std::string> top_copies;     // "t{i}_{j}", i in 2..6, j in 1..3
  // copy name -> box ids, in the canonical order of the reference gadget.
  std::map<std::string, std::vector<std::string>> copy_boxes;
  // copy name -> the three region id-sets (index 0 = region 1).
  std::map<std::string, std::array<std::set<std::string>, 3>> copy_regions;
  std::vector<ZDemand> demands;
};

/// The 7-box building brick with regions X1, X2, X3. Coordinates are doubled
/// so the region probes land on integer midlines (scale = 2).
Arrangement build_gadget_x();

/// Three side-by-side copies of the brick with full-length regions Y1..Y3.
/// Copy membership is stored as regions "copy_x1".."copy_x3".
Arrangement build_gadget_y();

/// 22 disjoint copies of the Y conflict graph plus all demanded overlap edges
/// (complete bipartite per demand). No geometry.
std::pair<ConflictGraph, ZStructure> build_z_abstract();

/// Integer-coordinate two-floor realization of the same structure; every
/// demand is realized as actual face-to-face contacts. Never trusted blindly:
/// throws RealizationError if the post-hoc embed check fails.
std::pair<Arrangement, ZStructure> build_z_geometric();

/// The three-floor, 11-box arrangement with chromatic number 6.
Arrangement build_figure1();

/// Recursive axis-aligned cuts of the bounding box at uniform integer
/// positions until `target` boxes exist; deterministic in the seed.
Arrangement gen_random_guillotine(std::uint64_t seed, int target,
                                  const std::array<Interval, 3>& bounding_box,
                                  Coord min_side);

/// Checks that every abstract edge maps to a geometric contact.
bool embed_check(const ConflictGraph& abstract_graph, const ConflictGraph& geometric_graph);

}  // namespace bxc
