#include "boxchrom/geometry.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace bxc {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OverlappingBoxes: return "OverlappingBoxes";
    case ErrorCode::EmptyRegion: return "EmptyRegion";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::MissingVertex: return "MissingVertex";
    case ErrorCode::Timeout: return "Timeout";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InternalError: return "InternalError";
    case ErrorCode::RealizationError: return "RealizationError";
    case ErrorCode::StructureError: return "StructureError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SolverCrash: return "SolverCrash";
    case ErrorCode::Infeasible: return "Infeasible";
  }
  return "UnknownError";
}

Coord overlap(const Interval& a, const Interval& b) {
  return std::min(a.hi, b.hi) - std::max(a.lo, b.lo);
}

Coord Box::min_side() const {
  return std::min({side(0), side(1), side(2)});
}

Coord Box::surface() const {
  Coord x = side(0), y = side(1), z = side(2);
  return 2 * (x * y + y * z + x * z);
}

Coord Box::volume() const {
  return side(0) * side(1) * side(2);
}

const Box* Arrangement::find(const std::string& id) const {
  for (const auto& b : boxes)
    if (b.id == id) return &b;
  return nullptr;
}

bool contact(const Box& a, const Box& b) {
  int touching = 0, positive = 0;
  for (int d = 0; d < 3; ++d) {
    Coord l = overlap(a.ext[d], b.ext[d]);
    if (l > 0)
      ++positive;
    else if (l == 0)
      ++touching;
  }
  if (positive == 3)
    throw Error(ErrorCode::OverlappingBoxes, "interiors of '" + a.id + "' and '" + b.id + "' intersect");
  // Shared boundary has positive area iff exactly one axis abuts and the
  // other two overlap with positive length.
  return touching == 1 && positive == 2;
}

std::vector<Violation> validate(const Arrangement& a) {
  std::vector<Violation> out;
  std::set<std::string> seen;
  for (const auto& b : a.boxes) {
    for (int d = 0; d < 3; ++d)
      if (b.ext[d].lo >= b.ext[d].hi) {
        out.push_back({"empty-interval", b.id, "axis " + std::to_string(d)});
        break;
      }
    if (!seen.insert(b.id).second) out.push_back({"duplicate-id", b.id, ""});
  }
  for (size_t i = 0; i < a.boxes.size(); ++i)
    for (size_t j = i + 1; j < a.boxes.size(); ++j) {
      bool disjoint = false;
      for (int d = 0; d < 3; ++d)
        if (overlap(a.boxes[i].ext[d], a.boxes[j].ext[d]) <= 0) disjoint = true;
      if (!disjoint) out.push_back({"overlap", a.boxes[i].id, a.boxes[j].id});
    }
  for (const auto& [name, ids] : a.regions)
    for (const auto& id : ids)
      if (!seen.count(id)) out.push_back({"unknown-region-id", name, id});
  return out;
}

std::set<std::string> region_from_probe(const Arrangement& a, const SegmentProbe& p) {
  if (p.range.length() <= 0)
    throw Error(ErrorCode::DomainError, "probe range must have positive length");
  std::set<std::string> out;
  for (const auto& b : a.boxes) {
    if (overlap(b.ext[p.axis], p.range) <= 0) continue;
    bool inside = true;
    int fi = 0;
    for (int d = 0; d < 3; ++d) {
      if (d == p.axis) continue;
      Coord c = p.fixed[fi++];
      if (c < b.ext[d].lo || c > b.ext[d].hi) inside = false;
    }
    if (inside) out.insert(b.id);
  }
  if (out.empty()) throw Error(ErrorCode::EmptyRegion, "probe intersects no box");
  return out;
}

AxisRemap AxisRemap::identity_for(const Arrangement& a) {
  AxisRemap m;
  for (int d = 0; d < 3; ++d) {
    std::set<Coord> coords;
    for (const auto& b : a.boxes) {
      coords.insert(b.ext[d].lo);
      coords.insert(b.ext[d].hi);
    }
    for (Coord c : coords) m.breakpoints[d].push_back({c, c});
  }
  return m;
}

Coord AxisRemap::apply(int axis, Coord c) const {
  const auto& bp = breakpoints[axis];
  if (bp.empty() || c < bp.front().first || c > bp.back().first)
    throw Error(ErrorCode::DomainError,
                "coordinate " + std::to_string(c) + " outside remap breakpoints on axis " + std::to_string(axis));
  auto it = std::lower_bound(bp.begin(), bp.end(), std::make_pair(c, std::numeric_limits<Coord>::min()));
  if (it != bp.end() && it->first == c) return it->second;
  auto hi = it;
  auto lo = it - 1;
  Coord num = (c - lo->first) * (hi->second - lo->second);
  Coord den = hi->first - lo->first;
  if (num % den != 0)
    throw Error(ErrorCode::DomainError,
                "remap image of " + std::to_string(c) + " is not an integer");
  return lo->second + num / den;
}

Arrangement remap(const Arrangement& a, const AxisRemap& m) {
  for (int d = 0; d < 3; ++d) {
    const auto& bp = m.breakpoints[d];
    for (size_t i = 0; i + 1 < bp.size(); ++i)
      if (bp[i].first >= bp[i + 1].first || bp[i].second >= bp[i + 1].second)
        throw Error(ErrorCode::DomainError, "remap breakpoints not strictly increasing");
  }
  Arrangement out = a;
  for (auto& b : out.boxes) {
    std::array<Interval, 3> e{};
    for (int d = 0; d < 3; ++d)
      e[m.perm[d]] = {m.apply(d, b.ext[d].lo), m.apply(d, b.ext[d].hi)};
    b.ext = e;
  }
  return out;
}

}  // namespace bxc
