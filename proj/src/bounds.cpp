#include "boxchrom/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

namespace bxc {

namespace {

// Exact <=4 coloring of each component of the induced subgraph, all
// components sharing one private palette starting at `offset`. More than 4
// colors would contradict per-level planarity and is trapped as a defect.
int color_part(const ConflictGraph& whole, const std::vector<int>& members, int offset,
               Coloring& out) {
  if (members.empty()) return 0;
  ConflictGraph part = whole.induced(members);
  int widest = 0;
  for (const auto& comp : components(part)) {
    ConflictGraph sub = part.induced(comp);
    auto c = k_colorable(sub, 4);
    if (!c)
      throw Error(ErrorCode::InternalError,
                  "a single-level component needed more than 4 colors");
    for (const auto& [id, col] : *c) {
      out[id] = col + offset;
      widest = std::max(widest, col + 1);
    }
  }
  return widest;
}

std::vector<int> box_indices(const ConflictGraph& g, const std::vector<const Box*>& boxes) {
  std::vector<int> idx;
  for (const Box* b : boxes) idx.push_back(g.index_of(b->id));
  return idx;
}

struct LevelResult {
  Coloring coloring;
  std::vector<PartStat> parts;
  int palette = 0;  // highest color used + 1, relative to offset 0
};

LevelResult level_core(const Arrangement&, const ConflictGraph& g,
                       const std::vector<const Box*>& boxes, int axis, long long ell,
                       int offset) {
  for (const Box* b : boxes)
    if (b->side(axis) > ell)
      throw Error(ErrorCode::PreconditionViolated,
                  "box '" + b->id + "' has side " + std::to_string(b->side(axis)) +
                      " > ell on axis " + std::to_string(axis));
  LevelResult r;
  std::map<long long, std::vector<const Box*>> by_residue;
  for (const Box* b : boxes) {
    long long lvl = b->ext[axis].lo;
    long long k = ((lvl % (ell + 1)) + (ell + 1)) % (ell + 1);
    by_residue[k].push_back(b);
  }
  for (auto& [k, part_boxes] : by_residue) {
    int part_offset = offset + 4 * static_cast<int>(k);
    int width = color_part(g, box_indices(g, part_boxes), part_offset, r.coloring);
    r.parts.push_back({"P" + std::to_string(k), static_cast<int>(part_boxes.size()), width});
    r.palette = std::max(r.palette, 4 * static_cast<int>(k) + width);
  }
  return r;
}

std::vector<const Box*> all_boxes(const Arrangement& a) {
  std::vector<const Box*> out;
  for (const auto& b : a.boxes) out.push_back(&b);
  return out;
}

struct OwnDimResult {
  Coloring coloring;
  std::vector<PartStat> parts;
  int palette = 0;
};

OwnDimResult own_dim_core(const Arrangement& a, const ConflictGraph& g,
                          const std::vector<const Box*>& boxes, long long ell, int offset) {
  std::array<std::vector<const Box*>, 3> groups;
  for (const Box* b : boxes) {
    int d = -1;
    for (int axis = 0; axis < 3; ++axis)
      if (b->side(axis) <= ell) {
        d = axis;
        break;
      }
    if (d < 0)
      throw Error(ErrorCode::PreconditionViolated,
                  "box '" + b->id + "' has no side <= " + std::to_string(ell));
    groups[d].push_back(b);
  }
  OwnDimResult r;
  int group_width = 4 * static_cast<int>(ell + 1);
  for (int d = 0; d < 3; ++d) {
    if (groups[d].empty()) continue;
    auto lr = level_core(a, g, groups[d], d, ell, offset + d * group_width);
    for (const auto& [id, c] : lr.coloring) r.coloring[id] = c;
    r.parts.push_back({"U" + std::to_string(d), static_cast<int>(groups[d].size()), lr.palette});
    r.palette = std::max(r.palette, d * group_width + lr.palette);
  }
  return r;
}

// Part offsets leave gaps in the palette; emit the compact coloring (rank of
// each used color). Properness and every cap are preserved.
int normalize(Coloring& c) {
  std::map<int, int> rank;
  for (const auto& [id, col] : c) rank[col] = 0;
  int next = 0;
  for (auto& [col, r] : rank) r = next++;
  for (auto& [id, col] : c) col = rank[col];
  return next;
}

long long pick_ell(double target, const std::function<double(long long)>& cost) {
  long long lo = std::max<long long>(1, static_cast<long long>(std::floor(target)));
  long long hi = std::max<long long>(1, static_cast<long long>(std::ceil(target)));
  return cost(lo) <= cost(hi) ? lo : hi;
}

}  // namespace

std::pair<Coloring, StrategyReport> color_by_level(const Arrangement& a, int axis, long long ell) {
  if (ell < 1) throw Error(ErrorCode::PreconditionViolated, "ell must be >= 1");
  ConflictGraph g = build_graph(a);
  auto lr = level_core(a, g, all_boxes(a), axis, ell, 0);
  StrategyReport rep;
  rep.strategy = "level";
  rep.ell = ell;
  rep.measure_name = "ell";
  rep.measure_value = ell;
  if (lr.palette > 4 * (ell + 1))
    throw Error(ErrorCode::InternalError, "level palette exceeds 4(ell+1)");
  rep.palette = normalize(lr.coloring);
  rep.cap_integer = 4 * (ell + 1);
  rep.cap_closed_form = static_cast<double>(4 * (ell + 1));
  rep.parts = lr.parts;
  rep.closed_form_ok = rep.palette <= rep.cap_closed_form;
  return {lr.coloring, rep};
}

std::pair<Coloring, StrategyReport> color_by_own_dim(const Arrangement& a, long long ell) {
  if (ell < 1) throw Error(ErrorCode::PreconditionViolated, "ell must be >= 1");
  ConflictGraph g = build_graph(a);
  auto r = own_dim_core(a, g, all_boxes(a), ell, 0);
  StrategyReport rep;
  rep.strategy = "own-dim";
  rep.ell = ell;
  rep.measure_name = "ell";
  rep.measure_value = ell;
  if (r.palette > 12 * (ell + 1))
    throw Error(ErrorCode::InternalError, "own-dim palette exceeds 12(ell+1)");
  rep.palette = normalize(r.coloring);
  rep.cap_integer = 12 * (ell + 1);
  rep.cap_closed_form = static_cast<double>(12 * (ell + 1));
  rep.parts = r.parts;
  rep.closed_form_ok = rep.palette <= rep.cap_closed_form;
  return {r.coloring, rep};
}

namespace {

// Shared tail of the surface strategy: thin boxes (min side < ell) through
// the own-dimension procedure, thick boxes greedily by degeneracy.
struct SurfaceRun {
  Coloring coloring;
  std::vector<PartStat> parts;
  int palette = 0;
  long long ell = 0;
  long long cap_integer = 0;
  long long u_degeneracy = 0;
};

SurfaceRun surface_core(const Arrangement& a, const ConflictGraph& g,
                        const std::vector<const Box*>& boxes, long long s, int offset) {
  for (const Box* b : boxes)
    if (b->surface() > s)
      throw Error(ErrorCode::PreconditionViolated,
                  "box '" + b->id + "' has surface " + std::to_string(b->surface()) + " > s");
  SurfaceRun r;
  r.ell = pick_ell(std::cbrt(s / 2.0), [s](long long l) {
    return 12.0 * l + 3.0 * s / (static_cast<double>(l) * l) + 13.0;
  });
  long long ell = r.ell;

  std::vector<const Box*> thin, thick;
  for (const Box* b : boxes) (b->min_side() < ell ? thin : thick).push_back(b);

  int thin_width = 0;
  if (!thin.empty()) {
    // min side < ell with integer sides means <= ell - 1; 12*ell colors.
    auto od = own_dim_core(a, g, thin, ell - 1, offset);
    for (const auto& [id, c] : od.coloring) r.coloring[id] = c;
    thin_width = od.palette;
  }
  r.parts.push_back({"R", static_cast<int>(thin.size()), thin_width});

  int thick_offset = offset + 12 * static_cast<int>(ell);
  int thick_width = 0;
  if (!thick.empty()) {
    ConflictGraph u = g.induced(box_indices(g, thick));
    auto elim = degeneracy(u);
    r.u_degeneracy = elim.degeneracy;
    // The proof's per-box neighbor count: deg <= 3s/ell^2 + 12, exactly.
    if (static_cast<long long>(elim.degeneracy) * ell * ell > 3 * s + 12 * ell * ell)
      throw Error(ErrorCode::InternalError, "degeneracy of U exceeds 3s/ell^2 + 12");
    for (const Box* b : thick) {
      Coord sum = b->side(0) + b->side(1) + b->side(2);
      if (2 * ell * sum > b->surface())
        throw Error(ErrorCode::InternalError, "surface counting bound violated for " + b->id);
    }
    Coloring greedy = greedy_degeneracy_coloring(u);
    for (const auto& [id, c] : greedy) r.coloring[id] = c + thick_offset;
    thick_width = palette_size(greedy);
  }
  r.parts.push_back({"U", static_cast<int>(thick.size()), thick_width});

  r.palette = std::max(thin_width, 12 * static_cast<int>(ell) + thick_width);
  r.cap_integer = 12 * ell + (3 * s) / (ell * ell) + 13;
  if (r.palette > r.cap_integer)
    throw Error(ErrorCode::InternalError, "surface palette exceeds 12 ell + 3s/ell^2 + 13");
  return r;
}

}  // namespace

std::pair<Coloring, StrategyReport> color_by_surface(const Arrangement& a, long long s) {
  if (s < 6) throw Error(ErrorCode::PreconditionViolated, "s must be at least 6");
  ConflictGraph g = build_graph(a);
  auto r = surface_core(a, g, all_boxes(a), s, 0);
  StrategyReport rep;
  rep.strategy = "surface";
  rep.ell = r.ell;
  rep.measure_name = "s";
  rep.measure_value = s;
  rep.palette = normalize(r.coloring);
  rep.cap_integer = r.cap_integer;
  rep.cap_closed_form = 9.0 * std::cbrt(4.0 * s) + 13.0;
  rep.closed_form_ok = rep.palette <= rep.cap_closed_form;
  rep.parts = r.parts;
  return {r.coloring, rep};
}

std::pair<Coloring, StrategyReport> color_by_volume(const Arrangement& a, long long v) {
  if (v < 1) throw Error(ErrorCode::PreconditionViolated, "v must be >= 1");
  ConflictGraph g = build_graph(a);
  for (const auto& b : a.boxes)
    if (b.volume() > v)
      throw Error(ErrorCode::PreconditionViolated,
                  "box '" + b.id + "' has volume " + std::to_string(b.volume()) + " > v");
  long long ell = pick_ell(std::pow(3.0 * v / 8.0, 0.25), [v](long long l) {
    return 9.0 * std::cbrt(24.0 * v / l) + 12.0 * l + 13.0;
  });

  std::vector<const Box*> thin, thick;
  for (const auto& b : a.boxes) (b.min_side() < ell ? thin : thick).push_back(&b);

  Coloring coloring;
  int thin_width = 0;
  if (!thin.empty()) {
    auto od = own_dim_core(a, g, thin, ell - 1, 0);
    coloring = od.coloring;
    thin_width = od.palette;
  }

  // Every thick box has surface at most 6v/ell; color that part through the
  // surface procedure with a disjoint palette.
  long long s_bound = (6 * v) / ell;
  int thick_offset = 12 * static_cast<int>(ell);
  SurfaceRun sr;
  if (!thick.empty()) {
    for (const Box* b : thick)
      if (b->surface() * ell > 6 * v)
        throw Error(ErrorCode::InternalError, "thick box exceeds the 6v/ell surface bound");
    sr = surface_core(a, g, thick, s_bound, thick_offset);
    for (const auto& [id, c] : sr.coloring) coloring[id] = c;
  }

  StrategyReport rep;
  rep.strategy = "volume";
  rep.ell = ell;
  rep.measure_name = "v";
  rep.measure_value = v;
  int raw_palette = std::max(thin_width, thick.empty() ? 0 : thick_offset + sr.palette);
  rep.cap_integer = 12 * ell + (thick.empty() ? 13 : sr.cap_integer);
  if (raw_palette > rep.cap_integer)
    throw Error(ErrorCode::InternalError, "volume palette exceeds its integer-ell cap");
  rep.palette = normalize(coloring);
  rep.cap_closed_form = 9.0 * std::cbrt(24.0 * v / ell) + 12.0 * ell + 13.0;
  rep.closed_form_ok = rep.palette <= rep.cap_closed_form;
  rep.parts.push_back({"R", static_cast<int>(thin.size()), thin_width});
  rep.parts.push_back({"U", static_cast<int>(thick.size()),
                       thick.empty() ? 0 : sr.palette});
  return {coloring, rep};
}

}  // namespace bxc
