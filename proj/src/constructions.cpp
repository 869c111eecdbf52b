#include "boxchrom/constructions.hpp"

#include <algorithm>
#include <random>

namespace bxc {

namespace {

Box mk(const std::string& id, Coord x0, Coord x1, Coord y0, Coord y1, Coord z0 = 0, Coord z1 = 1) {
  return Box{id, {Interval{x0, x1}, Interval{y0, y1}, Interval{z0, z1}}};
}

}  // namespace

Arrangement build_gadget_x() {
  Arrangement a;
  a.scale = 2;
  a.boxes = {
      mk("base", 0, 6, 0, 2), mk("s", 0, 6, 2, 4),   mk("c1", 0, 2, 4, 8),
      mk("c2", 2, 4, 4, 8),   mk("d1", 4, 6, 4, 6),  mk("d2", 4, 6, 6, 8),
      mk("t", 0, 6, 8, 10),
  };
  for (int i = 1; i <= 3; ++i) {
    SegmentProbe p{1, {1, 9}, {Coord(2 * i - 1), 0}};
    a.regions["X" + std::to_string(i)] = region_from_probe(a, p);
  }
  return a;
}

Arrangement build_gadget_y() {
  // Footprints in figure units (x 0..15, y 0..5), doubled below.
  struct F { const char* id; int x0, x1, y0, y1; };
  static const F fp[] = {
      {"x1_L", 0, 1, 0, 5},   {"x1_P", 1, 3, 0, 2},   {"x1_Q", 1, 3, 2, 3},
      {"x1_R", 1, 2, 3, 5},   {"x1_S", 2, 3, 3, 5},   {"x1_M", 3, 4, 0, 5},
      {"x1_N", 4, 5, 0, 5},
      {"x2_L", 5, 6, 0, 5},   {"x2_P", 6, 8, 0, 1},   {"x2_Q", 6, 8, 1, 3},
      {"x2_R", 6, 7, 3, 5},   {"x2_S", 7, 8, 3, 5},   {"x2_M", 8, 9, 0, 5},
      {"x2_N", 9, 10, 0, 5},
      {"x3_L", 10, 11, 0, 5}, {"x3_P", 11, 13, 4, 5}, {"x3_Q", 11, 13, 2, 4},
      {"x3_R", 11, 12, 0, 2}, {"x3_S", 12, 13, 0, 2}, {"x3_M", 13, 14, 0, 5},
      {"x3_N", 14, 15, 0, 5},
  };
  Arrangement a;
  a.scale = 2;
  for (const auto& f : fp) a.boxes.push_back(mk(f.id, 2 * f.x0, 2 * f.x1, 2 * f.y0, 2 * f.y1));
  for (int j = 1; j <= 3; ++j) {
    SegmentProbe p{0, {1, 29}, {Coord(2 * j + 1), 0}};
    a.regions["Y" + std::to_string(j)] = region_from_probe(a, p);
  }
  for (int c = 1; c <= 3; ++c) {
    std::set<std::string> members;
    for (const auto& b : a.boxes)
      if (b.id.rfind("x" + std::to_string(c) + "_", 0) == 0) members.insert(b.id);
    a.regions["copy_x" + std::to_string(c)] = members;
  }
  return a;
}

namespace {

std::string bottom_name(int c) { return "b" + std::to_string(c); }
std::string top_name(int i, int j) { return "t" + std::to_string(i) + "_" + std::to_string(j); }

ZStructure make_z_structure(const Arrangement& y, const ConflictGraph& gy) {
  ZStructure zs;
  std::vector<std::string> all_copies;
  for (int c = 1; c <= 7; ++c) {
    zs.bottom_copies.push_back(bottom_name(c));
    all_copies.push_back(bottom_name(c));
  }
  for (int i = 2; i <= 6; ++i)
    for (int j = 1; j <= 3; ++j) {
      zs.top_copies.push_back(top_name(i, j));
      all_copies.push_back(top_name(i, j));
    }
  for (const auto& copy : all_copies) {
    std::vector<std::string> ids;
    for (const auto& v : gy.vertices) ids.push_back(copy + "_" + v);
    zs.copy_boxes[copy] = std::move(ids);
    for (int r = 1; r <= 3; ++r) {
      std::set<std::string> reg;
      for (const auto& id : y.regions.at("Y" + std::to_string(r))) reg.insert(copy + "_" + id);
      zs.copy_regions[copy][r - 1] = std::move(reg);
    }
  }
  // Demand pattern: for T(i,j), region 1 overlaps Y_j of copies 1..i-1,
  // region 2 copy i, region 3 copies i+1..7.
  for (int i = 2; i <= 6; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int c = 1; c <= 7; ++c) {
        int k = c < i ? 1 : (c == i ? 2 : 3);
        zs.demands.push_back({top_name(i, j), k, c, j});
      }
  return zs;
}

}  // namespace

std::pair<ConflictGraph, ZStructure> build_z_abstract() {
  Arrangement y = build_gadget_y();
  ConflictGraph gy = build_graph(y);
  ZStructure zs = make_z_structure(y, gy);

  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [copy, boxes] : zs.copy_boxes) {
    for (const auto& id : boxes) ids.push_back(id);
    for (const auto& [u, v] : gy.edges)
      edges.push_back({copy + "_" + gy.vertices[u], copy + "_" + gy.vertices[v]});
  }
  for (const auto& d : zs.demands) {
    const auto& top = zs.copy_regions.at(d.top_copy)[d.top_region - 1];
    const auto& bot = zs.copy_regions.at(bottom_name(d.bottom_index))[d.bottom_region - 1];
    for (const auto& s : top)
      for (const auto& t : bot) edges.push_back({s, t});
  }
  return {ConflictGraph::from_edges(std::move(ids), edges), std::move(zs)};
}

std::pair<Arrangement, ZStructure> build_z_geometric() {
  const Coord S = 64;  // clearance factor; any S >= 43 admits the sub-bands
  Arrangement y = build_gadget_y();
  ConflictGraph gy = build_graph(y);
  ZStructure zs = make_z_structure(y, gy);

  auto copy_starts = [](int c) { return 2 * S + 31 * S * (c - 1); };  // bottom copy x offset

  Arrangement z;
  z.scale = 2 * S;
  z.floor_axis = 2;

  auto add_copy = [&](const std::string& name, const AxisRemap& m) {
    Arrangement img = remap(y, m);
    for (const auto& b : img.boxes) {
      Box nb = b;
      nb.id = name + "_" + b.id;
      z.boxes.push_back(nb);
    }
    for (int r = 1; r <= 3; ++r) {
      std::set<std::string> reg;
      for (const auto& id : img.regions.at("Y" + std::to_string(r))) reg.insert(name + "_" + id);
      z.regions[name + "_r" + std::to_string(r)] = std::move(reg);
    }
  };

  std::set<Coord> ycoords[2];
  for (const auto& b : y.boxes)
    for (int d = 0; d < 2; ++d) {
      ycoords[d].insert(b.ext[d].lo);
      ycoords[d].insert(b.ext[d].hi);
    }

  // Bottom floor: seven unrotated copies side by side along axis 0, unit
  // (i.e. S after scaling) gaps, all sharing the y region bands.
  for (int c = 1; c <= 7; ++c) {
    AxisRemap m;
    for (Coord v : ycoords[0]) m.breakpoints[0].push_back({v, v * S + copy_starts(c)});
    for (Coord v : ycoords[1]) m.breakpoints[1].push_back({v, v * S});
    m.breakpoints[2] = {{0, 0}, {1, 1}};
    add_copy(bottom_name(c), m);
  }

  // Top floor: each copy rotated ninety degrees; its length is compressed
  // into a sub-band strictly inside the scaled band of region j, and its
  // width is stretched so region 2 spans exactly bottom copy i while
  // regions 1 and 3 span the copies before and after it.
  for (int i = 2; i <= 6; ++i)
    for (int j = 1; j <= 3; ++j) {
      AxisRemap m;
      m.perm = {1, 0, 2};  // former length (axis 0) becomes axis 1
      Coord band_start = 2 * j * S + 1 + (i - 2) * 25;
      int t = 0;
      for (Coord v : ycoords[0]) m.breakpoints[0].push_back({v, band_start + t++});
      m.breakpoints[1] = {{0, 0},
                          {2, S},
                          {4, copy_starts(i)},
                          {6, copy_starts(i) + 30 * S},
                          {8, copy_starts(7) + 30 * S},
                          {10, copy_starts(7) + 31 * S}};
      m.breakpoints[2] = {{0, 1}, {1, 2}};
      add_copy(top_name(i, j), m);
    }

  // The construction is never trusted: check validity, the two-floor shape,
  // and that every abstract edge is an actual contact.
  if (!validate(z).empty())
    throw Error(ErrorCode::RealizationError, "geometric Z fails arrangement validation");
  for (const auto& b : z.boxes)
    if (!(b.ext[2] == Interval{0, 1} || b.ext[2] == Interval{1, 2}))
      throw Error(ErrorCode::RealizationError, "box '" + b.id + "' is not a 1-floor box");
  ConflictGraph gz = build_graph(z);
  ConflictGraph abstract_graph = build_z_abstract().first;
  if (!embed_check(abstract_graph, gz))
    throw Error(ErrorCode::RealizationError, "abstract edge missing from geometric contacts");
  return {std::move(z), std::move(zs)};
}

Arrangement build_figure1() {
  // Figure coordinates doubled and shifted by one unit so everything is
  // non-negative. Middle floor z=[1,2], top z=[2,3], bottom z=[0,1].
  Arrangement a;
  a.scale = 2;
  a.boxes = {
      mk("bottom", 2, 10, 2, 8, 0, 1),
      mk("mid_s", 1, 11, 1, 3, 1, 2),  mk("mid_n", 1, 11, 7, 9, 1, 2),
      mk("m1", 1, 3, 3, 7, 1, 2),      mk("m2", 3, 5, 3, 7, 1, 2),
      mk("m3a", 5, 7, 3, 5, 1, 2),     mk("m3b", 5, 7, 5, 7, 1, 2),
      mk("m4", 7, 9, 3, 7, 1, 2),      mk("m5", 9, 11, 3, 7, 1, 2),
      mk("top_w", 0, 6, 0, 10, 2, 3),  mk("top_e", 6, 12, 0, 10, 2, 3),
  };
  return a;
}

Arrangement gen_random_guillotine(std::uint64_t seed, int target,
                                  const std::array<Interval, 3>& bounding_box, Coord min_side) {
  if (target < 1 || min_side < 1)
    throw Error(ErrorCode::Infeasible, "target and min_side must be positive");
  for (const auto& iv : bounding_box)
    if (iv.length() < min_side)
      throw Error(ErrorCode::Infeasible, "bounding box thinner than min_side");
  std::mt19937_64 rng(seed);
  std::vector<std::array<Interval, 3>> cells{bounding_box};
  while (static_cast<int>(cells.size()) < target) {
    std::vector<size_t> splittable;
    for (size_t i = 0; i < cells.size(); ++i)
      for (int d = 0; d < 3; ++d)
        if (cells[i][d].length() >= 2 * min_side) {
          splittable.push_back(i);
          break;
        }
    if (splittable.empty())
      throw Error(ErrorCode::Infeasible, "no cell can be cut under the min_side constraint");
    size_t pick = splittable[rng() % splittable.size()];
    std::vector<int> axes;
    for (int d = 0; d < 3; ++d)
      if (cells[pick][d].length() >= 2 * min_side) axes.push_back(d);
    int axis = axes[rng() % axes.size()];
    Interval iv = cells[pick][axis];
    Coord span = iv.length() - 2 * min_side;
    Coord cut = iv.lo + min_side + static_cast<Coord>(rng() % static_cast<std::uint64_t>(span + 1));
    auto left = cells[pick], right = cells[pick];
    left[axis].hi = cut;
    right[axis].lo = cut;
    cells[pick] = left;
    cells.push_back(right);
  }
  Arrangement a;
  for (size_t i = 0; i < cells.size(); ++i) {
    char id[32];
    std::snprintf(id, sizeof id, "g%04zu", i);
    a.boxes.push_back(Box{id, cells[i]});
  }
  return a;
}

bool embed_check(const ConflictGraph& abstract_graph, const ConflictGraph& geometric_graph) {
  for (const auto& [u, v] : abstract_graph.edges) {
    int a = geometric_graph.index_of(abstract_graph.vertices[u]);
    int b = geometric_graph.index_of(abstract_graph.vertices[v]);
    if (a < 0 || b < 0 || !geometric_graph.has_edge(a, b)) return false;
  }
  return true;
}

}  // namespace bxc
