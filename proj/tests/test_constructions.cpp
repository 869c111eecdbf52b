#include "boxchrom/constructions.hpp"

#include <map>
#include <set>

#include "boxchrom/json_io.hpp"
#include "boxchrom/solver.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "testutil.hpp"

using namespace bxc;

TEST_CASE("brick and three-brick gadgets are valid arrangements") {
  Arrangement x = build_gadget_x();
  CHECK(validate(x).empty());
  CHECK(x.boxes.size() == 7);
  CHECK(x.scale == 2);
  Arrangement y = build_gadget_y();
  CHECK(validate(y).empty());
  CHECK(y.boxes.size() == 21);
  for (int c = 1; c <= 3; ++c)
    CHECK(y.regions.at("copy_x" + std::to_string(c)).size() == 7);
}

TEST_CASE("abstract two-floor structure has the expected shape") {
  auto [g, zs] = build_z_abstract();
  CHECK(zs.bottom_copies.size() == 7);
  CHECK(zs.top_copies.size() == 15);
  CHECK(zs.copy_boxes.size() == 22);
  CHECK(zs.demands.size() == 105);  // 15 top copies x 7 bottom copies
  CHECK(g.n() == 462);

  // Edge count: 22 disjoint copies of the 35-edge gadget graph plus one
  // complete bipartite block per demand; no two blocks share a vertex pair.
  Arrangement y = build_gadget_y();
  std::array<long long, 3> sz{static_cast<long long>(y.regions.at("Y1").size()),
                              static_cast<long long>(y.regions.at("Y2").size()),
                              static_cast<long long>(y.regions.at("Y3").size())};
  long long expect = 22 * 35;
  for (const auto& d : zs.demands) expect += sz[d.top_region - 1] * sz[d.bottom_region - 1];
  CHECK(g.m() == expect);
  CHECK(g.m() == 18905);

  // Every demand's abstract edges are present.
  for (const auto& d : zs.demands) {
    const auto& top = zs.copy_regions.at(d.top_copy)[d.top_region - 1];
    const auto& bot =
        zs.copy_regions.at("b" + std::to_string(d.bottom_index))[d.bottom_region - 1];
    for (const auto& s : top)
      for (const auto& t : bot) CHECK(g.has_edge(g.index_of(s), g.index_of(t)));
  }
}

TEST_CASE("geometric realization is valid, two-floored and faithful") {
  auto [z, zs] = build_z_geometric();
  CHECK(validate(z).empty());
  CHECK(z.boxes.size() == 462);
  CHECK(z.floor_axis == 2);
  int bottom = 0, top = 0;
  for (const auto& b : z.boxes) {
    bool lo = b.ext[2] == Interval{0, 1}, hi = b.ext[2] == Interval{1, 2};
    CHECK((lo || hi));
    (lo ? bottom : top)++;
  }
  CHECK(bottom == 7 * 21);
  CHECK(top == 15 * 21);

  ConflictGraph gz = build_graph(z);
  ConflictGraph ga = build_z_abstract().first;
  CHECK(embed_check(ga, gz));

  // Independent geometric check: every demanded pair is a face contact per
  // the reference oracle, straight from the coordinates.
  std::map<std::string, const Box*> by_id;
  for (const auto& b : z.boxes) by_id[b.id] = &b;
  for (const auto& d : zs.demands) {
    const auto& top_reg = zs.copy_regions.at(d.top_copy)[d.top_region - 1];
    const auto& bot_reg =
        zs.copy_regions.at("b" + std::to_string(d.bottom_index))[d.bottom_region - 1];
    for (const auto& s : top_reg)
      for (const auto& t : bot_reg) CHECK(oracle::contact(*by_id.at(s), *by_id.at(t)));
  }
}

TEST_CASE("embed_check detects a missing contact") {
  ConflictGraph a = ConflictGraph::from_edges({"p", "q"}, {{"p", "q"}});
  ConflictGraph b = ConflictGraph::from_edges({"p", "q"}, {});
  CHECK_FALSE(embed_check(a, b));
  CHECK(embed_check(b, a));
  ConflictGraph c = ConflictGraph::from_edges({"p"}, {});
  CHECK_FALSE(embed_check(a, c));
}

TEST_CASE("three-floor example has chromatic number 6") {
  Arrangement f = build_figure1();
  CHECK(validate(f).empty());
  CHECK(f.boxes.size() == 11);
  ConflictGraph g = build_graph(f);
  // The bottom box touches all eight middle-floor boxes.
  int b = g.index_of("bottom");
  int middle_contacts = 0;
  for (const auto& box : f.boxes)
    if (box.ext[2] == Interval{1, 2} && g.has_edge(b, g.index_of(box.id))) ++middle_contacts;
  CHECK(middle_contacts == 8);
  CHECK(chromatic_number(g).first == 6);
}

TEST_CASE("guillotine generator is deterministic and respects its limits") {
  std::array<Interval, 3> bb{Interval{0, 30}, Interval{0, 30}, Interval{0, 30}};
  Arrangement a = gen_random_guillotine(42, 25, bb, 2);
  Arrangement b = gen_random_guillotine(42, 25, bb, 2);
  CHECK(arrangement_to_json(a).dump() == arrangement_to_json(b).dump());
  Arrangement c = gen_random_guillotine(43, 25, bb, 2);
  CHECK(arrangement_to_json(a).dump() != arrangement_to_json(c).dump());

  CHECK(a.boxes.size() == 25);
  CHECK(validate(a).empty());
  long long volume = 0;
  for (const auto& box : a.boxes) {
    CHECK(box.min_side() >= 2);
    for (int d = 0; d < 3; ++d) {
      CHECK(box.ext[d].lo >= bb[d].lo);
      CHECK(box.ext[d].hi <= bb[d].hi);
    }
    volume += box.volume();
  }
  CHECK(volume == 30LL * 30 * 30);  // cells tile the bounding box

  CHECK_ERROR(gen_random_guillotine(1, 0, bb, 1), Infeasible);
  CHECK_ERROR(gen_random_guillotine(1, 10, bb, 0), Infeasible);
  std::array<Interval, 3> tiny{Interval{0, 3}, Interval{0, 3}, Interval{0, 3}};
  CHECK_ERROR(gen_random_guillotine(1, 100, tiny, 2), Infeasible);
}
