#include "boxchrom/conflict.hpp"

#include <algorithm>
#include <set>

#include "boxchrom/constructions.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "testutil.hpp"

using namespace bxc;

namespace {

std::set<std::pair<std::string, std::string>> edge_ids(const ConflictGraph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [u, v] : g.edges) {
    auto p = std::minmax(g.vertices[u], g.vertices[v]);
    out.insert({p.first, p.second});
  }
  return out;
}

}  // namespace

TEST_CASE("seven-box brick graph matches its frozen edge list") {
  Arrangement x = build_gadget_x();
  ConflictGraph g = build_graph(x);
  CHECK(g.n() == 7);
  CHECK(g.m() == 11);
  std::set<std::pair<std::string, std::string>> golden = {
      {"base", "s"}, {"c1", "s"},  {"c2", "s"}, {"d1", "s"}, {"c1", "c2"}, {"c2", "d1"},
      {"c2", "d2"},  {"d1", "d2"}, {"c1", "t"}, {"c2", "t"}, {"d2", "t"},
  };
  std::set<std::pair<std::string, std::string>> want;
  for (auto [a, b] : golden) want.insert(std::minmax(a, b));
  CHECK(edge_ids(g) == want);
  CHECK(edge_ids(g) == oracle::contact_pairs(x));
  // Region sizes behind the three probes.
  CHECK(x.regions.at("X1").size() == 4);
  CHECK(x.regions.at("X2").size() == 4);
  CHECK(x.regions.at("X3").size() == 5);
}

TEST_CASE("build_graph refuses invalid arrangements") {
  Arrangement a;
  a.boxes = {Box{"p", {Interval{0, 2}, Interval{0, 2}, Interval{0, 2}}},
             Box{"q", {Interval{1, 3}, Interval{0, 2}, Interval{0, 2}}}};
  CHECK_ERROR(build_graph(a), OverlappingBoxes);
}

TEST_CASE("index, adjacency and induced subgraphs are consistent") {
  ConflictGraph g = build_graph(build_gadget_x());
  CHECK(std::is_sorted(g.vertices.begin(), g.vertices.end()));
  for (int v = 0; v < g.n(); ++v) {
    CHECK(g.index_of(g.vertices[v]) == v);
    CHECK(std::is_sorted(g.adj[v].begin(), g.adj[v].end()));
  }
  CHECK(g.index_of("nope") == -1);
  CHECK(g.has_edge(g.index_of("base"), g.index_of("s")));
  CHECK_FALSE(g.has_edge(g.index_of("base"), g.index_of("t")));

  std::vector<int> keep = {g.index_of("c1"), g.index_of("c2"), g.index_of("t")};
  ConflictGraph h = g.induced(keep);
  CHECK(h.n() == 3);
  CHECK(h.m() == 3);  // c1-c2, c1-t, c2-t form a triangle
}

TEST_CASE("from_edges deduplicates and validates endpoints") {
  auto g = ConflictGraph::from_edges({"a", "b", "c"}, {{"a", "b"}, {"b", "a"}, {"a", "a"}});
  CHECK(g.n() == 3);
  CHECK(g.m() == 1);
  CHECK_ERROR(ConflictGraph::from_edges({"a"}, {{"a", "zz"}}), MissingVertex);
}

TEST_CASE("degeneracy of the brick graph is 3") {
  ConflictGraph g = build_graph(build_gadget_x());
  auto r = degeneracy(g);
  CHECK(r.degeneracy == 3);
  CHECK(r.order.size() == static_cast<size_t>(g.n()));
}

TEST_CASE("four mutually touching boxes give clique number 4") {
  Arrangement a;
  auto mk = [](const char* id, Coord x0, Coord x1, Coord y0, Coord y1, Coord z0, Coord z1) {
    return Box{id, {Interval{x0, x1}, Interval{y0, y1}, Interval{z0, z1}}};
  };
  a.boxes = {mk("p", 0, 4, 0, 2, 0, 1), mk("q", 0, 2, 2, 4, 0, 1), mk("r", 2, 4, 2, 4, 0, 1),
             mk("lid", 0, 4, 0, 4, 1, 2)};
  ConflictGraph g = build_graph(a);
  CHECK(g.m() == 6);
  CHECK(max_clique(g) == 4);
  auto w = max_clique_witness(g);
  REQUIRE(w.size() == 4);
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j) CHECK(g.has_edge(w[i], w[j]));
}

TEST_CASE("components separate far-apart boxes") {
  Arrangement a;
  a.boxes = {Box{"p", {Interval{0, 2}, Interval{0, 2}, Interval{0, 2}}},
             Box{"q", {Interval{10, 12}, Interval{0, 2}, Interval{0, 2}}}};
  ConflictGraph g = build_graph(a);
  CHECK(components(g).size() == 2);
  CHECK(components(build_graph(build_gadget_x())).size() == 1);
}

TEST_CASE("dot and edge-list exports are deterministic and complete") {
  ConflictGraph g = build_graph(build_gadget_x());
  std::string dot = export_dot(g);
  CHECK(dot.rfind("graph conflict {", 0) == 0);
  CHECK(std::count(dot.begin(), dot.end(), ';') == g.n() + g.m());
  CHECK(dot == export_dot(g));
  std::string edges = export_edges_json(g);
  CHECK(edges.find("\"vertices\"") != std::string::npos);
  CHECK(edges == export_edges_json(g));
}

TEST_CASE("three-brick gadget matches its frozen counts") {
  Arrangement y = build_gadget_y();
  REQUIRE(validate(y).empty());
  ConflictGraph g = build_graph(y);
  CHECK(g.n() == 21);
  CHECK(g.m() == 35);
  CHECK(edge_ids(g) == oracle::contact_pairs(y));
  CHECK(y.regions.at("Y1").size() == 13);
  CHECK(y.regions.at("Y2").size() == 12);
  CHECK(y.regions.at("Y3").size() == 14);
  // Exactly two boxes lie outside all three regions.
  std::set<std::string> uncovered;
  for (const auto& b : y.boxes) {
    bool in = false;
    for (int j = 1; j <= 3; ++j)
      if (y.regions.at("Y" + std::to_string(j)).count(b.id)) in = true;
    if (!in) uncovered.insert(b.id);
  }
  CHECK(uncovered == std::set<std::string>{"x2_P", "x3_P"});
}
