#include "boxchrom/certify.hpp"

#include <algorithm>

#include "boxchrom/json_io.hpp"

namespace bxc {

Signature signature(const Coloring& c, const std::set<std::string>& a1,
                    const std::set<std::string>& a2, const std::set<std::string>& a3) {
  auto colors_of = [&](const std::set<std::string>& ids) {
    std::set<int> out;
    for (const auto& id : ids) {
      auto it = c.find(id);
      if (it == c.end()) throw Error(ErrorCode::MissingVertex, "no color for box '" + id + "'");
      out.insert(it->second);
    }
    return out;
  };
  std::set<int> c1 = colors_of(a1), c2 = colors_of(a2), c3 = colors_of(a3);
  auto union_size = [](const std::set<int>& a, const std::set<int>& b) {
    std::set<int> u = a;
    u.insert(b.begin(), b.end());
    return static_cast<int>(u.size());
  };
  return {static_cast<int>(c1.size()), union_size(c1, c2), static_cast<int>(c2.size()),
          union_size(c2, c3), static_cast<int>(c3.size())};
}

bool signature_geq(const Signature& s, const Signature& t) {
  return s.c1 >= t.c1 && s.c12 >= t.c12 && s.c2 >= t.c2 && s.c23 >= t.c23 && s.c3 >= t.c3;
}

// Threshold signatures of the building brick, transcribed from its three
// coloring classes.
static const Signature kClaim1Thresholds[3] = {
    {3, 3, 2, 4, 4}, {3, 4, 3, 3, 2}, {2, 3, 3, 4, 3}};

Claim1Result check_claim1(const Arrangement& x) {
  for (const char* r : {"X1", "X2", "X3"})
    if (!x.regions.count(r))
      throw Error(ErrorCode::StructureError, std::string("arrangement lacks region ") + r);
  ConflictGraph g = build_graph(x);
  const auto& a1 = x.regions.at("X1");
  const auto& a2 = x.regions.at("X2");
  const auto& a3 = x.regions.at("X3");
  Claim1Result res;
  res.pass = true;
  res.enumerated = enumerate_proper_colorings(g, [&](const Coloring& c) {
    if (!res.pass) return;
    Signature s = signature(c, a1, a2, a3);
    bool dominated = false;
    for (const auto& t : kClaim1Thresholds)
      if (signature_geq(s, t)) dominated = true;
    if (!dominated) {
      res.pass = false;
      res.counterexample = c;
    }
  });
  return res;
}

Claim2Result check_claim2(const Arrangement& y, const SolveOptions& opts) {
  for (const char* r : {"Y1", "Y2", "Y3"})
    if (!y.regions.count(r))
      throw Error(ErrorCode::StructureError, std::string("arrangement lacks region ") + r);
  ConflictGraph g = build_graph(y);
  std::map<std::string, std::set<std::string>> regions{
      {"Y1", y.regions.at("Y1")}, {"Y2", y.regions.at("Y2")}, {"Y3", y.regions.at("Y3")}};
  CapConstraint caps{{"Y1", 3}, {"Y2", 3}, {"Y3", 3}};
  SolveStats stats;
  auto witness = capped_coloring(g, regions, caps, opts, &stats);
  Claim2Result res;
  res.nodes = stats.nodes;
  res.pass = !witness.has_value();
  if (witness) res.counterexample = *witness;
  return res;
}

bool full_overlap(const ConflictGraph& g, const std::set<std::string>& s,
                  const std::set<std::string>& t) {
  if (s.empty() || t.empty()) throw Error(ErrorCode::EmptyRegion, "full_overlap on empty set");
  for (const auto& a : s)
    for (const auto& b : t) {
      int u = g.index_of(a), v = g.index_of(b);
      if (u < 0 || v < 0)
        throw Error(ErrorCode::MissingVertex, "id not in graph: " + (u < 0 ? a : b));
      if (u == v || !g.has_edge(u, v)) return false;
    }
  return true;
}

Certificate verify_composition(const ZStructure& zs, const ConflictGraph& g) {
  // Premise (a): every copy is graph-identical to the gadget Y, with the
  // same region sets under the copy bijection.
  ConflictGraph gy = build_graph(build_gadget_y());
  Arrangement y = build_gadget_y();
  long long copies_checked = 0;
  for (const auto& [copy, boxes] : zs.copy_boxes) {
    if (static_cast<int>(boxes.size()) != gy.n())
      throw Error(ErrorCode::StructureError, "premise (a): copy " + copy + " has wrong size");
    std::vector<int> idx;
    for (const auto& id : boxes) {
      int v = g.index_of(id);
      if (v < 0) throw Error(ErrorCode::StructureError, "premise (a): missing box " + id);
      idx.push_back(v);
    }
    for (int u = 0; u < gy.n(); ++u)
      for (int v = u + 1; v < gy.n(); ++v)
        if (gy.has_edge(u, v) != g.has_edge(idx[u], idx[v]))
          throw Error(ErrorCode::StructureError,
                      "premise (a): copy " + copy + " is not graph-identical to Y");
    for (int r = 1; r <= 3; ++r) {
      const auto& want = y.regions.at("Y" + std::to_string(r));
      const auto& have = zs.copy_regions.at(copy)[r - 1];
      for (int i = 0; i < gy.n(); ++i)
        if (want.count(gy.vertices[i]) != have.count(boxes[i]))
          throw Error(ErrorCode::StructureError,
                      "premise (a): region " + std::to_string(r) + " of " + copy + " mismatched");
    }
    ++copies_checked;
  }

  // Premise (b): for every j and every middle index, the three regions of
  // the corresponding top copy fully overlap the bottom regions before, at
  // and after it. This covers every triple i1 < i2 < i3.
  int nb = static_cast<int>(zs.bottom_copies.size());
  long long overlaps_checked = 0;
  for (int j = 1; j <= 3; ++j)
    for (int i = 2; i <= nb - 1; ++i) {
      std::string top = "t" + std::to_string(i) + "_" + std::to_string(j);
      if (!zs.copy_regions.count(top))
        throw Error(ErrorCode::StructureError, "premise (b): top copy " + top + " absent");
      for (int c = 1; c <= nb; ++c) {
        int k = c < i ? 1 : (c == i ? 2 : 3);
        const auto& treg = zs.copy_regions.at(top)[k - 1];
        const auto& breg = zs.copy_regions.at(zs.bottom_copies[c - 1])[j - 1];
        if (!full_overlap(g, treg, breg))
          throw Error(ErrorCode::StructureError,
                      "premise (b): region " + std::to_string(k) + " of " + top +
                          " does not fully overlap Y" + std::to_string(j) + " of copy " +
                          std::to_string(c));
        ++overlaps_checked;
      }
    }

  // Premise (c): enough bottom copies for the pigeonhole step (3*3 - 2).
  if (nb < 7)
    throw Error(ErrorCode::StructureError,
                "premise (c): only " + std::to_string(nb) + " bottom copies, need 7");

  Certificate cert;
  cert["copies_checked"] = copies_checked;
  cert["overlaps_checked"] = overlaps_checked;
  cert["bottom_copies"] = nb;
  cert["pigeonhole_bound"] = 3 * 3 - 2;
  cert["graph_hash"] = g.source_hash;
  cert["conclusion"] = {{"chi_lower", 8}};
  return cert;
}

Certificate certify_z(const CertifyOptions& opts) {
  Certificate cert;

  Arrangement x = build_gadget_x();
  Claim1Result c1 = check_claim1(x);
  cert["claim1"] = {{"pass", c1.pass}, {"enumerated", c1.enumerated}};
  if (!c1.pass) throw Error(ErrorCode::StructureError, "certify_z failed at stage claim1");

  Arrangement y = build_gadget_y();
  Claim2Result c2 = check_claim2(y, opts.solve);
  cert["claim2"] = {{"pass", c2.pass}, {"nodes", c2.nodes}};
  if (!c2.pass) throw Error(ErrorCode::StructureError, "certify_z failed at stage claim2");

  auto [gabs, zs] = build_z_abstract();
  auto [zgeo, zs_geo] = build_z_geometric();
  ConflictGraph ggeo = build_graph(zgeo);
  if (!embed_check(gabs, ggeo))
    throw Error(ErrorCode::StructureError, "certify_z failed at stage embed");

  // Lower bound on the abstract graph, which the geometric graph contains.
  cert["structure"] = verify_composition(zs, gabs);
  long long geo_overlaps = 0;
  for (const auto& d : zs_geo.demands) {
    const auto& treg = zs_geo.copy_regions.at(d.top_copy)[d.top_region - 1];
    const auto& breg =
        zs_geo.copy_regions.at("b" + std::to_string(d.bottom_index))[d.bottom_region - 1];
    if (!full_overlap(ggeo, treg, breg))
      throw Error(ErrorCode::StructureError, "certify_z failed at stage geometric-overlap");
    ++geo_overlaps;
  }
  cert["structure"]["geometric_overlaps_checked"] = geo_overlaps;

  // Upper bound: 4-color each floor component by component, disjoint
  // palettes, then verify on the full geometric conflict graph.
  Coloring upper;
  for (int floor = 0; floor < 2; ++floor) {
    std::vector<int> members;
    for (const auto& b : zgeo.boxes)
      if (b.ext[2].lo == floor) members.push_back(ggeo.index_of(b.id));
    ConflictGraph sub = ggeo.induced(members);
    for (const auto& comp : components(sub)) {
      auto col = k_colorable(sub.induced(comp), 4, opts.solve);
      if (!col) throw Error(ErrorCode::StructureError, "certify_z failed at stage upper-bound");
      for (const auto& [id, c] : *col) upper[id] = c + 4 * floor;
    }
  }
  if (verify_coloring(ggeo, upper))
    throw Error(ErrorCode::StructureError, "certify_z failed at stage upper-verify");
  if (palette_size(upper) > 8)
    throw Error(ErrorCode::StructureError, "certify_z failed at stage upper-palette");
  cert["upper"] = {{"palette", palette_size(upper)},
                   {"verified", true},
                   {"coloring", coloring_to_json(ggeo, upper)}};

  cert["conclusion"] = {{"chi", 8}};
  cert["hashes"] = {{"gadget_x", content_hash(arrangement_to_json(x).dump())},
                    {"gadget_y", content_hash(arrangement_to_json(y).dump())},
                    {"z_abstract_graph", gabs.source_hash},
                    {"z_geometric", content_hash(arrangement_to_json(zgeo).dump())}};
  if (opts.export_cnf7) cert["cnf7"] = export_cnf(gabs, 7);
  return cert;
}

bool recheck_certificate(const Certificate& cert) {
  try {
    if (!cert.at("claim1").at("pass").get<bool>()) return false;
    if (!cert.at("claim2").at("pass").get<bool>()) return false;
    if (cert.at("structure").at("conclusion").at("chi_lower").get<int>() != 8) return false;
    if (cert.at("structure").at("bottom_copies").get<int>() <
        cert.at("structure").at("pigeonhole_bound").get<int>())
      return false;
    if (!cert.at("upper").at("verified").get<bool>()) return false;
    if (cert.at("upper").at("palette").get<int>() > 8) return false;
    if (cert.at("conclusion").at("chi").get<int>() != 8) return false;
    for (const char* h : {"gadget_x", "gadget_y", "z_abstract_graph", "z_geometric"})
      if (!cert.at("hashes").contains(h)) return false;
    return true;
  } catch (const nlohmann::json::exception&) {
    return false;
  }
}

}  // namespace bxc
