#include "boxchrom.h"

#include <cstring>
#include <new>
#include <string>

#include "boxchrom/bounds.hpp"
#include "boxchrom/certify.hpp"
#include "boxchrom/json_io.hpp"

using namespace bxc;

struct bxc_arrangement {
  Arrangement a;
};

struct bxc_graph {
  ConflictGraph g;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* p = new char[s.size() + 1];
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void set_out(char** out, const std::string& s) {
  if (out) *out = dup_string(s);
}

bxc_status status_of(const Error& e) {
  g_last_error = e.what();
  switch (e.code()) {
    case ErrorCode::Timeout:
      return BXC_ETIMEOUT;
    case ErrorCode::ParseError:
    case ErrorCode::DomainError:
    case ErrorCode::PreconditionViolated:
    case ErrorCode::SizeLimit:
    case ErrorCode::EmptyRegion:
    case ErrorCode::MissingVertex:
    case ErrorCode::Infeasible:
      return BXC_EINVAL;
    default:
      return BXC_ERROR;
  }
}

template <typename F>
bxc_status guarded(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BXC_ERROR;
  }
}

}  // namespace

extern "C" {

const char* bxc_last_error(void) { return g_last_error.c_str(); }

void bxc_string_free(char* s) { delete[] s; }

bxc_status bxc_gen(const char* kind, bxc_arrangement** out) {
  return guarded([&]() -> bxc_status {
    if (!kind || !out) {
      g_last_error = "null argument";
      return BXC_EINVAL;
    }
    std::string k = kind;
    Arrangement a;
    if (k == "x")
      a = build_gadget_x();
    else if (k == "y")
      a = build_gadget_y();
    else if (k == "z-geometric")
      a = build_z_geometric().first;
    else if (k == "figure1")
      a = build_figure1();
    else {
      g_last_error = "unknown generator kind '" + k + "'";
      return BXC_EINVAL;
    }
    *out = new bxc_arrangement{std::move(a)};
    return BXC_OK;
  });
}

bxc_status bxc_gen_random(uint64_t seed, int target, const int64_t bbox[6], int64_t min_side,
                          bxc_arrangement** out) {
  return guarded([&]() -> bxc_status {
    if (!bbox || !out) {
      g_last_error = "null argument";
      return BXC_EINVAL;
    }
    std::array<Interval, 3> bb{Interval{bbox[0], bbox[1]}, Interval{bbox[2], bbox[3]},
                               Interval{bbox[4], bbox[5]}};
    *out = new bxc_arrangement{gen_random_guillotine(seed, target, bb, min_side)};
    return BXC_OK;
  });
}

bxc_status bxc_arrangement_from_json(const char* json, bxc_arrangement** out) {
  return guarded([&]() -> bxc_status {
    *out = new bxc_arrangement{arrangement_from_json(parse_json(json))};
    return BXC_OK;
  });
}

bxc_status bxc_arrangement_to_json(const bxc_arrangement* a, char** out) {
  return guarded([&]() -> bxc_status {
    set_out(out, arrangement_to_json(a->a).dump(2));
    return BXC_OK;
  });
}

bxc_status bxc_arrangement_validate(const bxc_arrangement* a, char** report_json) {
  return guarded([&]() -> bxc_status {
    auto violations = validate(a->a);
    Json j = Json::array();
    for (const auto& v : violations) j.push_back({{"kind", v.kind}, {"a", v.a}, {"b", v.b}});
    set_out(report_json, j.dump(2));
    return violations.empty() ? BXC_OK : BXC_FAIL;
  });
}

void bxc_arrangement_free(bxc_arrangement* a) { delete a; }

bxc_status bxc_graph_build(const bxc_arrangement* a, bxc_graph** out) {
  return guarded([&]() -> bxc_status {
    *out = new bxc_graph{build_graph(a->a)};
    return BXC_OK;
  });
}

void bxc_graph_free(bxc_graph* g) { delete g; }

bxc_status bxc_graph_counts(const bxc_graph* g, int* vertices, int* edges) {
  if (!g) return BXC_EINVAL;
  if (vertices) *vertices = g->g.n();
  if (edges) *edges = g->g.m();
  return BXC_OK;
}

bxc_status bxc_graph_dot(const bxc_graph* g, char** out) {
  return guarded([&]() -> bxc_status {
    set_out(out, export_dot(g->g));
    return BXC_OK;
  });
}

bxc_status bxc_graph_edges_json(const bxc_graph* g, char** out) {
  return guarded([&]() -> bxc_status {
    set_out(out, export_edges_json(g->g));
    return BXC_OK;
  });
}

bxc_status bxc_graph_stats(const bxc_graph* g, double timeout_sec, char** out) {
  return guarded([&]() -> bxc_status {
    Json j;
    j["vertices"] = g->g.n();
    j["edges"] = g->g.m();
    j["components"] = components(g->g).size();
    j["degeneracy"] = degeneracy(g->g).degeneracy;
    j["max_clique"] = max_clique(g->g, timeout_sec);
    set_out(out, j.dump(2));
    return BXC_OK;
  });
}

bxc_status bxc_chromatic(const bxc_graph* g, double timeout_sec, int* chi, char** coloring_json) {
  return guarded([&]() -> bxc_status {
    auto [x, witness] = chromatic_number(g->g, {timeout_sec});
    if (chi) *chi = x;
    set_out(coloring_json, coloring_to_json(g->g, witness).dump(2));
    return BXC_OK;
  });
}

bxc_status bxc_k_colorable(const bxc_graph* g, int k, double timeout_sec, char** coloring_json) {
  return guarded([&]() -> bxc_status {
    auto c = k_colorable(g->g, k, {timeout_sec});
    if (!c) return BXC_FAIL;
    set_out(coloring_json, coloring_to_json(g->g, *c).dump(2));
    return BXC_OK;
  });
}

bxc_status bxc_export_cnf(const bxc_graph* g, int k, int clique_seed, char** out) {
  return guarded([&]() -> bxc_status {
    set_out(out, export_cnf(g->g, k, clique_seed != 0));
    return BXC_OK;
  });
}

bxc_status bxc_k_colorable_external(const bxc_graph* g, int k, const char* command,
                                    char** coloring_json) {
  return guarded([&]() -> bxc_status {
    SatResult r = run_external_sat(g->g, k, command);
    if (r.verdict == SatVerdict::Unsat) return BXC_FAIL;
    if (verify_coloring(g->g, r.model))
      throw Error(ErrorCode::SolverCrash, "external model is not a proper coloring");
    set_out(coloring_json, coloring_to_json(g->g, r.model).dump(2));
    return BXC_OK;
  });
}

bxc_status bxc_verify_coloring(const bxc_graph* g, const char* coloring_json,
                               char** violation_json) {
  return guarded([&]() -> bxc_status {
    Coloring c = coloring_from_json(parse_json(coloring_json));
    auto bad = verify_coloring(g->g, c);
    if (!bad) {
      set_out(violation_json, "null");
      return BXC_OK;
    }
    Json j = {g->g.vertices[bad->first], g->g.vertices[bad->second]};
    set_out(violation_json, j.dump());
    return BXC_FAIL;
  });
}

bxc_status bxc_color_strategy(const bxc_arrangement* a, const char* strategy, int axis,
                              int64_t param, char** coloring_json, char** report_json) {
  return guarded([&]() -> bxc_status {
    std::string s = strategy ? strategy : "";
    std::pair<Coloring, StrategyReport> r;
    if (s == "level")
      r = color_by_level(a->a, axis, param);
    else if (s == "own-dim")
      r = color_by_own_dim(a->a, param);
    else if (s == "surface")
      r = color_by_surface(a->a, param);
    else if (s == "volume")
      r = color_by_volume(a->a, param);
    else {
      g_last_error = "unknown strategy '" + s + "'";
      return BXC_EINVAL;
    }
    ConflictGraph g = build_graph(a->a);
    set_out(coloring_json, coloring_to_json(g, r.first).dump(2));
    set_out(report_json, report_to_json(r.second).dump(2));
    return BXC_OK;
  });
}

bxc_status bxc_check_claim1(const bxc_arrangement* x, char** result_json) {
  return guarded([&]() -> bxc_status {
    Claim1Result r = check_claim1(x->a);
    Json j;
    j["pass"] = r.pass;
    j["enumerated"] = r.enumerated;
    if (r.counterexample) {
      Json c = Json::object();
      for (const auto& [id, col] : *r.counterexample) c[id] = col;
      j["counterexample"] = c;
    }
    set_out(result_json, j.dump(2));
    return r.pass ? BXC_OK : BXC_FAIL;
  });
}

bxc_status bxc_check_claim2(const bxc_arrangement* y, double timeout_sec, char** result_json) {
  return guarded([&]() -> bxc_status {
    Claim2Result r = check_claim2(y->a, {timeout_sec});
    Json j;
    j["pass"] = r.pass;
    j["nodes"] = r.nodes;
    if (r.counterexample) {
      Json c = Json::object();
      for (const auto& [id, col] : *r.counterexample) c[id] = col;
      j["counterexample"] = c;
    }
    set_out(result_json, j.dump(2));
    return r.pass ? BXC_OK : BXC_FAIL;
  });
}

bxc_status bxc_z_abstract(char** zstructure_json, char** edges_json) {
  return guarded([&]() -> bxc_status {
    auto [g, zs] = build_z_abstract();
    set_out(zstructure_json, zstructure_to_json(zs).dump(2));
    set_out(edges_json, export_edges_json(g));
    return BXC_OK;
  });
}

bxc_status bxc_certify_z(double timeout_sec, int with_cnf7, char** certificate_json) {
  return guarded([&]() -> bxc_status {
    CertifyOptions opts;
    opts.solve.timeout_sec = timeout_sec;
    opts.export_cnf7 = with_cnf7 != 0;
    Certificate cert = certify_z(opts);
    set_out(certificate_json, cert.dump(2));
    return BXC_OK;
  });
}

bxc_status bxc_certificate_recheck(const char* certificate_json) {
  return guarded([&]() -> bxc_status {
    return recheck_certificate(parse_json(certificate_json)) ? BXC_OK : BXC_FAIL;
  });
}

}  // extern "C"
