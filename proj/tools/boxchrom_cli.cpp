// Command-line front end. Talks to the core exclusively through the C API.
//
// Exit codes: 0 success / sat / pass, 1 unsat / fail verdict, 2 usage error,
// 3 internal error or timeout.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "boxchrom.h"

namespace {

struct StringGuard {
  char* s = nullptr;
  ~StringGuard() { bxc_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

struct ArrGuard {
  bxc_arrangement* a = nullptr;
  ~ArrGuard() { bxc_arrangement_free(a); }
};

struct GraphGuard {
  bxc_graph* g = nullptr;
  ~GraphGuard() { bxc_graph_free(g); }
};

int exit_code(bxc_status st) {
  switch (st) {
    case BXC_OK: return 0;
    case BXC_FAIL: return 1;
    case BXC_EINVAL: return 2;
    default: return 3;
  }
}

[[noreturn]] void die(bxc_status st) {
  std::cerr << "error: " << bxc_last_error() << "\n";
  std::exit(exit_code(st));
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) {
    std::cerr << "error: cannot read " << path << "\n";
    std::exit(2);
  }
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) {
    std::cerr << "error: cannot write " << path << "\n";
    std::exit(3);
  }
  f << text;
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty())
    std::cout << text << "\n";
  else
    spit(path, text);
}

bxc_arrangement* load_arrangement(const std::string& path) {
  bxc_arrangement* a = nullptr;
  bxc_status st = bxc_arrangement_from_json(slurp(path).c_str(), &a);
  if (st != BXC_OK) die(st);
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Box arrangement coloring, bounds and certification"};
  app.require_subcommand(1);
  int jobs = 1;
  bool single_worker = false;
  app.add_option("--jobs", jobs, "Worker count (searches currently run on one worker)");
  app.add_flag("--single-worker", single_worker, "Force deterministic witnesses");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an arrangement");
  std::string gen_kind, gen_out;
  std::uint64_t gen_seed = 0;
  int gen_target = 32;
  std::vector<std::int64_t> gen_bbox{0, 40, 0, 40, 0, 40};
  std::int64_t gen_min_side = 1;
  gen->add_option("kind", gen_kind, "x|y|z-abstract|z-geometric|figure1|random")->required();
  gen->add_option("-o,--output", gen_out, "Output path (stdout when omitted)");
  gen->add_option("--seed", gen_seed, "RNG seed (required for random)");
  gen->add_option("--target", gen_target, "Box count for random");
  gen->add_option("--bbox", gen_bbox, "Bounding box x0 x1 y0 y1 z0 z1")->expected(6);
  gen->add_option("--min-side", gen_min_side, "Minimum box side for random");

  // graph
  auto* graph = app.add_subcommand("graph", "Build and export the conflict graph");
  std::string graph_in, graph_dot, graph_edges;
  graph->add_option("-i,--input", graph_in, "Arrangement JSON")->required();
  graph->add_option("--dot", graph_dot, "Write DOT export here");
  graph->add_option("--edges", graph_edges, "Write edge-list JSON here");

  // chromatic
  auto* chrom = app.add_subcommand("chromatic", "Exact chromatic number");
  std::string chrom_in, chrom_out;
  double chrom_timeout = 0;
  chrom->add_option("-i,--input", chrom_in)->required();
  chrom->add_option("-o,--output", chrom_out, "Write the witness coloring here");
  chrom->add_option("--timeout", chrom_timeout, "Seconds; 0 = unlimited");

  // kcolor
  auto* kcolor = app.add_subcommand("kcolor", "Decide k-colorability");
  std::string kc_in, kc_out, kc_cnf, kc_satcmd;
  int kc_k = 0;
  double kc_timeout = 0;
  kcolor->add_option("-i,--input", kc_in)->required();
  kcolor->add_option("--k", kc_k, "Number of colors")->required();
  kcolor->add_option("-o,--output", kc_out, "Write the coloring here when sat");
  kcolor->add_option("--cnf", kc_cnf, "Also write the DIMACS encoding here");
  kcolor->add_option("--sat-cmd", kc_satcmd, "Decide via this external SAT solver instead");
  kcolor->add_option("--timeout", kc_timeout);

  // color
  auto* color = app.add_subcommand("color", "Constructive bounded coloring");
  std::string col_in, col_out, col_report, col_strategy;
  int col_axis = 2;
  std::int64_t col_ell = 0, col_s = 0, col_v = 0;
  color->add_option("-i,--input", col_in)->required();
  color->add_option("--strategy", col_strategy, "level|own-dim|surface|volume")->required();
  color->add_option("--axis", col_axis, "Axis for the level strategy");
  color->add_option("--ell", col_ell, "Side bound for level/own-dim");
  color->add_option("--s", col_s, "Surface bound");
  color->add_option("--v", col_v, "Volume bound");
  color->add_option("-o,--output", col_out, "Write the coloring here");
  color->add_option("--report", col_report, "Write the strategy report here");

  // verify-coloring
  auto* verify = app.add_subcommand("verify-coloring", "Check a coloring for properness");
  std::string ver_in, ver_col;
  verify->add_option("-i,--input", ver_in)->required();
  verify->add_option("--coloring", ver_col)->required();

  // check-claim1 / check-claim2
  auto* claim1 = app.add_subcommand("check-claim1", "Signature check on the X gadget");
  std::string c1_in;
  claim1->add_option("-i,--input", c1_in, "Arrangement with regions X1..X3 (default: gadget X)");
  auto* claim2 = app.add_subcommand("check-claim2", "Region cap check on the Y gadget");
  std::string c2_in;
  double c2_timeout = 0;
  claim2->add_option("-i,--input", c2_in, "Arrangement with regions Y1..Y3 (default: gadget Y)");
  claim2->add_option("--timeout", c2_timeout);

  // certify-z
  auto* certify = app.add_subcommand("certify-z", "End-to-end chi(Z) = 8 certificate");
  std::string cz_out, cz_recheck;
  double cz_timeout = 0;
  bool cz_cnf7 = false;
  certify->add_option("-o,--output", cz_out, "Certificate path");
  certify->add_option("--recheck", cz_recheck, "Replay a stored certificate instead");
  certify->add_flag("--cnf7", cz_cnf7, "Embed the 7-colorability CNF of abstract Z");
  certify->add_option("--timeout", cz_timeout);

  // stats
  auto* stats = app.add_subcommand("stats", "Arrangement and graph statistics");
  std::string st_in;
  double st_timeout = 0;
  stats->add_option("-i,--input", st_in)->required();
  stats->add_option("--timeout", st_timeout);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage error
  }
  (void)jobs;
  (void)single_worker;

  if (gen->parsed()) {
    if (gen_kind == "z-abstract") {
      StringGuard zs, edges;
      bxc_status st = bxc_z_abstract(&zs.s, &edges.s);
      if (st != BXC_OK) die(st);
      write_or_print(gen_out, "{\"zstructure\": " + zs.str() + ",\n\"graph\": " + edges.str() + "}");
      return 0;
    }
    ArrGuard a;
    bxc_status st;
    if (gen_kind == "random") {
      if (gen->count("--seed") == 0) {
        std::cerr << "error: gen random requires --seed\n";
        return 2;
      }
      st = bxc_gen_random(gen_seed, gen_target, gen_bbox.data(), gen_min_side, &a.a);
    } else {
      st = bxc_gen(gen_kind.c_str(), &a.a);
    }
    if (st != BXC_OK) die(st);
    StringGuard json;
    if ((st = bxc_arrangement_to_json(a.a, &json.s)) != BXC_OK) die(st);
    write_or_print(gen_out, json.str());
    return 0;
  }

  if (graph->parsed()) {
    ArrGuard a{load_arrangement(graph_in)};
    GraphGuard g;
    bxc_status st = bxc_graph_build(a.a, &g.g);
    if (st != BXC_OK) die(st);
    if (!graph_dot.empty()) {
      StringGuard dot;
      if ((st = bxc_graph_dot(g.g, &dot.s)) != BXC_OK) die(st);
      spit(graph_dot, dot.str());
    }
    if (!graph_edges.empty()) {
      StringGuard e;
      if ((st = bxc_graph_edges_json(g.g, &e.s)) != BXC_OK) die(st);
      spit(graph_edges, e.str());
    }
    int n = 0, m = 0;
    bxc_graph_counts(g.g, &n, &m);
    std::cout << n << " vertices, " << m << " edges\n";
    return 0;
  }

  if (chrom->parsed()) {
    ArrGuard a{load_arrangement(chrom_in)};
    GraphGuard g;
    bxc_status st = bxc_graph_build(a.a, &g.g);
    if (st != BXC_OK) die(st);
    int chi = 0;
    StringGuard col;
    if ((st = bxc_chromatic(g.g, chrom_timeout, &chi, &col.s)) != BXC_OK) die(st);
    std::cout << chi << "\n";
    if (!chrom_out.empty()) spit(chrom_out, col.str());
    return 0;
  }

  if (kcolor->parsed()) {
    ArrGuard a{load_arrangement(kc_in)};
    GraphGuard g;
    bxc_status st = bxc_graph_build(a.a, &g.g);
    if (st != BXC_OK) die(st);
    if (!kc_cnf.empty()) {
      StringGuard cnf;
      if ((st = bxc_export_cnf(g.g, kc_k, 1, &cnf.s)) != BXC_OK) die(st);
      spit(kc_cnf, cnf.str());
    }
    StringGuard col;
    st = kc_satcmd.empty() ? bxc_k_colorable(g.g, kc_k, kc_timeout, &col.s)
                           : bxc_k_colorable_external(g.g, kc_k, kc_satcmd.c_str(), &col.s);
    if (st == BXC_OK) {
      std::cout << "sat\n";
      if (!kc_out.empty()) spit(kc_out, col.str());
      return 0;
    }
    if (st == BXC_FAIL) {
      std::cout << "unsat\n";
      return 1;
    }
    die(st);
  }

  if (color->parsed()) {
    ArrGuard a{load_arrangement(col_in)};
    std::int64_t param = col_strategy == "surface" ? col_s
                         : col_strategy == "volume" ? col_v
                                                    : col_ell;
    StringGuard col, rep;
    bxc_status st =
        bxc_color_strategy(a.a, col_strategy.c_str(), col_axis, param, &col.s, &rep.s);
    if (st != BXC_OK) die(st);
    write_or_print(col_out, col.str());
    if (!col_report.empty()) spit(col_report, rep.str());
    return 0;
  }

  if (verify->parsed()) {
    ArrGuard a{load_arrangement(ver_in)};
    GraphGuard g;
    bxc_status st = bxc_graph_build(a.a, &g.g);
    if (st != BXC_OK) die(st);
    StringGuard violation;
    st = bxc_verify_coloring(g.g, slurp(ver_col).c_str(), &violation.s);
    if (st == BXC_OK) {
      std::cout << "proper\n";
      return 0;
    }
    if (st == BXC_FAIL) {
      std::cout << "violation: " << violation.str() << "\n";
      return 1;
    }
    die(st);
  }

  if (claim1->parsed() || claim2->parsed()) {
    bool is1 = claim1->parsed();
    const std::string& in = is1 ? c1_in : c2_in;
    ArrGuard a;
    if (in.empty()) {
      bxc_status st = bxc_gen(is1 ? "x" : "y", &a.a);
      if (st != BXC_OK) die(st);
    } else {
      a.a = load_arrangement(in);
    }
    StringGuard result;
    bxc_status st = is1 ? bxc_check_claim1(a.a, &result.s)
                        : bxc_check_claim2(a.a, c2_timeout, &result.s);
    if (st != BXC_OK && st != BXC_FAIL) die(st);
    std::cout << result.str() << "\n";
    return st == BXC_OK ? 0 : 1;
  }

  if (certify->parsed()) {
    if (!cz_recheck.empty()) {
      bxc_status st = bxc_certificate_recheck(slurp(cz_recheck).c_str());
      if (st == BXC_OK) {
        std::cout << "certificate ok\n";
        return 0;
      }
      if (st == BXC_FAIL) {
        std::cout << "certificate invalid\n";
        return 1;
      }
      die(st);
    }
    StringGuard cert;
    bxc_status st = bxc_certify_z(cz_timeout, cz_cnf7 ? 1 : 0, &cert.s);
    if (st != BXC_OK) die(st);
    write_or_print(cz_out, cert.str());
    std::cerr << "chi(Z) = 8 certified\n";
    return 0;
  }

  if (stats->parsed()) {
    ArrGuard a{load_arrangement(st_in)};
    GraphGuard g;
    bxc_status st = bxc_graph_build(a.a, &g.g);
    if (st != BXC_OK) die(st);
    StringGuard sj;
    if ((st = bxc_graph_stats(g.g, st_timeout, &sj.s)) != BXC_OK) die(st);
    std::cout << sj.str() << "\n";
    return 0;
  }

  return 2;
}
