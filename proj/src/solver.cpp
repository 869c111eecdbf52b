#include "boxchrom/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace bxc {

int palette_size(const Coloring& c) {
  int mx = -1;
  for (const auto& [id, col] : c) mx = std::max(mx, col);
  return mx + 1;
}

std::optional<std::pair<int, int>> verify_coloring(const ConflictGraph& g, const Coloring& c) {
  std::vector<int> col(g.n());
  for (int v = 0; v < g.n(); ++v) {
    auto it = c.find(g.vertices[v]);
    if (it == c.end())
      throw Error(ErrorCode::MissingVertex, "coloring misses vertex '" + g.vertices[v] + "'");
    col[v] = it->second;
  }
  for (const auto& [u, v] : g.edges)
    if (col[u] == col[v]) return std::make_pair(u, v);
  return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;

// DSATUR-style branch and bound over at most `kmax` colors with
// first-occurrence color canonicalization. Optional per-region caps on the
// number of distinct colors.
struct ColorSearch {
  const ConflictGraph& g;
  int kmax;
  Clock::time_point deadline;
  bool limited = false;
  long long nodes = 0;

  std::vector<int> color;                 // -1 = uncolored
  int used = 0;                           // colors used so far
  std::vector<std::vector<int>> vertex_regions;  // region indices per vertex
  std::vector<uint64_t> region_used;      // color mask per region
  std::vector<int> region_cap;
  std::vector<bool> active;               // restrict the search to these vertices
  int remaining = 0;

  explicit ColorSearch(const ConflictGraph& graph, int k, const SolveOptions& opts)
      : g(graph), kmax(k), color(graph.n(), -1), vertex_regions(graph.n()),
        active(graph.n(), true), remaining(graph.n()) {
    if (opts.timeout_sec > 0) {
      limited = true;
      deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(opts.timeout_sec));
    }
  }

  void restrict_to(const std::vector<bool>& keep) {
    active = keep;
    remaining = 0;
    for (int v = 0; v < g.n(); ++v)
      if (active[v]) ++remaining;
  }

  uint64_t neighbor_mask(int v) const {
    uint64_t m = 0;
    for (int u : g.adj[v])
      if (color[u] >= 0) m |= (1ull << color[u]);
    return m;
  }

  // Deterministic DSATUR pick: max saturation, then max active degree, then
  // smallest index.
  int pick() const {
    int best = -1, bsat = -1, bdeg = -1;
    for (int v = 0; v < g.n(); ++v) {
      if (!active[v] || color[v] >= 0) continue;
      int sat = std::popcount(neighbor_mask(v));
      int deg = 0;
      for (int u : g.adj[v])
        if (active[u]) ++deg;
      if (sat > bsat || (sat == bsat && deg > bdeg)) {
        best = v;
        bsat = sat;
        bdeg = deg;
      }
    }
    return best;
  }

  bool cap_allows(int v, int c) const {
    for (int r : vertex_regions[v]) {
      uint64_t m = region_used[r];
      if (!(m & (1ull << c)) && std::popcount(m) >= region_cap[r]) return false;
    }
    return true;
  }

  bool assign(int v, int c) {
    color[v] = c;
    used = std::max(used, c + 1);
    for (int r : vertex_regions[v]) region_used[r] |= (1ull << c);
    --remaining;
    return true;
  }

  void unassign(int v, int prev_used, const std::vector<uint64_t>& prev_regions) {
    color[v] = -1;
    used = prev_used;
    region_used = prev_regions;
    ++remaining;
  }

  bool solve() {
    if ((++nodes & 0xff) == 0 && limited && Clock::now() > deadline)
      throw Error(ErrorCode::Timeout, "coloring search exceeded time limit");
    if (remaining == 0) return true;
    int v = pick();
    uint64_t nm = neighbor_mask(v);
    int limit = std::min(kmax - 1, used);  // at most one fresh color
    for (int c = 0; c <= limit; ++c) {
      if (nm & (1ull << c)) continue;
      if (!cap_allows(v, c)) continue;
      int prev_used = used;
      std::vector<uint64_t> prev_regions = region_used;
      assign(v, c);
      if (solve()) return true;
      unassign(v, prev_used, prev_regions);
    }
    return false;
  }
};

Coloring extract(const ConflictGraph& g, const std::vector<int>& color,
                 const std::vector<bool>& active) {
  Coloring out;
  for (int v = 0; v < g.n(); ++v)
    if (active[v]) out[g.vertices[v]] = color[v];
  return out;
}

}  // namespace

std::optional<Coloring> k_colorable(const ConflictGraph& g, int k, const SolveOptions& opts,
                                    SolveStats* stats) {
  if (k < 1) throw Error(ErrorCode::PreconditionViolated, "k must be >= 1");
  if (k > 63) throw Error(ErrorCode::SizeLimit, "palette sizes beyond 63 are unsupported");
  if (g.n() == 0) return Coloring{};
  auto clique = max_clique_witness(g, opts.timeout_sec);
  if (static_cast<int>(clique.size()) > k) return std::nullopt;
  ColorSearch s(g, k, opts);
  for (size_t i = 0; i < clique.size(); ++i) s.assign(clique[i], static_cast<int>(i));
  bool sat = s.solve();
  if (stats) stats->nodes = s.nodes;
  if (!sat) return std::nullopt;
  std::vector<bool> all(g.n(), true);
  return extract(g, s.color, all);
}

std::pair<int, Coloring> chromatic_number(const ConflictGraph& g, const SolveOptions& opts) {
  if (g.n() == 0) return {0, {}};
  int lb = max_clique(g, opts.timeout_sec);
  Coloring witness = greedy_degeneracy_coloring(g);
  int ub = palette_size(witness);
  while (lb < ub) {
    auto c = k_colorable(g, ub - 1, opts);
    if (!c) break;
    witness = *c;
    ub = palette_size(witness);
  }
  return {ub, witness};
}

std::optional<Coloring> capped_coloring(const ConflictGraph& g,
                                        const std::map<std::string, std::set<std::string>>& regions,
                                        const CapConstraint& caps,
                                        const SolveOptions& opts, SolveStats* stats) {
  int total_cap = 0;
  std::vector<std::string> names;
  for (const auto& [name, cap] : caps) {
    if (cap < 1) throw Error(ErrorCode::PreconditionViolated, "caps must be >= 1");
    if (!regions.count(name))
      throw Error(ErrorCode::EmptyRegion, "cap names unknown region '" + name + "'");
    names.push_back(name);
    total_cap += cap;
  }
  int kmax = std::min(total_cap, g.n());
  if (kmax > 63) throw Error(ErrorCode::SizeLimit, "combined caps beyond 63 are unsupported");

  ColorSearch s(g, std::max(kmax, 1), opts);
  s.region_used.assign(names.size(), 0);
  s.region_cap.resize(names.size());
  std::vector<bool> core(g.n(), false);
  for (size_t r = 0; r < names.size(); ++r) {
    s.region_cap[r] = caps.at(names[r]);
    for (const auto& id : regions.at(names[r])) {
      int v = g.index_of(id);
      if (v < 0) throw Error(ErrorCode::MissingVertex, "region id '" + id + "' not in graph");
      s.vertex_regions[v].push_back(static_cast<int>(r));
      core[v] = true;
    }
  }
  s.restrict_to(core);

  // Clique seeding stays sound under caps: caps are color-permutation
  // invariant, and an infeasible seed witnesses global infeasibility.
  std::vector<int> core_idx;
  for (int v = 0; v < g.n(); ++v)
    if (core[v]) core_idx.push_back(v);
  ConflictGraph core_graph = g.induced(core_idx);
  auto clique_local = max_clique_witness(core_graph, opts.timeout_sec);
  bool seed_ok = true;
  for (size_t i = 0; i < clique_local.size() && seed_ok; ++i) {
    int v = g.index_of(core_graph.vertices[clique_local[i]]);
    int c = static_cast<int>(i);
    if (c >= s.kmax || !s.cap_allows(v, c))
      seed_ok = false;
    else
      s.assign(v, c);
  }
  bool sat = seed_ok && s.solve();
  if (stats) stats->nodes = s.nodes;
  if (!sat) return std::nullopt;

  // Extend to vertices outside every region; fresh colors cannot affect
  // feasibility of the capped core.
  Coloring out = extract(g, s.color, core);
  for (int v = 0; v < g.n(); ++v) {
    if (core[v]) continue;
    uint64_t nm = 0;
    for (int u : g.adj[v]) {
      auto it = out.find(g.vertices[u]);
      if (it != out.end() && it->second < 64) nm |= (1ull << it->second);
    }
    int c = 0;
    while (nm & (1ull << c)) ++c;
    out[g.vertices[v]] = c;
  }
  return out;
}

Coloring greedy_degeneracy_coloring(const ConflictGraph& g) {
  auto elim = degeneracy(g);
  std::vector<int> color(g.n(), -1);
  for (auto it = elim.order.rbegin(); it != elim.order.rend(); ++it) {
    int v = *it;
    uint64_t nm = 0;
    for (int u : g.adj[v])
      if (color[u] >= 0 && color[u] < 64) nm |= (1ull << color[u]);
    int c = 0;
    while (nm & (1ull << c)) ++c;
    color[v] = c;
  }
  Coloring out;
  for (int v = 0; v < g.n(); ++v) out[g.vertices[v]] = color[v];
  return out;
}

long long enumerate_proper_colorings(const ConflictGraph& g,
                                     const std::function<void(const Coloring&)>& sink,
                                     int size_limit) {
  if (g.n() > size_limit)
    throw Error(ErrorCode::SizeLimit,
                "enumeration limited to " + std::to_string(size_limit) + " vertices");
  long long count = 0;
  std::vector<int> color(g.n(), -1);
  auto rec = [&](auto&& self, int i, int maxc) -> void {
    if (i == g.n()) {
      ++count;
      if (sink) {
        Coloring c;
        for (int v = 0; v < g.n(); ++v) c[g.vertices[v]] = color[v];
        sink(c);
      }
      return;
    }
    for (int c = 0; c <= maxc + 1; ++c) {
      bool ok = true;
      for (int u : g.adj[i])
        if (color[u] == c) ok = false;
      if (!ok) continue;
      color[i] = c;
      self(self, i + 1, std::max(maxc, c));
      color[i] = -1;
    }
  };
  rec(rec, 0, -1);
  return count;
}

std::string export_cnf(const ConflictGraph& g, int k, bool clique_seed) {
  if (k < 1) throw Error(ErrorCode::PreconditionViolated, "k must be >= 1");
  auto var = [k](int v, int c) { return v * k + c + 1; };
  std::ostringstream body;
  long long clauses = 0;
  for (int v = 0; v < g.n(); ++v) {
    for (int c = 0; c < k; ++c) body << var(v, c) << (c + 1 < k ? " " : " 0\n");
    ++clauses;
  }
  for (const auto& [u, v] : g.edges)
    for (int c = 0; c < k; ++c) {
      body << -var(u, c) << " " << -var(v, c) << " 0\n";
      ++clauses;
    }
  if (clique_seed) {
    auto clique = max_clique_witness(g);
    if (static_cast<int>(clique.size()) > k) clique.resize(k);
    for (size_t i = 0; i < clique.size(); ++i) {
      body << var(clique[i], static_cast<int>(i)) << " 0\n";
      ++clauses;
    }
  }
  std::ostringstream out;
  out << "p cnf " << static_cast<long long>(g.n()) * k << " " << clauses << "\n" << body.str();
  return out.str();
}

SatResult run_external_sat(const ConflictGraph& g, int k, const std::string& command,
                           bool clique_seed) {
  std::string cnf = export_cnf(g, k, clique_seed);
  auto dir = std::filesystem::temp_directory_path();
  std::string path = (dir / ("bxc_cnf_" + std::to_string(::getpid()) + "_" +
                             std::to_string(reinterpret_cast<uintptr_t>(&cnf) & 0xffff) + ".cnf"))
                         .string();
  {
    std::ofstream f(path);
    f << cnf;
  }
  std::string cmd = command + " " + path + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) throw Error(ErrorCode::SolverCrash, "cannot spawn '" + command + "'");
  std::string output;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
  int rc = ::pclose(pipe);
  std::filesystem::remove(path);

  std::istringstream is(output);
  std::string line;
  std::optional<bool> sat;
  std::vector<long long> lits;
  while (std::getline(is, line)) {
    if (line.rfind("s SATISFIABLE", 0) == 0) sat = true;
    else if (line.rfind("s UNSATISFIABLE", 0) == 0) sat = false;
    else if (line.rfind("v ", 0) == 0 || line == "v") {
      std::istringstream ls(line.substr(1));
      long long lit;
      while (ls >> lit)
        if (lit != 0) lits.push_back(lit);
    }
  }
  if (!sat) {
    if (rc != 0) throw Error(ErrorCode::SolverCrash, "external solver exited without a verdict");
    throw Error(ErrorCode::ParseError, "no 's' verdict line in solver output");
  }
  SatResult r{*sat ? SatVerdict::Sat : SatVerdict::Unsat, {}};
  if (*sat) {
    std::vector<bool> val(static_cast<size_t>(g.n()) * k + 1, false);
    for (long long lit : lits)
      if (lit > 0 && lit < static_cast<long long>(val.size())) val[lit] = true;
    for (int v = 0; v < g.n(); ++v) {
      int chosen = -1;
      for (int c = 0; c < k; ++c)
        if (val[static_cast<size_t>(v) * k + c + 1]) {
          chosen = c;
          break;
        }
      if (chosen < 0)
        throw Error(ErrorCode::ParseError, "model assigns no color to vertex " + g.vertices[v]);
      r.model[g.vertices[v]] = chosen;
    }
  }
  return r;
}

}  // namespace bxc
