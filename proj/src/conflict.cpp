#include "boxchrom/conflict.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "boxchrom/json_io.hpp"

namespace bxc {

void ConflictGraph::rebuild_index() {
  index_.clear();
  for (int i = 0; i < n(); ++i) index_[vertices[i]] = i;
}

int ConflictGraph::index_of(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? -1 : it->second;
}

bool ConflictGraph::has_edge(int u, int v) const {
  const auto& nb = adj[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

static void finalize_edges(ConflictGraph& g) {
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
  g.edges.clear();
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.adj[u])
      if (u < v) g.edges.push_back({u, v});
}

ConflictGraph ConflictGraph::induced(const std::vector<int>& keep) const {
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> newidx(n(), -1);
  ConflictGraph h;
  for (int v : sorted) {
    newidx[v] = static_cast<int>(h.vertices.size());
    h.vertices.push_back(vertices[v]);
  }
  h.adj.resize(h.vertices.size());
  for (int v : sorted)
    for (int u : adj[v])
      if (newidx[u] >= 0) h.adj[newidx[v]].push_back(newidx[u]);
  finalize_edges(h);
  h.source_hash = source_hash;
  h.rebuild_index();
  return h;
}

ConflictGraph ConflictGraph::from_edges(
    std::vector<std::string> ids,
    const std::vector<std::pair<std::string, std::string>>& edge_list) {
  ConflictGraph g;
  std::sort(ids.begin(), ids.end());
  g.vertices = std::move(ids);
  g.rebuild_index();
  g.adj.resize(g.vertices.size());
  for (const auto& [a, b] : edge_list) {
    int u = g.index_of(a), v = g.index_of(b);
    if (u < 0 || v < 0)
      throw Error(ErrorCode::MissingVertex, "edge endpoint not a vertex: " + (u < 0 ? a : b));
    if (u == v) continue;
    if (!g.has_edge(u, v)) {
      g.adj[u].push_back(v);
      g.adj[v].push_back(u);
      std::sort(g.adj[u].begin(), g.adj[u].end());
      std::sort(g.adj[v].begin(), g.adj[v].end());
    }
  }
  finalize_edges(g);
  g.source_hash = graph_hash(g);
  return g;
}

ConflictGraph build_graph(const Arrangement& a) {
  auto violations = validate(a);
  if (!violations.empty())
    throw Error(ErrorCode::OverlappingBoxes,
                "invalid arrangement: " + violations.front().kind + " (" + violations.front().a + ")");
  ConflictGraph g;
  for (const auto& b : a.boxes) g.vertices.push_back(b.id);
  std::sort(g.vertices.begin(), g.vertices.end());
  g.rebuild_index();
  g.adj.resize(g.vertices.size());
  for (size_t i = 0; i < a.boxes.size(); ++i)
    for (size_t j = i + 1; j < a.boxes.size(); ++j)
      if (contact(a.boxes[i], a.boxes[j])) {
        int u = g.index_of(a.boxes[i].id), v = g.index_of(a.boxes[j].id);
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
      }
  finalize_edges(g);
  g.source_hash = content_hash(arrangement_to_json(a).dump());
  return g;
}

DegeneracyResult degeneracy(const ConflictGraph& g) {
  DegeneracyResult r;
  std::vector<int> deg(g.n());
  std::vector<bool> removed(g.n(), false);
  for (int v = 0; v < g.n(); ++v) deg[v] = static_cast<int>(g.adj[v].size());
  for (int step = 0; step < g.n(); ++step) {
    int best = -1;
    for (int v = 0; v < g.n(); ++v)
      if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
    r.degeneracy = std::max(r.degeneracy, deg[best]);
    r.order.push_back(best);
    removed[best] = true;
    for (int u : g.adj[best])
      if (!removed[u]) --deg[u];
  }
  return r;
}

namespace {

struct CliqueSearch {
  const ConflictGraph& g;
  std::chrono::steady_clock::time_point deadline;
  bool limited;
  long long nodes = 0;
  std::vector<int> best;
  std::vector<int> current;

  void run(const std::vector<int>& cand) {
    if ((++nodes & 0x3ff) == 0 && limited && std::chrono::steady_clock::now() > deadline)
      throw Error(ErrorCode::Timeout, "clique search exceeded time limit");
    if (current.size() + cand.size() <= best.size()) return;
    if (cand.empty()) {
      best = current;
      return;
    }
    for (size_t i = 0; i < cand.size(); ++i) {
      if (current.size() + (cand.size() - i) <= best.size()) return;
      int v = cand[i];
      std::vector<int> next;
      for (size_t j = i + 1; j < cand.size(); ++j)
        if (g.has_edge(v, cand[j])) next.push_back(cand[j]);
      current.push_back(v);
      run(next);
      current.pop_back();
    }
  }
};

}  // namespace

std::vector<int> max_clique_witness(const ConflictGraph& g, double timeout_sec) {
  CliqueSearch s{g, std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(timeout_sec)),
                 timeout_sec > 0};
  std::vector<int> all(g.n());
  for (int v = 0; v < g.n(); ++v) all[v] = v;
  s.run(all);
  std::sort(s.best.begin(), s.best.end());
  return s.best;
}

int max_clique(const ConflictGraph& g, double timeout_sec) {
  return static_cast<int>(max_clique_witness(g, timeout_sec).size());
}

std::vector<std::vector<int>> components(const ConflictGraph& g) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(g.n(), false);
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : g.adj[v])
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::string export_dot(const ConflictGraph& g) {
  std::ostringstream os;
  os << "graph conflict {\n";
  for (const auto& v : g.vertices) os << "  \"" << v << "\";\n";
  for (const auto& [u, v] : g.edges)
    os << "  \"" << g.vertices[u] << "\" -- \"" << g.vertices[v] << "\";\n";
  os << "}\n";
  return os.str();
}

std::string export_edges_json(const ConflictGraph& g) {
  Json j;
  j["vertices"] = g.vertices;
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges) edges.push_back({g.vertices[u], g.vertices[v]});
  j["edges"] = edges;
  return j.dump(2);
}

}  // namespace bxc
