#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "boxchrom/geometry.hpp"

namespace bxc {

/// Conflict graph of an arrangement: vertices are box ids in lexicographic
/// order, edges are face-to-face contacts. Frozen after build.
struct ConflictGraph {
  std::vector<std::string> vertices;           // canonical (sorted) order
  std::vector<std::vector<int>> adj;           // sorted neighbor indices
  std::vector<std::pair<int, int>> edges;      // u < v, lexicographic
  std::string source_hash;

  int n() const { return static_cast<int>(vertices.size()); }
  int m() const { return static_cast<int>(edges.size()); }
  int index_of(const std::string& id) const;   // -1 when absent
  bool has_edge(int u, int v) const;

  /// Induced subgraph on the given vertex indices (ids keep their names).
  ConflictGraph induced(const std::vector<int>& keep) const;

  /// Graph on explicit vertices/edges, used for abstract constructions.
  static ConflictGraph from_edges(std::vector<std::string> ids,
                                  const std::vector<std::pair<std::string, std::string>>& edge_list);

 private:
  std::unordered_map<std::string, int> index_;
  friend ConflictGraph build_graph(const Arrangement&);
  void rebuild_index();
};

/// Builds the conflict graph; throws on an invalid arrangement.
ConflictGraph build_graph(const Arrangement& a);

struct DegeneracyResult {
  int degeneracy = 0;
  std::vector<int> order;  // removal sequence, vertex indices
};

/// Repeated minimum-degree removal; ties broken by smallest vertex index.
DegeneracyResult degeneracy(const ConflictGraph& g);

/// Exact clique number by branch and bound. timeout_sec == 0 disables the limit.
int max_clique(const ConflictGraph& g, double timeout_sec = 0);

/// One maximum clique (vertex indices, ascending); deterministic.
std::vector<int> max_clique_witness(const ConflictGraph& g, double timeout_sec = 0);

std::vector<std::vector<int>> components(const ConflictGraph& g);

std::string export_dot(const ConflictGraph& g);
std::string export_edges_json(const ConflictGraph& g);

}  // namespace bxc
