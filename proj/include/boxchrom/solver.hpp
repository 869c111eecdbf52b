#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "boxchrom/conflict.hpp"

namespace bxc {

/// Total map box id -> 0-based color index.
using Coloring = std::map<std::string, int>;

int palette_size(const Coloring& c);

struct SolveOptions {
  double timeout_sec = 0;  // 0 = unlimited
};

struct SolveStats {
  long long nodes = 0;
};

/// Region name -> maximum number of distinct colors allowed in that region.
using CapConstraint = std::map<std::string, int>;

/// Returns the first violating edge in canonical order, or nullopt when proper.
/// Throws MissingVertex when the coloring is not total.
std::optional<std::pair<int, int>> verify_coloring(const ConflictGraph& g, const Coloring& c);

/// Proper coloring with at most k colors, or nullopt when provably none exists.
/// DSATUR branch and bound with clique seeding and first-occurrence color order.
std::optional<Coloring> k_colorable(const ConflictGraph& g, int k,
                                    const SolveOptions& opts = {}, SolveStats* stats = nullptr);

/// Exact chromatic number with a witness coloring.
std::pair<int, Coloring> chromatic_number(const ConflictGraph& g, const SolveOptions& opts = {});

/// Proper coloring respecting every region cap, or nullopt when none exists.
/// Vertices outside all regions are colored after the capped core.
std::optional<Coloring> capped_coloring(const ConflictGraph& g,
                                        const std::map<std::string, std::set<std::string>>& regions,
                                        const CapConstraint& caps,
                                        const SolveOptions& opts = {}, SolveStats* stats = nullptr);

/// Colors in reverse elimination order; palette <= degeneracy + 1.
Coloring greedy_degeneracy_coloring(const ConflictGraph& g);

/// Streams every proper coloring up to color renaming, exactly once; colors
/// appear in first-occurrence order over the canonical vertex order. Returns
/// the count. Throws SizeLimit beyond `size_limit` vertices.
long long enumerate_proper_colorings(const ConflictGraph& g,
                                     const std::function<void(const Coloring&)>& sink,
                                     int size_limit = 14);

/// Direct DIMACS encoding of k-colorability; variable of (vertex i, color c)
/// is i*k + c + 1. With clique seeding, one maximum clique is pre-assigned
/// colors 0..q-1 as unit clauses.
std::string export_cnf(const ConflictGraph& g, int k, bool clique_seed = true);

enum class SatVerdict { Sat, Unsat };

struct SatResult {
  SatVerdict verdict;
  Coloring model;  // decoded coloring when Sat
};

/// Runs `command <cnf_path>` as a subprocess and parses SAT-competition
/// output. The CNF is written to a temporary file.
SatResult run_external_sat(const ConflictGraph& g, int k, const std::string& command,
                           bool clique_seed = true);

}  // namespace bxc
