#pragma once

#include <string>
#include <vector>

#include "boxchrom/solver.hpp"

namespace bxc {

struct PartStat {
  std::string name;
  int boxes = 0;
  int colors = 0;
};

/// Outcome of one constructive coloring strategy, with the quantitative
/// guarantee it was checked against.
struct StrategyReport {
  std::string strategy;
  long long ell = 0;             // parameter actually used
  std::string measure_name;      // "ell", "s" or "v"
  long long measure_value = 0;
  int palette = 0;
  long long cap_integer = 0;     // per-instance cap with integer ell; always asserted
  double cap_closed_form = 0;    // the closed-form cap
  bool closed_form_ok = false;   // palette <= cap_closed_form
  std::vector<PartStat> parts;
};

/// Levels mod (ell+1), one private 4-color palette per residue class, exact
/// 4-coloring per component. Requires side(axis) <= ell for every box.
/// Palette <= 4(ell+1).
std::pair<Coloring, StrategyReport> color_by_level(const Arrangement& a, int axis, long long ell);

/// Splits by the first axis with a short side, then colors each group by
/// level with disjoint palettes. Requires min_side <= ell. Palette <= 12(ell+1).
std::pair<Coloring, StrategyReport> color_by_own_dim(const Arrangement& a, long long ell);

/// Thin boxes recursively, thick boxes greedily by degeneracy. Requires
/// surface <= s. Palette <= 12*ell + 3s/ell^2 + 13 for the chosen ell.
std::pair<Coloring, StrategyReport> color_by_surface(const Arrangement& a, long long s);

/// Volume-bounded instances reduced to the surface procedure. Requires
/// volume <= v. Palette <= 9*(24v/ell)^(1/3) + 12*ell + 13 for the chosen ell.
std::pair<Coloring, StrategyReport> color_by_volume(const Arrangement& a, long long v);

}  // namespace bxc
