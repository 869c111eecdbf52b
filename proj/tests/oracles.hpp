// Independent reference implementations used only to cross-check the library.
// Deliberately naive and separate from the code under test.
#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "boxchrom/geometry.hpp"

namespace oracle {

// Face-to-face contact decided from scratch: exactly one axis where the
// closed intervals meet in a single point, the other two overlapping with
// positive length. Undefined for interpenetrating boxes.
inline bool contact(const bxc::Box& a, const bxc::Box& b) {
  int point = 0, positive = 0;
  for (int d = 0; d < 3; ++d) {
    std::int64_t lo = std::max(a.ext[d].lo, b.ext[d].lo);
    std::int64_t hi = std::min(a.ext[d].hi, b.ext[d].hi);
    if (hi > lo)
      ++positive;
    else if (hi == lo)
      ++point;
  }
  return point == 1 && positive == 2;
}

// All contact pairs of an arrangement as sorted id pairs.
inline std::set<std::pair<std::string, std::string>> contact_pairs(const bxc::Arrangement& a) {
  std::set<std::pair<std::string, std::string>> out;
  for (size_t i = 0; i < a.boxes.size(); ++i)
    for (size_t j = i + 1; j < a.boxes.size(); ++j)
      if (oracle::contact(a.boxes[i], a.boxes[j])) {
        auto p = std::minmax(a.boxes[i].id, a.boxes[j].id);
        out.insert({p.first, p.second});
      }
  return out;
}

// Number of partitions of {0..n-1} into independent sets: every set partition
// is generated, then filtered by checking each block for internal edges.
inline long long count_independent_partitions(int n,
                                              const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> blocks;
  long long count = 0;
  auto independent = [&]() {
    for (const auto& blk : blocks)
      for (size_t i = 0; i < blk.size(); ++i)
        for (size_t j = i + 1; j < blk.size(); ++j)
          for (const auto& [u, v] : edges)
            if ((u == blk[i] && v == blk[j]) || (u == blk[j] && v == blk[i])) return false;
    return true;
  };
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      if (independent()) ++count;
      return;
    }
    const size_t existing = blocks.size();
    for (size_t i = 0; i < existing; ++i) {
      blocks[i].push_back(v);
      self(self, v + 1);
      blocks[i].pop_back();
    }
    blocks.push_back({v});
    self(self, v + 1);
    blocks.pop_back();
  };
  rec(rec, 0);
  return count;
}

// Proper-coloring check on an explicit edge list.
inline bool proper(const std::vector<std::pair<int, int>>& edges, const std::vector<int>& color) {
  for (const auto& [u, v] : edges)
    if (color[u] == color[v]) return false;
  return true;
}

}  // namespace oracle
