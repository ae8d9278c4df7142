#pragma once

// Exact maximum C_h[g]-sets in [n] by branch and bound, plus a greedy
// baseline. Sets are 0-based: element i stands for i + 1 in [n].

#include <cstdint>
#include <vector>

#include "chg/group.hpp"

namespace chg {

inline constexpr std::uint64_t kDefaultNodeCap = 1'000'000'000;

struct SearchResult {
  std::int64_t n = 0;
  int h = 0;
  int g = 0;
  std::size_t best_size = 0;
  GSet best_set = GSet::from_keys(GroupDescriptor::interval(1), {});
  std::uint64_t nodes_explored = 0;
  bool optimal = false;
};

// Lexicographically smallest maximum C_h[g]-set in [n]. When node_cap is hit
// the best set found so far is returned with optimal = false.
SearchResult max_chg_exact(std::int64_t n, int h, int g,
                           std::uint64_t node_cap = kDefaultNodeCap);

// Scans 1..n and keeps every element that preserves the property.
GSet greedy_chg(std::int64_t n, int h, int g);

struct TableRow {
  std::int64_t n = 0;
  std::size_t best_size = 0;
  bool optimal = false;
  std::uint64_t nodes = 0;
};

// max_chg_exact for n = 1..n_max. node_cap applies to each n separately.
std::vector<TableRow> max_table(std::int64_t n_max, int h, int g,
                                std::uint64_t node_cap = kDefaultNodeCap);

}  // namespace chg
