#pragma once

// Brute-force reference implementations used only by tests. None of them
// touches the pattern-class engine of the library: they work straight from
// the definitions on plain integers and bitmasks.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace chg::oracle {

// Calls f on every k-subset of [0, n) as a sorted index vector.
inline void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  if (k > n || k < 0) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == k) {
      f(idx);
      return;
    }
    for (int v = start; v <= n - (k - pos); ++v) {
      idx[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 0);
}

// Offsets k in [0, n) with X + k inside A, where membership is a bitset over
// [0, n) and X is a list of non-negative offsets.
inline std::vector<int> containing_offsets(const std::vector<bool>& in_a, const std::vector<int>& x) {
  const int n = static_cast<int>(in_a.size());
  std::vector<int> ks;
  for (int k = 0; k < n; ++k) {
    bool all = true;
    for (int v : x) {
      if (v + k >= n || !in_a[static_cast<std::size_t>(v + k)]) {
        all = false;
        break;
      }
    }
    if (all) ks.push_back(k);
  }
  return ks;
}

inline bool pairwise_disjoint_translates(const std::vector<int>& x, const std::vector<int>& ks) {
  std::set<int> seen;
  for (int k : ks) {
    for (int v : x) {
      if (!seen.insert(v + k).second) return false;
    }
  }
  return true;
}

// A subset of [0, n) (as a membership vector) is C_h[g] in Z iff no h-set X
// has g distinct offsets k with X + k inside A. Translating X lets us fix
// min X = 0 and keep X and k inside [0, n). With `weak`, the g translates
// must also be pairwise disjoint.
inline bool naive_chg_interval(const std::vector<bool>& in_a, int h, int g, bool weak = false) {
  const int n = static_cast<int>(in_a.size());
  bool violated = false;
  // X = {0} + (h-1)-subset of [1, n).
  for_each_subset(n - 1, h - 1, [&](const std::vector<int>& rest) {
    if (violated) return;
    std::vector<int> x{0};
    for (int r : rest) x.push_back(r + 1);
    auto ks = containing_offsets(in_a, x);
    if (static_cast<int>(ks.size()) < g) return;
    if (!weak) {
      violated = true;
      return;
    }
    for_each_subset(static_cast<int>(ks.size()), g, [&](const std::vector<int>& pick) {
      if (violated) return;
      std::vector<int> chosen;
      for (int i : pick) chosen.push_back(ks[static_cast<std::size_t>(i)]);
      if (pairwise_disjoint_translates(x, chosen)) violated = true;
    });
  });
  return !violated;
}

inline std::vector<bool> membership(std::int64_t n, const std::vector<std::int64_t>& elems) {
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (auto e : elems) in[static_cast<std::size_t>(e)] = true;
  return in;
}

// Same check in the cyclic group Z_m: X ranges over h-subsets containing 0,
// k over all of Z_m.
inline bool naive_chg_cyclic(std::int64_t m, const std::vector<std::int64_t>& a, int h, int g) {
  std::vector<bool> in(static_cast<std::size_t>(m), false);
  for (auto e : a) in[static_cast<std::size_t>(e)] = true;
  bool violated = false;
  for_each_subset(static_cast<int>(m) - 1, h - 1, [&](const std::vector<int>& rest) {
    if (violated) return;
    int count = 0;
    for (std::int64_t k = 0; k < m; ++k) {
      bool all = in[static_cast<std::size_t>(k)];
      for (int r : rest) all = all && in[static_cast<std::size_t>((r + 1 + k) % m)];
      if (all) ++count;
    }
    if (count >= g) violated = true;
  });
  return !violated;
}

// m in S is (h,g)-bad iff there are m_1 < ... < m_{g-1} < m and
// 0 < l_1 < ... < l_{h-1} such that {m_i, m} + {0, l_j} are gh distinct
// elements of S. Direct nested enumeration.
inline std::vector<std::int64_t> naive_bad(const std::vector<std::int64_t>& s, int h, int g) {
  if (s.empty()) return {};
  const std::int64_t top = *std::max_element(s.begin(), s.end());
  std::vector<bool> in(static_cast<std::size_t>(top + 1), false);
  for (auto v : s) in[static_cast<std::size_t>(v)] = true;
  auto member = [&](std::int64_t v) { return v >= 0 && v <= top && in[static_cast<std::size_t>(v)]; };

  std::vector<std::int64_t> bad;
  std::vector<std::int64_t> ms, ls;
  for (auto m : s) {
    bool found = false;
    // Choose l_1 < ... < l_{h-1} in [1, top].
    std::function<void(std::int64_t)> pick_l;
    std::function<void(std::int64_t)> pick_m;
    auto check = [&] {
      std::set<std::int64_t> sums;
      std::vector<std::int64_t> bases = ms;
      bases.push_back(m);
      for (auto b : bases) {
        sums.insert(b);
        for (auto l : ls) sums.insert(b + l);
      }
      if (sums.size() != static_cast<std::size_t>(g * h)) return false;
      return std::all_of(sums.begin(), sums.end(), member);
    };
    pick_m = [&](std::int64_t from) {
      if (found) return;
      if (static_cast<int>(ms.size()) == g - 1) {
        if (check()) found = true;
        return;
      }
      for (std::int64_t v = from; v < m && !found; ++v) {
        if (!member(v)) continue;
        ms.push_back(v);
        pick_m(v + 1);
        ms.pop_back();
      }
    };
    pick_l = [&](std::int64_t from) {
      if (found) return;
      if (static_cast<int>(ls.size()) == h - 1) {
        pick_m(0);
        return;
      }
      for (std::int64_t l = from; l <= top && !found; ++l) {
        if (!member(m + l)) continue;  // m + l must lie in S
        ls.push_back(l);
        pick_l(l + 1);
        ls.pop_back();
      }
    };
    pick_l(1);
    if (found) bad.push_back(m);
  }
  return bad;
}

// Largest C_2[g]-subset of [0, n) by scanning subsets in decreasing size.
// A bitmask is C_2[g] iff every difference d occurs at most g-1 times, i.e.
// popcount(mask & (mask >> d)) < g.
inline int brute_max_c2g(int n, int g) {
  auto ok = [&](std::uint64_t mask) {
    for (int d = 1; d < n; ++d) {
      if (std::popcount(mask & (mask >> d)) >= g) return false;
    }
    return true;
  };
  for (int k = n; k >= 1; --k) {
    // Gosper's hack over k-bit masks below 2^n.
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (mask < limit) {
      if (ok(mask)) return k;
      const std::uint64_t c = mask & (~mask + 1);
      const std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  return 0;
}

// Largest C_h[g]-subset of [0, n) by exhaustive subset scan with the naive
// containment check. Only for tiny n.
inline int brute_max_chg(int n, int h, int g) {
  int best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best) continue;
    std::vector<bool> in(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) in[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
    if (naive_chg_interval(in, h, g)) best = size;
  }
  return best;
}

}  // namespace chg::oracle
