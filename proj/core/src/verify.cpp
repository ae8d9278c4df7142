#include "chg/verify.hpp"

#include <algorithm>
#include <bit>
#include <ostream>

#include "chg/error.hpp"

namespace chg {

namespace {

void require_hg(int h, int g) {
  if (h < 2 || g < h) {
    throw PreconditionError("verification needs g >= h >= 2 (got h=" +
                            std::to_string(h) + ", g=" + std::to_string(g) + ")");
  }
}

void require_member(const GroupDescriptor& group, const GSet& a) {
  if (!(a.group() == group)) throw StructuralError("set belongs to another group");
}

Witness make_witness(const GroupDescriptor& group, const detail::KeyClass& kc,
                     std::span<const Key> bases) {
  std::vector<Key> pattern{0};
  pattern.insert(pattern.end(), kc.pattern.begin(), kc.pattern.end());
  Witness w{GSet::from_keys(group, std::move(pattern)), {}};
  for (auto b : bases) w.bases.push_back(group.decode(b));
  return w;
}

}  // namespace

namespace detail {

bool disjoint_sorted(std::span<const Key> a, std::span<const Key> b) noexcept {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

namespace {

bool extend(std::span<const std::vector<Key>> translates, std::size_t need,
            std::size_t from, std::size_t limit,
            std::vector<std::size_t>& chosen) {
  if (need == 0) return true;
  for (std::size_t i = from; i + need <= limit; ++i) {
    bool ok = true;
    for (auto c : chosen) {
      if (!disjoint_sorted(translates[i], translates[c])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen.push_back(i);
    if (extend(translates, need - 1, i + 1, limit, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool pick_disjoint(std::span<const std::vector<Key>> translates,
                   std::size_t need, std::size_t limit,
                   std::vector<std::size_t>& chosen) {
  limit = std::min(limit, translates.size());
  const auto before = chosen.size();
  if (extend(translates, need, 0, limit, chosen)) return true;
  chosen.resize(before);
  return false;
}

}  // namespace detail

Verdict verify_chg(const GroupDescriptor& group, const GSet& a, int h, int g,
                   const ExecOptions& opts) {
  require_hg(h, g);
  require_member(group, a);
  const auto classes = detail::collect_classes(group, a.keys(), h, opts);
  for (const auto& kc : classes) {
    if (kc.bases.size() >= static_cast<std::size_t>(g)) {
      return {false, make_witness(group, kc,
                                  std::span(kc.bases).first(static_cast<std::size_t>(g)))};
    }
  }
  return {true, std::nullopt};
}

Verdict verify_weak_chg(const GroupDescriptor& group, const GSet& a, int h,
                        int g, const ExecOptions& opts) {
  require_hg(h, g);
  require_member(group, a);
  const auto classes = detail::collect_classes(group, a.keys(), h, opts);
  std::vector<std::vector<Key>> translates;
  std::vector<std::size_t> chosen;
  for (const auto& kc : classes) {
    if (kc.bases.size() < static_cast<std::size_t>(g)) continue;
    translates.resize(kc.bases.size());
    for (std::size_t i = 0; i < kc.bases.size(); ++i) {
      detail::translate_pattern(group, kc.pattern, kc.bases[i], translates[i]);
    }
    chosen.clear();
    if (detail::pick_disjoint(translates, static_cast<std::size_t>(g),
                              translates.size(), chosen)) {
      std::vector<Key> bases;
      for (auto c : chosen) bases.push_back(kc.bases[c]);
      return {false, make_witness(group, kc, bases)};
    }
  }
  return {true, std::nullopt};
}

bool witness_is_valid(const GSet& a, const Witness& w, std::size_t g,
                      bool require_disjoint) {
  const auto& group = a.group();
  if (w.bases.size() != g) return false;
  std::vector<Key> bases;
  for (const auto& b : w.bases) {
    if (!group.contains(b)) return false;
    bases.push_back(group.encode(b));
  }
  auto sorted = bases;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

  std::vector<std::vector<Key>> translates;
  for (auto b : bases) {
    std::vector<Key> t;
    for (auto p : w.pattern.keys()) {
      const Key k = group.add_keys(p, b);
      if (!a.contains_key(k)) return false;
      t.push_back(k);
    }
    std::sort(t.begin(), t.end());
    translates.push_back(std::move(t));
  }
  if (require_disjoint) {
    for (std::size_t i = 0; i < translates.size(); ++i) {
      for (std::size_t j = i + 1; j < translates.size(); ++j) {
        if (!detail::disjoint_sorted(translates[i], translates[j])) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// ZMatrix

ZMatrix::ZMatrix(GroupDescriptor group, GSet generator)
    : group_(std::move(group)),
      generator_(std::move(generator)),
      n_(group_.order()),
      words_(static_cast<std::size_t>((n_ + 63) / 64)),
      rows_(static_cast<std::size_t>(n_) * words_, 0) {
  for (std::int64_t i = 0; i < n_; ++i) {
    for (std::int64_t j = 0; j < n_; ++j) {
      if (generator_.contains_key(group_.add_keys(i, j))) {
        rows_[static_cast<std::size_t>(i) * words_ + static_cast<std::size_t>(j) / 64] |=
            std::uint64_t{1} << (static_cast<std::size_t>(j) % 64);
      }
    }
  }
}

std::int64_t ZMatrix::row_sum(std::int64_t i) const noexcept {
  std::int64_t s = 0;
  for (auto w : row(i)) s += std::popcount(w);
  return s;
}

std::int64_t ZMatrix::ones() const noexcept {
  std::int64_t s = 0;
  for (auto w : rows_) s += std::popcount(w);
  return s;
}

bool ZMatrix::row_sums_uniform() const noexcept {
  for (std::int64_t i = 1; i < n_; ++i) {
    if (row_sum(i) != row_sum(0)) return false;
  }
  return true;
}

ZMatrix build_zmatrix(const GroupDescriptor& group, const GSet& a,
                      std::int64_t order_cap) {
  if (!group.is_group()) {
    throw UnsupportedError("the interval [n] is not a group; use a cyclic or product group");
  }
  require_member(group, a);
  if (group.order() > order_cap) {
    throw ResourceError("group order " + std::to_string(group.order()) +
                        " exceeds the matrix cap of " + std::to_string(order_cap));
  }
  ZMatrix m(group, a);
  for (std::int64_t i = 0; i < m.n(); ++i) {
    if (m.row_sum(i) != static_cast<std::int64_t>(a.size())) {
      throw InternalError("matrix row " + std::to_string(i) +
                          " does not contain |A| ones");
    }
  }
  return m;
}

Verdict check_kgh_free(const ZMatrix& m, int g, int h, std::uint64_t cap) {
  if (h < 1 || g < 1) throw PreconditionError("g and h must be positive");
  const auto n = static_cast<std::size_t>(m.n());
  const auto hh = static_cast<std::size_t>(h);
  if (hh > n || static_cast<std::size_t>(g) > n) return {true, std::nullopt};
  const auto subsets = binomial(n, hh);
  if (subsets > cap / std::max<std::uint64_t>(n, 1)) {
    throw ResourceError("column-subset enumeration exceeds the cap");
  }

  // Column bitsets over rows.
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> cols(n * words, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m.at(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j))) {
        cols[j * words + i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
  }

  std::vector<std::size_t> idx(hh);
  for (std::size_t i = 0; i < hh; ++i) idx[i] = i;
  std::vector<std::uint64_t> acc(words);
  while (true) {
    std::copy_n(cols.begin() + static_cast<std::ptrdiff_t>(idx[0] * words), words, acc.begin());
    for (std::size_t k = 1; k < hh; ++k) {
      for (std::size_t w = 0; w < words; ++w) acc[w] &= cols[idx[k] * words + w];
    }
    std::int64_t common = 0;
    for (auto w : acc) common += std::popcount(w);
    if (common >= g) {
      std::vector<Key> columns(idx.begin(), idx.end());
      Witness w{GSet::from_keys(m.group(), columns), {}};
      for (std::size_t r = 0; r < n && w.bases.size() < static_cast<std::size_t>(g); ++r) {
        if ((acc[r / 64] >> (r % 64)) & 1u) {
          w.bases.push_back(m.group().decode(static_cast<Key>(r)));
        }
      }
      return {false, std::move(w)};
    }
    // Lexicographic successor.
    std::size_t k = hh;
    while (k > 0 && idx[k - 1] == n - hh + (k - 1)) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < hh; ++j) idx[j] = idx[j - 1] + 1;
  }
  return {true, std::nullopt};
}

GSet interval_to_cyclic(const GSet& a) {
  const auto& group = a.group();
  if (group.kind() != GroupKind::kInterval) {
    throw PreconditionError("interval_to_cyclic expects an interval set");
  }
  const auto n = group.modulus();
  for (auto k : a.keys()) {
    if (k < 0 || k >= 2 * n) {
      throw PreconditionError("element " + std::to_string(k) + " is not below 2n");
    }
  }
  return GSet::from_keys(GroupDescriptor::cyclic(2 * n), a.keys());
}

void write_pbm(std::ostream& out, const ZMatrix& m) {
  out << "P1\n" << m.n() << ' ' << m.n() << '\n';
  for (std::int64_t i = 0; i < m.n(); ++i) {
    for (std::int64_t j = 0; j < m.n(); ++j) {
      if (j) out << ' ';
      out << (m.at(i, j) ? '1' : '0');
    }
    out << '\n';
  }
}

}  // namespace chg
