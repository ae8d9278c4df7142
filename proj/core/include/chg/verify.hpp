#pragma once

// Exact decision procedures for the C_h[g] and weak C_h[g] properties, and
// the 0-1 matrix M[i][j] = [b_i + b_j in A] over a finite group.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "chg/group.hpp"

namespace chg {

// A violation: pattern + base is inside A for each of the g bases.
struct Witness {
  GSet pattern;
  std::vector<Elem> bases;
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;  // present iff !holds
};

// A is C_h[g] iff no translation class of h-subsets of A has g members.
// Interval sets are checked inside Z, so translates may leave [n].
// Throws ResourceError when C(|A|, h) exceeds opts.subset_cap.
Verdict verify_chg(const GroupDescriptor& group, const GSet& a, int h, int g,
                   const ExecOptions& opts = {});

// Same, counting only classes with g pairwise-disjoint members.
Verdict verify_weak_chg(const GroupDescriptor& group, const GSet& a, int h,
                        int g, const ExecOptions& opts = {});

// Re-checks a witness by direct containment (and disjointness if asked).
bool witness_is_valid(const GSet& a, const Witness& w, std::size_t g,
                      bool require_disjoint);

inline constexpr std::int64_t kDefaultMatrixCap = 512;

class ZMatrix {
 public:
  ZMatrix(GroupDescriptor group, GSet generator);

  std::int64_t n() const noexcept { return n_; }
  const GroupDescriptor& group() const noexcept { return group_; }
  const GSet& generator() const noexcept { return generator_; }

  bool at(std::int64_t i, std::int64_t j) const noexcept {
    return (rows_[static_cast<std::size_t>(i) * words_ +
                  static_cast<std::size_t>(j) / 64] >>
            (static_cast<std::size_t>(j) % 64)) & 1u;
  }
  std::int64_t row_sum(std::int64_t i) const noexcept;
  std::int64_t ones() const noexcept;
  bool row_sums_uniform() const noexcept;

  // Row i as a bitset of columns, `words()` 64-bit words long.
  std::span<const std::uint64_t> row(std::int64_t i) const noexcept {
    return {rows_.data() + static_cast<std::size_t>(i) * words_, words_};
  }
  std::size_t words() const noexcept { return words_; }

 private:
  GroupDescriptor group_;
  GSet generator_;
  std::int64_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

// Rows and columns follow the canonical element order b_0 < b_1 < ...
// Unsupported for the interval kind; ResourceError above order_cap.
ZMatrix build_zmatrix(const GroupDescriptor& group, const GSet& a,
                      std::int64_t order_cap = kDefaultMatrixCap);

// True iff no h columns share g rows that are all ones on them. A witness's
// pattern is the column set and its bases are the rows.
Verdict check_kgh_free(const ZMatrix& m, int g, int h,
                       std::uint64_t cap = 100'000'000);

// Reads A in [n] (0-based, values below 2n) as residues of Z_2n.
GSet interval_to_cyclic(const GSet& a);

// Plain PBM (P1).
void write_pbm(std::ostream& out, const ZMatrix& m);

namespace detail {

// Extends `chosen` (indices into translates, pairwise disjoint) with `need`
// more pairwise-disjoint translates drawn from indices [0, limit), each
// larger than any index already taken by the search. Returns the
// lexicographically first extension.
bool pick_disjoint(std::span<const std::vector<Key>> translates,
                   std::size_t need, std::size_t limit,
                   std::vector<std::size_t>& chosen);

bool disjoint_sorted(std::span<const Key> a, std::span<const Key> b) noexcept;

}  // namespace detail

}  // namespace chg
