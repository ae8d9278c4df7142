#pragma once

// Finite abelian groups (Z_n, Z_q^d) and the integer interval [n] viewed
// inside Z, together with element sets and translation classes of subsets.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chg {

// Mixed-radix encoding of an element. For Z_q^d the first coordinate is the
// most significant digit, so key order equals lexicographic coordinate order.
using Key = std::int64_t;

enum class GroupKind { kCyclic, kProduct, kInterval };

struct Elem {
  std::vector<std::int64_t> coords;

  Elem() = default;
  Elem(std::initializer_list<std::int64_t> c) : coords(c) {}
  explicit Elem(std::vector<std::int64_t> c) : coords(std::move(c)) {}

  static Elem scalar(std::int64_t v) { return Elem{v}; }

  std::size_t dimension() const noexcept { return coords.size(); }

  friend auto operator<=>(const Elem&, const Elem&) = default;
  friend bool operator==(const Elem&, const Elem&) = default;
};

std::string to_string(const Elem& e);

class GroupDescriptor {
 public:
  static GroupDescriptor cyclic(std::int64_t n);
  static GroupDescriptor product(std::int64_t q, int d);
  static GroupDescriptor interval(std::int64_t n);

  // Accepts "cyclic:7", "product:3^3" and "interval:100".
  static GroupDescriptor parse(std::string_view text);

  GroupKind kind() const noexcept { return kind_; }
  bool is_group() const noexcept { return kind_ != GroupKind::kInterval; }

  // n for cyclic and interval, q for product.
  std::int64_t modulus() const noexcept { return modulus_; }
  int dimension() const noexcept { return dimension_; }
  // Number of elements of the group (or of [n] for the interval kind).
  std::int64_t order() const noexcept { return order_; }

  // Interval elements only need to be non-negative: translates may leave [n].
  bool contains(const Elem& e) const noexcept;

  Key encode(const Elem& e) const;
  Elem decode(Key k) const;

  Key add_keys(Key a, Key b) const noexcept;
  Key sub_keys(Key a, Key b) const noexcept;

  std::string to_string() const;

  friend bool operator==(const GroupDescriptor&,
                         const GroupDescriptor&) = default;

 private:
  GroupDescriptor(GroupKind kind, std::int64_t modulus, int dimension);

  GroupKind kind_ = GroupKind::kCyclic;
  std::int64_t modulus_ = 1;
  int dimension_ = 1;
  std::int64_t order_ = 1;
};

// A sorted, duplicate-free set of elements of one group.
class GSet {
 public:
  GSet(GroupDescriptor group, std::vector<Elem> elems);

  static GSet from_keys(GroupDescriptor group, std::vector<Key> keys);

  const GroupDescriptor& group() const noexcept { return group_; }
  const std::vector<Elem>& elems() const noexcept { return elems_; }
  // Sorted ascending, parallel to elems().
  const std::vector<Key>& keys() const noexcept { return keys_; }

  std::size_t size() const noexcept { return keys_.size(); }
  bool empty() const noexcept { return keys_.empty(); }

  bool contains(const Elem& e) const;
  bool contains_key(Key k) const;

  friend bool operator==(const GSet& a, const GSet& b) {
    return a.group_ == b.group_ && a.keys_ == b.keys_;
  }

 private:
  GSet(GroupDescriptor group, std::vector<Key> keys, bool /*from_keys*/);

  GroupDescriptor group_;
  std::vector<Key> keys_;
  std::vector<Elem> elems_;
};

struct PatternClass {
  GSet pattern;             // canonical representative of the class
  std::vector<Elem> bases;  // every k with pattern + k inside the host set
};

struct CanonicalForm {
  GSet pattern;
  Elem shift;
};

// Knobs shared by the enumeration-heavy operations.
struct ExecOptions {
  std::uint64_t subset_cap = 100'000'000;
  unsigned threads = 1;
};

Elem add(const GroupDescriptor& g, const Elem& a, const Elem& b);

GSet translate(const GroupDescriptor& g, const GSet& x, const Elem& k);

// Interval kind: shift = min(X). Group kinds: the lexicographically smallest
// of the |X| candidates X - x; the smallest such x is the shift.
CanonicalForm canonicalize(const GroupDescriptor& g, const GSet& x);

// Partition of all h-subsets of A into translation classes, ordered by
// canonical pattern. Returns an empty list when h > |A|.
std::vector<PatternClass> enumerate_pattern_classes(
    const GroupDescriptor& g, const GSet& a, int h,
    const ExecOptions& opts = {});

// Saturating binomial coefficient.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

namespace detail {

// Key-level form of a pattern class. `pattern` omits the leading identity
// element, which every canonical pattern contains.
struct KeyClass {
  std::vector<Key> pattern;
  std::vector<Key> bases;
};

// Canonical pattern (without its leading 0) of the sorted key tuple x, and
// every shift k with pattern + k = x.
void canonical_pattern(const GroupDescriptor& g, std::span<const Key> x,
                       std::vector<Key>& pattern, std::vector<Key>& shifts,
                       std::vector<Key>& scratch);

std::vector<KeyClass> collect_classes(const GroupDescriptor& g,
                                      std::span<const Key> sorted_keys, int h,
                                      const ExecOptions& opts);

// Sorted keys of pattern + base, where pattern omits the identity.
void translate_pattern(const GroupDescriptor& g, std::span<const Key> pattern,
                       Key base, std::vector<Key>& out);

}  // namespace detail

}  // namespace chg
