#include "chg/group.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <thread>

#include "chg/error.hpp"

namespace chg {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view what) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw StructuralError("cannot parse " + std::string(what) + " '" +
                          std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::string to_string(const Elem& e) {
  std::string out;
  for (std::size_t i = 0; i < e.coords.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(e.coords[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// GroupDescriptor

GroupDescriptor::GroupDescriptor(GroupKind kind, std::int64_t modulus,
                                 int dimension)
    : kind_(kind), modulus_(modulus), dimension_(dimension) {
  if (kind == GroupKind::kProduct) {
    std::int64_t order = 1;
    for (int i = 0; i < dimension; ++i) {
      if (order > std::numeric_limits<std::int64_t>::max() / 4 / modulus) {
        throw ResourceError("group order overflows 64-bit keys");
      }
      order *= modulus;
    }
    order_ = order;
  } else {
    order_ = modulus;
  }
}

GroupDescriptor GroupDescriptor::cyclic(std::int64_t n) {
  if (n < 1) throw PreconditionError("cyclic group needs n >= 1");
  return {GroupKind::kCyclic, n, 1};
}

GroupDescriptor GroupDescriptor::product(std::int64_t q, int d) {
  if (q < 2 || d < 1) {
    throw PreconditionError("product group needs q >= 2 and d >= 1");
  }
  return {GroupKind::kProduct, q, d};
}

GroupDescriptor GroupDescriptor::interval(std::int64_t n) {
  if (n < 1) throw PreconditionError("interval needs n >= 1");
  return {GroupKind::kInterval, n, 1};
}

GroupDescriptor GroupDescriptor::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw StructuralError("group descriptor '" + std::string(text) +
                          "' lacks ':'");
  }
  auto kind = text.substr(0, colon);
  auto rest = text.substr(colon + 1);
  if (kind == "cyclic") return cyclic(parse_int(rest, "cyclic order"));
  if (kind == "interval") return interval(parse_int(rest, "interval length"));
  if (kind == "product") {
    auto caret = rest.find('^');
    if (caret == std::string_view::npos) {
      throw StructuralError("product descriptor must look like product:q^d");
    }
    auto q = parse_int(rest.substr(0, caret), "product modulus");
    auto d = parse_int(rest.substr(caret + 1), "product dimension");
    if (d < 1 || d > 64) throw PreconditionError("product dimension out of range");
    return product(q, static_cast<int>(d));
  }
  throw StructuralError("unknown group kind '" + std::string(kind) + "'");
}

bool GroupDescriptor::contains(const Elem& e) const noexcept {
  if (e.coords.size() != static_cast<std::size_t>(dimension_)) return false;
  for (auto c : e.coords) {
    if (c < 0) return false;
    if (kind_ != GroupKind::kInterval && c >= modulus_) return false;
  }
  return true;
}

Key GroupDescriptor::encode(const Elem& e) const {
  if (!contains(e)) {
    throw StructuralError("element (" + chg::to_string(e) +
                          ") is not valid for " + to_string());
  }
  if (kind_ != GroupKind::kProduct) return e.coords[0];
  Key k = 0;
  for (auto c : e.coords) k = k * modulus_ + c;
  return k;
}

Elem GroupDescriptor::decode(Key k) const {
  if (kind_ != GroupKind::kProduct) return Elem::scalar(k);
  std::vector<std::int64_t> coords(static_cast<std::size_t>(dimension_));
  for (int i = dimension_ - 1; i >= 0; --i) {
    coords[static_cast<std::size_t>(i)] = k % modulus_;
    k /= modulus_;
  }
  return Elem(std::move(coords));
}

Key GroupDescriptor::add_keys(Key a, Key b) const noexcept {
  switch (kind_) {
    case GroupKind::kInterval:
      return a + b;
    case GroupKind::kCyclic: {
      Key s = a + b;
      return s >= modulus_ ? s - modulus_ : s;
    }
    case GroupKind::kProduct: {
      Key out = 0, place = 1;
      for (int i = 0; i < dimension_; ++i) {
        Key s = a % modulus_ + b % modulus_;
        if (s >= modulus_) s -= modulus_;
        out += s * place;
        place *= modulus_;
        a /= modulus_;
        b /= modulus_;
      }
      return out;
    }
  }
  return 0;
}

Key GroupDescriptor::sub_keys(Key a, Key b) const noexcept {
  switch (kind_) {
    case GroupKind::kInterval:
      return a - b;
    case GroupKind::kCyclic: {
      Key s = a - b;
      return s < 0 ? s + modulus_ : s;
    }
    case GroupKind::kProduct: {
      Key out = 0, place = 1;
      for (int i = 0; i < dimension_; ++i) {
        Key s = a % modulus_ - b % modulus_;
        if (s < 0) s += modulus_;
        out += s * place;
        place *= modulus_;
        a /= modulus_;
        b /= modulus_;
      }
      return out;
    }
  }
  return 0;
}

std::string GroupDescriptor::to_string() const {
  switch (kind_) {
    case GroupKind::kCyclic:
      return "cyclic:" + std::to_string(modulus_);
    case GroupKind::kProduct:
      return "product:" + std::to_string(modulus_) + "^" +
             std::to_string(dimension_);
    case GroupKind::kInterval:
      return "interval:" + std::to_string(modulus_);
  }
  return {};
}

// ---------------------------------------------------------------------------
// GSet

GSet::GSet(GroupDescriptor group, std::vector<Elem> elems)
    : group_(std::move(group)) {
  keys_.reserve(elems.size());
  for (const auto& e : elems) keys_.push_back(group_.encode(e));
  std::sort(keys_.begin(), keys_.end());
  keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
  elems_.reserve(keys_.size());
  for (auto k : keys_) elems_.push_back(group_.decode(k));
}

GSet::GSet(GroupDescriptor group, std::vector<Key> keys, bool)
    : group_(std::move(group)), keys_(std::move(keys)) {
  std::sort(keys_.begin(), keys_.end());
  keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
  elems_.reserve(keys_.size());
  for (auto k : keys_) {
    if (k < 0 || (group_.is_group() && k >= group_.order())) {
      throw StructuralError("key " + std::to_string(k) +
                            " is not valid for " + group_.to_string());
    }
    elems_.push_back(group_.decode(k));
  }
}

GSet GSet::from_keys(GroupDescriptor group, std::vector<Key> keys) {
  return GSet(std::move(group), std::move(keys), true);
}

bool GSet::contains(const Elem& e) const {
  if (!group_.contains(e)) return false;
  return contains_key(group_.encode(e));
}

bool GSet::contains_key(Key k) const {
  return std::binary_search(keys_.begin(), keys_.end(), k);
}

// ---------------------------------------------------------------------------
// Operations

Elem add(const GroupDescriptor& g, const Elem& a, const Elem& b) {
  return g.decode(g.add_keys(g.encode(a), g.encode(b)));
}

GSet translate(const GroupDescriptor& g, const GSet& x, const Elem& k) {
  if (!(x.group() == g)) throw StructuralError("set belongs to another group");
  const Key kk = g.encode(k);
  std::vector<Key> out;
  out.reserve(x.size());
  for (auto v : x.keys()) out.push_back(g.add_keys(v, kk));
  return GSet::from_keys(g, std::move(out));
}

CanonicalForm canonicalize(const GroupDescriptor& g, const GSet& x) {
  if (x.empty()) throw StructuralError("cannot canonicalize an empty set");
  if (!(x.group() == g)) throw StructuralError("set belongs to another group");
  std::vector<Key> pattern, shifts, scratch;
  detail::canonical_pattern(g, x.keys(), pattern, shifts, scratch);
  pattern.insert(pattern.begin(), Key{0});
  return {GSet::from_keys(g, std::move(pattern)), g.decode(shifts.front())};
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  __extension__ typedef unsigned __int128 u128;
  u128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(r);
}

std::vector<PatternClass> enumerate_pattern_classes(const GroupDescriptor& g,
                                                    const GSet& a, int h,
                                                    const ExecOptions& opts) {
  if (!(a.group() == g)) throw StructuralError("set belongs to another group");
  if (h < 1) throw PreconditionError("pattern size h must be positive");
  std::vector<PatternClass> out;
  if (static_cast<std::size_t>(h) > a.size()) return out;
  for (auto& kc : detail::collect_classes(g, a.keys(), h, opts)) {
    kc.pattern.insert(kc.pattern.begin(), Key{0});
    std::vector<Elem> bases;
    bases.reserve(kc.bases.size());
    for (auto b : kc.bases) bases.push_back(g.decode(b));
    out.push_back({GSet::from_keys(g, std::move(kc.pattern)), std::move(bases)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Key-level engine

namespace detail {

void canonical_pattern(const GroupDescriptor& g, std::span<const Key> x,
                       std::vector<Key>& pattern, std::vector<Key>& shifts,
                       std::vector<Key>& scratch) {
  const std::size_t h = x.size();
  pattern.clear();
  shifts.clear();
  if (!g.is_group()) {
    // x is sorted, so the minimum is x[0] and the pattern stays sorted.
    for (std::size_t i = 1; i < h; ++i) pattern.push_back(x[i] - x[0]);
    shifts.push_back(x[0]);
    return;
  }
  bool have = false;
  for (std::size_t c = 0; c < h; ++c) {
    scratch.clear();
    for (std::size_t i = 0; i < h; ++i) {
      if (i != c) scratch.push_back(g.sub_keys(x[i], x[c]));
    }
    std::sort(scratch.begin(), scratch.end());
    if (!have) {
      pattern = scratch;
      shifts.push_back(x[c]);
      have = true;
      continue;
    }
    auto cmp = std::lexicographical_compare_three_way(
        scratch.begin(), scratch.end(), pattern.begin(), pattern.end());
    if (cmp < 0) {
      pattern = scratch;
      shifts.clear();
      shifts.push_back(x[c]);
    } else if (cmp == 0) {
      // Periodic subset: several group elements translate the pattern onto x.
      shifts.push_back(x[c]);
    }
  }
}

void translate_pattern(const GroupDescriptor& g, std::span<const Key> pattern,
                       Key base, std::vector<Key>& out) {
  out.clear();
  out.push_back(base);
  for (auto p : pattern) out.push_back(g.add_keys(p, base));
  std::sort(out.begin(), out.end());
}

namespace {

// Records are laid out flat: (h - 1) pattern keys followed by one base.
void collect_for_tops(const GroupDescriptor& g, std::span<const Key> keys,
                      int h, unsigned worker, unsigned workers,
                      std::vector<Key>& records) {
  const auto n = keys.size();
  const auto hh = static_cast<std::size_t>(h);
  std::vector<std::size_t> idx(hh);
  std::vector<Key> subset(hh), pattern, shifts, scratch;
  for (std::size_t top = hh - 1; top < n; ++top) {
    if (top % workers != worker) continue;
    // Colex enumeration of (h-1)-subsets of [0, top), completed by top.
    std::iota(idx.begin(), idx.end() - 1, std::size_t{0});
    idx[hh - 1] = top;
    while (true) {
      for (std::size_t i = 0; i < hh; ++i) subset[i] = keys[idx[i]];
      canonical_pattern(g, subset, pattern, shifts, scratch);
      for (auto s : shifts) {
        records.insert(records.end(), pattern.begin(), pattern.end());
        records.push_back(s);
      }
      if (hh == 1) break;
      std::size_t i = 0;
      while (i + 1 < hh - 1 && idx[i] + 1 == idx[i + 1]) ++i;
      if (idx[i] + 1 >= (i + 1 < hh - 1 ? idx[i + 1] : top)) break;
      ++idx[i];
      for (std::size_t j = 0; j < i; ++j) idx[j] = j;
    }
  }
}

}  // namespace

std::vector<KeyClass> collect_classes(const GroupDescriptor& g,
                                      std::span<const Key> sorted_keys, int h,
                                      const ExecOptions& opts) {
  std::vector<KeyClass> out;
  if (h < 1 || static_cast<std::size_t>(h) > sorted_keys.size()) return out;
  const auto subsets = binomial(sorted_keys.size(), static_cast<std::uint64_t>(h));
  if (subsets > opts.subset_cap) {
    throw ResourceError("enumerating " + std::to_string(subsets) +
                        " subsets exceeds the subset cap of " +
                        std::to_string(opts.subset_cap));
  }

  const unsigned workers = std::max(1u, opts.threads);
  std::vector<std::vector<Key>> per_worker(workers);
  if (workers == 1) {
    collect_for_tops(g, sorted_keys, h, 0, 1, per_worker[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        collect_for_tops(g, sorted_keys, h, w, workers, per_worker[w]);
      });
    }
    for (auto& t : pool) t.join();
  }

  const std::size_t stride = static_cast<std::size_t>(h);
  std::vector<Key> records;
  if (workers == 1) {
    records = std::move(per_worker[0]);
  } else {
    std::size_t total = 0;
    for (const auto& r : per_worker) total += r.size();
    records.reserve(total);
    for (auto& r : per_worker) {
      records.insert(records.end(), r.begin(), r.end());
      std::vector<Key>().swap(r);
    }
  }

  const std::size_t count = records.size() / stride;
  std::vector<std::uint32_t> order(count);
  std::iota(order.begin(), order.end(), 0u);
  const Key* base_ptr = records.data();
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    const Key* ra = base_ptr + a * stride;
    const Key* rb = base_ptr + b * stride;
    for (std::size_t i = 0; i < stride; ++i) {
      if (ra[i] != rb[i]) return ra[i] < rb[i];
    }
    return false;
  });

  for (std::size_t i = 0; i < count;) {
    const Key* head = base_ptr + order[i] * stride;
    KeyClass kc;
    kc.pattern.assign(head, head + stride - 1);
    std::size_t j = i;
    while (j < count) {
      const Key* r = base_ptr + order[j] * stride;
      if (!std::equal(r, r + stride - 1, head)) break;
      kc.bases.push_back(r[stride - 1]);
      ++j;
    }
    out.push_back(std::move(kc));
    i = j;
  }
  return out;
}

}  // namespace detail

}  // namespace chg
