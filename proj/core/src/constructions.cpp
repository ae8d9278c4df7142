#include "chg/constructions.hpp"

#include <algorithm>
#include <cmath>

#include "chg/bounds.hpp"
#include "chg/rng.hpp"
#include "chg/verify.hpp"

namespace chg {

namespace {

void require_odd_prime(std::int64_t p) {
  if (p == 2) throw UnsupportedError("p = 2 is not supported; need an odd prime");
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw PreconditionError(std::to_string(p) + " is not an odd prime");
  }
}

std::int64_t integer_cbrt(std::int64_t x) {
  auto r = static_cast<std::int64_t>(std::cbrt(static_cast<double>(x)));
  while (r > 0 && r * r * r > x) --r;
  while ((r + 1) * (r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace

std::int64_t sphere_alpha(std::int64_t p) {
  require_odd_prime(p);
  const int wanted = (p % 4 == 1) ? -1 : 1;
  for (std::int64_t a = 1; a < p; ++a) {
    if (quadratic_character(p, a) == wanted) return a;
  }
  throw InternalError("no suitable alpha");
}

GSet sphere_set(std::int64_t p, std::int64_t cube_cap) {
  const auto alpha = sphere_alpha(p);
  if (p > cube_cap / p / p) {
    throw ResourceError("p^3 exceeds the sphere cap of " + std::to_string(cube_cap));
  }
  const PrimeField f(p);
  auto group = GroupDescriptor::product(p, 3);
  std::vector<std::int64_t> squares(static_cast<std::size_t>(p));
  for (std::int64_t x = 0; x < p; ++x) squares[static_cast<std::size_t>(x)] = f.mul(x, x);
  std::vector<Key> keys;
  for (std::int64_t x1 = 0; x1 < p; ++x1) {
    for (std::int64_t x2 = 0; x2 < p; ++x2) {
      const auto partial = f.add(squares[static_cast<std::size_t>(x1)],
                                 squares[static_cast<std::size_t>(x2)]);
      for (std::int64_t x3 = 0; x3 < p; ++x3) {
        if (f.add(partial, squares[static_cast<std::size_t>(x3)]) == alpha) {
          keys.push_back((x1 * p + x2) * p + x3);
        }
      }
    }
  }
  if (static_cast<std::int64_t>(keys.size()) < p * p - p) {
    throw InternalError("sphere has fewer than p^2 - p points");
  }
  return GSet::from_keys(group, std::move(keys));
}

NormSet norm_set(std::int64_t q, int h, std::int64_t field_cap) {
  if (h < 2) throw PreconditionError("norm sets need h >= 2");
  if (h > 20) throw PreconditionError("h! + 1 overflows for h > 20");
  ExtField field(q, h, field_cap);
  std::vector<Elem> elems;
  for (std::int64_t i = 0; i < field.size(); ++i) {
    auto x = field.from_index(i);
    if (norm(field, x) == 1) elems.push_back(additive_coords(field, x));
  }
  const auto expected = (field.size() - 1) / (q - 1);
  if (static_cast<std::int64_t>(elems.size()) != expected) {
    throw InternalError("norm-one subgroup has the wrong size");
  }
  std::int64_t fact = 1;
  for (int i = 2; i <= h; ++i) fact *= i;
  return {GSet(GroupDescriptor::product(q, h), std::move(elems)),
          static_cast<int>(fact + 1), field.modulus()};
}

GSet freiman_embed(std::int64_t base, const GSet& x) {
  const auto& group = x.group();
  if (group.kind() == GroupKind::kInterval) {
    throw PreconditionError("freiman_embed expects a cyclic or product group");
  }
  const auto m = group.modulus();
  if (base < 2 * m) {
    throw PreconditionError("base " + std::to_string(base) +
                            " is below 2m = " + std::to_string(2 * m));
  }
  std::int64_t top = 1;
  for (int i = 1; i < group.dimension(); ++i) {
    if (top > (std::int64_t{1} << 62) / base) {
      throw ResourceError("embedding overflows 64-bit integers");
    }
    top *= base;
  }
  std::vector<Key> out;
  out.reserve(x.size());
  for (const auto& e : x.elems()) {
    std::int64_t v = 0, place = 1;
    for (auto c : e.coords) {
      v += c * place;
      place *= base;
    }
    out.push_back(v);
  }
  // The image fits in [0, m * base^(d-1)), i.e. below (base/2) base^(d-1).
  return GSet::from_keys(GroupDescriptor::interval(std::max<std::int64_t>(m * top, 1)),
                         std::move(out));
}

std::int64_t embedding_prime(std::int64_t n) {
  if (n < 108) throw PreconditionError("embedding needs n >= 108 (4 * 3^3)");
  for (auto p = integer_cbrt(n / 4); p >= 3; --p) {
    if (p % 2 == 1 && 4 * p * p * p <= n && is_prime(static_cast<std::uint64_t>(p))) {
      return p;
    }
  }
  throw InternalError("no odd prime found");
}

GSet embedded_c33(std::int64_t n) {
  const auto p = embedding_prime(n);
  auto image = freiman_embed(2 * p, sphere_set(p));
  if (!image.empty() && image.keys().back() >= n) {
    throw InternalError("embedded set leaves [n]");
  }
  return GSet::from_keys(GroupDescriptor::interval(n), image.keys());
}

GSet sidon_baseline(std::int64_t p) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw PreconditionError(std::to_string(p) + " is not prime");
  }
  std::vector<Key> keys;
  for (std::int64_t i = 0; i < p; ++i) keys.push_back(2 * p * i + (i * i) % p);
  return GSet::from_keys(GroupDescriptor::interval(2 * p * p), std::move(keys));
}

GSet detect_bad(const GSet& s, int h, int g, const ExecOptions& opts) {
  if (h < 2 || g < 2) throw PreconditionError("detect_bad needs h >= 2 and g >= 2");
  const auto& group = s.group();
  if (group.kind() != GroupKind::kInterval) {
    throw PreconditionError("detect_bad works on interval sets");
  }
  std::vector<Key> bad;
  if (s.size() < static_cast<std::size_t>(g) * static_cast<std::size_t>(h)) {
    return GSet::from_keys(group, {});
  }
  const auto classes = detail::collect_classes(group, s.keys(), h, opts);
  std::vector<std::vector<Key>> translates;
  std::vector<std::size_t> chosen;
  for (const auto& kc : classes) {
    if (kc.bases.size() < static_cast<std::size_t>(g)) continue;
    translates.resize(kc.bases.size());
    for (std::size_t i = 0; i < kc.bases.size(); ++i) {
      detail::translate_pattern(group, kc.pattern, kc.bases[i], translates[i]);
    }
    // Bases are ascending, so base m is bad iff g-1 smaller bases complete a
    // pairwise-disjoint family with it.
    for (std::size_t m = static_cast<std::size_t>(g) - 1; m < kc.bases.size(); ++m) {
      chosen.assign(1, m);
      if (detail::pick_disjoint(translates, static_cast<std::size_t>(g) - 1, m, chosen)) {
        bad.push_back(kc.bases[m]);
      }
    }
  }
  return GSet::from_keys(group, std::move(bad));
}

WeakResult weak_random_set(std::int64_t n, int h, int g, std::uint64_t seed,
                           int max_attempts, const ExecOptions& opts) {
  if (h < 2 || g < h) throw PreconditionError("weak construction needs g >= h >= 2");
  if (max_attempts < 1) throw PreconditionError("max_attempts must be positive");
  const auto density = np_density(static_cast<double>(n), h, g);
  const auto group = GroupDescriptor::interval(n);

  WeakResult result{GSet::from_keys(group, {}), 0, 0, 0, 0, density.p, density.np, {}};
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    const auto attempt_seed = child_seed(seed, static_cast<std::uint64_t>(attempt));
    Rng rng(attempt_seed);
    std::vector<Key> sample;
    for (std::int64_t x = 0; x < n; ++x) {
      if (rng.uniform() < density.p) sample.push_back(x);
    }
    const auto s = GSet::from_keys(group, std::move(sample));
    const auto bad = detect_bad(s, h, g, opts);
    result.attempts.push_back({attempt_seed, s.size(), bad.size()});
    if (static_cast<double>(s.size()) < density.np / 2 ||
        static_cast<double>(bad.size()) > density.np / 4) {
      continue;
    }
    std::vector<Key> kept;
    std::set_difference(s.keys().begin(), s.keys().end(), bad.keys().begin(),
                        bad.keys().end(), std::back_inserter(kept));
    result.set = GSet::from_keys(group, std::move(kept));
    if (!verify_weak_chg(group, result.set, h, g, opts).holds) {
      throw InternalError("deleting bad elements left a weak C_h[g] violation");
    }
    result.attempts_used = attempt + 1;
    result.attempt_seed = attempt_seed;
    result.sample_size = s.size();
    result.bad_size = bad.size();
    return result;
  }
  throw ExhaustionError("no attempt out of " + std::to_string(max_attempts) +
                            " met |S| >= np/2 and |S_bad| <= np/4",
                        std::move(result.attempts));
}

}  // namespace chg
