#pragma once

// Explicit constructions of C_h[g]-sets and the random construction of weak
// C_h[g]-sets in [n].

#include <cstdint>
#include <vector>

#include "chg/error.hpp"
#include "chg/finite_field.hpp"
#include "chg/group.hpp"

namespace chg {

// Cap on p^3 for sphere enumeration.
inline constexpr std::int64_t kDefaultSphereCap = 10'000'000;

// Smallest positive non-residue when p = 1 mod 4, smallest positive nonzero
// residue otherwise.
std::int64_t sphere_alpha(std::int64_t p);

// {x in F_p^3 : x1^2 + x2^2 + x3^2 = alpha}, with |A| >= p^2 - p.
GSet sphere_set(std::int64_t p, std::int64_t cube_cap = kDefaultSphereCap);

struct NormSet {
  GSet set;       // in Z_q^h
  int g = 0;      // h! + 1
  Poly modulus;   // defining polynomial of F_{q^h}
};

// Norm-one elements of F_{q^h} read in additive coordinates.
NormSet norm_set(std::int64_t q, int h,
                 std::int64_t field_cap = kDefaultFieldCap);

// Positional map x -> x_1 + base x_2 + base^2 x_3 + ... into Z. Requires
// base >= 2q so sums of two elements never carry.
GSet freiman_embed(std::int64_t base, const GSet& x);

// Largest odd prime p with 4p^3 <= n; n >= 108.
std::int64_t embedding_prime(std::int64_t n);

// The sphere set for embedding_prime(n), embedded with base 2p; a subset of
// [n] held 0-based.
GSet embedded_c33(std::int64_t n);

// {2pi + (i^2 mod p) : 0 <= i < p}, a Sidon set inside [0, 2p^2).
GSet sidon_baseline(std::int64_t p);

// The (h,g)-bad elements of S in Z: the largest base of every g pairwise
// disjoint translates of a common h-element pattern inside S.
GSet detect_bad(const GSet& s, int h, int g, const ExecOptions& opts = {});

struct WeakResult {
  GSet set;                   // in interval(n), 0-based
  int attempts_used = 0;      // 1-based index of the accepted attempt
  std::uint64_t attempt_seed = 0;
  std::size_t sample_size = 0;
  std::size_t bad_size = 0;
  double p = 0;
  double np = 0;
  std::vector<AttemptStats> attempts;  // every attempt made, accepted last
};

// Samples S from [n] with the density of np_density, deletes detect_bad(S)
// and accepts the first attempt with |S| >= np/2 and |S_bad| <= np/4.
// Throws ExhaustionError after max_attempts rejections.
WeakResult weak_random_set(std::int64_t n, int h, int g, std::uint64_t seed,
                           int max_attempts = 64,
                           const ExecOptions& opts = {});

}  // namespace chg
