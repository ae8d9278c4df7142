#pragma once

// Prime fields, extension fields F_{q^h} over a prime q in the polynomial
// basis, and the norm map F_{q^h} -> F_q.

#include <compare>
#include <cstdint>
#include <vector>

#include "chg/group.hpp"

namespace chg {

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;

// Euler's criterion: +1 for a nonzero square, -1 for a non-square, 0 for 0.
int quadratic_character(std::int64_t p, std::int64_t a);

class PrimeField {
 public:
  explicit PrimeField(std::int64_t p);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t reduce(std::int64_t a) const noexcept;
  std::int64_t add(std::int64_t a, std::int64_t b) const noexcept;
  std::int64_t sub(std::int64_t a, std::int64_t b) const noexcept;
  std::int64_t mul(std::int64_t a, std::int64_t b) const noexcept;
  std::int64_t pow(std::int64_t a, std::uint64_t e) const noexcept;

 private:
  std::int64_t p_;
};

// Polynomial over F_q, constant term first.
using Poly = std::vector<std::int64_t>;

inline constexpr std::int64_t kDefaultFieldCap = 4096;

// True when the monic polynomial f has no monic factor of degree 1..deg/2.
bool is_irreducible(const Poly& f, std::int64_t q);

// Smallest monic irreducible of degree h, where polynomials are ordered by
// their coefficient vector read as a base-q number (constant term = units).
// Gives t^2+t+1 over F_2, t^2+1 over F_3 and t^3+t+1 over F_2.
Poly find_irreducible(std::int64_t q, int h,
                      std::int64_t field_cap = kDefaultFieldCap);

struct ExtElem {
  std::vector<std::int64_t> coeffs;  // length h, basis 1, t, ..., t^(h-1)

  friend auto operator<=>(const ExtElem&, const ExtElem&) = default;
  friend bool operator==(const ExtElem&, const ExtElem&) = default;
};

class ExtField {
 public:
  // Uses find_irreducible(q, h) as the modulus.
  ExtField(std::int64_t q, int h, std::int64_t field_cap = kDefaultFieldCap);
  // Throws PreconditionError unless `modulus` is monic, of degree h and
  // irreducible over F_q.
  ExtField(std::int64_t q, int h, Poly modulus,
           std::int64_t field_cap = kDefaultFieldCap);

  std::int64_t q() const noexcept { return base_.p(); }
  int degree() const noexcept { return h_; }
  const Poly& modulus() const noexcept { return modulus_; }
  std::int64_t size() const noexcept { return size_; }

  bool valid(const ExtElem& x) const noexcept;
  ExtElem zero() const;
  ExtElem one() const;
  ExtElem generator_t() const;
  // Bijection [0, q^h) -> F_{q^h}; digit i of the index is coefficient i.
  ExtElem from_index(std::int64_t index) const;

  ExtElem add(const ExtElem& a, const ExtElem& b) const;
  ExtElem mul(const ExtElem& a, const ExtElem& b) const;
  ExtElem pow(ExtElem a, std::uint64_t e) const;

 private:
  PrimeField base_;
  int h_;
  Poly modulus_;
  std::int64_t size_;
};

ExtElem ext_mul(const ExtField& f, const ExtElem& a, const ExtElem& b);

// x^((q^h - 1)/(q - 1)), returned as an element of F_q.
std::int64_t norm(const ExtField& f, const ExtElem& x);

// The additive isomorphism F_{q^h} -> Z_q^h reading off coefficients.
Elem additive_coords(const ExtField& f, const ExtElem& x);

}  // namespace chg
