#include "chg/finite_field.hpp"

#include <algorithm>

#include "chg/error.hpp"

namespace chg {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b,
                      std::uint64_t m) noexcept {
  __extension__ typedef unsigned __int128 u128;
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                      std::uint64_t m) noexcept {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve witnesses decide primality for all n < 3.3e24.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

int quadratic_character(std::int64_t p, std::int64_t a) {
  if (p == 2) throw UnsupportedError("quadratic character needs an odd prime");
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw PreconditionError("quadratic character needs an odd prime modulus");
  }
  const auto pu = static_cast<std::uint64_t>(p);
  const auto r = static_cast<std::uint64_t>(((a % p) + p) % p);
  if (r == 0) return 0;
  return pow_mod(r, (pu - 1) / 2, pu) == 1 ? 1 : -1;
}

// ---------------------------------------------------------------------------

PrimeField::PrimeField(std::int64_t p) : p_(p) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw PreconditionError(std::to_string(p) + " is not prime");
  }
}

std::int64_t PrimeField::reduce(std::int64_t a) const noexcept {
  a %= p_;
  return a < 0 ? a + p_ : a;
}

std::int64_t PrimeField::add(std::int64_t a, std::int64_t b) const noexcept {
  auto s = a + b;
  return s >= p_ ? s - p_ : s;
}

std::int64_t PrimeField::sub(std::int64_t a, std::int64_t b) const noexcept {
  auto s = a - b;
  return s < 0 ? s + p_ : s;
}

std::int64_t PrimeField::mul(std::int64_t a, std::int64_t b) const noexcept {
  return static_cast<std::int64_t>(mul_mod(static_cast<std::uint64_t>(a),
                                           static_cast<std::uint64_t>(b),
                                           static_cast<std::uint64_t>(p_)));
}

std::int64_t PrimeField::pow(std::int64_t a, std::uint64_t e) const noexcept {
  return static_cast<std::int64_t>(pow_mod(static_cast<std::uint64_t>(a), e,
                                           static_cast<std::uint64_t>(p_)));
}

// ---------------------------------------------------------------------------
// Polynomials over F_q

namespace {

int degree_of(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[static_cast<std::size_t>(i)] != 0) return i;
  }
  return -1;
}

// Remainder of f modulo the monic divisor d.
Poly poly_rem(Poly f, const Poly& d, const PrimeField& fq) {
  const int dd = degree_of(d);
  for (int i = degree_of(f); i >= dd; --i) {
    const auto c = f[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      auto& slot = f[static_cast<std::size_t>(i - dd + j)];
      slot = fq.sub(slot, fq.mul(c, d[static_cast<std::size_t>(j)]));
    }
  }
  f.resize(static_cast<std::size_t>(std::max(dd, 1)));
  return f;
}

std::int64_t checked_power(std::int64_t q, int h, std::int64_t cap) {
  std::int64_t size = 1;
  for (int i = 0; i < h; ++i) {
    if (size > cap / q) {
      throw ResourceError("field of order " + std::to_string(q) + "^" +
                          std::to_string(h) + " exceeds the cap of " +
                          std::to_string(cap));
    }
    size *= q;
  }
  return size;
}

}  // namespace

bool is_irreducible(const Poly& f, std::int64_t q) {
  PrimeField fq(q);
  const int deg = degree_of(f);
  if (deg < 1 || f[static_cast<std::size_t>(deg)] != 1) {
    throw PreconditionError("irreducibility test expects a monic polynomial");
  }
  for (int d = 1; d <= deg / 2; ++d) {
    // Every monic divisor candidate of degree d, low coefficients as digits.
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= q;
    Poly div(static_cast<std::size_t>(d + 1), 0);
    div[static_cast<std::size_t>(d)] = 1;
    for (std::int64_t idx = 0; idx < count; ++idx) {
      auto v = idx;
      for (int i = 0; i < d; ++i) {
        div[static_cast<std::size_t>(i)] = v % q;
        v /= q;
      }
      auto r = poly_rem(f, div, fq);
      if (std::all_of(r.begin(), r.end(), [](auto c) { return c == 0; })) {
        return false;
      }
    }
  }
  return true;
}

Poly find_irreducible(std::int64_t q, int h, std::int64_t field_cap) {
  PrimeField fq(q);
  if (h < 2) throw PreconditionError("extension degree must be at least 2");
  const auto count = checked_power(q, h, field_cap);
  Poly f(static_cast<std::size_t>(h + 1), 0);
  f[static_cast<std::size_t>(h)] = 1;
  // Candidates in increasing order of their base-q value, the constant term
  // being the least significant digit.
  for (std::int64_t idx = 0; idx < count; ++idx) {
    auto v = idx;
    for (int i = 0; i < h; ++i) {
      f[static_cast<std::size_t>(i)] = v % q;
      v /= q;
    }
    if (f[0] != 0 && is_irreducible(f, q)) return f;
  }
  throw InternalError("no irreducible polynomial found");
}

// ---------------------------------------------------------------------------
// ExtField

ExtField::ExtField(std::int64_t q, int h, std::int64_t field_cap)
    : ExtField(q, h, find_irreducible(q, h, field_cap), field_cap) {}

ExtField::ExtField(std::int64_t q, int h, Poly modulus,
                   std::int64_t field_cap)
    : base_(q), h_(h), modulus_(std::move(modulus)) {
  if (h < 2) throw PreconditionError("extension degree must be at least 2");
  size_ = checked_power(q, h, field_cap);
  if (static_cast<int>(modulus_.size()) != h + 1 || modulus_.back() != 1 ||
      degree_of(modulus_) != h) {
    throw PreconditionError("modulus must be monic of degree " +
                            std::to_string(h));
  }
  for (auto c : modulus_) {
    if (c < 0 || c >= q) throw PreconditionError("modulus coefficient out of range");
  }
  if (!is_irreducible(modulus_, q)) {
    throw PreconditionError("modulus is reducible over F_" + std::to_string(q));
  }
}

bool ExtField::valid(const ExtElem& x) const noexcept {
  if (static_cast<int>(x.coeffs.size()) != h_) return false;
  return std::all_of(x.coeffs.begin(), x.coeffs.end(),
                     [&](auto c) { return c >= 0 && c < q(); });
}

ExtElem ExtField::zero() const {
  return {std::vector<std::int64_t>(static_cast<std::size_t>(h_), 0)};
}

ExtElem ExtField::one() const {
  auto e = zero();
  e.coeffs[0] = 1;
  return e;
}

ExtElem ExtField::generator_t() const {
  auto e = zero();
  e.coeffs[1] = 1;
  return e;
}

ExtElem ExtField::from_index(std::int64_t index) const {
  if (index < 0 || index >= size_) throw PreconditionError("field index out of range");
  auto e = zero();
  for (auto& c : e.coeffs) {
    c = index % q();
    index /= q();
  }
  return e;
}

ExtElem ExtField::add(const ExtElem& a, const ExtElem& b) const {
  auto out = zero();
  for (int i = 0; i < h_; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out.coeffs[k] = base_.add(a.coeffs[k], b.coeffs[k]);
  }
  return out;
}

ExtElem ExtField::mul(const ExtElem& a, const ExtElem& b) const {
  Poly prod(static_cast<std::size_t>(2 * h_ - 1), 0);
  for (int i = 0; i < h_; ++i) {
    const auto ai = a.coeffs[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    for (int j = 0; j < h_; ++j) {
      auto& slot = prod[static_cast<std::size_t>(i + j)];
      slot = base_.add(slot, base_.mul(ai, b.coeffs[static_cast<std::size_t>(j)]));
    }
  }
  auto r = poly_rem(std::move(prod), modulus_, base_);
  r.resize(static_cast<std::size_t>(h_), 0);
  return {std::move(r)};
}

ExtElem ExtField::pow(ExtElem a, std::uint64_t e) const {
  auto result = one();
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

ExtElem ext_mul(const ExtField& f, const ExtElem& a, const ExtElem& b) {
  if (!f.valid(a) || !f.valid(b)) throw StructuralError("element not in field");
  return f.mul(a, b);
}

std::int64_t norm(const ExtField& f, const ExtElem& x) {
  if (!f.valid(x)) throw StructuralError("element not in field");
  const auto q = static_cast<std::uint64_t>(f.q());
  const auto exponent = (static_cast<std::uint64_t>(f.size()) - 1) / (q - 1);
  auto y = f.pow(x, exponent);
  for (std::size_t i = 1; i < y.coeffs.size(); ++i) {
    if (y.coeffs[i] != 0) {
      throw InternalError("norm left the base field; modulus is not irreducible");
    }
  }
  return y.coeffs[0];
}

Elem additive_coords(const ExtField& f, const ExtElem& x) {
  if (!f.valid(x)) throw StructuralError("element not in field");
  return Elem(x.coeffs);
}

}  // namespace chg
