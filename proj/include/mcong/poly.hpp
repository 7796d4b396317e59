#pragma once

// Dense univariate polynomials in q over exact rationals.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mcong/errors.hpp"

namespace mcong {

using Integer = mpz_class;
using Rational = mpq_class;

/// Coefficient k is the coefficient of q^k. The zero polynomial has no
/// coefficients and degree -1; there is never a trailing zero.
class Poly {
 public:
  Poly() = default;

  explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

  static Poly constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

  static Poly monomial(const Rational& c, std::size_t exponent) {
    std::vector<Rational> v(exponent + 1);
    v[exponent] = c;
    return Poly(std::move(v));
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  /// Coefficient of q^k; zero beyond the degree.
  const Rational& operator[](std::size_t k) const noexcept {
    static const Rational zero(0);
    return k < coeffs_.size() ? coeffs_[k] : zero;
  }

  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  const Rational& at_zero() const noexcept { return (*this)[0]; }

  const Rational& leading() const noexcept { return (*this)[coeffs_.size() - 1]; }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }

  Poly& operator*=(const Rational& c) {
    if (c == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  friend Poly operator-(Poly a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(r));
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline Poly poly_q() { return Poly::monomial(1, 1); }

/// Euclidean division over the rationals: a = b*quotient + remainder,
/// deg(remainder) < deg(b).
inline std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZeroPoly();
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Rational> quo(rem.size() - db);
  const Rational lead_inv = 1 / b.leading();
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Rational c = rem[k + db] * lead_inv;
    quo[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= c * b[j];
  }
  rem.resize(db);
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

/// p(q^m).
inline Poly poly_substitute_power(const Poly& p, std::uint64_t m) {
  if (m == 0) throw InvalidArgument("substitution exponent must be positive");
  if (p.is_zero()) return {};
  std::vector<Rational> r(static_cast<std::size_t>(p.degree()) * m + 1);
  for (std::size_t k = 0; k < p.size(); ++k) r[k * m] = p[k];
  return Poly(std::move(r));
}

inline Poly make_monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading());
}

/// Monic gcd; gcd(0, 0) = 0.
inline Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    auto r = poly_divmod(a, b).second;
    a = std::move(b);
    b = make_monic(r);
  }
  return make_monic(a);
}

/// Factor c such that c*p has coprime integer coefficients and a positive
/// lowest-order nonzero coefficient. p must be nonzero.
inline Rational primitive_scale(const Poly& p) {
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_mpz_t());
  }
  Rational s(den_lcm, num_gcd);
  s.canonicalize();
  auto first = std::find_if(p.coeffs().begin(), p.coeffs().end(), [](const Rational& c) { return c != 0; });
  if (*first < 0) s = -s;
  return s;
}

/// Exact integer coefficients of a polynomial known to be integral.
inline bool is_integral(const Poly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

}  // namespace mcong
