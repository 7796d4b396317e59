#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "mcong/poly.hpp"

namespace mcong {

/// A reduced quotient of polynomials with no power-series requirement.
///
/// Canonical form: gcd(num, den) = 1, den has coprime integer coefficients
/// and a positive lowest-order nonzero coefficient. Used where intermediate
/// values may leave the ring of formal power series (the expression parser).
class Fraction {
 public:
  Fraction() : den_(Poly::constant(1)) {}
  Fraction(const Rational& c) : num_(Poly::constant(c)), den_(Poly::constant(1)) {}
  Fraction(Poly p) : num_(std::move(p)), den_(Poly::constant(1)) {}

  Fraction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZeroRatFun();
    canonicalize();
  }

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }

  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Fraction operator-(const Fraction& a, const Fraction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Fraction operator*(const Fraction& a, const Fraction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend Fraction operator/(const Fraction& a, const Fraction& b) {
    if (b.is_zero()) throw DivisionByZeroRatFun();
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend Fraction operator-(const Fraction& a) { return {-a.num_, a.den_}; }

  friend bool operator==(const Fraction& a, const Fraction& b) = default;

 private:
  void canonicalize() {
    if (num_.is_zero()) {
      den_ = Poly::constant(1);
      return;
    }
    if (!den_.is_constant()) {
      Poly g = poly_gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = poly_divmod(num_, g).first;
        den_ = poly_divmod(den_, g).first;
      }
    }
    const Rational s = primitive_scale(den_);
    num_ *= s;
    den_ *= s;
  }

  Poly num_;
  Poly den_;
};

/// A rational function that is a formal power series: canonical Fraction
/// whose denominator does not vanish at q = 0. Immutable value type.
class RatFun {
 public:
  RatFun() = default;
  RatFun(const Rational& c) : f_(c) {}
  RatFun(int c) : f_(Rational(c)) {}
  RatFun(Poly p) : f_(std::move(p)) {}
  RatFun(Poly num, Poly den) : f_(std::move(num), std::move(den)) { check(); }
  explicit RatFun(Fraction f) : f_(std::move(f)) { check(); }

  const Poly& num() const noexcept { return f_.num(); }
  const Poly& den() const noexcept { return f_.den(); }
  const Fraction& fraction() const noexcept { return f_; }
  bool is_zero() const noexcept { return f_.is_zero(); }
  bool is_polynomial() const noexcept { return f_.is_polynomial(); }

  /// Value at q = 0 (the constant term of the series).
  Rational at_zero() const { return num().at_zero() / den().at_zero(); }

  friend RatFun operator+(const RatFun& a, const RatFun& b) { return RatFun(a.f_ + b.f_); }
  friend RatFun operator-(const RatFun& a, const RatFun& b) { return RatFun(a.f_ - b.f_); }
  friend RatFun operator*(const RatFun& a, const RatFun& b) { return RatFun(a.f_ * b.f_); }
  friend RatFun operator/(const RatFun& a, const RatFun& b) { return RatFun(a.f_ / b.f_); }
  friend RatFun operator-(const RatFun& a) { return RatFun(-a.f_); }

  friend bool operator==(const RatFun& a, const RatFun& b) = default;

 private:
  void check() const {
    if (f_.den().at_zero() == 0) throw NonSeriesResult();
  }

  Fraction f_;
};

enum class ArithOp { add, sub, mul, div };

inline RatFun ratfun_arith(const RatFun& a, const RatFun& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw InvalidArgument("unknown arithmetic operation");
}

/// f(q^m).
inline RatFun substitute_power(const RatFun& f, std::uint64_t m) {
  return RatFun(poly_substitute_power(f.num(), m), poly_substitute_power(f.den(), m));
}

/// First n Maclaurin coefficients of num/den, den(0) != 0.
inline std::vector<Rational> series_prefix(const Poly& num, const Poly& den, std::size_t n) {
  if (den.at_zero() == 0) throw NonSeriesResult();
  std::vector<Rational> out(n);
  const Rational inv0 = 1 / den.at_zero();
  const std::size_t d = den.size();
  for (std::size_t k = 0; k < n; ++k) {
    Rational acc = num[k];
    for (std::size_t j = 1; j < d && j <= k; ++j) {
      if (den[j] != 0) acc -= den[j] * out[k - j];
    }
    out[k] = acc * inv0;
  }
  return out;
}

inline std::vector<Rational> ratfun_series_prefix(const RatFun& f, std::size_t n) {
  return series_prefix(f.num(), f.den(), n);
}

}  // namespace mcong
