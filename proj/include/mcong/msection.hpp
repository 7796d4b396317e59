#pragma once

// m-sections of rational functions: f(q) = sum_{i<m} q^i f_i(q^m).
//
// All sections of P/Q share the denominator D, where D(q^m) is a polynomial
// multiple of Q(q). If Q(q) = c * prod(1 - b_j q) then D(q) = prod(1 - b_j^m q).
// D is obtained without leaving the rationals: the b_j are the eigenvalues of
// the companion matrix of the reversed, monic Q, so D is the reversed
// characteristic polynomial of that matrix raised to the m-th power.

#include <cstdint>
#include <vector>

#include "mcong/ratfun.hpp"

namespace mcong {

namespace detail {

using Matrix = std::vector<std::vector<Rational>>;

inline Matrix identity(std::size_t n) {
  Matrix r(n, std::vector<Rational>(n));
  for (std::size_t k = 0; k < n; ++k) r[k][k] = 1;
  return r;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix r(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

inline Matrix power(Matrix base, std::uint64_t e) {
  Matrix r = identity(base.size());
  while (e > 0) {
    if (e & 1) r = multiply(r, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return r;
}

/// Coefficients of det(xI - a), lowest degree first (Faddeev-LeVerrier).
inline std::vector<Rational> characteristic_polynomial(const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix mk(n, std::vector<Rational>(n));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = multiply(a, mk);
    for (std::size_t d = 0; d < n; ++d) next[d][d] += c[n - k + 1];
    mk = std::move(next);
    Matrix am = multiply(a, mk);
    Rational trace = 0;
    for (std::size_t d = 0; d < n; ++d) trace += am[d][d];
    c[n - k] = -trace / Rational(static_cast<unsigned long>(k));
  }
  return c;
}

}  // namespace detail

struct NormDenominator {
  Poly D;  ///< D(0) = 1
  Poly C;  ///< C = D(q^m) / Q(q)
};

/// D with D(q^m) divisible by Q(q), plus the exact cofactor.
inline NormDenominator denominator_norm(const Poly& Q, std::uint64_t m) {
  if (Q.is_zero() || Q.at_zero() == 0) throw InvalidArgument("denominator_norm needs Q(0) != 0");
  if (m < 2) throw InvalidArgument("denominator_norm needs m >= 2");
  const std::size_t d = static_cast<std::size_t>(Q.degree());
  Poly D = Poly::constant(1);
  if (d > 0) {
    // Reversed Q, made monic: x^d + a_{d-1} x^{d-1} + ... + a_0 with a_k = Q[d-k]/Q[0].
    detail::Matrix companion(d, std::vector<Rational>(d));
    for (std::size_t r = 1; r < d; ++r) companion[r][r - 1] = 1;
    for (std::size_t r = 0; r < d; ++r) companion[r][d - 1] = -Q[d - r] / Q.at_zero();
    const auto chi = detail::characteristic_polynomial(detail::power(companion, m));
    std::vector<Rational> rev(d + 1);
    for (std::size_t k = 0; k <= d; ++k) rev[k] = chi[d - k];
    D = Poly(std::move(rev));
  }
  auto [C, rem] = poly_divmod(poly_substitute_power(D, m), Q);
  if (!rem.is_zero()) throw InternalInvariant("denominator_norm: Q(q) does not divide D(q^m)");
  return {std::move(D), std::move(C)};
}

/// The i-th m-section f_i of f.
inline RatFun msect(const RatFun& f, std::uint64_t m, std::uint64_t i) {
  if (m < 2) throw InvalidArgument("m-section needs m >= 2");
  if (i >= m) throw InvalidArgument("section index must satisfy 0 <= i < m");
  if (f.is_zero()) return {};
  const auto [D, C] = denominator_norm(f.den(), m);
  const Poly nc = f.num() * C;
  std::vector<Rational> section;
  for (std::size_t e = i; e < nc.size(); e += m) section.push_back(nc[e]);
  return RatFun(Poly(std::move(section)), D);
}

struct SectionSet {
  std::uint64_t m = 0;
  std::vector<RatFun> sections;
};

inline SectionSet msect_all(const RatFun& f, std::uint64_t m) {
  if (m < 2) throw InvalidArgument("m-section needs m >= 2");
  SectionSet out{m, {}};
  out.sections.reserve(m);
  if (f.is_zero()) {
    out.sections.assign(m, RatFun());
    return out;
  }
  const auto [D, C] = denominator_norm(f.den(), m);
  const Poly nc = f.num() * C;
  for (std::uint64_t i = 0; i < m; ++i) {
    std::vector<Rational> section;
    for (std::size_t e = i; e < nc.size(); e += m) section.push_back(nc[e]);
    out.sections.emplace_back(Poly(std::move(section)), D);
  }
  return out;
}

/// sum_i q^i * sections[i](q^m).
inline RatFun reassemble(const SectionSet& s) {
  RatFun total;
  for (std::uint64_t i = 0; i < s.sections.size(); ++i)
    total = total + RatFun(Poly::monomial(1, i)) * substitute_power(s.sections[i], s.m);
  return total;
}

}  // namespace mcong
