#pragma once

// Brute-force ground truth: exact truncated expansions straight from the
// functional equation, used to check everything the fast path claims.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcong/equation.hpp"
#include "mcong/fastpath.hpp"

namespace mcong {

struct SeriesPrefix {
  std::vector<Rational> coeffs;
  std::string origin;
};

/// First n coefficients of the solution of fe.
///
/// Clearing R's denominator, Rd F = Rd S + Rn F(q^m), so for k >= 1
///   Rd[0] f(k) = t(k) + sum_{j : m j <= k} Rn[k - m j] f(j) - sum_{l >= 1} Rd[l] f(k - l)
/// with t = series of Rd*S. Every f on the right has a smaller index, and the
/// cost is O(n * (deg Rd + deg Rn / m)) exact operations.
inline SeriesPrefix expand_fe(const FunctionalEquation& fe, std::size_t n) {
  SeriesPrefix out{std::vector<Rational>(n), "expand_fe(m=" + std::to_string(fe.m) + ")"};
  if (n == 0) return out;
  const Poly& rn = fe.R.num();
  const Poly& rd = fe.R.den();
  const RatFun t = fe.S * RatFun(rd);
  const auto tc = ratfun_series_prefix(t, n);
  const Rational inv0 = 1 / rd.at_zero();
  auto& f = out.coeffs;
  f[0] = fe.f0;
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc = tc[k];
    // j ranges over k / m down to the smallest j with k - m j <= deg Rn.
    for (std::size_t j = k / fe.m + 1; j-- > 0;) {
      const std::size_t off = k - fe.m * j;
      if (off >= rn.size()) break;
      if (rn[off] != 0) acc += rn[off] * f[j];
    }
    for (std::size_t l = 1; l < rd.size() && l <= k; ++l) {
      if (rd[l] != 0) acc -= rd[l] * f[k - l];
    }
    f[k] = acc * inv0;
  }
  return out;
}

/// Entry n is p[m n + i].
inline SeriesPrefix section_prefix(const SeriesPrefix& p, std::uint64_t m, std::uint64_t i) {
  if (m < 2) throw InvalidArgument("section_prefix needs m >= 2");
  if (i >= m) throw InvalidArgument("section index must satisfy 0 <= i < m");
  SeriesPrefix out{{}, p.origin + " section " + std::to_string(i) + " mod " + std::to_string(m)};
  for (std::size_t k = i; k < p.coeffs.size(); k += m) out.coeffs.push_back(p.coeffs[k]);
  return out;
}

/// prod_{k >= 0} R(q^{m^k}) truncated to n terms. Needs R(0) = 1.
inline SeriesPrefix expand_infinite_product(const RatFun& R, std::uint64_t m, std::size_t n) {
  if (m < 2) throw InvalidArgument("infinite product needs m >= 2");
  if (R.at_zero() != 1) throw ProductDiverges();
  SeriesPrefix out{std::vector<Rational>(n), "product(m=" + std::to_string(m) + ")"};
  if (n == 0) return out;
  auto& acc = out.coeffs;
  acc[0] = 1;
  for (std::uint64_t stride = 1; stride < n; stride *= m) {
    // acc <- acc * Rn(q^stride) / Rd(q^stride)
    std::vector<Rational> next(n);
    const Poly& rn = R.num();
    for (std::size_t a = 0; a < rn.size() && a * stride < n; ++a) {
      if (rn[a] == 0) continue;
      for (std::size_t k = a * stride; k < n; ++k) next[k] += rn[a] * acc[k - a * stride];
    }
    const Poly& rd = R.den();
    const Rational inv0 = 1 / rd.at_zero();
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t b = 1; b < rd.size() && b * stride <= k; ++b) {
        if (rd[b] != 0) next[k] -= rd[b] * next[k - b * stride];
      }
      next[k] *= inv0;
    }
    acc = std::move(next);
    if (stride > n / m) break;
  }
  return out;
}

struct Mismatch {
  std::uint64_t index;
  Residue expected;
  Residue got;
};

struct VerificationReport {
  std::uint64_t checked = 0;
  std::uint64_t matched = 0;
  std::optional<Mismatch> first_mismatch;

  bool ok() const noexcept { return !first_mismatch && matched == checked; }
};

/// Oracle residues of F_i against the scheme's digit recursion, n < count.
inline VerificationReport verify_scheme(const FunctionalEquation& fe, std::uint64_t i, const Scheme& scheme,
                                        std::size_t count) {
  if (scheme.m != fe.m || scheme.i != i) throw InvalidArgument("scheme does not match the equation/section");
  const auto full = expand_fe(fe, fe.m * count + i);
  const auto section = section_prefix(full, fe.m, i);
  VerificationReport report;
  report.checked = count;
  if (count == 0) return report;
  const auto fast = scheme_coeff_block(scheme, 0, count);
  for (std::size_t n = 0; n < count; ++n) {
    const Residue expected = rational_residue(section.coeffs[n], fe.m);
    if (expected == fast[n]) {
      ++report.matched;
    } else if (!report.first_mismatch) {
      report.first_mismatch = Mismatch{n, expected, fast[n]};
    }
  }
  return report;
}

}  // namespace mcong
