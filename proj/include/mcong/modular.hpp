#pragma once

// Arithmetic over Z/m (m possibly composite) and linear-recurrence
// coefficient extraction for rational functions over it.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcong/poly.hpp"

namespace mcong {

using Residue = std::uint64_t;

/// Coefficient vector over Z/m, lowest degree first, no trailing zeros.
using ModPoly = std::vector<Residue>;

inline Residue mod_add(Residue a, Residue b, Residue m) {
  const unsigned __int128 s = static_cast<unsigned __int128>(a) + b;
  return static_cast<Residue>(s % m);
}

inline Residue mod_sub(Residue a, Residue b, Residue m) { return a >= b ? a - b : m - (b - a); }

inline Residue mod_mul(Residue a, Residue b, Residue m) {
  return static_cast<Residue>(static_cast<unsigned __int128>(a) * b % m);
}

static_assert(sizeof(unsigned long) == sizeof(Residue), "residues are passed to GMP as unsigned long");

/// Inverse of a modulo m, if gcd(a, m) = 1.
inline std::optional<Residue> mod_inverse(Residue a, Residue m) {
  const Integer aa(static_cast<unsigned long>(a)), mm(static_cast<unsigned long>(m));
  Integer g;
  mpz_gcd(g.get_mpz_t(), aa.get_mpz_t(), mm.get_mpz_t());
  if (g != 1) return std::nullopt;
  if (m == 1) return Residue{0};
  Integer x;
  mpz_invert(x.get_mpz_t(), aa.get_mpz_t(), mm.get_mpz_t());
  return static_cast<Residue>(x.get_ui());
}

inline Residue integer_residue(const Integer& v, Residue m) {
  return static_cast<Residue>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(m)));
}

/// a/b mod m; throws NonIntegralCoefficient if gcd(b, m) > 1.
inline Residue rational_residue(const Rational& v, Residue m) {
  const Residue num = integer_residue(v.get_num(), m);
  if (v.get_den() == 1) return num;
  const auto inv = mod_inverse(integer_residue(v.get_den(), m), m);
  if (!inv) throw NonIntegralCoefficient("coefficient " + v.get_str() + " has a denominator sharing a factor with " + std::to_string(m));
  return mod_mul(num, *inv, m);
}

inline void trim(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline ModPoly reduce_poly_mod(const Poly& p, Residue m) {
  ModPoly out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) out[k] = rational_residue(p[k], m);
  trim(out);
  return out;
}

inline Residue coeff(const ModPoly& p, std::size_t k) { return k < p.size() ? p[k] : 0; }

/// num/den over Z/m with den(0) = 1, so the series and the recurrence are
/// well defined over any residue ring.
struct ModRatFun {
  ModPoly num;
  ModPoly den{1};
  Residue m = 2;

  friend bool operator==(const ModRatFun&, const ModRatFun&) = default;
};

/// Direct expansion: first n coefficients.
inline std::vector<Residue> mod_series_prefix(const ModRatFun& f, std::size_t n) {
  std::vector<Residue> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Residue acc = coeff(f.num, k) % f.m;
    for (std::size_t j = 1; j < f.den.size() && j <= k; ++j)
      acc = mod_sub(acc, mod_mul(f.den[j], out[k - j], f.m), f.m);
    out[k] = acc;
  }
  return out;
}

namespace detail {

// (a * b) mod the monic polynomial whose low coefficients are `low`
// (x^d = -sum low[k] x^k), over Z/m. Inputs have size d.
inline ModPoly mulmod_monic(const ModPoly& a, const ModPoly& b, const ModPoly& low, Residue m) {
  const std::size_t d = low.size();
  std::vector<Residue> prod(2 * d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] = mod_add(prod[i + j], mod_mul(a[i], b[j], m), m);
  }
  for (std::size_t k = 2 * d; k-- > d;) {
    const Residue c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::size_t j = 0; j < d; ++j)
      prod[k - d + j] = mod_sub(prod[k - d + j], mod_mul(c, low[j], m), m);
  }
  prod.resize(d);
  return prod;
}

}  // namespace detail

/// n-th series coefficient of f over Z/m in O(deg(den)^2 log n).
///
/// Past the numerator the coefficients obey e(t) = -sum_{j>=1} den[j] e(t-j),
/// i.e. a recurrence with monic characteristic polynomial
/// x^d + den[1] x^{d-1} + ... + den[d]. x^k mod that polynomial expresses
/// e(s+k) in terms of the initial segment e(s), ..., e(s+d-1).
inline Residue ratfun_coeff_mod(const ModRatFun& f, std::uint64_t n) {
  const Residue m = f.m;
  const std::size_t d = f.den.empty() ? 0 : f.den.size() - 1;
  const std::size_t num_len = f.num.size();
  if (d == 0) return n < num_len ? f.num[n] % m : 0;
  const std::size_t threshold = std::max(num_len, d + 1);
  if (n < threshold) return mod_series_prefix(f, static_cast<std::size_t>(n) + 1).back();

  // Shift so that the recurrence holds from index shift + d onward.
  const std::size_t shift = num_len > d ? num_len - d : 0;
  const auto init = mod_series_prefix(f, shift + d);
  ModPoly low(d);
  for (std::size_t k = 0; k < d; ++k) low[k] = f.den[d - k] % m;

  std::uint64_t k = n - shift;
  ModPoly result(d, 0), base(d, 0);
  result[0] = 1 % m;
  if (d == 1) {
    base[0] = mod_sub(0, low[0], m);
  } else {
    base[1] = 1 % m;
  }
  while (k > 0) {
    if (k & 1) result = detail::mulmod_monic(result, base, low, m);
    k >>= 1;
    if (k > 0) base = detail::mulmod_monic(base, base, low, m);
  }
  Residue acc = 0;
  for (std::size_t j = 0; j < d; ++j) acc = mod_add(acc, mod_mul(result[j], init[shift + j], m), m);
  return acc;
}

}  // namespace mcong
