#pragma once

// From F = S + R F(q^m) to a congruence for the i-th m-section F_i.
//
// Sectioning gives F_i(q) = S_i(q) + R_i(q) F(q), so F = (F_i - S_i) / R_i.
// Substituting back into the equation for F:
//   F_i = A + G F_i(q^m),
//   G   = R R_i / R_i(q^m),
//   A   = S_i + R_i S - R R_i S_i(q^m) / R_i(q^m).
// Splitting G into polynomial plus proper part, the scheme exists when the
// proper part is 0 mod m.

#include <cstdint>
#include <string>
#include <utility>
#include <variant>

#include "mcong/msection.hpp"
#include "mcong/oracle.hpp"
#include "mcong/parser.hpp"
#include "mcong/scheme.hpp"

namespace mcong {

inline DerivedFE section_fe(const FunctionalEquation& fe, std::uint64_t i) {
  const std::uint64_t m = fe.m;
  if (i >= m) throw InvalidArgument("section index must satisfy 0 <= i < m");
  const RatFun Ri = msect(fe.R, m, i);
  if (Ri.is_zero())
    throw SectionVanishes("section " + std::to_string(i) + " of R vanishes mod " + std::to_string(m) +
                          "; F cannot be recovered from F_i");
  const RatFun Si = msect(fe.S, m, i);
  const RatFun Ri_m = substitute_power(Ri, m);
  const RatFun G = fe.R * Ri / Ri_m;
  const RatFun A = Si + Ri * fe.S - G * substitute_power(Si, m);
  return {A, G, m, i};
}

struct ProperSplit {
  Poly polynomial_part;
  RatFun proper_part;
};

inline ProperSplit proper_split(const RatFun& G) {
  auto [quo, rem] = poly_divmod(G.num(), G.den());
  return {std::move(quo), rem.is_zero() ? RatFun() : RatFun(std::move(rem), G.den())};
}

/// Reduction of f mod m with the denominator scaled to den(0) = 1.
inline ModRatFun reduce_ratfun_mod(const RatFun& f, std::uint64_t m) {
  if (m < 2) throw InvalidArgument("modulus must be at least 2");
  const auto inv = mod_inverse(integer_residue(f.den().at_zero().get_num(), m), m);
  if (!inv)
    throw NonUnitDenominator("denominator constant term " + f.den().at_zero().get_str() + " is not a unit mod " +
                             std::to_string(m));
  ModRatFun out;
  out.m = m;
  out.num = reduce_poly_mod(f.num(), m);
  out.den = reduce_poly_mod(f.den(), m);
  for (auto& c : out.num) c = mod_mul(c, *inv, m);
  for (auto& c : out.den) c = mod_mul(c, *inv, m);
  trim(out.num);
  trim(out.den);
  return out;
}

using Derivation = std::variant<Scheme, NoMiracle>;

inline Derivation derive_scheme(const FunctionalEquation& fe, std::uint64_t i) {
  const DerivedFE derived = section_fe(fe, i);
  auto [poly_part, proper] = proper_split(derived.G);
  const std::uint64_t m = fe.m;
  if (!proper.is_zero()) {
    const ModRatFun reduced = reduce_ratfun_mod(proper, m);
    if (!reduced.num.empty()) return NoMiracle{m, i, std::move(proper), std::move(poly_part)};
  }
  Scheme s;
  s.m = m;
  s.i = i;
  s.E = reduce_ratfun_mod(derived.A, m);
  if (s.E.num.empty()) s.E.den = {1};
  s.P = reduce_poly_mod(poly_part, m);
  const auto head = expand_fe(fe, i + 1);
  s.seed = rational_residue(head.coeffs[i], m);
  s.provenance.S = render_ratfun(fe.S);
  s.provenance.R = render_ratfun(fe.R);
  if (fe.f0_explicit) s.provenance.f0 = fe.f0.get_str();
  s.provenance.A = render_ratfun(derived.A);
  s.provenance.G = render_ratfun(derived.G);
  return s;
}

}  // namespace mcong
