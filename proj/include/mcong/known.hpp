#pragma once

// Closed-form congruence schemes for three classical families, used as
// independent cross-checks of the derivation pipeline:
//
//   A: F = F(q^m)/(1-q)                   (m-ary partitions), section 0
//   B: F = 1 + q/(1-q) F(q^m)             (no-gap m-ary partitions), section 1
//   C: F = F(q^m)/((1-q)(1-q^2))          (parts m^k and 2 m^k), section m-1

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "mcong/derivation.hpp"

namespace mcong {

enum class KnownFamily { A, B, C };

inline ModPoly prop_a_poly(std::uint64_t m) {
  if (m < 2) throw InvalidArgument("m must be at least 2");
  ModPoly p(m);
  for (std::uint64_t j = 0; j < m; ++j) p[j] = (j + 1) % m;
  trim(p);
  return p;
}

struct KnownPair {
  ModRatFun E;
  ModPoly P;
};

inline KnownPair prop_b_scheme(std::uint64_t m) {
  if (m < 2) throw InvalidArgument("m must be at least 2");
  KnownPair out;
  out.E = ModRatFun{{1}, {1, m - 1}, m};
  out.P.resize(m);
  for (std::uint64_t j = 0; j < m; ++j) out.P[j] = j % m;
  trim(out.P);
  return out;
}

/// floor((j+2)(j+4)(2j+3)/24).
inline Integer a002623(std::uint64_t j) {
  const Integer jj(static_cast<unsigned long>(j));
  Integer num = (jj + 2) * (jj + 4) * (2 * jj + 3);
  Integer out;
  mpz_fdiv_q_ui(out.get_mpz_t(), num.get_mpz_t(), 24);
  return out;
}

/// The multiplier polynomial for family C, or nullopt when m = 2 (mod 4).
inline std::optional<ModPoly> prop_c_nes(std::uint64_t m) {
  if (m < 2) throw InvalidArgument("m must be at least 2");
  if (m % 4 == 2) return std::nullopt;
  if (m % 2 == 1) {
    // (1 + q) * sum_{j=0}^{m-2} C(j+2, 2) q^{2j}
    ModPoly p(2 * (m - 2) + 2, 0);
    for (std::uint64_t j = 0; j + 2 <= m; ++j) {
      const Residue c = integer_residue(Integer(static_cast<unsigned long>((j + 2) * (j + 1) / 2)), m);
      p[2 * j] = mod_add(p[2 * j], c, m);
      p[2 * j + 1] = mod_add(p[2 * j + 1], c, m);
    }
    trim(p);
    return p;
  }
  // m divisible by 4: sum_{j=0}^{m-3} a002623(j) (q^j + q^{2m-4-j})
  ModPoly p(2 * m - 3, 0);
  for (std::uint64_t j = 0; j + 3 <= m; ++j) {
    const Residue c = integer_residue(a002623(j), m);
    p[j] = mod_add(p[j], c, m);
    p[2 * m - 4 - j] = mod_add(p[2 * m - 4 - j], c, m);
  }
  trim(p);
  return p;
}

/// prod over base-m digits d of n of (d + 1), mod m.
inline Residue digit_product_prop_a(std::uint64_t n, std::uint64_t m) {
  if (m < 2) throw InvalidArgument("m must be at least 2");
  Residue acc = 1 % m;
  for (; n > 0; n /= m) acc = mod_mul(acc, (n % m + 1) % m, m);
  return acc;
}

struct KnownScheme {
  KnownFamily family;
  std::uint64_t m;
  std::uint64_t i;
  ModRatFun E;                ///< expected E, meaningful when P is present
  std::optional<ModPoly> P;   ///< nullopt: no miracle expected
};

inline KnownScheme known_scheme(KnownFamily family, std::uint64_t m) {
  switch (family) {
    case KnownFamily::A:
      return {family, m, 0, ModRatFun{{}, {1}, m}, prop_a_poly(m)};
    case KnownFamily::B: {
      auto b = prop_b_scheme(m);
      return {family, m, 1, b.E, b.P};
    }
    case KnownFamily::C:
      return {family, m, m - 1, ModRatFun{{}, {1}, m}, prop_c_nes(m)};
  }
  throw InvalidArgument("unknown family");
}

inline FunctionalEquation known_equation(KnownFamily family, std::uint64_t m) {
  switch (family) {
    case KnownFamily::A: return make_equation(0, parse_ratfun("1/(1-q)"), m);
    case KnownFamily::B: return make_equation(1, parse_ratfun("q/(1-q)"), m);
    case KnownFamily::C: return make_equation(0, parse_ratfun("1/((1-q)*(1-q^2))"), m);
  }
  throw InvalidArgument("unknown family");
}

struct KnownCheck {
  bool ok = false;
  std::string detail;
};

/// Compares the closed form with what derive_scheme produces. On mismatch
/// the detail carries both sides; the oracle (verify_scheme) arbitrates.
inline KnownCheck check_known(const KnownScheme& known) {
  const auto fe = known_equation(known.family, known.m);
  const Derivation d = derive_scheme(fe, known.i);
  if (!known.P) {
    if (std::holds_alternative<NoMiracle>(d)) return {true, "derivation reports no miracle"};
    return {false, "expected no miracle, derived P = " + render_mod_poly(std::get<Scheme>(d).P)};
  }
  if (const auto* nm = std::get_if<NoMiracle>(&d))
    return {false, "expected P = " + render_mod_poly(*known.P) + ", derivation found no miracle (proper part " +
                       render_ratfun(nm->proper_part) + ")"};
  const auto& s = std::get<Scheme>(d);
  if (s.P != *known.P)
    return {false, "P mismatch: closed form " + render_mod_poly(*known.P) + ", derived " + render_mod_poly(s.P)};
  if (s.E != known.E)
    return {false, "E mismatch: closed form " + render_mod_ratfun(known.E) + ", derived " + render_mod_ratfun(s.E)};
  return {true, "derivation reproduces the closed form"};
}

}  // namespace mcong
