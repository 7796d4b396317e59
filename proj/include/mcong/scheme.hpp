#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mcong/modular.hpp"
#include "mcong/ratfun.hpp"

namespace mcong {

/// F_i(q) = A(q) + G(q) F_i(q^m), exact.
struct DerivedFE {
  RatFun A;
  RatFun G;
  std::uint64_t m = 2;
  std::uint64_t i = 0;
};

struct Provenance {
  std::string S;
  std::string R;
  std::optional<std::string> f0;  ///< only when supplied explicitly
  std::string A;
  std::string G;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Certified congruence F_i(q) = E(q) + P(q) F_i(q^m) (mod m).
///
/// All residues lie in [0, m-1]; E.den(0) = 1. The seed is F_i(0) mod m,
/// which the congruence alone can leave undetermined (P(0) = 1).
struct Scheme {
  std::uint64_t m = 2;
  std::uint64_t i = 0;
  ModRatFun E;
  ModPoly P;
  Residue seed = 0;
  Provenance provenance;

  long degree_P() const noexcept { return static_cast<long>(P.size()) - 1; }

  /// Number of consecutive lower-level indices one recursion step touches.
  std::uint64_t window() const noexcept {
    return P.empty() ? 1 : static_cast<std::uint64_t>(degree_P()) / m + 1;
  }

  friend bool operator==(const Scheme&, const Scheme&) = default;
};

/// The proper part of G does not vanish mod m.
struct NoMiracle {
  std::uint64_t m = 2;
  std::uint64_t i = 0;
  RatFun proper_part;
  Poly polynomial_part;
};

}  // namespace mcong
