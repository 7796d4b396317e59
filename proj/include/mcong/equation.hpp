#pragma once

#include <cstdint>
#include <optional>

#include "mcong/ratfun.hpp"

namespace mcong {

/// F(q) = S(q) + R(q) F(q^m), together with the constant term f0 that
/// singles out one solution.
///
/// Comparing constant terms gives f0 (1 - R(0)) = S(0), so:
///   R(0) != 1               -> f0 = S(0) / (1 - R(0))
///   R(0) == 1, S == 0       -> f0 = 1 (empty partition counts once)
///   R(0) == 1, S(0) == 0    -> f0 must be supplied
///   R(0) == 1, S(0) != 0    -> no solution
/// Every later coefficient is then forced.
struct FunctionalEquation {
  RatFun S;
  RatFun R;
  std::uint64_t m = 2;
  Rational f0;
  bool f0_explicit = false;
};

inline FunctionalEquation make_equation(RatFun S, RatFun R, std::uint64_t m,
                                        std::optional<Rational> f0 = std::nullopt) {
  if (m < 2) throw InvalidArgument("functional equation needs m >= 2");
  FunctionalEquation fe{std::move(S), std::move(R), m, 0, f0.has_value()};
  const Rational r0 = fe.R.at_zero();
  const Rational s0 = fe.S.at_zero();
  if (r0 != 1) {
    const Rational forced = s0 / (1 - r0);
    if (f0 && *f0 != forced)
      throw AmbiguousNormalization("f0 = " + f0->get_str() + " contradicts the forced value " + forced.get_str());
    fe.f0 = forced;
    return fe;
  }
  if (s0 != 0) throw AmbiguousNormalization("R(0) = 1 and S(0) != 0: the equation has no power-series solution");
  if (f0) {
    fe.f0 = *f0;
  } else if (fe.S.is_zero()) {
    fe.f0 = 1;
  } else {
    throw AmbiguousNormalization("R(0) = 1 and S is nonzero: supply f0 explicitly");
  }
  return fe;
}

}  // namespace mcong
