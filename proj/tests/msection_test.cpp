#include <random>

#include <gtest/gtest.h>

#include "mcong/msection.hpp"
#include "test_support.hpp"

namespace mcong {
namespace {

using testing::ints;

const RatFun kGeometric(Poly{1}, Poly{1, -1});

TEST(DenominatorNorm, LinearFactor) {
  const auto [D, C] = denominator_norm(Poly{1, -1}, 3);
  EXPECT_EQ(D, (Poly{1, -1}));
  EXPECT_EQ(C, (Poly{1, 1, 1}));
}

TEST(DenominatorNorm, RepeatedRootsCollapse) {
  // roots {1, 1, -1} square to {1, 1, 1}
  const Poly Q = Poly{1, -1} * Poly{1, 0, -1};
  const auto [D, C] = denominator_norm(Q, 2);
  const Poly one_minus_q{1, -1};
  EXPECT_EQ(D, one_minus_q * one_minus_q * one_minus_q);
  EXPECT_EQ(C, (one_minus_q * Poly{1, 1} * Poly{1, 1}));
  EXPECT_EQ(C * Q, poly_substitute_power(D, 2));
}

TEST(DenominatorNorm, NonUnitRoot) {
  const auto [D, C] = denominator_norm(Poly{1, -2}, 2);
  EXPECT_EQ(D, (Poly{1, -4}));
  EXPECT_EQ(C, (Poly{1, 2}));
}

TEST(DenominatorNorm, RejectsBadInput) {
  EXPECT_THROW(denominator_norm(Poly{0, 1}, 2), InvalidArgument);
  EXPECT_THROW(denominator_norm(Poly{1, 1}, 1), InvalidArgument);
}

TEST(Msect, GeometricSectionZero) {
  for (std::uint64_t m = 2; m <= 8; ++m) EXPECT_EQ(msect(kGeometric, m, 0), kGeometric) << "m=" << m;
}

TEST(Msect, ShiftedGeometricSectionOne) {
  EXPECT_EQ(msect(RatFun(Poly{0, 1}, Poly{1, -1}), 3, 1), kGeometric);
}

TEST(Msect, Monomial) {
  const RatFun q2(Poly{0, 0, 1});
  EXPECT_EQ(msect(q2, 2, 0), RatFun(Poly{0, 1}));
  EXPECT_TRUE(msect(q2, 2, 1).is_zero());
}

TEST(Msect, Preconditions) {
  EXPECT_THROW(msect(kGeometric, 1, 0), InvalidArgument);
  EXPECT_THROW(msect(kGeometric, 3, 3), InvalidArgument);
}

TEST(MsectAll, Geometric) {
  const auto s = msect_all(kGeometric, 2);
  ASSERT_EQ(s.sections.size(), 2u);
  EXPECT_EQ(s.sections[0], kGeometric);
  EXPECT_EQ(s.sections[1], kGeometric);
}

TEST(MsectAll, InverseSquare) {
  // coefficient of q^n in 1/(1-q)^2 is n+1
  const RatFun f(Poly{1}, Poly{1, -2, 1});
  const auto s = msect_all(f, 2);
  EXPECT_EQ(s.sections[0], RatFun(Poly{1, 1}, Poly{1, -2, 1}));
  EXPECT_EQ(s.sections[1], RatFun(Poly{2}, Poly{1, -2, 1}));
  EXPECT_EQ(ratfun_series_prefix(s.sections[0], 4), ints({1, 3, 5, 7}));
  EXPECT_EQ(ratfun_series_prefix(s.sections[1], 4), ints({2, 4, 6, 8}));
}

TEST(MsectAll, Constant) {
  const auto s = msect_all(RatFun(1), 5);
  EXPECT_EQ(s.sections[0], RatFun(1));
  for (std::size_t i = 1; i < 5; ++i) EXPECT_TRUE(s.sections[i].is_zero());
}

TEST(MsectProperty, Reconstruction) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 50; ++t) {
    const RatFun f = testing::random_ratfun(rng, 3, true);
    for (std::uint64_t m = 2; m <= 5; ++m) EXPECT_EQ(reassemble(msect_all(f, m)), f);
  }
}

TEST(MsectProperty, PrefixConsistency) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 40; ++t) {
    const RatFun f = testing::random_ratfun(rng);
    const std::uint64_t m = 2 + t % 4;
    const std::size_t n = 12;
    const auto full = ratfun_series_prefix(f, m * n);
    for (std::uint64_t i = 0; i < m; ++i) {
      const auto sec = ratfun_series_prefix(msect(f, m, i), n);
      for (std::size_t k = 0; k < n; ++k) EXPECT_EQ(sec[k], full[m * k + i]);
    }
  }
}

TEST(MsectProperty, Linearity) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    const RatFun a = testing::random_ratfun(rng);
    const RatFun b = testing::random_ratfun(rng);
    const std::uint64_t m = 2 + t % 3;
    for (std::uint64_t i = 0; i < m; ++i) EXPECT_EQ(msect(a + b, m, i), msect(a, m, i) + msect(b, m, i));
  }
}

TEST(DenominatorNormProperty, AlwaysExact) {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 100; ++t) {
    Poly Q;
    do Q = testing::random_poly(rng, 5, 4, true); while (Q.at_zero() == 0);
    const std::uint64_t m = 2 + t % 6;
    const auto [D, C] = denominator_norm(Q, m);
    EXPECT_TRUE(poly_divmod(poly_substitute_power(D, m), Q).second.is_zero());
    EXPECT_EQ(D.at_zero(), 1);
    EXPECT_EQ(D.degree(), Q.degree());
  }
}

}  // namespace
}  // namespace mcong
