#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "archfactor/regdet.hpp"
#include "support.hpp"

namespace af = archfactor;
using af::GammaExpression;
using af::Progression;
using af::SpectralMeasure;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

TEST(RegdetProgression, StepOne) {
  EXPECT_EQ(af::regdet_progression({0, 1, std::nullopt, 1}), GammaExpression::gamma_c(0, -1));
  EXPECT_EQ(af::regdet_progression({2, 1, std::nullopt, 3}), GammaExpression::gamma_c(-2, -3));
}

TEST(RegdetProgression, StepTwoCarriesSqrtTwo) {
  auto expected = GammaExpression::gamma_r(0, -1);
  expected.pre.log2_const = af::Rational(1, 2);
  EXPECT_EQ(af::regdet_progression({0, 2, std::nullopt, 1}), expected);
}

TEST(RegdetProgression, FiniteAndEmpty) {
  EXPECT_TRUE(af::regdet_progression({0, 1, 0, 1}).is_identity());
  EXPECT_TRUE(af::regdet_progression({5, 2, std::nullopt, 0}).is_identity());
  const auto three = af::regdet_progression({1, 3, 3, 2});
  EXPECT_EQ(three.lin, (std::map<int, int>{{1, 2}, {-2, 2}, {-5, 2}}));
  EXPECT_THROW(af::regdet_progression({0, 3, std::nullopt, 1}), af::InvalidInput);
}

TEST(HurwitzOracle, Examples) {
  // prod_{k>=0} (1+k)/2pi regularizes to 2pi = 1/GC(1).
  EXPECT_NEAR(af::hurwitz_zeta_deriv0(1.0, kTwoPi), std::log(kTwoPi), 1e-10);
  // x = 1/2, delta = 2 is s - m0 = 1: 2^{1/2} / GR(1) = sqrt 2.
  EXPECT_NEAR(af::hurwitz_zeta_deriv0(0.5, kTwoPi / 2.0), 0.5 * std::log(2.0), 1e-10);
  EXPECT_THROW(af::hurwitz_zeta_deriv0(0.0, kTwoPi), af::DomainError);
  EXPECT_THROW(af::hurwitz_zeta_deriv0(-1.0, kTwoPi), af::DomainError);
}

TEST(HurwitzOracle, AgreesWithLerchFormula) {
  std::mt19937 rng(71);
  std::uniform_real_distribution<double> xs(0.1, 10.0);
  std::uniform_int_distribution<int> deltas(1, 4);
  for (int i = 0; i < 20; ++i) {
    const double x = xs(rng);
    const double scale = kTwoPi / deltas(rng);
    const double em = af::hurwitz_zeta_deriv0(x, scale);
    const double closed = af::hurwitz_zeta_deriv0_closed(x, scale);
    EXPECT_TRUE(af::testing::close_rel(em, closed, 1e-8)) << x << " " << em << " " << closed;
    EXPECT_NEAR(em, closed, 1e-10);
  }
}

TEST(RegdetProgression, ClosedFormMatchesOracle) {
  for (int m0 = -3; m0 <= 3; ++m0)
    for (int step : {1, 2})
      for (int mult = 1; mult <= 3; ++mult)
        for (double offset : {0.7, 1.3, 2.6}) {
          const Progression p{m0, step, std::nullopt, mult};
          const double s = m0 + offset;
          const double closed = af::evaluate_log(af::regdet_progression(p), s).log_abs;
          const double oracle = af::regdet_progression_numeric(p, s);
          EXPECT_TRUE(af::testing::close_rel(closed, oracle, 1e-8)) << m0 << " " << step << " " << mult << " " << s;
        }
}

TEST(RegdetProgression, SplittingInvariance) {
  for (int m0 = -3; m0 <= 3; ++m0)
    for (int mult = 1; mult <= 3; ++mult) {
      const auto whole = af::regdet_progression({m0, 1, std::nullopt, mult});
      const auto halves = af::regdet_progression({m0, 2, std::nullopt, mult}) *
                          af::regdet_progression({m0 - 1, 2, std::nullopt, mult});
      for (double s : {m0 + 0.7, m0 + 1.3, m0 + 2.6, m0 + 5.1})
        EXPECT_NEAR(af::evaluate_log(whole, s).log_abs, af::evaluate_log(halves, s).log_abs, 1e-10);
      EXPECT_EQ(af::normalize(halves), whole);
    }
}

TEST(RegdetMeasure, Examples) {
  SpectralMeasure pc;
  pc.even.push_back({0, 1, std::nullopt, 1});
  const auto r = af::regdet_measure(pc);
  EXPECT_EQ(r.even, GammaExpression::gamma_c(0, -1));
  EXPECT_TRUE(r.odd.is_identity());
  EXPECT_EQ(r.ratio, GammaExpression::gamma_c(0, -1));

  SpectralMeasure pr;
  pr.even.push_back({0, 2, std::nullopt, 1});
  auto expected = GammaExpression::gamma_r(0, -1);
  expected.pre.log2_const = af::Rational(1, 2);
  EXPECT_EQ(af::regdet_measure(pr).ratio, expected);

  const auto empty = af::regdet_measure({});
  EXPECT_TRUE(empty.even.is_identity() && empty.odd.is_identity() && empty.ratio.is_identity());
}

TEST(RegdetMeasure, MultiplicativeOverPartitions) {
  SpectralMeasure m;
  m.even = {{2, 1, 2, 1}, {0, 2, std::nullopt, 2}, {-1, 2, std::nullopt, 1}};
  m.odd = {{1, 1, std::nullopt, 3}, {0, 1, 1, 1}};
  SpectralMeasure part1, part2;
  part1.even = {m.even[0], m.even[2]};
  part1.odd = {m.odd[1]};
  part2.even = {m.even[1]};
  part2.odd = {m.odd[0]};
  const auto whole = af::regdet_measure(m);
  const auto prod = af::regdet_measure(part1).ratio * af::regdet_measure(part2).ratio;
  EXPECT_EQ(whole.ratio, prod);
  for (double s : {3.3, 4.1, 6.9})
    EXPECT_NEAR(af::evaluate_log(whole.ratio, s).log_abs, af::evaluate_log(prod, s).log_abs, 1e-12);
}

// Zeros of det((s-Theta)/2pi) sit exactly at the eigenvalues.
TEST(RegdetMeasure, DivisorIsTheMultiplicityFunction) {
  std::mt19937 rng(73);
  std::uniform_int_distribution<int> first(-3, 4), step(1, 2), mult(1, 3), count(0, 4), finite(0, 1);
  for (int i = 0; i < 100; ++i) {
    SpectralMeasure m;
    for (int k = count(rng); k > 0; --k) {
      Progression p{first(rng), step(rng), std::nullopt, mult(rng)};
      if (finite(rng)) p.count = count(rng) + 1;
      (k % 2 ? m.even : m.odd).push_back(p);
    }
    const auto r = af::regdet_measure(m);
    const auto even = af::divisor_of(r.even, {-20, 6});
    const auto odd = af::divisor_of(r.odd, {-20, 6});
    for (int x = -20; x <= 6; ++x) {
      ASSERT_EQ(even.at(x), m.multiplicity(af::Parity::even, x));
      ASSERT_EQ(odd.at(x), m.multiplicity(af::Parity::odd, x));
    }
  }
}
