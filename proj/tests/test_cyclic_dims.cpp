#include <gtest/gtest.h>

#include <random>

#include "archfactor/cyclic_dims.hpp"
#include "archfactor/deligne.hpp"
#include "archfactor/local_factors.hpp"
#include "support.hpp"

namespace af = archfactor;
using af::IndexPair;
using af::Parity;
using af::Place;
using af::PoleIndex;
using af::Progression;
using af::SpectralMeasure;

TEST(IndexBijection, Examples) {
  EXPECT_EQ(af::e_to_a({0, 0}, 0), (PoleIndex{0, 0}));
  EXPECT_EQ(af::e_to_a({1, 2}, 2), (PoleIndex{3, 1}));
  EXPECT_EQ(af::a_to_e({2, 1}, 1), (IndexPair{0, 1}));
  EXPECT_THROW(af::e_to_a({5, 1}, 3), af::DomainError);
  EXPECT_THROW(af::a_to_e({2, 2}, 3), af::DomainError);
  EXPECT_THROW(af::a_to_e({7, 0}, 3), af::DomainError);
}

TEST(IndexBijection, ExhaustiveSmallDimensions) {
  for (int d = 0; d <= 10; ++d) {
    int count_e = 0;
    for (int n = 0; n <= 60; ++n)
      for (int j = 0; j <= 60 + d; ++j) {
        const IndexPair e{n, j};
        if (!af::in_e(e, d)) continue;
        ++count_e;
        const PoleIndex a = af::e_to_a(e, d);
        ASSERT_TRUE(af::in_a(a, d));
        ASSERT_EQ(af::a_to_e(a, d), e);
      }
    // Every (q,m) in A_d whose preimage has n <= 60 is hit.
    int count_a = 0;
    for (int q = 0; q <= 2 * d; ++q)
      for (int m = q / 2; q - 2 * m <= 60; --m) {
        ASSERT_TRUE(af::in_a({q, m}, d));
        const IndexPair e = af::a_to_e({q, m}, d);
        ASSERT_TRUE(af::in_e(e, d));
        ASSERT_EQ(af::e_to_a(e, d), (PoleIndex{q, m}));
        ++count_a;
      }
    EXPECT_EQ(count_e, count_a) << d;
  }
}

TEST(HcDim, Examples) {
  const auto p1 = af::hc_dim(af::preset("P1_C"), 0, 1);
  EXPECT_EQ(p1.complex, 1);
  EXPECT_EQ(p1.real, 2);
  for (const auto& data : af::testing::all_presets()) EXPECT_EQ(af::hc_dim(data, 5, 1).real, 0);
  for (int k = 0; k < 10; ++k) EXPECT_EQ(af::hc_dim(af::preset("point_C"), 2 * k, k).complex, 1);
  const auto pr = af::hc_dim(af::preset("point_R"), 4, 2);
  EXPECT_EQ(pr.real, 1);
  EXPECT_EQ(pr.complex, 1);
}

TEST(HcDim, DependsOnlyOnWeightOnceNIsLarge) {
  for (const auto& data : af::testing::all_presets())
    for (int w = 0; w <= 2 * data.dim; ++w) {
      const int stable = af::hc_dim(data, 2 * data.dim + w, data.dim + w).complex;
      EXPECT_EQ(stable, af::betti(data, w));
      for (int n = 2 * data.dim; n <= 40; ++n)
        if ((n + w) % 2 == 0) {
          EXPECT_EQ(af::hc_dim(data, n, (n + w) / 2).complex, stable);
        }
    }
}

TEST(PeriodicDims, Examples) {
  const auto e = af::preset("elliptic_C");
  EXPECT_EQ(af::hp_dim(e, 1, 1), 2);
  EXPECT_EQ(af::hn_dim(e, 3, 2), 0);
  EXPECT_EQ(af::hn_dim(e, 1, 1), 1);  // F^1 H^1 = H^{1,0}
  const auto p1 = af::preset("P1_C");
  EXPECT_EQ(af::hn_dim(p1, 2, 2), 0);
  EXPECT_EQ(af::hp_dim(p1, 2, 2), 1);
  EXPECT_EQ(af::hc_dim(p1, 0, 1).complex, 1);
  EXPECT_EQ(af::hp_real_dim(e, 1, 1), 2);
}

// HN_{n+2}^{(j+1)} -> HP_{n+2}^{(j+1)} -> HC_n^{(j)} closes in dimensions.
TEST(ExactSequences, NegativeCyclic) {
  std::vector<af::HodgeData> inputs = af::testing::all_presets();
  std::mt19937 rng(43);
  for (int i = 0; i < 40; ++i) inputs.push_back(af::testing::random_hodge(rng));
  for (const auto& data : inputs)
    for (int n = 0; n <= 40; ++n)
      for (int j = 0; j <= 40; ++j) {
        if (!af::in_e({n, j}, data.dim)) continue;
        EXPECT_EQ(af::hn_dim(data, n + 2, j + 1) + af::hc_dim(data, n, j).complex, af::hp_dim(data, n + 2, j + 1));
      }
}

TEST(ExactSequences, RealPeriodicIntoCyclic) {
  std::vector<af::HodgeData> inputs;
  std::mt19937 rng(47);
  for (const auto& p : af::testing::all_presets()) inputs.push_back(p);
  for (int i = 0; i < 40; ++i) inputs.push_back(af::testing::random_hodge(rng));
  for (const auto& data : inputs)
    for (int n = 0; n <= 40; ++n)
      for (int j = 0; j <= 40; ++j) {
        if (!af::in_e({n, j}, data.dim)) continue;
        const int lhs = af::hp_real_dim(data, n + 2, j + 1) + af::har_dim(data, n, j);
        if (data.place == Place::complex)
          EXPECT_EQ(lhs, 2 * af::hc_dim(data, n, j).complex);
        else
          EXPECT_EQ(lhs, af::hc_dim(data, n, j).real);
      }
}

TEST(HarDim, Examples) {
  const auto pc = af::preset("point_C");
  const auto pr = af::preset("point_R");
  for (int m = 0; m < 12; ++m) {
    EXPECT_EQ(af::har_dim(pc, 2 * m, m), 1);
    EXPECT_EQ(af::har_dim(pc, 2 * m + 1, m), 0);
    EXPECT_EQ(af::har_dim(pr, 4 * m, 2 * m), 1);
    EXPECT_EQ(af::har_dim(pr, 4 * m + 2, 2 * m + 1), 0);
  }
  for (const auto& data : af::testing::all_presets())
    for (int j = 0; j < 10; ++j) EXPECT_EQ(af::har_dim(data, 2 * j - 2 * data.dim - 1, j), 0);
}

TEST(HarDim, VanishesOutsideE) {
  std::vector<af::HodgeData> inputs = af::testing::all_presets();
  std::mt19937 rng(53);
  for (int i = 0; i < 40; ++i) inputs.push_back(af::testing::random_hodge(rng));
  for (const auto& data : inputs)
    for (int n = 0; n <= 40; ++n)
      for (int j = 0; j <= 40; ++j)
        if (!af::in_e({n, j}, data.dim)) {
          EXPECT_EQ(af::har_dim(data, n, j), 0);
        }
}

TEST(HarDim, AgreesWithDeligneDimension) {
  std::vector<af::HodgeData> inputs = af::testing::all_presets();
  std::mt19937 rng(59);
  for (int i = 0; i < 100; ++i) inputs.push_back(af::testing::random_hodge(rng));
  for (const auto& data : inputs)
    for (int n = 0; n <= 30; ++n)
      for (int j = 0; j <= 30; ++j)
        if (af::in_e({n, j}, data.dim)) {
          ASSERT_EQ(af::har_dim(data, n, j), af::deligne_dim(data, 2 * j - n, j + 1))
              << data.name << " n=" << n << " j=" << j;
        }
}

TEST(SpectralMeasureType, SemanticEquality) {
  SpectralMeasure step1;
  step1.even.push_back({0, 1, std::nullopt, 2});
  SpectralMeasure halves;
  halves.even.push_back({0, 2, std::nullopt, 2});
  halves.even.push_back({-1, 2, std::nullopt, 2});
  EXPECT_EQ(step1, halves);
  SpectralMeasure split_head;
  split_head.even.push_back({0, 1, 3, 2});
  split_head.even.push_back({-3, 1, std::nullopt, 2});
  EXPECT_EQ(step1, split_head);
  SpectralMeasure other;
  other.odd.push_back({0, 1, std::nullopt, 2});
  EXPECT_FALSE(step1 == other);
  EXPECT_EQ(SpectralMeasure{}, SpectralMeasure{});
}

TEST(ThetaSpectrum, PointR) {
  const auto spec = af::theta_spectrum(af::preset("point_R"));
  SpectralMeasure expected;
  expected.even.push_back({0, 2, std::nullopt, 1});
  EXPECT_EQ(spec, expected);
  EXPECT_TRUE(spec.odd.empty());
}

TEST(ThetaSpectrum, PointC) {
  SpectralMeasure expected;
  expected.even.push_back({0, 1, std::nullopt, 1});
  EXPECT_EQ(af::theta_spectrum(af::preset("point_C")), expected);
}

TEST(ThetaSpectrum, EllipticC) {
  const auto spec = af::theta_spectrum(af::preset("elliptic_C"));
  for (int m = 0; m >= -30; --m) EXPECT_EQ(spec.multiplicity(Parity::odd, m), 2) << m;
  EXPECT_EQ(spec.multiplicity(Parity::odd, 1), 0);
  // even: weight 0 contributes {0,-1,...}, weight 2 contributes {1,0,-1,...}
  EXPECT_EQ(spec.multiplicity(Parity::even, 1), 1);
  for (int m = 0; m >= -30; --m) EXPECT_EQ(spec.multiplicity(Parity::even, m), 2) << m;
}

TEST(WeightSpectrum, Examples) {
  const auto e = af::preset("elliptic_C");
  SpectralMeasure odd_only;
  odd_only.odd.push_back({0, 1, std::nullopt, 2});
  EXPECT_EQ(af::weight_spectrum(e, 1), odd_only);

  SpectralMeasure from_one;
  from_one.even.push_back({1, 1, std::nullopt, 1});
  EXPECT_EQ(af::weight_spectrum(af::preset("P1_C"), 2), from_one);

  af::HodgeData gap{"gap", 1, Place::complex, {{0, {{{0, 0}, 1}}, std::nullopt}}};
  EXPECT_TRUE(af::weight_spectrum(gap, 1).empty());
  EXPECT_THROW(af::weight_spectrum(gap, 3), af::DomainError);
}

// The encoded multiplicity function equals har_dim at every eigenvalue, well
// past the head/tail cutover.
TEST(WeightSpectrum, EncodesHarDimensions) {
  std::vector<af::HodgeData> inputs = af::testing::all_presets();
  std::mt19937 rng(61);
  for (int i = 0; i < 100; ++i) inputs.push_back(af::testing::random_hodge(rng));
  for (const auto& data : inputs)
    for (int w = 0; w <= 2 * data.dim; ++w) {
      const auto spec = af::weight_spectrum(data, w);
      const Parity par = af::parity_of(w);
      const Parity other = par == Parity::even ? Parity::odd : Parity::even;
      for (int m = w / 2 + 3; m >= -40; --m) {
        const int expected = 2 * m <= w ? af::har_dim(data, w - 2 * m, w - m) : 0;
        ASSERT_EQ(spec.multiplicity(par, m), expected) << data.name << " w=" << w << " m=" << m;
        ASSERT_EQ(spec.multiplicity(other, m), 0);
      }
    }
}

TEST(ThetaSpectrum, UnionOfWeightsAndAdditive) {
  std::mt19937 rng(67);
  for (int i = 0; i < 40; ++i) {
    af::testing::RandomHodgeOptions opt;
    opt.place = i % 2 ? Place::real : Place::complex;
    const auto a = af::testing::random_hodge(rng, opt);
    const auto b = af::testing::random_hodge(rng, opt);
    SpectralMeasure by_weight;
    for (int w = 0; w <= 2 * a.dim; ++w) by_weight = by_weight + af::weight_spectrum(a, w);
    EXPECT_EQ(af::theta_spectrum(a), by_weight);
    EXPECT_EQ(af::theta_spectrum(af::direct_sum(a, b)), af::theta_spectrum(a) + af::theta_spectrum(b));
  }
}
