#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "adaw/variation.hpp"

namespace {

adaw::UniformSource constant(double u) {
  return [u] { return u; };
}

adaw::Bounds unit_box(std::size_t d) {
  return {std::vector<double>(d, 0.0), std::vector<double>(d, 1.0)};
}

}  // namespace

TEST(Sbx, IdenticalParentsGiveParents) {
  std::mt19937_64 rng(1);
  auto uniform = adaw::uniform_source(rng);
  std::vector<double> p{0.2, 0.7, 0.4};
  auto params = adaw::VariationParams::for_dimension(3);
  for (int t = 0; t < 100; ++t) {
    auto [c1, c2] = adaw::sbx_crossover(p, p, unit_box(3), params, uniform);
    EXPECT_EQ(c1, p);
    EXPECT_EQ(c2, p);
  }
}

TEST(Sbx, HalfDrawGivesUnitSpread) {
  std::vector<double> p1{0.2, 0.9}, p2{0.6, 0.1};
  auto params = adaw::VariationParams::for_dimension(2);
  auto [c1, c2] = adaw::sbx_crossover(p1, p2, unit_box(2), params, constant(0.5));
  for (std::size_t j = 0; j < 2; ++j) {
    EXPECT_NEAR(std::min(c1[j], c2[j]), std::min(p1[j], p2[j]), 1e-15);
    EXPECT_NEAR(std::max(c1[j], c2[j]), std::max(p1[j], p2[j]), 1e-15);
  }
}

TEST(Sbx, BoundsAndMeanPreservation) {
  std::mt19937_64 rng(42);
  auto uniform = adaw::uniform_source(rng);
  std::uniform_real_distribution<double> u(-1.0, 3.0);
  adaw::Bounds b{{-1.0, -1.0, -1.0}, {3.0, 3.0, 3.0}};
  auto params = adaw::VariationParams::for_dimension(3);
  for (int t = 0; t < 100000; ++t) {
    std::vector<double> p1{u(rng), u(rng), u(rng)}, p2{u(rng), u(rng), u(rng)};
    auto [c1, c2] = adaw::sbx_crossover(p1, p2, b, params, uniform);
    ASSERT_TRUE(b.contains(c1));
    ASSERT_TRUE(b.contains(c2));
    for (std::size_t j = 0; j < 3; ++j) {
      const bool clipped = c1[j] == b.lower[j] || c1[j] == b.upper[j] || c2[j] == b.lower[j] ||
                           c2[j] == b.upper[j];
      if (!clipped) ASSERT_NEAR(c1[j] + c2[j], p1[j] + p2[j], 1e-9);
    }
  }
}

TEST(Pm, ZeroProbabilityIsIdentity) {
  std::mt19937_64 rng(1);
  auto uniform = adaw::uniform_source(rng);
  adaw::VariationParams params;
  params.mutation_prob = 0.0;
  std::vector<double> x{0.1, 0.5, 0.9};
  auto y = x;
  adaw::polynomial_mutation(y, unit_box(3), params, uniform);
  EXPECT_EQ(x, y);
}

TEST(Pm, HalfDrawIsNoPerturbation) {
  adaw::VariationParams params;
  params.mutation_prob = 1.0;
  std::vector<double> x{0.1, 0.5, 0.9};
  auto y = x;
  // site draw 0 always mutates, perturbation draw 0.5 gives delta 0
  bool site = true;
  adaw::UniformSource scripted = [&site] {
    const double v = site ? 0.0 : 0.5;
    site = !site;
    return v;
  };
  adaw::polynomial_mutation(y, unit_box(3), params, scripted);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(x[j], y[j], 1e-15);
}

TEST(Pm, StaysInBoundsAndUnbiased) {
  std::mt19937_64 rng(9);
  auto uniform = adaw::uniform_source(rng);
  adaw::VariationParams params;
  params.mutation_prob = 1.0;
  params.mutation_eta = 20.0;
  adaw::Bounds b{{-2.0}, {2.0}};
  double sum = 0.0;
  const int trials = 100000;
  for (int t = 0; t < trials; ++t) {
    std::vector<double> x{0.0};
    adaw::polynomial_mutation(x, b, params, uniform);
    ASSERT_TRUE(b.contains(x));
    sum += x[0];
  }
  EXPECT_LT(std::abs(sum / trials) / 4.0, 0.01);

  std::uniform_real_distribution<double> start(-2.0, 2.0);
  for (int t = 0; t < trials; ++t) {
    std::vector<double> x{start(rng)};
    adaw::polynomial_mutation(x, b, params, uniform);
    ASSERT_TRUE(b.contains(x));
  }
}
