#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "adaw/problems.hpp"
#include "oracles.hpp"

using adaw::ObjectiveVector;

namespace {

std::vector<double> random_x(const adaw::Problem& p, std::mt19937_64& rng) {
  std::vector<double> x(p.num_variables());
  for (std::size_t j = 0; j < x.size(); ++j)
    x[j] = std::uniform_real_distribution<double>(p.bounds.lower[j], p.bounds.upper[j])(rng);
  return x;
}

}  // namespace

TEST(Problems, UnknownNameIsConfigError) {
  EXPECT_THROW(adaw::make_problem("DTLZ99"), adaw::ConfigError);
}

TEST(Problems, Dtlz2Shape) {
  auto p = adaw::make_problem("DTLZ2");
  EXPECT_EQ(p.num_objectives, 3u);
  EXPECT_EQ(p.num_variables(), 12u);
  for (std::size_t j = 0; j < 12; ++j) {
    EXPECT_EQ(p.bounds.lower[j], 0.0);
    EXPECT_EQ(p.bounds.upper[j], 1.0);
  }
  std::vector<double> x(12, 0.5);
  x[0] = 0.0;
  x[1] = 0.0;
  auto f = p.evaluate(x);
  double s = 0;
  for (double v : f) s += v * v;
  EXPECT_NEAR(s, 1.0, 1e-12);
}

TEST(Problems, Sch1Shape) {
  auto p = adaw::make_problem("SCH1");
  EXPECT_EQ(p.num_objectives, 2u);
  EXPECT_EQ(p.num_variables(), 1u);
  for (double x = 0.0; x <= 2.0; x += 0.125) {
    std::vector<double> xv{x};
    auto f = p.evaluate(xv);
    EXPECT_NEAR(f[1], std::pow(std::sqrt(f[0]) - 2.0, 2), 1e-12);
  }
}

TEST(Problems, Idtlz2OnFront) {
  auto p = adaw::make_problem("IDTLZ2");
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    auto x = random_x(p, rng);
    for (std::size_t j = 2; j < x.size(); ++j) x[j] = 0.5;
    auto f = p.evaluate(x);
    double s = 0;
    for (double v : f) s += (1 - v) * (1 - v);
    EXPECT_NEAR(s, 1.0, 1e-12);
  }
  for (const auto& f : adaw::sample_front(p, 500)) {
    double s = 0;
    for (double v : f) s += (1 - v) * (1 - v);
    EXPECT_NEAR(s, 1.0, 1e-9);
  }
}

TEST(Problems, Sch1FrontThreePoints) {
  auto front = adaw::sample_front(adaw::make_problem("SCH1"), 3);
  EXPECT_EQ(front, (std::vector<ObjectiveVector>{{0, 4}, {1, 1}, {4, 0}}));
}

TEST(Problems, Dtlz1FrontPlane) {
  for (const auto& f : adaw::sample_front(adaw::make_problem("DTLZ1"), 800)) {
    EXPECT_NEAR(f[0] + f[1] + f[2], 0.5, 1e-12);
  }
}

TEST(Problems, Dtlz2FrontSphere) {
  for (const auto& f : adaw::sample_front(adaw::make_problem("DTLZ2"), 800)) {
    EXPECT_NEAR(f[0] * f[0] + f[1] * f[1] + f[2] * f[2], 1.0, 1e-12);
  }
}

TEST(Problems, ScaledFrontsArePointwiseScaled) {
  for (auto [scaled, base] : {std::pair{"SDTLZ1", "DTLZ1"}, std::pair{"SDTLZ2", "DTLZ2"}}) {
    auto fs = adaw::sample_front(adaw::make_problem(scaled), 600);
    auto fb = adaw::sample_front(adaw::make_problem(base), 600);
    ASSERT_EQ(fs.size(), fb.size());
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t k = 0; k < 3; ++k)
        EXPECT_NEAR(fs[i][k], fb[i][k] * std::pow(10.0, static_cast<double>(k)), 1e-9);
  }
}

TEST(Problems, EveryFrontNondominatedAndEvaluatorsFinite) {
  std::mt19937_64 rng(2);
  for (const auto& name : adaw::problem_names()) {
    SCOPED_TRACE(name);
    auto p = adaw::make_problem(name);
    auto front = adaw::sample_front(p, p.num_objectives > 3 ? 400 : 600);
    ASSERT_GE(front.size(), 2u);
    for (const auto& f : front) ASSERT_EQ(f.size(), p.num_objectives);
    EXPECT_TRUE(oracle::mutually_nondominated(front));
    for (int t = 0; t < 200; ++t) {
      auto x = random_x(p, rng);
      auto f = p.evaluate(x);
      ASSERT_EQ(f.size(), p.num_objectives);
      for (double v : f) ASSERT_TRUE(std::isfinite(v));
      ASSERT_EQ(f, p.evaluate(x));
    }
  }
}

TEST(Problems, DefaultFrontSizes) {
  EXPECT_EQ(adaw::default_front_size(2), 1000u);
  EXPECT_EQ(adaw::default_front_size(3), 5000u);
  EXPECT_EQ(adaw::default_front_size(10), 10000u);
}
