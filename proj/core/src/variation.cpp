#include "adaw/variation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace adaw {

UniformSource uniform_source(Rng& rng) {
  return [&rng] { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); };
}

VariationParams VariationParams::for_dimension(std::size_t num_variables) {
  VariationParams p;
  p.mutation_prob = num_variables > 0 ? 1.0 / static_cast<double>(num_variables) : 0.0;
  return p;
}

std::pair<std::vector<double>, std::vector<double>> sbx_crossover(
    std::span<const double> parent1, std::span<const double> parent2, const Bounds& bounds,
    const VariationParams& params, const UniformSource& uniform) {
  const std::size_t d = parent1.size();
  if (parent2.size() != d || bounds.size() != d) {
    throw std::invalid_argument("sbx_crossover: dimension mismatch");
  }
  std::vector<double> c1(parent1.begin(), parent1.end());
  std::vector<double> c2(parent2.begin(), parent2.end());
  if (uniform() >= params.crossover_prob) return {c1, c2};

  const double exponent = 1.0 / (params.crossover_eta + 1.0);
  for (std::size_t j = 0; j < d; ++j) {
    const double u = uniform();
    double beta = u <= 0.5 ? std::pow(2.0 * u, exponent) : std::pow(2.0 - 2.0 * u, -exponent);
    if (uniform() < 0.5) beta = -beta;
    if (uniform() < 0.5) beta = 1.0;
    const double mean = 0.5 * (parent1[j] + parent2[j]);
    const double half = 0.5 * (parent1[j] - parent2[j]);
    c1[j] = std::clamp(mean + beta * half, bounds.lower[j], bounds.upper[j]);
    c2[j] = std::clamp(mean - beta * half, bounds.lower[j], bounds.upper[j]);
  }
  return {c1, c2};
}

void polynomial_mutation(std::vector<double>& x, const Bounds& bounds,
                         const VariationParams& params, const UniformSource& uniform) {
  if (bounds.size() != x.size()) throw std::invalid_argument("polynomial_mutation: dimension mismatch");
  const double eta = params.mutation_eta;
  const double exponent = 1.0 / (eta + 1.0);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (uniform() >= params.mutation_prob) continue;
    const double mu = uniform();
    const double lo = bounds.lower[j];
    const double hi = bounds.upper[j];
    const double range = hi - lo;
    if (!(range > 0.0)) continue;
    double delta;
    if (mu <= 0.5) {
      const double xy = 1.0 - (x[j] - lo) / range;
      delta = std::pow(2.0 * mu + (1.0 - 2.0 * mu) * std::pow(xy, eta + 1.0), exponent) - 1.0;
    } else {
      const double xy = 1.0 - (hi - x[j]) / range;
      delta = 1.0 - std::pow(2.0 * (1.0 - mu) + 2.0 * (mu - 0.5) * std::pow(xy, eta + 1.0), exponent);
    }
    x[j] = std::clamp(x[j] + delta * range, lo, hi);
  }
}

}  // namespace adaw
