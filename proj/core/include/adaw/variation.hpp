#pragma once

#include <functional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "adaw/problems.hpp"

namespace adaw {

using Rng = std::mt19937_64;

/// Source of uniform draws in [0, 1). The operators consume draws in a fixed
/// order, so a scripted source reproduces exact operator behaviour in tests.
using UniformSource = std::function<double()>;

UniformSource uniform_source(Rng& rng);

struct VariationParams {
  double crossover_prob = 1.0;
  /// Per-variable mutation probability; the harness uses 1/d.
  double mutation_prob = 0.0;
  double crossover_eta = 20.0;
  double mutation_eta = 20.0;

  static VariationParams for_dimension(std::size_t num_variables);
};

/// Simulated binary crossover. Each variable takes a spread factor from the
/// distribution index, a random sign, and is exchanged only with probability
/// one half; children are clipped to the bounds.
///
/// Draw order per variable: spread, sign, exchange. One extra leading draw
/// decides whether crossover happens at all.
std::pair<std::vector<double>, std::vector<double>> sbx_crossover(
    std::span<const double> parent1, std::span<const double> parent2, const Bounds& bounds,
    const VariationParams& params, const UniformSource& uniform);

/// Bounded polynomial mutation, in place. Draw order per variable: site,
/// then perturbation.
void polynomial_mutation(std::vector<double>& x, const Bounds& bounds,
                         const VariationParams& params, const UniformSource& uniform);

}  // namespace adaw
