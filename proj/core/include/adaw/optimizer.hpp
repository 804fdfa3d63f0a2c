#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "adaw/adaptation.hpp"
#include "adaw/archive.hpp"
#include "adaw/problems.hpp"
#include "adaw/scalarization.hpp"
#include "adaw/variation.hpp"

namespace adaw {

struct AlgorithmParams {
  std::size_t population_size = 0;
  std::size_t neighborhood_size = 0;
  double neighbor_mating_prob = 0.9;
  std::size_t max_replacements = 1;
  std::size_t archive_capacity = 0;
  std::size_t max_generations = 0;
  VariationParams variation;
  AdaptationSchedule schedule;
  std::uint64_t seed = 1;
  bool adaptive = true;

  /// Harness defaults: T = 10% of N, nr = 1% of N, archive 2N, p_m = 1/d,
  /// and max_generations = floor((evaluations - N) / N).
  static AlgorithmParams defaults(const Problem& problem, std::size_t population,
                                  std::size_t evaluations, bool adaptive, std::uint64_t seed);

  /// Throws ConfigError when the parameters are inconsistent.
  void validate() const;
};

struct RunResult {
  std::vector<Solution> final_population;
  std::vector<Weight> final_weights;
  std::vector<Solution> final_archive;
  std::vector<AdaptationReport> adaptations;
  std::vector<std::pair<std::size_t, double>> igd_history;
  std::size_t evaluations = 0;
  std::size_t generations = 0;
};

/// Decomposition-based optimizer: the MOEA/D loop with optional archive-
/// guided weight adaptation. A run is a pure function of (problem, params).
class Optimizer {
 public:
  /// Called after every replacement with the subproblem index and the
  /// scalarizing values of the old and new solution under the reference
  /// point in force at that moment.
  using ReplacementHook = std::function<void(std::size_t, double, double)>;

  /// Builds the lattice weights, random initial population, neighbour lists,
  /// random weight-solution association, archive and reference point.
  Optimizer(const Problem& problem, AlgorithmParams params);

  /// One generation: one offspring per subproblem, archive truncation if
  /// over capacity, then weight adaptation when the schedule says so.
  void step();

  /// Runs the remaining generations.
  void run_to_completion();

  bool finished() const { return generation_ >= params_.max_generations; }
  std::size_t generation() const { return generation_; }
  std::size_t evaluations() const { return evaluations_; }
  const Population& population() const { return population_; }
  const Archive& archive() const { return archive_; }
  const ReferencePoint& reference_point() const { return reference_; }
  const AlgorithmParams& params() const { return params_; }
  const std::vector<AdaptationReport>& adaptations() const { return adaptations_; }

  void set_replacement_hook(ReplacementHook hook) { on_replace_ = std::move(hook); }

  RunResult result() const;

 private:
  Solution make_solution(std::vector<double> x);
  void evolve_subproblem(std::size_t i);

  const Problem& problem_;
  AlgorithmParams params_;
  Rng rng_;
  Population population_;
  Archive archive_;
  ReferencePoint reference_;
  std::size_t generation_ = 0;
  std::size_t evaluations_ = 0;
  std::uint64_t next_id_ = 1;
  std::vector<AdaptationReport> adaptations_;
  ReplacementHook on_replace_;
};

/// Runs one optimization. When `reference_front` is non-null and
/// `history_every` > 0, the population IGD is recorded every that many
/// generations and at the end.
RunResult run(const Problem& problem, const AlgorithmParams& params,
              const std::vector<ObjectiveVector>* reference_front = nullptr,
              std::size_t history_every = 0);

}  // namespace adaw
