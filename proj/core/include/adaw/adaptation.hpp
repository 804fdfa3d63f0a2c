#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "adaw/archive.hpp"
#include "adaw/objective.hpp"
#include "adaw/scalarization.hpp"
#include "adaw/weights.hpp"

namespace adaw {

/// One decomposition subproblem: a search direction, the individual
/// currently assigned to it, and the indices of its neighbouring subproblems.
struct Subproblem {
  Weight weight;
  Solution solution;
  std::vector<std::size_t> neighbors;
};

using Population = std::vector<Subproblem>;

/// When the weight set may change: every `period_fraction` of the run,
/// never within the final `freeze_fraction`.
struct AdaptationSchedule {
  double period_fraction = 0.05;
  double freeze_fraction = 0.10;
  std::size_t max_generations = 0;

  /// round(period_fraction * max_generations), at least 1.
  std::size_t period() const;
  bool should_adapt(std::size_t generation) const;
};

struct AdaptationReport {
  std::size_t generation = 0;
  std::size_t added = 0;
  std::size_t deleted_shared = 0;
  std::size_t deleted_crowded = 0;
};

/// Indices of archive members whose niche holds no population solution.
/// Objectives are normalised over archive and population together; the
/// niche radius is the median distance from each archive member to its
/// nearest archive neighbour. Archives with fewer than two members yield none.
std::vector<std::size_t> find_undeveloped(std::span<const Solution> archive,
                                          std::span<const Subproblem> population);

/// Whether q, judged on its own weight w_q, beats the solutions of the T
/// subproblems whose weights are nearest to w_q: a strictly smaller
/// scalarizing value, or an equal one with a strictly smaller objective sum.
bool is_promising(std::span<const double> q, const Weight& w_q,
                  std::span<const Subproblem> population, std::size_t T, const ReferencePoint& z);

/// Adds a subproblem for every undeveloped and promising archive member,
/// in archive order, each test seeing earlier additions. A new member also
/// takes over any of its T nearest existing subproblems it improves.
/// Returns the number of subproblems added.
std::size_t add_weights(Population& population, std::span<const Solution> archive, std::size_t T,
                        const ReferencePoint& z);

struct DeletionCounts {
  std::size_t shared = 0;
  std::size_t crowded = 0;
};

/// Shrinks the population back to `target` subproblems.
///
/// While some individual is assigned to more than one weight, the weight on
/// which that individual scores worst is dropped; among several individuals
/// with the same (largest) number of weights, the one whose worst weight
/// scores highest loses it. Once every individual is unique, the most
/// crowded solutions are removed with the archive's truncation rule using
/// the k-th nearest neighbour with k = `k`.
DeletionCounts delete_weights(Population& population, std::size_t target, const ReferencePoint& z,
                              std::size_t k);

/// One full adaptation round: addition, deletion back to `target`, then
/// neighbour lists rebuilt with size T.
AdaptationReport adapt_weights(Population& population, const Archive& archive, std::size_t target,
                               std::size_t T, const ReferencePoint& z);

/// Rebuilds every subproblem's neighbour list from the current weights.
void refresh_neighbors(Population& population, std::size_t T);

}  // namespace adaw
