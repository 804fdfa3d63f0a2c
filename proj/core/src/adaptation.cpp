#include "adaw/adaptation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace adaw {
namespace {

double objective_sum(std::span<const double> f) { return std::accumulate(f.begin(), f.end(), 0.0); }

std::vector<Weight> weights_of(std::span<const Subproblem> population) {
  std::vector<Weight> w;
  w.reserve(population.size());
  for (const auto& sp : population) w.push_back(sp.weight);
  return w;
}

}  // namespace

std::size_t AdaptationSchedule::period() const {
  const auto p = static_cast<std::size_t>(
      std::llround(period_fraction * static_cast<double>(max_generations)));
  return std::max<std::size_t>(p, 1);
}

bool AdaptationSchedule::should_adapt(std::size_t generation) const {
  if (generation == 0) return false;
  const double frozen_from = (1.0 - freeze_fraction) * static_cast<double>(max_generations);
  return generation % period() == 0 && static_cast<double>(generation) < frozen_from;
}

std::vector<std::size_t> find_undeveloped(std::span<const Solution> archive,
                                          std::span<const Subproblem> population) {
  if (archive.size() < 2) return {};
  std::vector<ObjectiveVector> all;
  all.reserve(archive.size() + population.size());
  for (const auto& a : archive) all.push_back(a.f);
  for (const auto& sp : population) all.push_back(sp.solution.f);
  const auto norm = normalize(all);
  const std::size_t na = archive.size();

  std::vector<double> nearest(na, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = i + 1; j < na; ++j) {
      const double d = euclidean_distance(norm[i], norm[j]);
      nearest[i] = std::min(nearest[i], d);
      nearest[j] = std::min(nearest[j], d);
    }
  }
  const double radius = median(nearest);

  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < na; ++i) {
    bool developed = false;
    for (std::size_t j = na; j < norm.size() && !developed; ++j) {
      developed = euclidean_distance(norm[i], norm[j]) <= radius;
    }
    if (!developed) out.push_back(i);
  }
  return out;
}

bool is_promising(std::span<const double> q, const Weight& w_q,
                  std::span<const Subproblem> population, std::size_t T, const ReferencePoint& z) {
  const auto weights = weights_of(population);
  const double gq = tchebycheff(q, w_q, z);
  const double sq = objective_sum(q);
  for (std::size_t j : nearest_weights(weights, w_q, std::min(T, weights.size()))) {
    const auto& pf = population[j].solution.f;
    const double gp = tchebycheff(pf, w_q, z);
    const bool outperforms = gq < gp || (gq == gp && sq < objective_sum(pf));
    if (!outperforms) return false;
  }
  return true;
}

std::size_t add_weights(Population& population, std::span<const Solution> archive, std::size_t T,
                        const ReferencePoint& z) {
  const auto candidates = find_undeveloped(archive, population);
  std::size_t added = 0;
  for (std::size_t idx : candidates) {
    const Solution& q = archive[idx];
    Weight w_q = optimal_weight(q.f, z);
    const bool duplicate = std::any_of(population.begin(), population.end(),
                                       [&](const Subproblem& sp) { return sp.weight == w_q; });
    if (duplicate || !is_promising(q.f, w_q, population, T, z)) continue;

    const auto neighbors = nearest_weights(weights_of(population), w_q, std::min(T, population.size()));
    for (std::size_t j : neighbors) {
      auto& sp = population[j];
      if (improves(q.f, sp.solution.f, sp.weight, z)) {
        sp.solution = q;
      }
    }
    population.push_back(Subproblem{std::move(w_q), q, {}});
    ++added;
  }
  return added;
}

DeletionCounts delete_weights(Population& population, std::size_t target, const ReferencePoint& z,
                              std::size_t k) {
  DeletionCounts counts;
  while (population.size() > target) {
    // Individuals are grouped by objective vector: copies of one offspring
    // share it exactly, and distinct individuals with equal objectives are
    // indistinguishable to every later decision anyway.
    std::map<ObjectiveVector, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < population.size(); ++i) {
      groups[population[i].solution.f].push_back(i);
    }
    std::size_t largest = 0;
    for (const auto& [f, members] : groups) largest = std::max(largest, members.size());
    if (largest <= 1) break;

    std::size_t victim = population.size();
    double victim_value = -std::numeric_limits<double>::infinity();
    for (const auto& [f, members] : groups) {
      if (members.size() != largest) continue;
      for (std::size_t i : members) {
        const double g = tchebycheff(f, population[i].weight, z);
        if (g > victim_value || (g == victim_value && i < victim)) {
          victim_value = g;
          victim = i;
        }
      }
    }
    population.erase(population.begin() + static_cast<std::ptrdiff_t>(victim));
    ++counts.shared;
  }

  if (population.size() > target) {
    std::vector<ObjectiveVector> objs;
    objs.reserve(population.size());
    for (const auto& sp : population) objs.push_back(sp.solution.f);
    const auto removed = crowding_removal_order(objs, target, k);
    std::vector<char> drop(population.size(), 0);
    for (std::size_t i : removed) drop[i] = 1;
    Population kept;
    kept.reserve(target);
    for (std::size_t i = 0; i < population.size(); ++i) {
      if (!drop[i]) kept.push_back(std::move(population[i]));
    }
    population = std::move(kept);
    counts.crowded = removed.size();
  }
  return counts;
}

void refresh_neighbors(Population& population, std::size_t T) {
  const auto index = compute_neighbors(weights_of(population), std::min(T, population.size()));
  for (std::size_t i = 0; i < population.size(); ++i) population[i].neighbors = index[i];
}

AdaptationReport adapt_weights(Population& population, const Archive& archive, std::size_t target,
                               std::size_t T, const ReferencePoint& z) {
  if (population.empty()) throw std::invalid_argument("adapt_weights: empty population");
  AdaptationReport report;
  report.added = add_weights(population, archive.members(), T, z);
  const std::size_t k = population.front().solution.f.size();
  const auto counts = delete_weights(population, target, z, k);
  report.deleted_shared = counts.shared;
  report.deleted_crowded = counts.crowded;
  refresh_neighbors(population, T);
  return report;
}

}  // namespace adaw
