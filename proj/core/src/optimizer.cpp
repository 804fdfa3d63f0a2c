#include "adaw/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "adaw/metrics.hpp"
#include "adaw/weights.hpp"

namespace adaw {

AlgorithmParams AlgorithmParams::defaults(const Problem& problem, std::size_t population,
                                          std::size_t evaluations, bool adaptive,
                                          std::uint64_t seed) {
  AlgorithmParams p;
  p.population_size = population;
  p.neighborhood_size = std::max<std::size_t>(
      2, static_cast<std::size_t>(std::llround(0.10 * static_cast<double>(population))));
  p.neighbor_mating_prob = 0.9;
  p.max_replacements = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::llround(0.01 * static_cast<double>(population))));
  p.archive_capacity = 2 * population;
  p.max_generations = evaluations > population ? (evaluations - population) / population : 0;
  p.variation = VariationParams::for_dimension(problem.num_variables());
  p.schedule.max_generations = p.max_generations;
  p.seed = seed;
  p.adaptive = adaptive;
  return p;
}

void AlgorithmParams::validate() const {
  if (population_size < 2) throw ConfigError("population size must be at least 2");
  if (neighborhood_size < 2 || neighborhood_size > population_size) {
    throw ConfigError("neighbourhood size must lie in [2, N]");
  }
  if (max_replacements < 1 || max_replacements > population_size) {
    throw ConfigError("max replacements must lie in [1, N]");
  }
  if (archive_capacity < population_size) throw ConfigError("archive capacity must be >= N");
  if (neighbor_mating_prob < 0.0 || neighbor_mating_prob > 1.0) {
    throw ConfigError("neighbour mating probability must lie in [0, 1]");
  }
  if (schedule.period_fraction <= 0.0 || schedule.period_fraction >= 1.0 ||
      schedule.freeze_fraction < 0.0 || schedule.freeze_fraction >= 1.0) {
    throw ConfigError("invalid adaptation schedule");
  }
}

Optimizer::Optimizer(const Problem& problem, AlgorithmParams params)
    : problem_(problem),
      params_(std::move(params)),
      rng_(params_.seed),
      archive_(params_.archive_capacity),
      reference_(problem.num_objectives) {
  params_.validate();
  params_.schedule.max_generations = params_.max_generations;
  const std::size_t m = problem_.num_objectives;
  const auto divisions = lattice_divisions(m, params_.population_size);
  if (!divisions) {
    throw ConfigError("population size " + std::to_string(params_.population_size) +
                      " matches no simplex lattice for " + std::to_string(m) + " objectives");
  }
  auto weights = simplex_lattice(m, *divisions);

  std::vector<Solution> initial;
  initial.reserve(params_.population_size);
  const auto& bounds = problem_.bounds;
  for (std::size_t i = 0; i < params_.population_size; ++i) {
    std::vector<double> x(bounds.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
      x[j] = std::uniform_real_distribution<double>(bounds.lower[j], bounds.upper[j])(rng_);
    }
    initial.push_back(make_solution(std::move(x)));
  }
  for (const auto& s : initial) reference_.update(s.f);

  std::vector<std::size_t> perm(initial.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng_);

  population_.reserve(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    population_.push_back(Subproblem{std::move(weights[i]), initial[perm[i]], {}});
  }
  refresh_neighbors(population_, params_.neighborhood_size);
  for (const auto& s : initial) archive_.insert(s);
}

Solution Optimizer::make_solution(std::vector<double> x) {
  Solution s;
  s.f = problem_.evaluate(x);
  s.x = std::move(x);
  s.id = next_id_++;
  ++evaluations_;
  return s;
}

void Optimizer::evolve_subproblem(std::size_t i) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const bool local = unif(rng_) < params_.neighbor_mating_prob;
  std::vector<std::size_t> pool;
  if (local) {
    pool = population_[i].neighbors;
  } else {
    pool.resize(population_.size());
    std::iota(pool.begin(), pool.end(), std::size_t{0});
  }

  // The subproblem's own solution is always one parent; the mate comes from
  // the rest of the pool.
  std::vector<std::size_t> mates;
  mates.reserve(pool.size());
  for (std::size_t j : pool) {
    if (j != i) mates.push_back(j);
  }
  const std::size_t mate =
      mates[std::uniform_int_distribution<std::size_t>(0, mates.size() - 1)(rng_)];

  const auto uniform = uniform_source(rng_);
  auto [c1, c2] = sbx_crossover(population_[i].solution.x, population_[mate].solution.x,
                                problem_.bounds, params_.variation, uniform);
  std::vector<double> child = unif(rng_) < 0.5 ? std::move(c1) : std::move(c2);
  polynomial_mutation(child, problem_.bounds, params_.variation, uniform);
  const Solution offspring = make_solution(std::move(child));
  reference_.update(offspring.f);

  std::shuffle(pool.begin(), pool.end(), rng_);
  std::size_t replaced = 0;
  for (std::size_t j : pool) {
    if (replaced >= params_.max_replacements) break;
    auto& sp = population_[j];
    const double current = tchebycheff(sp.solution.f, sp.weight, reference_);
    const double candidate = tchebycheff(offspring.f, sp.weight, reference_);
    if (improves(offspring.f, sp.solution.f, sp.weight, reference_)) {
      sp.solution = offspring;
      ++replaced;
      if (on_replace_) on_replace_(j, current, candidate);
    }
  }
  archive_.insert(offspring);
}

void Optimizer::step() {
  if (finished()) return;
  ++generation_;
  for (std::size_t i = 0; i < population_.size(); ++i) evolve_subproblem(i);
  if (archive_.over_capacity()) archive_.maintain(problem_.num_objectives);
  if (params_.adaptive && params_.schedule.should_adapt(generation_)) {
    auto report = adapt_weights(population_, archive_, params_.population_size,
                                params_.neighborhood_size, reference_);
    report.generation = generation_;
    adaptations_.push_back(report);
  }
}

void Optimizer::run_to_completion() {
  while (!finished()) step();
}

RunResult Optimizer::result() const {
  RunResult r;
  r.final_population.reserve(population_.size());
  r.final_weights.reserve(population_.size());
  for (const auto& sp : population_) {
    r.final_population.push_back(sp.solution);
    r.final_weights.push_back(sp.weight);
  }
  r.final_archive = archive_.members();
  r.adaptations = adaptations_;
  r.evaluations = evaluations_;
  r.generations = generation_;
  return r;
}

RunResult run(const Problem& problem, const AlgorithmParams& params,
              const std::vector<ObjectiveVector>* reference_front, std::size_t history_every) {
  Optimizer opt(problem, params);
  std::vector<std::pair<std::size_t, double>> history;
  const bool track = reference_front != nullptr && history_every > 0;
  auto record = [&] {
    std::vector<ObjectiveVector> objs;
    for (const auto& sp : opt.population()) objs.push_back(sp.solution.f);
    history.emplace_back(opt.generation(), igd(*reference_front, objs));
  };
  while (!opt.finished()) {
    opt.step();
    if (track && (opt.generation() % history_every == 0 || opt.finished())) record();
  }
  RunResult r = opt.result();
  r.igd_history = std::move(history);
  return r;
}

}  // namespace adaw
