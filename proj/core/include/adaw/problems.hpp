#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "adaw/objective.hpp"

namespace adaw {

/// Raised for invalid experiment or algorithm configuration (unknown
/// problem names, incompatible population sizes, bad flags).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Bounds {
  std::vector<double> lower;
  std::vector<double> upper;

  std::size_t size() const { return lower.size(); }
  bool contains(std::span<const double> x) const;
};

/// A benchmark problem: box-bounded decision space, deterministic evaluator
/// and a sampler for its Pareto front.
struct Problem {
  std::string name;
  std::size_t num_objectives = 0;
  Bounds bounds;
  std::function<ObjectiveVector(std::span<const double>)> evaluate;
  /// Returns roughly `n` mutually nondominated points on the Pareto front.
  std::function<std::vector<ObjectiveVector>(std::size_t)> front;

  std::size_t num_variables() const { return bounds.size(); }
};

/// Names accepted by make_problem, in the order of the benchmark table.
const std::vector<std::string>& problem_names();

/// Builds one of the seventeen benchmark problems. Throws ConfigError for
/// an unknown name.
Problem make_problem(std::string_view name);

/// Reference-front sample used for IGD. Requires n >= 2.
std::vector<ObjectiveVector> sample_front(const Problem& problem, std::size_t n);

/// Reference-front size used by the harness: 1000, 5000 or 10000 points for
/// two, three and many objectives.
std::size_t default_front_size(std::size_t num_objectives);

}  // namespace adaw
