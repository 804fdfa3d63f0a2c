#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace adaw {

/// Objective values of one solution, in problem units. All problems minimize.
using ObjectiveVector = std::vector<double>;

/// A decision vector together with its evaluated objectives.
///
/// `id` identifies the individual: copies made when one offspring is placed
/// into several subproblems keep the same id, which is how weight deletion
/// detects a solution shared by multiple weights.
struct Solution {
  std::vector<double> x;
  ObjectiveVector f;
  std::uint64_t id = 0;
};

/// Strict Pareto dominance for minimization. Throws std::invalid_argument on
/// a length mismatch.
bool dominates(std::span<const double> a, std::span<const double> b);

double euclidean_distance(std::span<const double> a, std::span<const double> b);

double squared_distance(std::span<const double> a, std::span<const double> b);

/// Rescales every objective to [0,1] by the set's own min and max. An
/// objective with zero spread maps to 0 for every member.
std::vector<ObjectiveVector> normalize(std::span<const ObjectiveVector> set);

/// Indices of the mutually nondominated members of `points`, in input order.
/// Exact duplicates are kept once (the first occurrence).
std::vector<std::size_t> nondominated_indices(std::span<const ObjectiveVector> points);

/// Median of a sample; the mean of the two middle values for even sizes.
/// The input is reordered.
double median(std::vector<double> values);

}  // namespace adaw
