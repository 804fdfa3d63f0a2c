#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "adaw/objective.hpp"
#include "adaw/weights.hpp"

namespace adaw {

/// Floor applied to weight components in the division form so that simplex
/// corners stay evaluable.
inline constexpr double kWeightFloor = 1e-6;

/// Component-wise best objective values seen so far, shifted down by a
/// fixed offset so every evaluated solution lies strictly above it.
class ReferencePoint {
 public:
  static constexpr double kOffset = 1e-4;

  /// Starts at +infinity in every component.
  explicit ReferencePoint(std::size_t num_objectives);
  /// Uses `values` as the point itself; no offset is applied.
  explicit ReferencePoint(std::vector<double> values) : z_(std::move(values)) {}

  /// z_i <- min(z_i, f_i - offset). Returns true if any component moved.
  bool update(std::span<const double> f);

  const std::vector<double>& values() const { return z_; }
  std::size_t size() const { return z_.size(); }
  double operator[](std::size_t i) const { return z_[i]; }

 private:
  std::vector<double> z_;
};

/// Tchebycheff in weight-division form: max_i (f_i - z_i) / max(w_i, floor).
double tchebycheff(std::span<const double> f, const Weight& w, const ReferencePoint& z);

/// Replacement test on weight w: the candidate wins on a strictly smaller
/// Tchebycheff value. On an exact tie the per-objective terms, each sorted
/// in descending order, are compared lexicographically.
///
/// The tie rule matters at weights with zero components: there the floored
/// term (offset / floor = 100) exceeds every other term, so all candidates
/// that reach the ideal value in that objective score the same.
bool improves(std::span<const double> candidate, std::span<const double> incumbent,
                 const Weight& w, const ReferencePoint& z);

/// Weight whose Tchebycheff contour has its corner at f, i.e. the direction
/// from z through f normalised to the simplex. Falls back to the uniform
/// weight when f coincides with z.
Weight optimal_weight(std::span<const double> f, const ReferencePoint& z);

}  // namespace adaw
