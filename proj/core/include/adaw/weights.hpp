#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace adaw {

/// A search direction on the unit simplex: nonnegative, summing to one.
using Weight = std::vector<double>;

/// Per-weight indices of its nearest weights, the weight itself included.
using NeighborIndex = std::vector<std::vector<std::size_t>>;

/// Simplex-lattice design: every weight whose components are multiples of
/// 1/divisions. Produces C(divisions + m - 1, m - 1) weights.
std::vector<Weight> simplex_lattice(std::size_t num_objectives, std::size_t divisions);

/// C(divisions + m - 1, m - 1), saturating at SIZE_MAX.
std::size_t lattice_size(std::size_t num_objectives, std::size_t divisions);

/// The divisions count whose lattice has exactly `population` points, if any.
std::optional<std::size_t> lattice_divisions(std::size_t num_objectives, std::size_t population);

/// The T nearest weights (Euclidean, ties by lower index) of each weight.
NeighborIndex compute_neighbors(const std::vector<Weight>& weights, std::size_t T);

/// Indices of the T weights in `weights` nearest to `target`, ties by lower index.
std::vector<std::size_t> nearest_weights(const std::vector<Weight>& weights, const Weight& target,
                                         std::size_t T);

/// True when every component is >= 0 and the sum is within `tol` of one.
bool on_simplex(const Weight& w, double tol = 1e-9);

}  // namespace adaw
