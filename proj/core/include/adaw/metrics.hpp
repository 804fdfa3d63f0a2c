#pragma once

#include <span>

#include "adaw/objective.hpp"

namespace adaw {

/// Inverted generational distance: mean distance from each reference point
/// to its nearest member of `solutions`, in raw objective units. Throws
/// std::invalid_argument when either set is empty.
double igd(std::span<const ObjectiveVector> reference, std::span<const ObjectiveVector> solutions);

}  // namespace adaw
