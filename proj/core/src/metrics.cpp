#include "adaw/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace adaw {

double igd(std::span<const ObjectiveVector> reference, std::span<const ObjectiveVector> solutions) {
  if (solutions.empty()) throw std::invalid_argument("igd: empty solution set");
  if (reference.empty()) throw std::invalid_argument("igd: empty reference front");
  double total = 0.0;
  for (const auto& r : reference) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : solutions) best = std::min(best, squared_distance(r, s));
    total += std::sqrt(best);
  }
  return total / static_cast<double>(reference.size());
}

}  // namespace adaw
