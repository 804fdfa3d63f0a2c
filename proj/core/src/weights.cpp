#include "adaw/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "adaw/objective.hpp"

namespace adaw {
namespace {

void enumerate(std::size_t m, std::size_t divisions, std::size_t pos, std::size_t left,
               std::vector<std::size_t>& counts, std::vector<Weight>& out) {
  if (pos + 1 == m) {
    counts[pos] = left;
    Weight w(m);
    for (std::size_t i = 0; i < m; ++i) {
      w[i] = static_cast<double>(counts[i]) / static_cast<double>(divisions);
    }
    out.push_back(std::move(w));
    return;
  }
  for (std::size_t c = 0; c <= left; ++c) {
    counts[pos] = c;
    enumerate(m, divisions, pos + 1, left - c, counts, out);
  }
}

}  // namespace

std::vector<Weight> simplex_lattice(std::size_t num_objectives, std::size_t divisions) {
  if (num_objectives == 0) throw std::invalid_argument("simplex_lattice: zero objectives");
  if (divisions == 0) throw std::invalid_argument("simplex_lattice: divisions must be >= 1");
  std::vector<Weight> out;
  out.reserve(lattice_size(num_objectives, divisions));
  std::vector<std::size_t> counts(num_objectives, 0);
  enumerate(num_objectives, divisions, 0, divisions, counts, out);
  return out;
}

std::size_t lattice_size(std::size_t num_objectives, std::size_t divisions) {
  if (num_objectives == 0) return 0;
  // C(n, k) with k = m - 1, computed incrementally; each partial product is
  // itself a binomial coefficient so the division is exact.
  const std::size_t k = num_objectives - 1;
  const std::size_t n = divisions + k;
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::size_t factor = n - k + i;
    if (result > std::numeric_limits<std::size_t>::max() / factor) {
      return std::numeric_limits<std::size_t>::max();
    }
    result = result * factor / i;
  }
  return result;
}

std::optional<std::size_t> lattice_divisions(std::size_t num_objectives, std::size_t population) {
  if (num_objectives == 0 || population == 0) return std::nullopt;
  for (std::size_t h = 1;; ++h) {
    const std::size_t size = lattice_size(num_objectives, h);
    if (size == population) return h;
    if (size > population) return std::nullopt;
  }
}

std::vector<std::size_t> nearest_weights(const std::vector<Weight>& weights, const Weight& target,
                                         std::size_t T) {
  if (T > weights.size()) throw std::invalid_argument("nearest_weights: T exceeds weight count");
  std::vector<std::pair<double, std::size_t>> dist(weights.size());
  for (std::size_t j = 0; j < weights.size(); ++j) {
    dist[j] = {squared_distance(weights[j], target), j};
  }
  // Pair ordering sorts by (distance, index), which is the tie rule.
  std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(T), dist.end());
  std::vector<std::size_t> out(T);
  for (std::size_t t = 0; t < T; ++t) out[t] = dist[t].second;
  return out;
}

NeighborIndex compute_neighbors(const std::vector<Weight>& weights, std::size_t T) {
  NeighborIndex out;
  out.reserve(weights.size());
  for (const auto& w : weights) out.push_back(nearest_weights(weights, w, T));
  return out;
}

bool on_simplex(const Weight& w, double tol) {
  double sum = 0.0;
  for (double v : w) {
    if (!(v >= 0.0) || !std::isfinite(v)) return false;
    sum += v;
  }
  return std::abs(sum - 1.0) <= tol;
}

}  // namespace adaw
