#include "adaw/objective.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace adaw {

bool dominates(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dominates: objective vectors differ in length");
  }
  bool strictly_better = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) strictly_better = true;
  }
  return strictly_better;
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("distance: vectors differ in length");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
  return std::sqrt(squared_distance(a, b));
}

std::vector<ObjectiveVector> normalize(std::span<const ObjectiveVector> set) {
  if (set.empty()) return {};
  const std::size_t m = set.front().size();
  std::vector<double> lo(set.front()), hi(set.front());
  for (const auto& f : set) {
    if (f.size() != m) throw std::invalid_argument("normalize: ragged objective set");
    for (std::size_t i = 0; i < m; ++i) {
      lo[i] = std::min(lo[i], f[i]);
      hi[i] = std::max(hi[i], f[i]);
    }
  }
  std::vector<ObjectiveVector> out;
  out.reserve(set.size());
  for (const auto& f : set) {
    ObjectiveVector g(m);
    for (std::size_t i = 0; i < m; ++i) {
      const double span = hi[i] - lo[i];
      g[i] = span > 0.0 ? (f[i] - lo[i]) / span : 0.0;
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<std::size_t> nondominated_indices(std::span<const ObjectiveVector> points) {
  // Lexicographic order guarantees every dominator of a point precedes it,
  // so each point only needs checking against the front found so far.
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return points[a] < points[b];
  });
  std::vector<std::size_t> front;
  for (std::size_t idx : order) {
    const auto& p = points[idx];
    bool keep = true;
    for (std::size_t j : front) {
      if (points[j] == p || dominates(points[j], p)) {
        keep = false;
        break;
      }
    }
    if (keep) front.push_back(idx);
  }
  std::sort(front.begin(), front.end());
  return front;
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of an empty sample");
  const std::size_t n = values.size();
  const auto mid = values.begin() + static_cast<std::ptrdiff_t>(n / 2);
  std::nth_element(values.begin(), mid, values.end());
  const double upper = *mid;
  if (n % 2 == 1) return upper;
  const double lower = *std::max_element(values.begin(), mid);
  return 0.5 * (lower + upper);
}

}  // namespace adaw
