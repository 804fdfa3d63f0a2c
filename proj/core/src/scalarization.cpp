#include "adaw/scalarization.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace adaw {

ReferencePoint::ReferencePoint(std::size_t num_objectives)
    : z_(num_objectives, std::numeric_limits<double>::infinity()) {}

bool ReferencePoint::update(std::span<const double> f) {
  if (f.size() != z_.size()) throw std::invalid_argument("ReferencePoint::update: length mismatch");
  bool moved = false;
  for (std::size_t i = 0; i < z_.size(); ++i) {
    const double candidate = f[i] - kOffset;
    if (candidate < z_[i]) {
      z_[i] = candidate;
      moved = true;
    }
  }
  return moved;
}

double tchebycheff(std::span<const double> f, const Weight& w, const ReferencePoint& z) {
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < f.size(); ++i) {
    worst = std::max(worst, (f[i] - z[i]) / std::max(w[i], kWeightFloor));
  }
  return worst;
}

namespace {

std::vector<double> sorted_terms(std::span<const double> f, const Weight& w,
                                 const ReferencePoint& z) {
  std::vector<double> terms(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) terms[i] = (f[i] - z[i]) / std::max(w[i], kWeightFloor);
  std::sort(terms.begin(), terms.end(), std::greater<>());
  return terms;
}

}  // namespace

bool improves(std::span<const double> candidate, std::span<const double> incumbent,
              const Weight& w, const ReferencePoint& z) {
  const double gc = tchebycheff(candidate, w, z);
  const double gi = tchebycheff(incumbent, w, z);
  if (gc != gi) return gc < gi;
  return sorted_terms(candidate, w, z) < sorted_terms(incumbent, w, z);
}

Weight optimal_weight(std::span<const double> f, const ReferencePoint& z) {
  const std::size_t m = f.size();
  Weight w(m);
  double total = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    w[i] = std::max(f[i] - z[i], 0.0);
    total += w[i];
  }
  if (total < 1e-12) return Weight(m, 1.0 / static_cast<double>(m));
  for (auto& v : w) v /= total;
  return w;
}

}  // namespace adaw
