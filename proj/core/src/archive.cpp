#include "adaw/archive.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace adaw {
namespace {

double niche_ratio(double d, double radius) {
  if (radius <= 0.0) return d <= 0.0 ? 0.0 : 1.0;
  return d <= radius ? d / radius : 1.0;
}

std::vector<double> distance_matrix(std::span<const ObjectiveVector> pts) {
  const std::size_t n = pts.size();
  std::vector<double> dist(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = euclidean_distance(pts[i], pts[j]);
      dist[i * n + j] = d;
      dist[j * n + i] = d;
    }
  }
  return dist;
}

double radius_from_matrix(const std::vector<double>& dist, std::size_t n, std::size_t k) {
  if (n < 2) return 0.0;
  const std::size_t kk = std::clamp<std::size_t>(k, 1, n - 1);
  std::vector<double> kth(n);
  std::vector<double> row;
  row.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    row.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) row.push_back(dist[i * n + j]);
    }
    std::nth_element(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(kk - 1), row.end());
    kth[i] = row[kk - 1];
  }
  return median(std::move(kth));
}

}  // namespace

double niche_radius(std::span<const ObjectiveVector> points, std::size_t k) {
  return radius_from_matrix(distance_matrix(points), points.size(), k);
}

double crowding_degree(std::size_t index, std::span<const ObjectiveVector> points, double radius) {
  if (index >= points.size()) throw std::out_of_range("crowding_degree: index out of range");
  double product = 1.0;
  for (std::size_t q = 0; q < points.size(); ++q) {
    if (q == index) continue;
    product *= niche_ratio(euclidean_distance(points[index], points[q]), radius);
  }
  return 1.0 - product;
}

std::vector<std::size_t> crowding_removal_order(std::span<const ObjectiveVector> points,
                                                std::size_t keep, std::size_t k) {
  const std::size_t n = points.size();
  if (n <= keep) return {};
  const auto normalized = normalize(points);
  const auto dist = distance_matrix(normalized);
  const double radius = radius_from_matrix(dist, n, k);

  // Only in-niche pairs contribute a factor below one, so each point keeps
  // the (ascending) list of its niche members and only points sharing a
  // niche with a removed point need their product refreshed.
  std::vector<std::vector<std::size_t>> niche(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && niche_ratio(dist[i * n + j], radius) < 1.0) niche[i].push_back(j);
    }
  }
  std::vector<char> alive(n, 1);
  std::vector<double> product(n, 1.0);
  auto refresh = [&](std::size_t i) {
    double p = 1.0;
    for (std::size_t j : niche[i]) {
      if (alive[j]) p *= niche_ratio(dist[i * n + j], radius);
    }
    product[i] = p;
  };
  for (std::size_t i = 0; i < n; ++i) refresh(i);

  std::vector<std::size_t> removed;
  removed.reserve(n - keep);
  for (std::size_t remaining = n; remaining > keep; --remaining) {
    std::size_t worst = n;
    for (std::size_t i = 0; i < n; ++i) {
      // Largest crowding degree is the smallest product; strict comparison
      // keeps the lowest index among ties.
      if (alive[i] && (worst == n || product[i] < product[worst])) worst = i;
    }
    alive[worst] = 0;
    removed.push_back(worst);
    for (std::size_t j : niche[worst]) {
      if (alive[j]) refresh(j);
    }
  }
  return removed;
}

bool Archive::insert(const Solution& p) {
  for (const auto& q : members_) {
    if (q.f == p.f || dominates(q.f, p.f)) return false;
  }
  std::erase_if(members_, [&](const Solution& q) { return dominates(p.f, q.f); });
  members_.push_back(p);
  return true;
}

std::size_t Archive::maintain(std::size_t k) {
  if (members_.size() <= capacity_ || members_.size() < 2) return 0;
  const auto removed = crowding_removal_order(objectives(), capacity_, k);
  std::vector<char> drop(members_.size(), 0);
  for (std::size_t i : removed) drop[i] = 1;
  std::vector<Solution> kept;
  kept.reserve(capacity_);
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (!drop[i]) kept.push_back(std::move(members_[i]));
  }
  members_ = std::move(kept);
  return removed.size();
}

std::vector<ObjectiveVector> Archive::objectives() const {
  std::vector<ObjectiveVector> out;
  out.reserve(members_.size());
  for (const auto& s : members_) out.push_back(s.f);
  return out;
}

}  // namespace adaw
