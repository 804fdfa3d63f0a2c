#pragma once

// Brute-force reference implementations used as test oracles.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <random>
#include <vector>

#include "adaw/objective.hpp"

namespace oracle {

using Point = std::vector<double>;

inline double dist(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

inline bool dominates(const Point& a, const Point& b) {
  bool better = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) better = true;
  }
  return better;
}

inline bool mutually_nondominated(const std::vector<Point>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (i != j && dominates(s[i], s[j])) return false;
  return true;
}

inline double igd(const std::vector<Point>& ref, const std::vector<Point>& s) {
  double total = 0.0;
  for (const auto& r : ref) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : s) best = std::min(best, dist(r, p));
    total += best;
  }
  return total / static_cast<double>(ref.size());
}

inline double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Median over points of the distance to the k-th nearest other point.
inline double niche_radius(const std::vector<Point>& s, std::size_t k) {
  if (s.size() < 2) return 0.0;
  k = std::clamp<std::size_t>(k, 1, s.size() - 1);
  std::vector<double> kth;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<double> d;
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j != i) d.push_back(dist(s[i], s[j]));
    std::sort(d.begin(), d.end());
    kth.push_back(d[k - 1]);
  }
  return median(kth);
}

// D(p) = 1 - prod R(p,q), R = d/r inside the niche, 1 outside.
inline double crowding(std::size_t p, const std::vector<Point>& s, double r) {
  double prod = 1.0;
  for (std::size_t q = 0; q < s.size(); ++q) {
    if (q == p) continue;
    const double d = dist(s[p], s[q]);
    prod *= (d <= r && r > 0.0) ? d / r : 1.0;
  }
  return 1.0 - prod;
}

inline Point normalize_point(const Point& p, const Point& lo, const Point& hi) {
  Point out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    out[i] = hi[i] > lo[i] ? (p[i] - lo[i]) / (hi[i] - lo[i]) : 0.0;
  return out;
}

inline std::vector<Point> normalize(const std::vector<Point>& s) {
  Point lo = s.front(), hi = s.front();
  for (const auto& p : s)
    for (std::size_t i = 0; i < p.size(); ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  std::vector<Point> out;
  for (const auto& p : s) out.push_back(normalize_point(p, lo, hi));
  return out;
}

// Iterative truncation: normalise once, fix r once, drop max-D (lowest index
// on ties) and recompute D over the survivors each time.
inline std::vector<std::size_t> removal_order(const std::vector<Point>& s, std::size_t keep,
                                              std::size_t k) {
  const auto norm = normalize(s);
  const double r = niche_radius(norm, k);
  std::vector<std::size_t> alive(s.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  std::vector<std::size_t> removed;
  while (alive.size() > keep) {
    std::vector<Point> cur;
    for (auto i : alive) cur.push_back(norm[i]);
    std::size_t worst = 0;
    double worst_d = -1.0;
    for (std::size_t a = 0; a < cur.size(); ++a) {
      const double d = crowding(a, cur, r);
      if (d > worst_d) {
        worst_d = d;
        worst = a;
      }
    }
    removed.push_back(alive[worst]);
    alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(worst));
  }
  return removed;
}

// Recursive enumeration of nonnegative integer m-tuples summing to H.
inline std::size_t count_compositions(std::size_t m, std::size_t H) {
  if (m == 1) return 1;
  std::size_t total = 0;
  for (std::size_t h = 0; h <= H; ++h) total += count_compositions(m - 1, H - h);
  return total;
}

inline std::vector<Point> random_points(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                        double lo = 0.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<Point> out(n, Point(m));
  for (auto& p : out)
    for (auto& v : p) v = u(rng);
  return out;
}

}  // namespace oracle
