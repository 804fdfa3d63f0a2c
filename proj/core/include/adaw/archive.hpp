#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "adaw/objective.hpp"

namespace adaw {

/// Niche radius: the median over all points of the distance to their k-th
/// nearest other point. k is clamped to |points| - 1; fewer than two points
/// give radius 0.
double niche_radius(std::span<const ObjectiveVector> points, std::size_t k);

/// Crowding degree of points[index] within `points`:
///   D(p) = 1 - prod_{q != p} R(p, q),  R = d(p, q) / r if d <= r, else 1.
double crowding_degree(std::size_t index, std::span<const ObjectiveVector> points, double radius);

/// Repeatedly removes the most crowded point until `keep` remain. Points are
/// normalised over the whole set and the radius is fixed from that set
/// before any removal; crowding degrees are refreshed after each removal.
/// Ties go to the lower index. Returns removed indices in removal order.
std::vector<std::size_t> crowding_removal_order(std::span<const ObjectiveVector> points,
                                                std::size_t keep, std::size_t k);

/// Bounded archive of mutually nondominated solutions.
class Archive {
 public:
  explicit Archive(std::size_t capacity) : capacity_(capacity) {}

  /// Adds p unless a member dominates it or has identical objectives; drops
  /// members p dominates. Returns whether p was added.
  bool insert(const Solution& p);

  /// Crowding-based truncation back to capacity, with the k-th nearest
  /// neighbour rule using k = `k`. Returns the number of members removed.
  std::size_t maintain(std::size_t k);

  bool over_capacity() const { return members_.size() > capacity_; }
  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Solution>& members() const { return members_; }
  std::vector<ObjectiveVector> objectives() const;

 private:
  std::size_t capacity_;
  std::vector<Solution> members_;
};

}  // namespace adaw
