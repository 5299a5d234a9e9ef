/*
Copyright 2026 The posetdim Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "posetdim/budget.hpp"
#include "posetdim/dimension.hpp"
#include "posetdim/poset.hpp"

namespace posetdim {

using Point = std::vector<int>;

/// A d-dimensional (0,1)-matrix: a set of points of [n]^d. The side n is part
/// of the value, not inferred from the points.
class PointSet {
 public:
  PointSet() = default;
  /// Sorts the points lexicographically. Throws IndexError for coordinates
  /// outside [n] or wrong arity, InvalidArgument for duplicates.
  PointSet(int arity, int side, std::vector<Point> points);

  int arity() const { return arity_; }
  int side() const { return side_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }

  bool has(const Point& p) const;
  /// Position of p in points(), or size() if absent.
  std::size_t find(const Point& p) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  int arity_ = 0;
  int side_ = 0;
  std::vector<Point> points_;
};

/// d strictly increasing maps [k] -> [n].
struct InjectionWitness {
  std::vector<std::vector<int>> maps;

  Point image(const Point& p) const;
};

/// Identity permutation matrix of side 2 in dimension 2.
PointSet identity2();

/// Containment of pattern b in host a: increasing injections h_1..h_d with
/// (h_1(x_1), ..., h_d(x_d)) in a for every x in b.
///
/// Backtracks over the pattern's points in lexicographic order, assigning
/// each an image point of the host consistent with the values already fixed
/// per dimension (monotone, with room for the unassigned indices between).
/// A pattern point whose image is fully determined but absent from the host
/// prunes the branch. The first witness found is verified before it is
/// returned. Throws ArityMismatch; a pattern wider than the host is never
/// contained.
std::optional<InjectionWitness> contains(const PointSet& a, const PointSet& b);
bool avoids(const PointSet& a, const PointSet& b);

/// Same search restricted to host points whose index is in `members`.
std::optional<InjectionWitness> contains_within(const PointSet& a, const DynBitset& members,
                                                const PointSet& b);

bool verify_injection(const PointSet& a, const PointSet& b, const InjectionWitness& w);

/// |A| = n and all coordinates distinct in every dimension.
bool is_permutation(const PointSet& a);

/// One point per element: its coordinate in dimension i is its position in
/// the i-th extension. Re-verifies the realizer (NotARealizer otherwise).
PointSet permutation_from_realizer(const Poset& p, const Realizer& r);

struct GridSubposet {
  Poset poset;
  std::vector<Point> coords;  // element index -> point
};

/// Induced product order on the points of a.
GridSubposet pointset_to_grid_subposet(const PointSet& a);

struct AvoidingResult {
  std::size_t size = 0;
  PointSet witness;
  bool optimal = false;
  std::uint64_t explored = 0;
};

inline constexpr std::size_t kAvoidanceCellCap = 4096;

/// Largest subset of [n]^d avoiding b, by branch and bound on occurrences.
/// On budget exhaustion returns the best set found with optimal = false.
/// Throws SizeError when n^d exceeds kAvoidanceCellCap, InvalidArgument for
/// an empty pattern.
AvoidingResult max_avoiding_size(int side, int arity, const PointSet& b, Budget& budget);

}  // namespace posetdim
