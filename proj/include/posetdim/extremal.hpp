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

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "posetdim/budget.hpp"
#include "posetdim/constructions.hpp"
#include "posetdim/poset.hpp"

namespace posetdim {

// ---------------------------------------------------------------------------
// Spider extraction from large subsets of C_r.

struct SpiderTrace {
  std::size_t input_size = 0;
  std::size_t filtered_size = 0;  // points with a lower point in their column
  int layer_z = 0;
  std::size_t layer_size = 0;
  int a_row_y = 0;
  std::size_t remaining_size = 0;  // layer minus the row of a
  int row_y = 0;                   // row holding b1..b3
};

struct SpiderWitness {
  Coord3 a{};
  std::array<Coord3, 3> b{};
  std::array<Coord3, 3> c{};
  SpiderTrace trace;

  /// a, b1, b2, b3, c1, c2, c3: the element order of spider().
  std::array<Coord3, 7> points() const;
};

/// Finds a, b_i, c_i in s with a < b_i and c_i < b_i in C_r and every other
/// pair incomparable.
///
///  1. Drop every point with no point of s below it in its (x, y) column.
///  2. Take the largest z-layer of what is left (smallest z on ties).
///  3. a is the point of that layer with minimal y, then minimal x; drop a's
///     row from the layer.
///  4. The smallest y holding three points of the rest gives b1..b3 (three
///     smallest x).
///  5. c_i is the lowest point of s in b_i's column.
///
/// Throws PreconditionError unless r >= 2 and |s| >= 4 r^2, IndexError for
/// points outside [r]^3, InvalidArgument for duplicates, and InternalError
/// if a counting step yields fewer points than guaranteed.
SpiderWitness extract_spider(std::span<const Coord3> s, int r);

/// Labelled check: points distinct, all in s, and the C_r order among them
/// is exactly a < b_i, c_i < b_i.
bool spider_roles_hold(std::span<const Coord3> s, const SpiderWitness& w);

struct SpiderVerification {
  bool roles = false;
  bool isomorphic = false;
  int dimension = 0;
  bool ok() const { return roles && isomorphic && dimension == 3; }
};

/// Full independent check: labelled roles, isomorphism of the induced
/// subposet to spider(), and its exact dimension.
SpiderVerification verify_spider_witness(std::span<const Coord3> s, const SpiderWitness& w,
                                         Budget& budget);

enum class SpiderSampler { Uniform, Adversarial };

/// A random subset of [r]^3 with exactly 4 r^2 points. The adversarial
/// sampler spends as many points as it can on single-point columns (which
/// step 1 discards) and skews the rest towards few rows and one end of the
/// z range.
std::vector<Coord3> sample_spider_input(int r, SpiderSampler sampler, std::mt19937_64& rng);

// ---------------------------------------------------------------------------
// Maximum d-dimensional induced subposets.

struct SubposetResult {
  std::vector<std::size_t> members;
  std::size_t size = 0;
  bool optimal = false;
  std::uint64_t explored = 0;
};

/// Inclusion-minimal member subset of dimension > d, found by deleting
/// members in index order whenever the rest stays above d; none if the
/// members already have dimension <= d.
std::optional<std::vector<std::size_t>> minimal_bad_witness(const Poset& p, const DynBitset& members,
                                                            int d, Budget& budget);

/// Largest member set whose induced subposet has dimension <= d, by branch
/// and bound over minimal bad witnesses with canonical-form memoization.
/// The answer is re-verified. On budget exhaustion returns the best found
/// with optimal = false.
SubposetResult max_subposet_dim(const Poset& p, int d, Budget& budget,
                                std::optional<std::vector<std::size_t>> incumbent = std::nullopt);

// ---------------------------------------------------------------------------
// Enumeration and exact f_d(n).

inline constexpr std::size_t kEnumerationCap = 7;

enum class GrowthOrder { AddMaximal, AddMinimal };

/// One poset per isomorphism class on n elements, in a deterministic order.
/// Grows every (n-1)-element representative by a new maximal element over
/// each down-closed set (or a new minimal element under each up-closed set)
/// and keeps first occurrences by canonical form. Throws SizeError above
/// kEnumerationCap.
std::vector<Poset> enumerate_posets(std::size_t n, GrowthOrder order = GrowthOrder::AddMaximal);

struct FValue {
  std::size_t n = 0;
  int d = 0;
  std::size_t value = 0;
  std::size_t classes = 0;
  Poset witness_poset;
  std::vector<std::size_t> witness_subset;
};

/// Minimum over all n-element posets of the largest induced subposet of
/// dimension <= d. Classes are spread over `jobs` threads; the reported
/// witness is the first minimizing class in enumeration order regardless of
/// scheduling. Throws BudgetExceeded if any class is left uncertified.
FValue f_value(std::size_t n, int d, Budget& budget, unsigned jobs = 1);

/// True iff the values are non-decreasing in n.
bool monotone_f_check(std::span<const std::pair<std::size_t, std::size_t>> results);

struct GridProbeReport {
  int side = 0;
  int d = 0;
  std::size_t elements = 0;
  std::size_t best_size = 0;
  bool optimal = false;
  std::size_t baseline = 0;  // side^d, the fixed-coordinate slice
  bool baseline_verified = false;
  std::uint64_t explored = 0;
  std::vector<Coord> best_members;
};

/// Largest subposet of dimension <= d in the side^(d+1) grid, seeded with the
/// slice whose last coordinate is 0.
GridProbeReport grid_probe(int side, int d, Budget& budget);

}  // namespace posetdim
