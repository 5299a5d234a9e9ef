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
#include <cstddef>
#include <functional>
#include <vector>

#include "posetdim/poset.hpp"

namespace posetdim {

// Dense bit matrices cost 2 n^2 bits, so the default cap keeps a single poset
// under a few hundred megabytes.
inline constexpr std::size_t kDefaultElementCap = std::size_t{1} << 15;

using Coord = std::vector<int>;
using Coord3 = std::array<int, 3>;

/// A poset whose elements are integer vectors in [side]^arity, indexed in
/// lexicographic coordinate order.
struct CoordinatePoset {
  Poset poset;
  int arity = 0;
  int side = 0;
  std::vector<Coord> coords;

  std::size_t index_of(const Coord& c) const;
};

CoordinatePoset grid(int side, int arity, std::size_t element_cap = kDefaultElementCap);

/// a_1..a_m at indices 0..m-1, b_1..b_m at m..2m-1; a_i < b_j iff i != j.
Poset standard_example(int m);

/// The non-strict order on [r]^3: (x1,y1,z1) <= (x2,y2,z2) iff z1 <= z2 and
/// (y1 < y2 or (y1 == y2 and x1 == x2)).
bool c_r_leq(const Coord3& u, const Coord3& v);
/// Strict part of c_r_leq.
bool c_r_less(const Coord3& u, const Coord3& v);

using Coord3Order = std::function<bool(const Coord3&, const Coord3&)>;

CoordinatePoset c_r(int r, std::size_t element_cap = kDefaultElementCap);
/// Builds [r]^3 under an arbitrary non-strict order and asserts the strict
/// part is a partial order (RelationError otherwise). c_r() goes through here.
CoordinatePoset c_r_with_order(int r, const Coord3Order& leq,
                               std::size_t element_cap = kDefaultElementCap);

/// Labels: A = 0, B1..B3 = 1..3, C1..C3 = 4..6.
Poset spider();

Poset chain(std::size_t n);
Poset antichain(std::size_t n);

}  // namespace posetdim
