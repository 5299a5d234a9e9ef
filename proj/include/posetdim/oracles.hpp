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

// Exhaustive reference computations. Nothing here calls the canonical form,
// the refinement-based isomorphism test, the containment search or either
// branch and bound; they exist to cross-check those.

#include <cstddef>
#include <vector>

#include "posetdim/patterns.hpp"
#include "posetdim/poset.hpp"

namespace posetdim::oracle {

/// Every strict partial order on {0..n-1}, found by filtering all 2^(n(n-1))
/// relations. n <= 5.
std::vector<Poset> labeled_posets(std::size_t n);

/// Tries all n! bijections.
bool brute_isomorphic(const Poset& p, const Poset& q);

/// One representative per class under brute_isomorphic, first occurrences.
std::vector<Poset> isomorphism_classes(const std::vector<Poset>& posets);

/// Largest subset of dimension <= d, scanning subsets by decreasing size.
/// Dimension by dimension_bruteforce up to 7 elements, by the critical-pair
/// search above that. n <= 16.
std::size_t exhaustive_max_subposet(const Poset& p, int d);

/// Tries every tuple of increasing injections.
bool brute_contains(const PointSet& a, const PointSet& b);

/// Largest subset of [n]^d avoiding b over all 2^(n^d) subsets; n^d <= 16.
std::size_t exhaustive_max_avoiding(int side, int arity, const PointSet& b);

}  // namespace posetdim::oracle
