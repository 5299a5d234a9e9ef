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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "posetdim/bitset.hpp"
#include "posetdim/budget.hpp"

namespace posetdim {

/// A property closed under taking subsets, described by its obstructions.
struct HereditaryProblem {
  /// Elements of `members` forming an obstruction (every valid subset misses
  /// at least one of them), or none if `members` has the property.
  std::function<std::optional<std::vector<std::size_t>>(const DynBitset&)> find_violation;
  /// Two member sets with equal keys must have equally large valid subsets.
  std::function<std::string(const DynBitset&)> memo_key;
};

struct HereditaryResult {
  DynBitset members;
  bool optimal = false;
  std::uint64_t explored = 0;
};

/// Maximum subset of `start` with the property. Branches on deleting each
/// element of an obstruction; prunes by the incumbent size against a lower
/// bound on deletions from greedily packed disjoint obstructions; skips
/// member sets whose memo key was already expanded. Budget exhaustion ends
/// the search with optimal = false. `incumbent` must already be valid.
HereditaryResult maximum_hereditary_subset(const HereditaryProblem& problem, const DynBitset& start,
                                           Budget& budget,
                                           std::optional<DynBitset> incumbent = std::nullopt);

}  // namespace posetdim
