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

#include <algorithm>
#include <random>
#include <vector>

#include "posetdim/poset.hpp"

namespace posetdim::testing {

// Random order: each i<j edge with probability p, then closed.
inline Poset random_poset(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(p);
  std::vector<RelationPair> rel;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) rel.emplace_back(i, j);
  return poset_from_relations(n, rel);
}

// Same order with elements renamed by a random permutation.
inline Poset shuffled(const Poset& p, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(p.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return Poset::from_predicate(p.size(), [&](std::size_t i, std::size_t j) { return p.less(perm[i], perm[j]); });
}

}  // namespace posetdim::testing
