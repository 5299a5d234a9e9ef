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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "posetdim/budget.hpp"
#include "posetdim/poset.hpp"

namespace posetdim {

/// Incomparable (a, b) with down(a) subset of down(b) and up(b) subset of
/// up(a). A family of linear extensions realizes the poset iff every
/// critical pair is reversed (b placed below a) in at least one of them.
struct CriticalPair {
  std::size_t a = 0;
  std::size_t b = 0;
  friend bool operator==(const CriticalPair&, const CriticalPair&) = default;
};

struct Realizer {
  std::vector<LinearExtension> extensions;
  std::size_t size() const { return extensions.size(); }
};

struct DimensionResult {
  int dim = 0;
  Realizer witness;
  bool certified_minimal = false;
  std::uint64_t explored = 0;
};

std::vector<CriticalPair> critical_pairs(const Poset& p);

/// A linear extension placing b below a for every (a, b) in pairs, or none if
/// the pairs are not simultaneously reversible.
std::optional<LinearExtension> reversible(const Poset& p, std::span<const CriticalPair> pairs);

/// Independent check: every member is a linear extension and their
/// intersection is exactly the order of p. Not used by the search itself.
bool verify_realizer(const Poset& p, const Realizer& r);

struct DimensionSearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t memo_hits = 0;
};

/// A realizer of at most d extensions, or none if dim(p) > d.
///
/// Partitions the critical pairs into at most d reversible classes by
/// backtracking. Each class keeps the transitive closure of the order plus
/// its reversals, so testing a pair costs one bit lookup. The next pair is
/// the one with fewest admissible classes (ties: higher conflict degree,
/// then lower index); failed class configurations are memoized. Returned
/// realizers have passed verify_realizer. Throws BudgetExceeded.
std::optional<Realizer> dimension_at_most(const Poset& p, int d, Budget& budget,
                                          DimensionSearchStats* stats = nullptr);
std::optional<Realizer> dimension_at_most(const Poset& p, int d);

/// Least d with a realizer of size d: 0 for the empty poset, 1 for nonempty
/// chains. Throws BudgetExceeded.
DimensionResult dimension_exact(const Poset& p, Budget& budget);
DimensionResult dimension_exact(const Poset& p);

inline constexpr std::size_t kBruteforceElementCap = 7;

/// Definition-level oracle: tries every set of at most d distinct linear
/// extensions. Throws SizeError above kBruteforceElementCap elements.
std::optional<Realizer> dimension_bruteforce(const Poset& p, int d);

/// All linear extensions in lexicographic order (test helper; n <= 10).
std::vector<LinearExtension> all_linear_extensions(const Poset& p);

}  // namespace posetdim
