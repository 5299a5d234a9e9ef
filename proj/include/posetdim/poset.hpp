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
#include <string>
#include <utility>
#include <vector>

#include "posetdim/bitset.hpp"

namespace posetdim {

using RelationPair = std::pair<std::size_t, std::size_t>;

/// A finite strict partial order on the dense indices 0..n-1.
///
/// The full strict relation is stored twice as bit matrices (up-sets and
/// down-sets), so comparability queries are O(1). Values are immutable once
/// built; every factory checks irreflexivity, antisymmetry and transitivity.
/// Labels are cosmetic and never consulted by an algorithm.
class Poset {
 public:
  Poset() = default;

  /// Takes the complete strict relation as up-sets (up[i] = {j : i < j}).
  /// Throws RelationError if the relation is not a strict partial order.
  static Poset from_up_sets(std::vector<DynBitset> up);

  /// Evaluates less(i, j) on every ordered pair; no closure is applied.
  template <typename Less>
  static Poset from_predicate(std::size_t n, Less&& less) {
    std::vector<DynBitset> up(n, DynBitset(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (less(i, j)) up[i].set(j);
    return from_up_sets(std::move(up));
  }

  std::size_t size() const { return up_.size(); }
  bool empty() const { return up_.empty(); }

  bool less(std::size_t i, std::size_t j) const { return up_[i].test(j); }
  bool comparable(std::size_t i, std::size_t j) const {
    return less(i, j) || less(j, i);
  }
  bool incomparable(std::size_t i, std::size_t j) const {
    return i != j && !comparable(i, j);
  }

  const DynBitset& up_set(std::size_t i) const { return up_[i]; }
  const DynBitset& down_set(std::size_t i) const { return down_[i]; }

  std::size_t relation_count() const;
  std::vector<RelationPair> relations() const;
  bool is_chain() const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(std::size_t i) const;
  Poset with_labels(std::vector<std::string> labels) const;

  // Relation equality; labels are ignored.
  friend bool operator==(const Poset& a, const Poset& b) { return a.up_ == b.up_; }

 private:
  std::vector<DynBitset> up_;
  std::vector<DynBitset> down_;
  std::vector<std::string> labels_;
};

/// Embedding of an induced subposet into its parent.
struct ElementSubset {
  std::size_t parent_size = 0;
  DynBitset members;
  std::vector<std::size_t> index_map;  // induced index -> parent index, increasing
};

struct InducedSubposet {
  Poset poset;
  ElementSubset subset;
};

struct LinearExtension {
  std::vector<std::size_t> order;  // bottom to top
  friend bool operator==(const LinearExtension&, const LinearExtension&) = default;
};

/// Transitive closure of the given (below, above) pairs.
/// Throws IndexError for out-of-range indices, CycleError if the closure is
/// not antisymmetric.
Poset poset_from_relations(std::size_t n, std::span<const RelationPair> pairs);

InducedSubposet induced_subposet(const Poset& p, const DynBitset& members);
InducedSubposet induced_subposet(const Poset& p, std::span<const std::size_t> members);

/// Cover pairs (Hasse diagram), sorted.
std::vector<RelationPair> covers(const Poset& p);

Poset dual(const Poset& p);

/// (p1,q1) < (p2,q2) iff p1 < p2, or p1 == p2 and q1 < q2. Element (i,j) gets
/// index i * |q| + j.
Poset lexicographic_product(const Poset& p, const Poset& q);

bool is_linear_extension(const Poset& p, const LinearExtension& l);
bool is_chain_subset(const Poset& p, std::span<const std::size_t> members);
bool is_antichain_subset(const Poset& p, std::span<const std::size_t> members);

/// Canonical byte string: equal iff the posets are isomorphic.
std::string canonical_form(const Poset& p);

struct CanonicalLabeling {
  std::string form;
  std::vector<std::size_t> order;  // order[k] = element placed at position k
};
CanonicalLabeling canonical_labeling(const Poset& p);

/// A bijection f with i < j in p iff f(i) < f(j) in q, if one exists.
std::optional<std::vector<std::size_t>> isomorphic(const Poset& p, const Poset& q);

/// Longest chain, bottom to top.
std::vector<std::size_t> longest_chain(const Poset& p);
/// Maximum antichain, via a minimum chain cover (bipartite matching).
std::vector<std::size_t> maximum_antichain(const Poset& p);

enum class WitnessKind { Chain, Antichain };

struct SqrtWitness {
  WitnessKind kind = WitnessKind::Chain;
  std::vector<std::size_t> members;
};

/// The larger of a longest chain and a maximum antichain (ties go to the
/// chain). Its size is at least ceil(sqrt(n)).
SqrtWitness sqrt_witness(const Poset& p);

}  // namespace posetdim
