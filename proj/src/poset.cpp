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

#include "posetdim/poset.hpp"

#include <algorithm>
#include <sstream>

#include "posetdim/errors.hpp"

namespace posetdim {

namespace {

std::string pair_text(std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << "(" << i << ", " << j << ")";
  return os.str();
}

}  // namespace

Poset Poset::from_up_sets(std::vector<DynBitset> up) {
  const std::size_t n = up.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (up[i].size() != n) throw InvalidArgument("relation row has wrong width");
    if (up[i].test(i)) throw RelationError("relation is not irreflexive at " + std::to_string(i));
  }
  Poset p;
  p.down_.assign(n, DynBitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    up[i].for_each([&](std::size_t j) {
      if (up[j].test(i)) throw RelationError("relation is not antisymmetric at " + pair_text(i, j));
      p.down_[j].set(i);
    });
  }
  for (std::size_t i = 0; i < n; ++i) {
    up[i].for_each([&](std::size_t k) {
      if (!up[k].is_subset_of(up[i])) {
        DynBitset missing = up[k];
        missing.subtract(up[i]);
        throw RelationError("relation is not transitive: " + pair_text(i, k) + " and " +
                            pair_text(k, missing.find_first()) + " without " +
                            pair_text(i, missing.find_first()));
      }
    });
  }
  p.up_ = std::move(up);
  return p;
}

std::size_t Poset::relation_count() const {
  std::size_t c = 0;
  for (const auto& row : up_) c += row.count();
  return c;
}

std::vector<RelationPair> Poset::relations() const {
  std::vector<RelationPair> out;
  for (std::size_t i = 0; i < size(); ++i)
    up_[i].for_each([&](std::size_t j) { out.emplace_back(i, j); });
  return out;
}

bool Poset::is_chain() const {
  const std::size_t n = size();
  return relation_count() == n * (n == 0 ? 0 : n - 1) / 2;
}

std::string Poset::label(std::size_t i) const {
  if (i < labels_.size()) return labels_[i];
  return std::to_string(i);
}

Poset Poset::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != size())
    throw InvalidArgument("label count does not match element count");
  Poset p = *this;
  p.labels_ = std::move(labels);
  return p;
}

Poset poset_from_relations(std::size_t n, std::span<const RelationPair> pairs) {
  std::vector<DynBitset> up(n, DynBitset(n));
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n)
      throw IndexError("relation " + pair_text(a, b) + " out of range for n = " + std::to_string(n));
    if (a == b) throw CycleError("relation " + pair_text(a, b) + " is reflexive");
    up[a].set(b);
  }
  // Warshall closure over bit rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (up[i].test(k)) up[i] |= up[k];
  for (std::size_t i = 0; i < n; ++i)
    if (up[i].test(i)) throw CycleError("relations contain a cycle through " + std::to_string(i));
  return Poset::from_up_sets(std::move(up));
}

InducedSubposet induced_subposet(const Poset& p, const DynBitset& members) {
  if (members.size() != p.size()) throw IndexError("member set has wrong universe size");
  return induced_subposet(p, members.indices());
}

InducedSubposet induced_subposet(const Poset& p, std::span<const std::size_t> members) {
  const std::size_t n = p.size();
  InducedSubposet out;
  out.subset.parent_size = n;
  out.subset.members = DynBitset(n);
  for (auto m : members) {
    if (m >= n) throw IndexError("member " + std::to_string(m) + " out of range");
    out.subset.members.set(m);
  }
  out.subset.index_map = out.subset.members.indices();
  const auto& map = out.subset.index_map;
  const std::size_t k = map.size();
  std::vector<DynBitset> up(k, DynBitset(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (p.less(map[a], map[b])) up[a].set(b);
  out.poset = Poset::from_up_sets(std::move(up));
  if (!p.labels().empty()) {
    std::vector<std::string> labels;
    labels.reserve(k);
    for (auto m : map) labels.push_back(p.labels()[m]);
    out.poset = out.poset.with_labels(std::move(labels));
  }
  return out;
}

std::vector<RelationPair> covers(const Poset& p) {
  std::vector<RelationPair> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    p.up_set(i).for_each([&](std::size_t j) {
      // i < k < j for some k  <=>  up(i) meets down(j)
      if (!p.up_set(i).intersects(p.down_set(j))) out.emplace_back(i, j);
    });
  }
  return out;
}

Poset dual(const Poset& p) {
  std::vector<DynBitset> up(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) up[i] = p.down_set(i);
  return Poset::from_up_sets(std::move(up)).with_labels(p.labels());
}

Poset lexicographic_product(const Poset& p, const Poset& q) {
  const std::size_t m = q.size();
  Poset out = Poset::from_predicate(p.size() * m, [&](std::size_t u, std::size_t v) {
    const std::size_t pu = u / m, qu = u % m, pv = v / m, qv = v % m;
    return p.less(pu, pv) || (pu == pv && q.less(qu, qv));
  });
  std::vector<std::string> labels;
  labels.reserve(out.size());
  for (std::size_t u = 0; u < out.size(); ++u)
    labels.push_back("(" + p.label(u / m) + "," + q.label(u % m) + ")");
  return out.with_labels(std::move(labels));
}

bool is_linear_extension(const Poset& p, const LinearExtension& l) {
  const std::size_t n = p.size();
  if (l.order.size() != n) return false;
  std::vector<std::size_t> pos(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t e = l.order[k];
    if (e >= n || pos[e] != n) return false;
    pos[e] = k;
  }
  for (std::size_t i = 0; i < n; ++i) {
    bool ok = true;
    p.up_set(i).for_each([&](std::size_t j) { ok = ok && pos[i] < pos[j]; });
    if (!ok) return false;
  }
  return true;
}

bool is_chain_subset(const Poset& p, std::span<const std::size_t> members) {
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      if (members[a] == members[b] || !p.comparable(members[a], members[b])) return false;
  return true;
}

bool is_antichain_subset(const Poset& p, std::span<const std::size_t> members) {
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      if (!p.incomparable(members[a], members[b])) return false;
  return true;
}

}  // namespace posetdim
