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


#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "posetdim/constructions.hpp"
#include "posetdim/errors.hpp"
#include "posetdim/io.hpp"
#include "posetdim/oracles.hpp"
#include "posetdim/poset.hpp"
#include "test_util.hpp"

namespace posetdim {
namespace {

using testing::random_poset;
using testing::shuffled;

TEST(Poset, ClosureOfChainRelations) {
  const std::vector<RelationPair> rel{{0, 1}, {1, 2}};
  const Poset p = poset_from_relations(3, rel);
  EXPECT_TRUE(p.less(0, 2));
  EXPECT_EQ(p.relation_count(), 3u);
  EXPECT_TRUE(p.is_chain());
}

TEST(Poset, EmptyAndSingleton) {
  const Poset e = poset_from_relations(0, {});
  EXPECT_TRUE(e.empty());
  EXPECT_TRUE(covers(e).empty());
  const Poset one = poset_from_relations(1, {});
  EXPECT_EQ(one.size(), 1u);
  EXPECT_TRUE(one.is_chain());
}

TEST(Poset, RejectsCyclesAndBadIndices) {
  const std::vector<RelationPair> cyc{{0, 1}, {1, 0}};
  EXPECT_THROW(poset_from_relations(2, cyc), CycleError);
  const std::vector<RelationPair> loop{{1, 1}};
  EXPECT_THROW(poset_from_relations(2, loop), CycleError);
  const std::vector<RelationPair> bad{{0, 5}};
  EXPECT_THROW(poset_from_relations(2, bad), IndexError);
}

TEST(Poset, FromUpSetsChecksTransitivity) {
  std::vector<DynBitset> up(3, DynBitset(3));
  up[0].set(1);
  up[1].set(2);
  EXPECT_THROW(Poset::from_up_sets(up), RelationError);
  up[0].set(2);
  EXPECT_NO_THROW(Poset::from_up_sets(up));
}

TEST(Poset, CoversRegenerateTheOrder) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const Poset p = random_poset(3 + t % 12, 0.3, rng);
    const auto c = covers(p);
    EXPECT_EQ(poset_from_relations(p.size(), c), p);
    for (const auto& [a, b] : c)
      for (std::size_t m = 0; m < p.size(); ++m) EXPECT_FALSE(p.less(a, m) && p.less(m, b));
  }
}

TEST(Poset, DualReversesAndIsInvolutive) {
  const Poset s = spider();
  const Poset d = dual(s);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) EXPECT_EQ(s.less(i, j), d.less(j, i));
  EXPECT_EQ(dual(d), s);
}

TEST(Poset, InducedSubposetKeepsOrderAndLabels) {
  const Poset s = spider();
  const std::vector<std::size_t> keep{0, 1, 4};
  const auto sub = induced_subposet(s, keep);
  EXPECT_EQ(sub.poset.size(), 3u);
  EXPECT_TRUE(sub.poset.less(0, 1));
  EXPECT_TRUE(sub.poset.less(2, 1));
  EXPECT_EQ(sub.poset.label(2), "C1");
  EXPECT_EQ(sub.subset.index_map, keep);
  const std::vector<std::size_t> bad{9};
  EXPECT_THROW(induced_subposet(s, bad), IndexError);
}

TEST(Poset, LexicographicProduct) {
  const Poset c2 = chain(2);
  const Poset a2 = antichain(2);
  const Poset p = lexicographic_product(c2, a2);
  ASSERT_EQ(p.size(), 4u);
  EXPECT_TRUE(p.less(0, 2));
  EXPECT_TRUE(p.less(1, 3));
  EXPECT_TRUE(p.incomparable(0, 1));
  EXPECT_EQ(lexicographic_product(a2, c2).relation_count(), 2u);
}

TEST(Poset, LinearExtensionCheck) {
  const Poset s = spider();
  EXPECT_TRUE(is_linear_extension(s, {{0, 4, 5, 6, 1, 2, 3}}));
  EXPECT_FALSE(is_linear_extension(s, {{1, 0, 4, 5, 6, 2, 3}}));
  EXPECT_FALSE(is_linear_extension(s, {{0, 4, 5, 6, 1, 2}}));
  EXPECT_FALSE(is_linear_extension(s, {{0, 0, 5, 6, 1, 2, 3}}));
}

TEST(Canonical, AgreesWithBruteForceIsomorphism) {
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto all = oracle::labeled_posets(n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i; j < all.size(); ++j) {
        const bool brute = oracle::brute_isomorphic(all[i], all[j]);
        ASSERT_EQ(canonical_form(all[i]) == canonical_form(all[j]), brute) << n << " " << i << " " << j;
        ASSERT_EQ(isomorphic(all[i], all[j]).has_value(), brute) << n << " " << i << " " << j;
      }
    }
  }
}

TEST(Canonical, DistinctFormsPerClassAtFive) {
  std::set<std::string> forms;
  for (const auto& p : oracle::labeled_posets(5)) forms.insert(canonical_form(p));
  EXPECT_EQ(forms.size(), 63u);
}

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const Poset p = random_poset(4 + t % 14, 0.25, rng);
    const Poset q = shuffled(p, rng);
    ASSERT_EQ(canonical_form(p), canonical_form(q));
    const auto f = isomorphic(p, q);
    ASSERT_TRUE(f.has_value());
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) ASSERT_EQ(p.less(i, j), q.less((*f)[i], (*f)[j]));
  }
}

TEST(Canonical, LabelingReordersToForm) {
  const Poset s = spider();
  const auto lab = canonical_labeling(s);
  ASSERT_EQ(lab.order.size(), 7u);
  const Poset re = Poset::from_predicate(7, [&](std::size_t i, std::size_t j) { return s.less(lab.order[i], lab.order[j]); });
  EXPECT_EQ(canonical_form(re), lab.form);
}

TEST(Canonical, SymmetricStructuresAreCheap) {
  // Many twins: large antichains and standard examples.
  EXPECT_EQ(canonical_form(antichain(200)), canonical_form(antichain(200)));
  std::mt19937_64 rng(1);
  EXPECT_TRUE(isomorphic(standard_example(12), shuffled(standard_example(12), rng)).has_value());
  EXPECT_FALSE(isomorphic(standard_example(5), dual(chain(10))).has_value());
}

TEST(Chains, SqrtWitnessOnRandomPosets) {
  std::mt19937_64 rng(1234);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 40);
    const Poset p = random_poset(n, std::uniform_real_distribution<double>(0.02, 0.6)(rng), rng);
    const auto w = sqrt_witness(p);
    const auto need = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    ASSERT_GE(w.members.size(), need);
    if (w.kind == WitnessKind::Chain) ASSERT_TRUE(is_chain_subset(p, w.members));
    else ASSERT_TRUE(is_antichain_subset(p, w.members));
    // Dilworth: a chain cover of size |max antichain| exists, so chain * antichain >= n.
    ASSERT_GE(longest_chain(p).size() * maximum_antichain(p).size(), n);
  }
}

TEST(Chains, KnownSizes) {
  EXPECT_EQ(longest_chain(spider()).size(), 2u);
  EXPECT_EQ(maximum_antichain(spider()).size(), 4u);
  EXPECT_EQ(maximum_antichain(grid(3, 2).poset).size(), 3u);
  EXPECT_EQ(longest_chain(grid(3, 2).poset).size(), 5u);
  EXPECT_EQ(maximum_antichain(standard_example(6)).size(), 6u);
  EXPECT_TRUE(longest_chain(poset_from_relations(0, {})).empty());
}

TEST(Chains, AntichainMatchesExhaustiveMaximum) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 12);
    const Poset p = random_poset(n, 0.3, rng);
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      std::vector<std::size_t> m;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1U) m.push_back(i);
      if (m.size() > best && is_antichain_subset(p, m)) best = m.size();
    }
    ASSERT_EQ(maximum_antichain(p).size(), best);
  }
}

TEST(Io, JsonRoundTrip) {
  const auto g = grid(2, 3);
  const Json j = poset_to_json(g.poset, &g.coords);
  const auto back = poset_from_json_text(j.dump());
  EXPECT_EQ(back.poset, g.poset);
  ASSERT_TRUE(back.coords.has_value());
  EXPECT_EQ(*back.coords, g.coords);
  EXPECT_EQ(back.poset.label(7), g.poset.label(7));
}

TEST(Io, RejectsMalformedJson) {
  EXPECT_THROW(poset_from_json_text("{"), ParseError);
  EXPECT_THROW(poset_from_json_text(R"({"relations": []})"), ParseError);
  EXPECT_THROW(poset_from_json_text(R"({"n": 2, "relations": [[0]]})"), ParseError);
  EXPECT_THROW(poset_from_json_text(R"({"n": 2, "relations": [[0, 1], [1, 0]]})"), CycleError);
  EXPECT_THROW(poset_from_json_text(R"({"n": 2, "relations": [[0, 2]]})"), IndexError);
}

TEST(Io, DotHasCoverEdgesOnly) {
  const std::string dot = poset_to_dot(spider());
  std::size_t edges = 0;
  for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 1)) ++edges;
  EXPECT_EQ(edges, 6u);
  EXPECT_NE(dot.find("0 -> 1;"), std::string::npos);
  EXPECT_NE(dot.find("rankdir=BT"), std::string::npos);
  EXPECT_EQ(poset_to_dot(chain(3)).find("0 -> 2"), std::string::npos);
}

}  // namespace
}  // namespace posetdim
