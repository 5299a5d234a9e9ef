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

#include <algorithm>

#include "posetdim/constructions.hpp"
#include "posetdim/dimension.hpp"
#include "posetdim/errors.hpp"
#include "test_util.hpp"

namespace posetdim {
namespace {

using testing::random_poset;

int dim(const Poset& p) { return dimension_exact(p).dim; }

TEST(CriticalPairs, StandardExample) {
  const auto cp = critical_pairs(standard_example(3));
  // (a_i, b_i) for each i, and nothing else among the 3+3.
  std::size_t ab = 0;
  for (const auto& c : cp) {
    if (c.a < 3 && c.b == c.a + 3) ++ab;
  }
  EXPECT_EQ(ab, 3u);
  for (const auto& c : cp) EXPECT_TRUE(standard_example(3).incomparable(c.a, c.b));
}

TEST(CriticalPairs, ChainHasNone) { EXPECT_TRUE(critical_pairs(chain(6)).empty()); }

TEST(Reversible, SingleExtension) {
  const Poset s = standard_example(3);
  const std::vector<CriticalPair> one{{0, 3}};
  const auto l = reversible(s, one);
  ASSERT_TRUE(l.has_value());
  EXPECT_TRUE(is_linear_extension(s, *l));
  const auto pos = [&](std::size_t e) { return std::find(l->order.begin(), l->order.end(), e) - l->order.begin(); };
  EXPECT_LT(pos(3), pos(0));
  // (a1,b1) and (a2,b2) together: b1 < a1 < b2 < a2 < b1.
  const std::vector<CriticalPair> two{{0, 3}, {1, 4}};
  EXPECT_FALSE(reversible(s, two).has_value());
  const std::vector<CriticalPair> bad{{0, 4}};
  EXPECT_THROW(reversible(s, bad), InvalidArgument);
}

TEST(Reversible, AlternatingCycleBlocks) {
  // In S_2, reversing both (a1,b1) and (a2,b2) needs b1<a1<b2<a2<b1.
  const Poset s = standard_example(2);
  const std::vector<CriticalPair> both{{0, 2}, {1, 3}};
  EXPECT_FALSE(reversible(s, both).has_value());
}

TEST(Realizer, Verification) {
  const Poset s = standard_example(2);
  Realizer r;
  r.extensions.push_back({{1, 2, 0, 3}});
  EXPECT_FALSE(verify_realizer(s, r));
  r.extensions.push_back({{0, 3, 1, 2}});
  EXPECT_TRUE(verify_realizer(s, r));
  r.extensions.push_back({{2, 0, 1, 3}});
  EXPECT_FALSE(verify_realizer(s, r));
  EXPECT_FALSE(verify_realizer(s, Realizer{}));
}

TEST(Dimension, Known) {
  EXPECT_EQ(dim(poset_from_relations(0, {})), 0);
  EXPECT_EQ(dim(chain(1)), 1);
  EXPECT_EQ(dim(chain(7)), 1);
  EXPECT_EQ(dim(antichain(2)), 2);
  EXPECT_EQ(dim(antichain(40)), 2);
  EXPECT_EQ(dim(spider()), 3);
  for (int m = 2; m <= 6; ++m) EXPECT_EQ(dim(standard_example(m)), m);
  EXPECT_EQ(dim(grid(4, 2).poset), 2);
  EXPECT_EQ(dim(grid(2, 4).poset), 4);
  EXPECT_EQ(dim(c_r(2).poset), 3);
  EXPECT_EQ(dim(c_r(3).poset), 3);
}

TEST(Dimension, LexicographicSumOfTwoDimensionalPieces) {
  // S_2 substituted into each element of S_2: still 2-dimensional.
  const Poset s2 = standard_example(2);
  const Poset p = lexicographic_product(s2, s2);
  ASSERT_EQ(p.size(), 16u);
  const auto res = dimension_exact(p);
  EXPECT_EQ(res.dim, 2);
  EXPECT_TRUE(verify_realizer(p, res.witness));
}

TEST(Dimension, WitnessIsVerifiedAndMinimal) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const Poset p = random_poset(2 + static_cast<std::size_t>(t % 6), 0.3, rng);
    const auto res = dimension_exact(p);
    ASSERT_TRUE(verify_realizer(p, res.witness));
    ASSERT_EQ(res.witness.size(), static_cast<std::size_t>(res.dim));
    ASSERT_TRUE(res.certified_minimal);
    if (res.dim > 1) ASSERT_FALSE(dimension_bruteforce(p, res.dim - 1).has_value());
    ASSERT_TRUE(dimension_bruteforce(p, res.dim).has_value());
  }
}

TEST(Dimension, MonotoneUnderDeletion) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 4 + static_cast<std::size_t>(t % 10);
    const Poset p = random_poset(n, 0.35, rng);
    const int d = dim(p);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
      if (rng() % 3) keep.push_back(i);
    ASSERT_LE(dim(induced_subposet(p, keep).poset), d);
  }
}

TEST(Dimension, SelfDualValue) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    const Poset p = random_poset(8, 0.3, rng);
    ASSERT_EQ(dim(p), dim(dual(p)));
  }
}

TEST(Dimension, BudgetExhaustion) {
  Budget b = Budget::with_nodes(1);
  EXPECT_THROW(dimension_exact(standard_example(6), b), BudgetExceeded);
  // The clock is read every 256 nodes.
  Budget t = Budget::with_seconds(0.0);
  EXPECT_THROW(t.charge(256), BudgetExceeded);
  EXPECT_TRUE(t.exhausted());
}

TEST(Dimension, AtMostRejectsBadBound) {
  EXPECT_FALSE(dimension_at_most(antichain(2), 1).has_value());
  EXPECT_THROW(dimension_at_most(antichain(2), 0), InvalidArgument);
}

TEST(Bruteforce, CapAndExtensions) {
  EXPECT_THROW(dimension_bruteforce(chain(8), 1), SizeError);
  EXPECT_EQ(all_linear_extensions(antichain(4)).size(), 24u);
  EXPECT_EQ(all_linear_extensions(spider()).size(), 288u);
  EXPECT_EQ(all_linear_extensions(standard_example(2)).size(), 6u);
}

}  // namespace
}  // namespace posetdim
