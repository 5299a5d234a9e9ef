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
#include "posetdim/extremal.hpp"
#include "posetdim/hereditary.hpp"
#include "posetdim/oracles.hpp"
#include "test_util.hpp"

namespace posetdim {
namespace {

using testing::random_poset;
using testing::shuffled;

std::vector<Coord3> full_cube(int r) {
  std::vector<Coord3> s;
  for (int x = 0; x < r; ++x)
    for (int y = 0; y < r; ++y)
      for (int z = 0; z < r; ++z) s.push_back({x, y, z});
  return s;
}

TEST(Spider, FullC4Trace) {
  const auto s = full_cube(4);
  const auto w = extract_spider(s, 4);
  EXPECT_EQ(w.a, (Coord3{0, 0, 1}));
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(w.b[static_cast<std::size_t>(i)], (Coord3{i, 1, 1}));
    EXPECT_EQ(w.c[static_cast<std::size_t>(i)], (Coord3{i, 1, 0}));
  }
  EXPECT_EQ(w.trace.input_size, 64u);
  EXPECT_EQ(w.trace.filtered_size, 48u);
  EXPECT_EQ(w.trace.layer_z, 1);
  EXPECT_EQ(w.trace.layer_size, 16u);
  EXPECT_EQ(w.trace.remaining_size, 12u);
  Budget b;
  EXPECT_TRUE(verify_spider_witness(s, w, b).ok());
}

TEST(Spider, Preconditions) {
  auto s = full_cube(4);
  s.pop_back();
  EXPECT_THROW(extract_spider(s, 4), PreconditionError);
  EXPECT_THROW(extract_spider(full_cube(1), 1), PreconditionError);
  auto dupe = full_cube(4);
  dupe.back() = dupe.front();
  EXPECT_THROW(extract_spider(dupe, 4), InvalidArgument);
  auto out = full_cube(4);
  out.back() = {4, 0, 0};
  EXPECT_THROW(extract_spider(out, 4), IndexError);
}

TEST(Spider, TamperedWitnessFailsVerification) {
  const auto s = full_cube(5);
  auto w = extract_spider(s, 5);
  ASSERT_TRUE(spider_roles_hold(s, w));
  w.c[0] = w.c[1];
  EXPECT_FALSE(spider_roles_hold(s, w));
  Budget b;
  EXPECT_FALSE(verify_spider_witness(s, w, b).ok());
}

TEST(Spider, SamplersProduceValidInputs) {
  std::mt19937_64 rng(4);
  for (int r = 4; r <= 7; ++r) {
    for (auto kind : {SpiderSampler::Uniform, SpiderSampler::Adversarial}) {
      for (int t = 0; t < 200; ++t) {
        const auto s = sample_spider_input(r, kind, rng);
        ASSERT_EQ(s.size(), static_cast<std::size_t>(4 * r * r));
        const auto w = extract_spider(s, r);
        Budget b;
        ASSERT_TRUE(verify_spider_witness(s, w, b).ok());
      }
    }
  }
  EXPECT_THROW(sample_spider_input(3, SpiderSampler::Uniform, rng), PreconditionError);
}

TEST(Spider, SamplingIsReproducible) {
  std::mt19937_64 a(77), b(77);
  EXPECT_EQ(sample_spider_input(5, SpiderSampler::Adversarial, a), sample_spider_input(5, SpiderSampler::Adversarial, b));
}

TEST(MinimalBadWitness, IsInclusionMinimal) {
  std::mt19937_64 rng(31);
  int found = 0;
  for (int t = 0; t < 150; ++t) {
    const Poset p = random_poset(9, 0.3, rng);
    DynBitset all(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) all.set(i);
    Budget b;
    const auto w = minimal_bad_witness(p, all, 2, b);
    if (!dimension_at_most(p, 2)) {
      ASSERT_TRUE(w.has_value());
      ++found;
      ASSERT_FALSE(dimension_at_most(induced_subposet(p, *w).poset, 2).has_value());
      for (std::size_t drop = 0; drop < w->size(); ++drop) {
        auto less = *w;
        less.erase(less.begin() + static_cast<std::ptrdiff_t>(drop));
        ASSERT_TRUE(dimension_at_most(induced_subposet(p, less).poset, 2).has_value());
      }
    } else {
      ASSERT_FALSE(w.has_value());
    }
  }
  EXPECT_GT(found, 0);
}

TEST(MaxSubposet, KnownValues) {
  Budget b;
  EXPECT_EQ(max_subposet_dim(standard_example(3), 2, b).size, 5u);
  EXPECT_EQ(max_subposet_dim(spider(), 2, b).size, 6u);
  EXPECT_EQ(max_subposet_dim(standard_example(4), 3, b).size, 7u);
  EXPECT_EQ(max_subposet_dim(antichain(5), 1, b).size, 1u);
  EXPECT_EQ(max_subposet_dim(grid(2, 3).poset, 2, b).size, 7u);
  EXPECT_THROW(max_subposet_dim(spider(), 0, b), InvalidArgument);
}

TEST(MaxSubposet, AgreesWithExhaustiveScan) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = 6 + static_cast<std::size_t>(t % 5);
    const Poset p = random_poset(n, std::uniform_real_distribution<double>(0.15, 0.5)(rng), rng);
    Budget b;
    const auto res = max_subposet_dim(p, 2, b);
    ASSERT_TRUE(res.optimal);
    ASSERT_EQ(res.size, oracle::exhaustive_max_subposet(p, 2)) << t;
    ASSERT_TRUE(dimension_at_most(induced_subposet(p, res.members).poset, 2).has_value());
  }
}

TEST(MaxSubposet, IncumbentAndBudget) {
  Budget b;
  const std::vector<std::size_t> slice{0, 1, 2, 3};
  const auto res = max_subposet_dim(grid(2, 3).poset, 2, b, slice);
  EXPECT_EQ(res.size, 7u);
  const std::vector<std::size_t> bad{0, 1, 2, 3, 4, 5, 6, 7};
  EXPECT_THROW(max_subposet_dim(grid(2, 3).poset, 2, b, bad), InvalidArgument);
  Budget tiny = Budget::with_nodes(2);
  const auto partial = max_subposet_dim(grid(3, 3).poset, 2, tiny, std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7, 8});
  EXPECT_FALSE(partial.optimal);
  EXPECT_GE(partial.size, 9u);
}

TEST(Hereditary, IndependentSetsOfACycle) {
  // Largest independent set in C_7 via the generic solver: obstruction = an edge.
  const std::size_t n = 7;
  HereditaryProblem prob;
  prob.find_violation = [&](const DynBitset& m) -> std::optional<std::vector<std::size_t>> {
    for (std::size_t i = 0; i < n; ++i)
      if (m.test(i) && m.test((i + 1) % n)) return std::vector<std::size_t>{i, (i + 1) % n};
    return std::nullopt;
  };
  prob.memo_key = [](const DynBitset& m) { return m.key(); };
  DynBitset all(n);
  for (std::size_t i = 0; i < n; ++i) all.set(i);
  Budget b;
  const auto res = maximum_hereditary_subset(prob, all, b);
  EXPECT_TRUE(res.optimal);
  EXPECT_EQ(res.members.count(), 3u);
  EXPECT_FALSE(prob.find_violation(res.members).has_value());
}

TEST(Enumeration, ClassCountsAndOracle) {
  const std::size_t counts[] = {1, 1, 2, 5, 16, 63, 318, 2045};
  for (std::size_t n = 0; n <= 7; ++n) EXPECT_EQ(enumerate_posets(n).size(), counts[n]);
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(enumerate_posets(n, GrowthOrder::AddMinimal).size(), counts[n]);
  for (std::size_t n = 0; n <= 4; ++n) EXPECT_EQ(oracle::isomorphism_classes(oracle::labeled_posets(n)).size(), counts[n]);
  EXPECT_THROW(enumerate_posets(8), SizeError);
}

TEST(Enumeration, RepresentativesPairwiseNonIsomorphic) {
  const auto reps = enumerate_posets(5);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) ASSERT_FALSE(oracle::brute_isomorphic(reps[i], reps[j]));
}

TEST(FValue, SmallValues) {
  Budget b;
  const std::size_t want[] = {0, 1, 2, 3, 4, 5, 5};
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto f = f_value(n, 2, b);
    EXPECT_EQ(f.value, want[n]);
    EXPECT_EQ(f.witness_subset.size(), f.value);
    EXPECT_TRUE(dimension_at_most(induced_subposet(f.witness_poset, f.witness_subset).poset, 2).has_value());
  }
  // An antichain leaves only single-element chains.
  EXPECT_EQ(f_value(4, 1, b).value, 1u);
}

TEST(FValue, WitnessIndependentOfThreads) {
  Budget b;
  const auto one = f_value(6, 2, b, 1);
  const auto four = f_value(6, 2, b, 4);
  EXPECT_EQ(one.value, four.value);
  EXPECT_EQ(one.witness_poset, four.witness_poset);
  EXPECT_EQ(one.witness_subset, four.witness_subset);
  EXPECT_TRUE(isomorphic(one.witness_poset, standard_example(3)).has_value());
}

TEST(FValue, StableUnderEnumerationOrder) {
  // Minimum over the other growth order, in reverse and shuffled.
  std::mt19937_64 rng(2);
  auto reps = enumerate_posets(6, GrowthOrder::AddMinimal);
  std::reverse(reps.begin(), reps.end());
  std::size_t best = 99;
  for (const auto& p : reps) {
    Budget b;
    best = std::min(best, max_subposet_dim(shuffled(p, rng), 2, b).size);
  }
  Budget b;
  EXPECT_EQ(best, f_value(6, 2, b).value);
}

TEST(FValue, MonotoneCheck) {
  const std::vector<std::pair<std::size_t, std::size_t>> good{{1, 1}, {2, 2}, {3, 2}}, bad{{1, 1}, {2, 2}, {3, 1}};
  EXPECT_TRUE(monotone_f_check(good));
  EXPECT_FALSE(monotone_f_check(bad));
  EXPECT_TRUE(monotone_f_check({}));
}

TEST(GridProbe, SmallCases) {
  Budget b;
  const auto diamond = grid_probe(2, 1, b);
  EXPECT_EQ(diamond.best_size, 3u);
  EXPECT_TRUE(diamond.optimal);
  const auto cube = grid_probe(2, 2, b);
  EXPECT_EQ(cube.elements, 8u);
  EXPECT_EQ(cube.best_size, 7u);
  EXPECT_EQ(cube.baseline, 4u);
  EXPECT_TRUE(cube.baseline_verified);
  EXPECT_EQ(cube.best_members.size(), 7u);
}

}  // namespace
}  // namespace posetdim
