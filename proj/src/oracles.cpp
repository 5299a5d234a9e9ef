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

#include "posetdim/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "posetdim/dimension.hpp"
#include "posetdim/errors.hpp"

namespace posetdim::oracle {

namespace {

// Sorted (|down|, |up|) pairs; equal for isomorphic posets.
std::vector<std::pair<std::size_t, std::size_t>> degree_profile(const Poset& p) {
  std::vector<std::pair<std::size_t, std::size_t>> prof;
  for (std::size_t i = 0; i < p.size(); ++i) prof.emplace_back(p.down_set(i).count(), p.up_set(i).count());
  std::sort(prof.begin(), prof.end());
  return prof;
}

// Calls f on every k-subset of {0..n-1} as a strictly increasing vector;
// stops when f returns true.
template <typename F>
bool for_each_combination(int n, int k, F&& f) {
  std::vector<int> c(static_cast<std::size_t>(k));
  std::iota(c.begin(), c.end(), 0);
  if (k > n) return false;
  while (true) {
    if (f(c)) return true;
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

std::vector<Poset> labeled_posets(std::size_t n) {
  if (n > 5) throw SizeError("labelled enumeration is limited to 5 elements");
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);
  std::vector<Poset> out;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  std::vector<std::uint32_t> up(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::fill(up.begin(), up.end(), 0);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1U) up[slots[s].first] |= 1U << slots[s].second;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (!(up[i] >> j & 1U)) continue;
        if (up[j] >> i & 1U) ok = false;            // antisymmetry
        else if ((up[j] & ~up[i]) != 0) ok = false;  // transitivity
      }
    }
    if (!ok) continue;
    out.push_back(Poset::from_predicate(n, [&](std::size_t i, std::size_t j) { return (up[i] >> j & 1U) != 0; }));
  }
  return out;
}

bool brute_isomorphic(const Poset& p, const Poset& q) {
  const std::size_t n = p.size();
  if (q.size() != n || p.relation_count() != q.relation_count()) return false;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) ok = p.less(i, j) == q.less(perm[i], perm[j]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<Poset> isomorphism_classes(const std::vector<Poset>& posets) {
  std::vector<Poset> reps;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> profiles;
  for (const auto& p : posets) {
    const auto prof = degree_profile(p);
    bool found = false;
    for (std::size_t r = 0; r < reps.size() && !found; ++r)
      found = profiles[r] == prof && brute_isomorphic(reps[r], p);
    if (!found) {
      reps.push_back(p);
      profiles.push_back(prof);
    }
  }
  return reps;
}

std::size_t exhaustive_max_subposet(const Poset& p, int d) {
  const std::size_t n = p.size();
  if (n > 16) throw SizeError("exhaustive subset scan is limited to 16 elements");
  for (std::size_t k = n; k > 0; --k) {
    const bool hit = for_each_combination(static_cast<int>(n), static_cast<int>(k), [&](const std::vector<int>& c) {
      std::vector<std::size_t> members(c.begin(), c.end());
      const Poset sub = induced_subposet(p, members).poset;
      return k <= kBruteforceElementCap ? dimension_bruteforce(sub, d).has_value()
                                        : dimension_at_most(sub, d).has_value();
    });
    if (hit) return k;
  }
  return 0;
}

bool brute_contains(const PointSet& a, const PointSet& b) {
  if (a.arity() != b.arity()) throw ArityMismatch("arity mismatch");
  const int n = a.side(), k = b.side(), d = a.arity();
  if (k > n) return false;
  std::vector<std::vector<int>> maps(static_cast<std::size_t>(d));
  auto rec = [&](auto&& self, int dim) -> bool {
    if (dim == d) {
      for (const auto& p : b.points()) {
        Point img(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) img[i] = maps[i][static_cast<std::size_t>(p[i])];
        if (!a.has(img)) return false;
      }
      return true;
    }
    return for_each_combination(n, k, [&](const std::vector<int>& c) {
      maps[static_cast<std::size_t>(dim)] = c;
      return self(self, dim + 1);
    });
  };
  return rec(rec, 0);
}

std::size_t exhaustive_max_avoiding(int side, int arity, const PointSet& b) {
  std::vector<Point> cells;
  Point c(static_cast<std::size_t>(arity), 0);
  std::size_t total = 1;
  for (int i = 0; i < arity; ++i) total *= static_cast<std::size_t>(side);
  if (total > 16) throw SizeError("exhaustive avoidance scan is limited to 16 cells");
  for (std::size_t t = 0; t < total; ++t) {
    cells.push_back(c);
    for (int k = arity - 1; k >= 0; --k) {
      if (++c[static_cast<std::size_t>(k)] < side) break;
      c[static_cast<std::size_t>(k)] = 0;
    }
  }
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1U << total); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= best) continue;
    std::vector<Point> pts;
    for (std::size_t t = 0; t < total; ++t)
      if (mask >> t & 1U) pts.push_back(cells[t]);
    if (!brute_contains(PointSet(arity, side, std::move(pts)), b)) best = size;
  }
  return best;
}

}  // namespace posetdim::oracle
