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

#include "posetdim/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "posetdim/dimension.hpp"
#include "posetdim/errors.hpp"
#include "posetdim/hereditary.hpp"

namespace posetdim {

namespace {

// Caches "dimension <= d" per member set within one search.
class DimensionOracle {
 public:
  DimensionOracle(const Poset& p, int d, Budget& budget) : p_(p), d_(d), budget_(budget) {}

  bool within(const DynBitset& members) {
    auto key = members.key();
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    const bool ok = dimension_at_most(induced_subposet(p_, members).poset, d_, budget_).has_value();
    cache_.emplace(std::move(key), ok);
    return ok;
  }

  std::optional<std::vector<std::size_t>> minimal_bad(const DynBitset& members) {
    if (within(members)) return std::nullopt;
    DynBitset bad = members;
    for (auto e : members.indices()) {
      bad.reset(e);
      if (within(bad)) bad.set(e);
    }
    return bad.indices();
  }

 private:
  const Poset& p_;
  int d_;
  Budget& budget_;
  std::unordered_map<std::string, bool> cache_;
};

}  // namespace

std::optional<std::vector<std::size_t>> minimal_bad_witness(const Poset& p, const DynBitset& members,
                                                            int d, Budget& budget) {
  if (d < 1) throw InvalidArgument("dimension bound must be at least 1");
  DimensionOracle oracle(p, d, budget);
  return oracle.minimal_bad(members);
}

SubposetResult max_subposet_dim(const Poset& p, int d, Budget& budget,
                                std::optional<std::vector<std::size_t>> incumbent) {
  if (d < 1) throw InvalidArgument("dimension bound must be at least 1");
  DimensionOracle oracle(p, d, budget);

  std::optional<DynBitset> seed;
  if (incumbent) {
    seed = DynBitset(p.size());
    for (auto e : *incumbent) {
      if (e >= p.size()) throw IndexError("incumbent member out of range");
      seed->set(e);
    }
    if (!dimension_at_most(induced_subposet(p, *seed).poset, d).has_value())
      throw InvalidArgument("incumbent exceeds the dimension bound");
  }

  HereditaryProblem problem;
  problem.find_violation = [&](const DynBitset& members) { return oracle.minimal_bad(members); };
  problem.memo_key = [&](const DynBitset& members) {
    return canonical_form(induced_subposet(p, members).poset);
  };
  auto res = maximum_hereditary_subset(problem, DynBitset::full(p.size()), budget, seed);

  SubposetResult out;
  out.members = res.members.indices();
  out.size = out.members.size();
  out.optimal = res.optimal;
  out.explored = res.explored;
  if (!dimension_at_most(induced_subposet(p, out.members).poset, d).has_value())
    throw InternalError("maximum subposet exceeds the dimension bound");
  return out;
}

std::vector<Poset> enumerate_posets(std::size_t n, GrowthOrder order) {
  if (n > kEnumerationCap)
    throw SizeError("enumeration is limited to " + std::to_string(kEnumerationCap) + " elements");
  std::vector<Poset> reps{Poset()};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<Poset> next;
    std::unordered_set<std::string> seen;
    const std::size_t e = m - 1;
    for (const auto& p : reps) {
      for (std::uint32_t mask = 0; mask < (1U << e); ++mask) {
        // mask must be down-closed (new maximal element) or up-closed (new
        // minimal element).
        bool closed = true;
        for (std::size_t i = 0; i < e && closed; ++i) {
          if (!(mask >> i & 1U)) continue;
          const auto& beyond = order == GrowthOrder::AddMaximal ? p.down_set(i) : p.up_set(i);
          beyond.for_each([&](std::size_t j) { closed = closed && (mask >> j & 1U); });
        }
        if (!closed) continue;
        std::vector<DynBitset> up(m, DynBitset(m));
        for (std::size_t i = 0; i < e; ++i)
          p.up_set(i).for_each([&](std::size_t j) { up[i].set(j); });
        for (std::size_t i = 0; i < e; ++i) {
          if (!(mask >> i & 1U)) continue;
          if (order == GrowthOrder::AddMaximal)
            up[i].set(e);
          else
            up[e].set(i);
        }
        Poset q = Poset::from_up_sets(std::move(up));
        if (seen.insert(canonical_form(q)).second) next.push_back(std::move(q));
      }
    }
    reps = std::move(next);
  }
  return reps;
}

FValue f_value(std::size_t n, int d, Budget& budget, unsigned jobs) {
  if (d < 1) throw InvalidArgument("dimension bound must be at least 1");
  const auto classes = enumerate_posets(n);
  std::vector<SubposetResult> results(classes.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= classes.size()) return;
      try {
        results[i] = max_subposet_dim(classes[i], d, budget);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = classes.size();
      }
    }
  };
  const unsigned threads = std::max(1U, jobs);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  FValue out;
  out.n = n;
  out.d = d;
  out.classes = classes.size();
  std::size_t argmin = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!results[i].optimal)
      throw BudgetExceeded("class " + std::to_string(i) + " of " + std::to_string(n) +
                           "-element posets was not certified within budget");
    if (results[i].size < results[argmin].size) argmin = i;
  }
  out.value = results[argmin].size;
  out.witness_poset = classes[argmin];
  out.witness_subset = results[argmin].members;
  return out;
}

bool monotone_f_check(std::span<const std::pair<std::size_t, std::size_t>> results) {
  std::vector<std::pair<std::size_t, std::size_t>> sorted(results.begin(), results.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i].second < sorted[i - 1].second) return false;
  return true;
}

GridProbeReport grid_probe(int side, int d, Budget& budget) {
  if (d < 1) throw InvalidArgument("dimension bound must be at least 1");
  const CoordinatePoset g = grid(side, d + 1);
  GridProbeReport rep;
  rep.side = side;
  rep.d = d;
  rep.elements = g.poset.size();

  std::vector<std::size_t> slice;
  for (std::size_t i = 0; i < g.coords.size(); ++i)
    if (g.coords[i].back() == 0) slice.push_back(i);
  rep.baseline = slice.size();
  rep.baseline_verified = dimension_at_most(induced_subposet(g.poset, slice).poset, d).has_value();
  if (!rep.baseline_verified) throw InternalError("fixed-coordinate slice exceeds dimension d");

  const auto res = max_subposet_dim(g.poset, d, budget, slice);
  rep.best_size = res.size;
  rep.optimal = res.optimal;
  rep.explored = res.explored;
  for (auto i : res.members) rep.best_members.push_back(g.coords[i]);
  if (rep.best_size < rep.baseline) throw InternalError("grid probe fell below the slice size");
  return rep;
}

}  // namespace posetdim
