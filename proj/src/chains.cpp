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

#include <algorithm>
#include <numeric>

#include "posetdim/poset.hpp"

namespace posetdim {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Maximum matching in the split graph {i_left -> j_right : i < j}. Every
// matched edge links consecutive elements of one chain in a minimum chain
// cover, so n - |matching| is the width.
class ComparabilityMatching {
 public:
  explicit ComparabilityMatching(const Poset& p)
      : p_(p), match_left_(p.size(), kNone), match_right_(p.size(), kNone) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      std::vector<char> seen(p.size(), 0);
      augment(i, seen);
    }
  }

  std::size_t match_left(std::size_t i) const { return match_left_[i]; }
  std::size_t match_right(std::size_t j) const { return match_right_[j]; }

 private:
  bool augment(std::size_t i, std::vector<char>& seen) {
    bool found = false;
    p_.up_set(i).for_each([&](std::size_t j) {
      if (found || seen[j]) return;
      seen[j] = 1;
      if (match_right_[j] == kNone || augment(match_right_[j], seen)) {
        match_left_[i] = j;
        match_right_[j] = i;
        found = true;
      }
    });
    return found;
  }

  const Poset& p_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
};

}  // namespace

std::vector<std::size_t> longest_chain(const Poset& p) {
  const std::size_t n = p.size();
  if (n == 0) return {};
  // Sorting by down-set size is a topological order of a transitive relation.
  std::vector<std::size_t> topo(n);
  std::iota(topo.begin(), topo.end(), 0);
  std::stable_sort(topo.begin(), topo.end(), [&](std::size_t a, std::size_t b) {
    return p.down_set(a).count() < p.down_set(b).count();
  });
  std::vector<std::size_t> len(n, 1), prev(n, kNone);
  for (auto v : topo) {
    p.down_set(v).for_each([&](std::size_t u) {
      if (len[u] + 1 > len[v]) {
        len[v] = len[u] + 1;
        prev[v] = u;
      }
    });
  }
  std::size_t top = 0;
  for (std::size_t v = 1; v < n; ++v)
    if (len[v] > len[top]) top = v;
  std::vector<std::size_t> chain;
  for (std::size_t v = top; v != kNone; v = prev[v]) chain.push_back(v);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

std::vector<std::size_t> maximum_antichain(const Poset& p) {
  const std::size_t n = p.size();
  ComparabilityMatching m(p);
  // Koenig: alternating reachability from unmatched left vertices.
  std::vector<char> left_seen(n, 0), right_seen(n, 0);
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < n; ++i) {
    if (m.match_left(i) == kNone) {
      left_seen[i] = 1;
      stack.push_back(i);
    }
  }
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    p.up_set(i).for_each([&](std::size_t j) {
      if (right_seen[j] || m.match_left(i) == j) return;
      right_seen[j] = 1;
      const std::size_t k = m.match_right(j);
      if (k != kNone && !left_seen[k]) {
        left_seen[k] = 1;
        stack.push_back(k);
      }
    });
  }
  std::vector<std::size_t> antichain;
  for (std::size_t x = 0; x < n; ++x)
    if (left_seen[x] && !right_seen[x]) antichain.push_back(x);
  return antichain;
}

SqrtWitness sqrt_witness(const Poset& p) {
  auto chain = longest_chain(p);
  auto antichain = maximum_antichain(p);
  if (antichain.size() > chain.size()) return {WitnessKind::Antichain, std::move(antichain)};
  return {WitnessKind::Chain, std::move(chain)};
}

}  // namespace posetdim
