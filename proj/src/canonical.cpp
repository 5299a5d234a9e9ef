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

// Canonical labelling and isomorphism testing for posets.
//
// Both use colour refinement: a vertex's colour is repeatedly replaced by its
// old colour together with the number of elements of each colour below and
// above it, until the partition is stable. Canonical labelling then
// individualises vertices of the first non-singleton cell and keeps the
// lexicographically smallest relation matrix over all discrete leaves.
// Interchangeable elements (identical up- and down-sets) are only
// individualised once per cell, which keeps antichain-like posets linear.

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "posetdim/poset.hpp"

namespace posetdim {

namespace {

using Colors = std::vector<std::uint32_t>;

struct Relation {
  const std::vector<DynBitset>* up;
  const std::vector<DynBitset>* down;
};

std::size_t color_count(const Colors& c) {
  if (c.empty()) return 0;
  return static_cast<std::size_t>(*std::max_element(c.begin(), c.end())) + 1;
}

// Renumbers colours 0..k-1 preserving their relative order.
Colors compact(const Colors& c) {
  Colors sorted = c;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Colors out(c.size());
  for (std::size_t v = 0; v < c.size(); ++v)
    out[v] = static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), c[v]) -
                                        sorted.begin());
  return out;
}

Colors refine(const Relation& rel, Colors colors) {
  const std::size_t n = colors.size();
  colors = compact(colors);
  std::size_t k = color_count(colors);
  while (true) {
    std::vector<std::vector<std::uint32_t>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.assign(2 * k + 1, 0);
      s[0] = colors[v];
      (*rel.down)[v].for_each([&](std::size_t u) { ++s[1 + colors[u]]; });
      (*rel.up)[v].for_each([&](std::size_t u) { ++s[1 + k + colors[u]]; });
    }
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return sig[a] < sig[b]; });
    Colors next(n);
    std::uint32_t rank = 0;
    for (std::size_t t = 0; t < n; ++t) {
      if (t > 0 && sig[idx[t]] != sig[idx[t - 1]]) ++rank;
      next[idx[t]] = rank;
    }
    const std::size_t nk = n == 0 ? 0 : rank + 1;
    colors = std::move(next);
    if (nk == k) return colors;
    k = nk;
  }
}

std::string encode(const Poset& p, const std::vector<std::size_t>& order) {
  const std::size_t n = p.size();
  std::string out;
  for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((static_cast<std::uint64_t>(n) >> (8 * b)) & 0xFF));
  unsigned char acc = 0;
  int nbits = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      acc = static_cast<unsigned char>((acc << 1) | (p.less(order[a], order[b]) ? 1 : 0));
      if (++nbits == 8) {
        out.push_back(static_cast<char>(acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(acc << (8 - nbits)));
  return out;
}

bool twins(const Poset& p, std::size_t a, std::size_t b) {
  return p.up_set(a) == p.up_set(b) && p.down_set(a) == p.down_set(b);
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Poset& p) : p_(p) {
    up_.reserve(p.size());
    down_.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      up_.push_back(p.up_set(i));
      down_.push_back(p.down_set(i));
    }
  }

  CanonicalLabeling run() {
    visit(Colors(p_.size(), 0));
    return {best_form_, best_order_};
  }

 private:
  void visit(Colors colors) {
    colors = refine({&up_, &down_}, std::move(colors));
    const std::size_t n = colors.size();
    const std::size_t k = color_count(colors);
    if (k == n) {
      std::vector<std::size_t> order(n);
      for (std::size_t v = 0; v < n; ++v) order[colors[v]] = v;
      std::string form = encode(p_, order);
      if (!have_best_ || form < best_form_) {
        have_best_ = true;
        best_form_ = std::move(form);
        best_order_ = std::move(order);
      }
      return;
    }
    std::vector<std::size_t> size(k, 0);
    for (auto c : colors) ++size[c];
    std::uint32_t target = 0;
    while (size[target] == 1) ++target;

    std::vector<std::size_t> tried;
    for (std::size_t v = 0; v < n; ++v) {
      if (colors[v] != target) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](std::size_t t) { return twins(p_, t, v); }))
        continue;
      tried.push_back(v);
      Colors next(n);
      for (std::size_t x = 0; x < n; ++x)
        next[x] = 2 * colors[x] + ((colors[x] == target && x != v) ? 1 : 0);
      visit(std::move(next));
    }
  }

  const Poset& p_;
  std::vector<DynBitset> up_, down_;
  bool have_best_ = false;
  std::string best_form_;
  std::vector<std::size_t> best_order_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Poset& p) {
  if (p.empty()) return {encode(p, {}), {}};
  return CanonicalSearch(p).run();
}

std::string canonical_form(const Poset& p) { return canonical_labeling(p).form; }

std::optional<std::vector<std::size_t>> isomorphic(const Poset& p, const Poset& q) {
  const std::size_t n = p.size();
  if (q.size() != n || p.relation_count() != q.relation_count()) return std::nullopt;
  if (n == 0) return std::vector<std::size_t>{};

  // Refine the disjoint union so colours are comparable across both sides.
  std::vector<DynBitset> up(2 * n, DynBitset(2 * n)), down(2 * n, DynBitset(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    p.up_set(i).for_each([&](std::size_t j) { up[i].set(j); down[j].set(i); });
    q.up_set(i).for_each([&](std::size_t j) { up[n + i].set(n + j); down[n + j].set(n + i); });
  }
  const Colors colors = refine({&up, &down}, Colors(2 * n, 0));
  const std::size_t k = color_count(colors);
  std::vector<std::size_t> hist_p(k, 0), hist_q(k, 0);
  for (std::size_t i = 0; i < n; ++i) {
    ++hist_p[colors[i]];
    ++hist_q[colors[n + i]];
  }
  if (hist_p != hist_q) return std::nullopt;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return hist_p[colors[a]] < hist_p[colors[b]];
  });

  std::vector<std::size_t> map(n, n);
  std::vector<char> used(n, 0);
  auto consistent = [&](std::size_t depth, std::size_t i, std::size_t j) {
    for (std::size_t t = 0; t < depth; ++t) {
      const std::size_t a = order[t];
      const std::size_t b = map[a];
      if (p.less(i, a) != q.less(j, b) || p.less(a, i) != q.less(b, j)) return false;
    }
    return true;
  };
  auto extend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const std::size_t i = order[depth];
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || colors[n + j] != colors[i] || !consistent(depth, i, j)) continue;
      map[i] = j;
      used[j] = 1;
      if (self(self, depth + 1)) return true;
      used[j] = 0;
    }
    map[i] = n;
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return map;
}

}  // namespace posetdim
