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

#include "posetdim/dimension.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "posetdim/errors.hpp"

namespace posetdim {

namespace {

// Transitive closure of the order plus the reversals assigned to one class.
// reach[x] = elements strictly above x.
class ClassClosure {
 public:
  explicit ClassClosure(const Poset& p) : reach_(p.size()) {
    for (std::size_t i = 0; i < p.size(); ++i) reach_[i] = p.up_set(i);
  }

  // Putting b below a closes a cycle iff a is already below b.
  bool admits(const CriticalPair& cp) const { return !reach_[cp.a].test(cp.b); }
  bool reverses(const CriticalPair& cp) const { return reach_[cp.b].test(cp.a); }

  void reverse(const CriticalPair& cp) {
    DynBitset lifted = reach_[cp.a];
    lifted.set(cp.a);
    for (std::size_t x = 0; x < reach_.size(); ++x)
      if (x == cp.b || reach_[x].test(cp.b)) reach_[x] |= lifted;
  }

  // Elements sorted by the number of elements below them is a topological
  // order of a transitively closed acyclic relation.
  LinearExtension extension() const {
    const std::size_t n = reach_.size();
    std::vector<std::size_t> below(n, 0);
    for (std::size_t x = 0; x < n; ++x) reach_[x].for_each([&](std::size_t y) { ++below[y]; });
    LinearExtension l;
    l.order.resize(n);
    std::iota(l.order.begin(), l.order.end(), 0);
    std::stable_sort(l.order.begin(), l.order.end(),
                     [&](std::size_t u, std::size_t v) { return below[u] < below[v]; });
    return l;
  }

  std::string key() const {
    std::string k;
    for (const auto& row : reach_) k += row.key();
    return k;
  }

 private:
  std::vector<DynBitset> reach_;
};

class ReversalColoring {
 public:
  ReversalColoring(const Poset& p, std::vector<CriticalPair> pairs, int d, Budget& budget,
                   DimensionSearchStats* stats)
      : p_(p), pairs_(std::move(pairs)), d_(static_cast<std::size_t>(d)), budget_(budget),
        stats_(stats) {
    rank_order();
  }

  std::optional<std::vector<ClassClosure>> solve() {
    if (!search()) return std::nullopt;
    return std::vector<ClassClosure>(classes_.begin(), classes_.end());
  }

 private:
  static constexpr std::size_t kMemoCap = 1 << 18;

  // Descending conflict degree, index ascending.
  void rank_order() {
    const std::size_t m = pairs_.size();
    std::vector<std::size_t> degree(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      ClassClosure c(p_);
      c.reverse(pairs_[i]);
      for (std::size_t j = i + 1; j < m; ++j) {
        if (!c.admits(pairs_[j])) {
          ++degree[i];
          ++degree[j];
        }
      }
    }
    order_.resize(m);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
  }

  std::string state_key() const {
    std::vector<std::string> keys;
    keys.reserve(classes_.size());
    for (const auto& c : classes_) keys.push_back(c.key());
    std::sort(keys.begin(), keys.end());
    std::string k;
    for (auto& s : keys) {
      k += s;
      k.push_back('|');
    }
    return k;
  }

  bool search() {
    budget_.charge();
    if (stats_) ++stats_->nodes;

    // Most constrained unreversed pair.
    std::size_t pick = pairs_.size();
    std::size_t pick_options = d_ + 1;
    for (auto idx : order_) {
      const auto& cp = pairs_[idx];
      bool done = false;
      std::size_t options = classes_.size() < d_ ? 1 : 0;
      for (const auto& c : classes_) {
        if (c.reverses(cp)) {
          done = true;
          break;
        }
        if (c.admits(cp)) ++options;
      }
      if (done) continue;
      if (options == 0) return false;
      if (options < pick_options) {
        pick = idx;
        pick_options = options;
      }
    }
    if (pick == pairs_.size()) return true;

    std::string key = state_key();
    if (failed_.count(key)) {
      if (stats_) ++stats_->memo_hits;
      return false;
    }

    const auto& cp = pairs_[pick];
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      if (!classes_[c].admits(cp)) continue;
      ClassClosure saved = classes_[c];
      classes_[c].reverse(cp);
      if (search()) return true;
      classes_[c] = std::move(saved);
    }
    // Classes are interchangeable, so only one empty class is ever opened.
    if (classes_.size() < d_) {
      classes_.emplace_back(p_);
      classes_.back().reverse(cp);
      if (search()) return true;
      classes_.pop_back();
    }
    if (failed_.size() < kMemoCap) failed_.insert(std::move(key));
    return false;
  }

  const Poset& p_;
  std::vector<CriticalPair> pairs_;
  std::size_t d_;
  Budget& budget_;
  DimensionSearchStats* stats_;
  std::vector<std::size_t> order_;
  std::vector<ClassClosure> classes_;
  std::unordered_set<std::string> failed_;
};

}  // namespace

std::vector<CriticalPair> critical_pairs(const Poset& p) {
  std::vector<CriticalPair> out;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (!p.incomparable(a, b)) continue;
      if (p.down_set(a).is_subset_of(p.down_set(b)) && p.up_set(b).is_subset_of(p.up_set(a)))
        out.push_back({a, b});
    }
  }
  return out;
}

std::optional<LinearExtension> reversible(const Poset& p, std::span<const CriticalPair> pairs) {
  ClassClosure c(p);
  for (const auto& cp : pairs) {
    if (cp.a >= p.size() || cp.b >= p.size()) throw IndexError("pair index out of range");
    if (!p.incomparable(cp.a, cp.b)) throw InvalidArgument("reversible() needs incomparable pairs");
    if (!c.admits(cp)) return std::nullopt;
    c.reverse(cp);
  }
  return c.extension();
}

bool verify_realizer(const Poset& p, const Realizer& r) {
  const std::size_t n = p.size();
  if (r.extensions.empty()) return n == 0;
  std::vector<std::vector<std::size_t>> pos;
  for (const auto& l : r.extensions) {
    if (!is_linear_extension(p, l)) return false;
    std::vector<std::size_t> at(n);
    for (std::size_t k = 0; k < n; ++k) at[l.order[k]] = k;
    pos.push_back(std::move(at));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      bool below_everywhere = true;
      for (const auto& at : pos) below_everywhere = below_everywhere && at[i] < at[j];
      if (below_everywhere != p.less(i, j)) return false;
    }
  }
  return true;
}

std::optional<Realizer> dimension_at_most(const Poset& p, int d, Budget& budget,
                                          DimensionSearchStats* stats) {
  if (d < 1) throw InvalidArgument("dimension bound must be at least 1");
  if (p.empty()) return Realizer{};
  if (p.is_chain()) {
    Realizer r{{ClassClosure(p).extension()}};
    if (!verify_realizer(p, r)) throw InternalError("chain extension failed verification");
    return r;
  }
  if (d == 1) return std::nullopt;

  auto classes = ReversalColoring(p, critical_pairs(p), d, budget, stats).solve();
  if (!classes) return std::nullopt;
  Realizer r;
  for (const auto& c : *classes) r.extensions.push_back(c.extension());
  if (!verify_realizer(p, r)) throw InternalError("critical-pair realizer failed verification");
  return r;
}

std::optional<Realizer> dimension_at_most(const Poset& p, int d) {
  Budget unlimited;
  return dimension_at_most(p, d, unlimited);
}

DimensionResult dimension_exact(const Poset& p, Budget& budget) {
  DimensionResult res;
  res.certified_minimal = true;
  if (p.empty()) return res;
  DimensionSearchStats stats;
  for (int d = 1;; ++d) {
    auto r = dimension_at_most(p, d, budget, &stats);
    if (!r) continue;
    if (static_cast<int>(r->size()) != d)
      throw InternalError("realizer smaller than a refuted dimension bound");
    res.dim = d;
    res.witness = std::move(*r);
    res.explored = stats.nodes;
    return res;
  }
}

DimensionResult dimension_exact(const Poset& p) {
  Budget unlimited;
  return dimension_exact(p, unlimited);
}

std::vector<LinearExtension> all_linear_extensions(const Poset& p) {
  const std::size_t n = p.size();
  if (n > 10) throw SizeError("too many elements to list linear extensions");
  std::vector<LinearExtension> out;
  LinearExtension cur;
  std::vector<char> placed(n, 0);
  auto rec = [&](auto&& self) -> void {
    if (cur.order.size() == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v]) continue;
      bool ready = true;
      p.down_set(v).for_each([&](std::size_t u) { ready = ready && placed[u]; });
      if (!ready) continue;
      placed[v] = 1;
      cur.order.push_back(v);
      self(self);
      cur.order.pop_back();
      placed[v] = 0;
    }
  };
  rec(rec);
  return out;
}

std::optional<Realizer> dimension_bruteforce(const Poset& p, int d) {
  const std::size_t n = p.size();
  if (n > kBruteforceElementCap)
    throw SizeError("brute-force dimension is limited to " + std::to_string(kBruteforceElementCap) +
                    " elements");
  if (d < 1) throw InvalidArgument("dimension bound must be at least 1");
  if (n == 0) return Realizer{};

  const auto exts = all_linear_extensions(p);
  // Bit i*n+j set iff i precedes j.
  auto mask_of = [n](const LinearExtension& l) {
    std::uint64_t m = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) m |= std::uint64_t{1} << (l.order[a] * n + l.order[b]);
    return m;
  };
  std::vector<std::uint64_t> masks;
  masks.reserve(exts.size());
  for (const auto& l : exts) masks.push_back(mask_of(l));
  std::uint64_t target = 0;
  for (const auto& [i, j] : p.relations()) target |= std::uint64_t{1} << (i * n + j);

  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t k, std::size_t from, std::uint64_t acc) -> bool {
    if (pick.size() == k) return acc == target;
    for (std::size_t t = from; t < masks.size(); ++t) {
      pick.push_back(t);
      if (self(self, k, t + 1, acc & masks[t])) return true;
      pick.pop_back();
    }
    return false;
  };
  for (std::size_t k = 1; k <= static_cast<std::size_t>(d) && k <= exts.size(); ++k) {
    pick.clear();
    if (rec(rec, k, 0, ~std::uint64_t{0})) {
      Realizer r;
      for (auto t : pick) r.extensions.push_back(exts[t]);
      return r;
    }
  }
  return std::nullopt;
}

}  // namespace posetdim
