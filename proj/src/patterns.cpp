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

#include "posetdim/patterns.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "posetdim/errors.hpp"
#include "posetdim/hereditary.hpp"

namespace posetdim {

namespace {

using Membership = std::function<bool(const Point&)>;

bool verify_with(const PointSet& b, const InjectionWitness& w, int host_side, const Membership& in_host) {
  const auto d = static_cast<std::size_t>(b.arity());
  const auto k = static_cast<std::size_t>(b.side());
  if (w.maps.size() != d) return false;
  for (const auto& m : w.maps) {
    if (m.size() != k) return false;
    for (std::size_t x = 0; x < k; ++x) {
      if (m[x] < 0 || m[x] >= host_side) return false;
      if (x > 0 && m[x] <= m[x - 1]) return false;
    }
  }
  return std::all_of(b.points().begin(), b.points().end(),
                     [&](const Point& p) { return in_host(w.image(p)); });
}

class ContainmentSearch {
 public:
  ContainmentSearch(const PointSet& a, const DynBitset& members, const PointSet& b)
      : a_(a), members_(members), b_(b), d_(static_cast<std::size_t>(b.arity())),
        k_(b.side()), n_(a.side()),
        h_(d_, std::vector<int>(static_cast<std::size_t>(k_), -1)) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (members.test(i)) hosts_.push_back(i);
  }

  std::optional<InjectionWitness> run() {
    if (!place(0)) return std::nullopt;
    InjectionWitness w{h_};
    for (auto& m : w.maps) {
      for (std::size_t x = 0; x < m.size(); ++x)
        if (m[x] < 0) m[x] = x == 0 ? 0 : m[x - 1] + 1;
    }
    return w;
  }

 private:
  bool in_host(const Point& q) const {
    const std::size_t at = a_.find(q);
    return at < a_.size() && members_.test(at);
  }

  // Value v for h_i(x) keeps h_i extendable to a strictly increasing map.
  bool fits(std::size_t i, int x, int v) const {
    const auto& h = h_[i];
    if (h[static_cast<std::size_t>(x)] >= 0) return h[static_cast<std::size_t>(x)] == v;
    if (v < x || v > n_ - k_ + x) return false;
    for (int j = 0; j < k_; ++j) {
      const int hj = h[static_cast<std::size_t>(j)];
      if (hj < 0) continue;
      if (j < x && v - hj < x - j) return false;
      if (j > x && hj - v < j - x) return false;
    }
    return true;
  }

  bool image_if_determined(const Point& p, Point& out) const {
    out.resize(d_);
    for (std::size_t i = 0; i < d_; ++i) {
      const int v = h_[i][static_cast<std::size_t>(p[i])];
      if (v < 0) return false;
      out[i] = v;
    }
    return true;
  }

  bool place(std::size_t t) {
    if (t == b_.size()) return true;
    const Point& p = b_[t];
    Point forced;
    if (image_if_determined(p, forced)) return in_host(forced) && place(t + 1);

    std::vector<std::size_t> fresh;
    for (auto idx : hosts_) {
      const Point& q = a_[idx];
      bool ok = true;
      for (std::size_t i = 0; i < d_ && ok; ++i) ok = fits(i, p[i], q[i]);
      if (!ok) continue;
      fresh.clear();
      for (std::size_t i = 0; i < d_; ++i) {
        auto& slot = h_[i][static_cast<std::size_t>(p[i])];
        if (slot < 0) {
          slot = q[i];
          fresh.push_back(i);
        }
      }
      if (forward_check(t) && place(t + 1)) return true;
      for (auto i : fresh) h_[i][static_cast<std::size_t>(p[i])] = -1;
    }
    return false;
  }

  bool forward_check(std::size_t t) const {
    Point img;
    for (std::size_t u = t + 1; u < b_.size(); ++u)
      if (image_if_determined(b_[u], img) && !in_host(img)) return false;
    return true;
  }

  const PointSet& a_;
  const DynBitset& members_;
  const PointSet& b_;
  std::size_t d_;
  int k_;
  int n_;
  std::vector<std::vector<int>> h_;
  std::vector<std::size_t> hosts_;
};

std::string point_text(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

}  // namespace

PointSet::PointSet(int arity, int side, std::vector<Point> points)
    : arity_(arity), side_(side), points_(std::move(points)) {
  if (arity < 1) throw InvalidArgument("point set arity must be at least 1");
  if (side < 0) throw InvalidArgument("point set side must be non-negative");
  for (const auto& p : points_) {
    if (p.size() != static_cast<std::size_t>(arity))
      throw IndexError("point " + point_text(p) + " does not have arity " + std::to_string(arity));
    for (int c : p)
      if (c < 0 || c >= side) throw IndexError("point " + point_text(p) + " lies outside [" + std::to_string(side) + "]^" + std::to_string(arity));
  }
  std::sort(points_.begin(), points_.end());
  auto dup = std::adjacent_find(points_.begin(), points_.end());
  if (dup != points_.end()) throw InvalidArgument("duplicate point " + point_text(*dup));
}

std::size_t PointSet::find(const Point& p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) return points_.size();
  return static_cast<std::size_t>(it - points_.begin());
}

bool PointSet::has(const Point& p) const { return find(p) < points_.size(); }

Point InjectionWitness::image(const Point& p) const {
  Point q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[i] = maps[i][static_cast<std::size_t>(p[i])];
  return q;
}

PointSet identity2() { return PointSet(2, 2, {{0, 0}, {1, 1}}); }

std::optional<InjectionWitness> contains_within(const PointSet& a, const DynBitset& members,
                                                const PointSet& b) {
  if (a.arity() != b.arity())
    throw ArityMismatch("host arity " + std::to_string(a.arity()) + " differs from pattern arity " +
                        std::to_string(b.arity()));
  if (members.size() != a.size()) throw InvalidArgument("member set has wrong size");
  if (b.side() > a.side()) return std::nullopt;
  auto w = ContainmentSearch(a, members, b).run();
  if (w && !verify_with(b, *w, a.side(), [&](const Point& q) {
        const auto at = a.find(q);
        return at < a.size() && members.test(at);
      }))
    throw InternalError("containment witness failed verification");
  return w;
}

std::optional<InjectionWitness> contains(const PointSet& a, const PointSet& b) {
  return contains_within(a, DynBitset::full(a.size()), b);
}

bool avoids(const PointSet& a, const PointSet& b) { return !contains(a, b).has_value(); }

bool verify_injection(const PointSet& a, const PointSet& b, const InjectionWitness& w) {
  if (a.arity() != b.arity()) return false;
  return verify_with(b, w, a.side(), [&](const Point& q) { return a.has(q); });
}

bool is_permutation(const PointSet& a) {
  if (a.size() != static_cast<std::size_t>(a.side())) return false;
  for (int i = 0; i < a.arity(); ++i) {
    std::vector<char> seen(static_cast<std::size_t>(a.side()), 0);
    for (const auto& p : a.points()) {
      auto& s = seen[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])];
      if (s) return false;
      s = 1;
    }
  }
  return true;
}

PointSet permutation_from_realizer(const Poset& p, const Realizer& r) {
  if (r.extensions.empty() || !verify_realizer(p, r))
    throw NotARealizer("the given linear orders do not realize the poset");
  const std::size_t n = p.size();
  std::vector<Point> points(n, Point(r.size()));
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t pos = 0; pos < n; ++pos)
      points[r.extensions[i].order[pos]][i] = static_cast<int>(pos);
  PointSet out(static_cast<int>(r.size()), static_cast<int>(n), std::move(points));
  if (!is_permutation(out)) throw InternalError("realizer positions are not a permutation");
  return out;
}

GridSubposet pointset_to_grid_subposet(const PointSet& a) {
  GridSubposet g;
  g.coords = a.points();
  std::vector<std::string> labels;
  for (const auto& c : g.coords) labels.push_back(point_text(c));
  g.poset = Poset::from_predicate(a.size(), [&](std::size_t i, std::size_t j) {
              if (i == j) return false;
              for (std::size_t k = 0; k < g.coords[i].size(); ++k)
                if (g.coords[i][k] > g.coords[j][k]) return false;
              return true;
            }).with_labels(std::move(labels));
  return g;
}

AvoidingResult max_avoiding_size(int side, int arity, const PointSet& b, Budget& budget) {
  if (b.arity() != arity) throw ArityMismatch("pattern arity differs from the cube arity");
  if (b.empty()) throw InvalidArgument("every set contains the empty pattern");
  if (side < 0 || arity < 1) throw InvalidArgument("bad cube shape");
  std::size_t cells = 1;
  for (int i = 0; i < arity; ++i) {
    cells *= static_cast<std::size_t>(side);
    if (cells > kAvoidanceCellCap) throw SizeError("cube too large for exhaustive avoidance search");
  }
  std::vector<Point> all;
  Point c(static_cast<std::size_t>(arity), 0);
  for (std::size_t t = 0; t < cells; ++t) {
    all.push_back(c);
    for (int k = arity - 1; k >= 0; --k) {
      if (++c[static_cast<std::size_t>(k)] < side) break;
      c[static_cast<std::size_t>(k)] = 0;
    }
  }
  const PointSet cube(arity, side, std::move(all));

  HereditaryProblem problem;
  problem.find_violation = [&](const DynBitset& members) -> std::optional<std::vector<std::size_t>> {
    auto w = contains_within(cube, members, b);
    if (!w) return std::nullopt;
    std::set<std::size_t> image;
    for (const auto& p : b.points()) image.insert(cube.find(w->image(p)));
    return std::vector<std::size_t>(image.begin(), image.end());
  };
  problem.memo_key = [](const DynBitset& members) { return members.key(); };

  auto res = maximum_hereditary_subset(problem, DynBitset::full(cube.size()), budget);
  std::vector<Point> kept;
  res.members.for_each([&](std::size_t i) { kept.push_back(cube[i]); });
  AvoidingResult out;
  out.size = kept.size();
  out.witness = PointSet(arity, side, std::move(kept));
  out.optimal = res.optimal;
  out.explored = res.explored;
  return out;
}

}  // namespace posetdim
