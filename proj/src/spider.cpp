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
#include <cmath>
#include <numeric>

#include "posetdim/dimension.hpp"
#include "posetdim/errors.hpp"
#include "posetdim/extremal.hpp"

namespace posetdim {

namespace {

// Dense occupancy of [r]^3, indexed (x, y, z).
class Cube {
 public:
  explicit Cube(int r) : r_(r), cells_(static_cast<std::size_t>(r) * r * r, 0) {}

  char& at(int x, int y, int z) { return cells_[index(x, y, z)]; }
  char at(int x, int y, int z) const { return cells_[index(x, y, z)]; }

  // Smallest z' < z with (x, y, z') occupied, or -1.
  int lowest_below(int x, int y, int z) const {
    for (int zz = 0; zz < z; ++zz)
      if (at(x, y, zz)) return zz;
    return -1;
  }

 private:
  std::size_t index(int x, int y, int z) const {
    return (static_cast<std::size_t>(x) * r_ + y) * r_ + z;
  }

  int r_;
  std::vector<char> cells_;
};

std::string coord_text(const Coord3& c) {
  return "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) + ")";
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InternalError("spider extraction step failed: " + what);
}

}  // namespace

std::array<Coord3, 7> SpiderWitness::points() const { return {a, b[0], b[1], b[2], c[0], c[1], c[2]}; }

SpiderWitness extract_spider(std::span<const Coord3> s, int r) {
  if (r < 2) throw PreconditionError("r must be at least 2");
  const std::size_t need = 4 * static_cast<std::size_t>(r) * static_cast<std::size_t>(r);
  if (s.size() < need)
    throw PreconditionError("subset has " + std::to_string(s.size()) + " points, needs at least 4r^2 = " +
                            std::to_string(need));
  const auto rr = static_cast<std::size_t>(r);
  Cube cube(r);
  for (const auto& p : s) {
    for (int k = 0; k < 3; ++k)
      if (p[static_cast<std::size_t>(k)] < 0 || p[static_cast<std::size_t>(k)] >= r)
        throw IndexError("point " + coord_text(p) + " outside [r]^3");
    char& cell = cube.at(p[0], p[1], p[2]);
    if (cell) throw InvalidArgument("duplicate point " + coord_text(p));
    cell = 1;
  }

  SpiderWitness w;
  w.trace.input_size = s.size();

  // 1. Keep points with a lower point in their column.
  std::vector<Coord3> filtered;
  for (const auto& p : s)
    if (cube.lowest_below(p[0], p[1], p[2]) >= 0) filtered.push_back(p);
  w.trace.filtered_size = filtered.size();
  require(filtered.size() >= 3 * rr * rr, "fewer than 3r^2 points survive the column filter");

  // 2. Largest z-layer, smallest z on ties.
  std::vector<std::size_t> layer_count(rr, 0);
  for (const auto& p : filtered) ++layer_count[static_cast<std::size_t>(p[2])];
  const auto z = static_cast<int>(std::max_element(layer_count.begin(), layer_count.end()) -
                                  layer_count.begin());
  std::vector<Coord3> layer;
  for (const auto& p : filtered)
    if (p[2] == z) layer.push_back(p);
  w.trace.layer_z = z;
  w.trace.layer_size = layer.size();
  require(layer.size() >= 3 * rr, "largest layer has fewer than 3r points");

  // 3. a = minimal y, then minimal x; drop its row.
  w.a = *std::min_element(layer.begin(), layer.end(), [](const Coord3& u, const Coord3& v) {
    return std::pair(u[1], u[0]) < std::pair(v[1], v[0]);
  });
  w.trace.a_row_y = w.a[1];
  std::vector<Coord3> rest;
  for (const auto& p : layer)
    if (p[1] != w.a[1]) rest.push_back(p);
  w.trace.remaining_size = rest.size();
  require(rest.size() >= 2 * rr, "fewer than 2r points outside the row of a");

  // 4. Smallest row with three points; its three smallest x.
  std::vector<std::vector<int>> rows(rr);
  for (const auto& p : rest) rows[static_cast<std::size_t>(p[1])].push_back(p[0]);
  int y = -1;
  for (int yy = 0; yy < r && y < 0; ++yy)
    if (rows[static_cast<std::size_t>(yy)].size() >= 3) y = yy;
  require(y >= 0, "no row holds three points");
  auto& xs = rows[static_cast<std::size_t>(y)];
  std::sort(xs.begin(), xs.end());
  w.trace.row_y = y;

  // 5. c_i: lowest point of s below b_i in its column.
  for (std::size_t i = 0; i < 3; ++i) {
    w.b[i] = {xs[i], y, z};
    const int zc = cube.lowest_below(xs[i], y, z);
    require(zc >= 0, "column of " + coord_text(w.b[i]) + " has no lower point");
    w.c[i] = {xs[i], y, zc};
  }

  require(spider_roles_hold(s, w), "witness does not have the spider relations");
  return w;
}

bool spider_roles_hold(std::span<const Coord3> s, const SpiderWitness& w) {
  const auto pts = w.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (std::find(s.begin(), s.end(), pts[i]) == s.end()) return false;
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j]) return false;
  }
  // Expected strict relation among (a, b1, b2, b3, c1, c2, c3).
  auto expected = [](std::size_t u, std::size_t v) {
    if (u == 0) return v >= 1 && v <= 3;
    if (u >= 4) return v == u - 3;
    return false;
  };
  for (std::size_t u = 0; u < 7; ++u)
    for (std::size_t v = 0; v < 7; ++v)
      if (u != v && c_r_less(pts[u], pts[v]) != expected(u, v)) return false;
  return true;
}

SpiderVerification verify_spider_witness(std::span<const Coord3> s, const SpiderWitness& w,
                                         Budget& budget) {
  SpiderVerification v;
  v.roles = spider_roles_hold(s, w);
  const auto pts = w.points();
  const Poset induced =
      Poset::from_predicate(7, [&](std::size_t i, std::size_t j) { return c_r_less(pts[i], pts[j]); });
  v.isomorphic = isomorphic(induced, spider()).has_value();
  v.dimension = dimension_exact(induced, budget).dim;
  return v;
}

std::vector<Coord3> sample_spider_input(int r, SpiderSampler sampler, std::mt19937_64& rng) {
  if (r < 4) throw PreconditionError("4r^2 points fit in [r]^3 only for r >= 4");
  const auto rr = static_cast<std::size_t>(r);
  const std::size_t target = 4 * rr * rr;
  std::vector<Coord3> cells;
  cells.reserve(rr * rr * rr);
  for (int x = 0; x < r; ++x)
    for (int y = 0; y < r; ++y)
      for (int z = 0; z < r; ++z) cells.push_back({x, y, z});

  if (sampler == SpiderSampler::Uniform) {
    std::shuffle(cells.begin(), cells.end(), rng);
    cells.resize(target);
    std::sort(cells.begin(), cells.end());
    return cells;
  }

  // Single-point columns: as many as the remaining columns can compensate.
  const std::size_t columns = rr * rr;
  const std::size_t max_single = (rr * rr * rr - target) / (rr - 1);
  const std::size_t singles = std::uniform_int_distribution<std::size_t>(0, max_single)(rng);
  std::vector<std::size_t> column_order(columns);
  std::iota(column_order.begin(), column_order.end(), 0);
  std::shuffle(column_order.begin(), column_order.end(), rng);

  std::vector<Coord3> out;
  std::uniform_int_distribution<int> any_z(0, r - 1);
  for (std::size_t t = 0; t < singles; ++t) {
    const auto col = column_order[t];
    out.push_back({static_cast<int>(col / rr), static_cast<int>(col % rr), any_z(rng)});
  }

  // Weighted sampling without replacement (exponential keys) over the other
  // columns, concentrated on a few rows and one end of the z range.
  std::vector<int> row_rank(rr);
  std::iota(row_rank.begin(), row_rank.end(), 0);
  std::shuffle(row_rank.begin(), row_rank.end(), rng);
  const double row_skew = std::uniform_real_distribution<double>(0.0, 2.5)(rng);
  const double z_skew = std::uniform_real_distribution<double>(-3.0, 3.0)(rng);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::pair<double, Coord3>> keyed;
  for (std::size_t t = singles; t < columns; ++t) {
    const auto col = column_order[t];
    const int x = static_cast<int>(col / rr), y = static_cast<int>(col % rr);
    for (int zz = 0; zz < r; ++zz) {
      const double weight = std::exp(-row_skew * row_rank[static_cast<std::size_t>(y)] +
                                     z_skew * static_cast<double>(zz) / r);
      const double u = std::max(unit(rng), 1e-300);
      keyed.emplace_back(-std::log(u) / weight, Coord3{x, y, zz});
    }
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& l, const auto& h) { return l.first < h.first; });
  for (std::size_t t = 0; out.size() < target; ++t) out.push_back(keyed[t].second);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace posetdim
