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

#include "posetdim/constructions.hpp"

#include <algorithm>

#include "posetdim/errors.hpp"

namespace posetdim {

namespace {

std::size_t checked_power(int side, int arity, std::size_t cap) {
  std::size_t total = 1;
  for (int k = 0; k < arity; ++k) {
    total *= static_cast<std::size_t>(side);
    if (total > cap)
      throw SizeError(std::to_string(side) + "^" + std::to_string(arity) +
                      " elements exceed the element cap of " + std::to_string(cap));
  }
  return total;
}

// All vectors of [side]^arity in lexicographic order.
std::vector<Coord> lex_cube(int side, int arity, std::size_t count) {
  std::vector<Coord> out;
  out.reserve(count);
  Coord c(static_cast<std::size_t>(arity), 0);
  for (std::size_t t = 0; t < count; ++t) {
    out.push_back(c);
    for (int k = arity - 1; k >= 0; --k) {
      if (++c[static_cast<std::size_t>(k)] < side) break;
      c[static_cast<std::size_t>(k)] = 0;
    }
  }
  return out;
}

std::string coord_label(const Coord& c) {
  std::string s = "(";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(c[k]);
  }
  return s + ")";
}

std::vector<std::string> coord_labels(const std::vector<Coord>& coords) {
  std::vector<std::string> labels;
  labels.reserve(coords.size());
  for (const auto& c : coords) labels.push_back(coord_label(c));
  return labels;
}

}  // namespace

std::size_t CoordinatePoset::index_of(const Coord& c) const {
  auto it = std::lower_bound(coords.begin(), coords.end(), c);
  if (it == coords.end() || *it != c) throw IndexError("coordinate " + coord_label(c) + " not present");
  return static_cast<std::size_t>(it - coords.begin());
}

CoordinatePoset grid(int side, int arity, std::size_t element_cap) {
  if (side < 1 || arity < 1) throw InvalidArgument("grid needs side >= 1 and arity >= 1");
  const std::size_t n = checked_power(side, arity, element_cap);
  CoordinatePoset g;
  g.arity = arity;
  g.side = side;
  g.coords = lex_cube(side, arity, n);
  g.poset = Poset::from_predicate(n, [&](std::size_t i, std::size_t j) {
              if (i == j) return false;
              const auto& u = g.coords[i];
              const auto& v = g.coords[j];
              for (std::size_t k = 0; k < u.size(); ++k)
                if (u[k] > v[k]) return false;
              return true;
            }).with_labels(coord_labels(g.coords));
  return g;
}

Poset standard_example(int m) {
  if (m < 2) throw InvalidArgument("standard example needs m >= 2");
  const auto mm = static_cast<std::size_t>(m);
  std::vector<std::string> labels;
  for (int i = 1; i <= m; ++i) labels.push_back("a" + std::to_string(i));
  for (int i = 1; i <= m; ++i) labels.push_back("b" + std::to_string(i));
  return Poset::from_predicate(2 * mm, [&](std::size_t u, std::size_t v) {
           return u < mm && v >= mm && u != v - mm;
         }).with_labels(std::move(labels));
}

bool c_r_leq(const Coord3& u, const Coord3& v) {
  return u[2] <= v[2] && (u[1] < v[1] || (u[1] == v[1] && u[0] == v[0]));
}

bool c_r_less(const Coord3& u, const Coord3& v) { return u != v && c_r_leq(u, v); }

CoordinatePoset c_r(int r, std::size_t element_cap) { return c_r_with_order(r, c_r_leq, element_cap); }

CoordinatePoset c_r_with_order(int r, const Coord3Order& leq, std::size_t element_cap) {
  if (r < 1) throw InvalidArgument("C_r needs r >= 1");
  const std::size_t n = checked_power(r, 3, element_cap);
  CoordinatePoset c;
  c.arity = 3;
  c.side = r;
  c.coords = lex_cube(r, 3, n);
  auto as3 = [](const Coord& v) { return Coord3{v[0], v[1], v[2]}; };
  // Strict part only; Poset::from_up_sets rejects a non-transitive relation.
  c.poset = Poset::from_predicate(n, [&](std::size_t i, std::size_t j) {
              return i != j && leq(as3(c.coords[i]), as3(c.coords[j]));
            }).with_labels(coord_labels(c.coords));
  return c;
}

Poset spider() {
  const std::vector<RelationPair> gen = {{0, 1}, {0, 2}, {0, 3}, {4, 1}, {5, 2}, {6, 3}};
  return poset_from_relations(7, gen).with_labels({"A", "B1", "B2", "B3", "C1", "C2", "C3"});
}

Poset chain(std::size_t n) {
  return Poset::from_predicate(n, [](std::size_t i, std::size_t j) { return i < j; });
}

Poset antichain(std::size_t n) {
  return Poset::from_up_sets(std::vector<DynBitset>(n, DynBitset(n)));
}

}  // namespace posetdim
