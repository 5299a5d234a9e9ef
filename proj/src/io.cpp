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

#include "posetdim/io.hpp"

#include <sstream>

#include "posetdim/errors.hpp"

namespace posetdim {

namespace {

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

template <typename T>
T field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field \"") + name + "\": " + e.what());
  }
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

Json poset_to_json(const Poset& p, const std::vector<Coord>* coords) {
  Json j;
  j["n"] = p.size();
  Json rel = Json::array();
  for (const auto& [a, b] : covers(p)) rel.push_back({a, b});
  j["relations"] = std::move(rel);
  if (!p.labels().empty()) j["labels"] = p.labels();
  if (coords) j["coords"] = *coords;
  return j;
}

LoadedPoset poset_from_json(const Json& j) {
  const auto n = field<long long>(j, "n");
  if (n < 0) throw ParseError("\"n\" must be non-negative");
  auto raw = field<std::vector<std::vector<long long>>>(j, "relations");
  std::vector<RelationPair> pairs;
  pairs.reserve(raw.size());
  for (const auto& r : raw) {
    if (r.size() != 2 || r[0] < 0 || r[1] < 0) throw ParseError("each relation must be a pair of indices");
    pairs.emplace_back(static_cast<std::size_t>(r[0]), static_cast<std::size_t>(r[1]));
  }
  LoadedPoset out;
  out.poset = poset_from_relations(static_cast<std::size_t>(n), pairs);
  if (j.contains("labels")) out.poset = out.poset.with_labels(field<std::vector<std::string>>(j, "labels"));
  if (j.contains("coords")) {
    auto coords = field<std::vector<Coord>>(j, "coords");
    if (coords.size() != out.poset.size()) throw ParseError("\"coords\" length differs from \"n\"");
    out.coords = std::move(coords);
  }
  return out;
}

LoadedPoset poset_from_json_text(const std::string& text) { return poset_from_json(parse(text)); }

Json pointset_to_json(const PointSet& a) {
  Json j;
  j["d"] = a.arity();
  j["n"] = a.side();
  j["points"] = a.points();
  return j;
}

PointSet pointset_from_json(const Json& j) {
  return PointSet(field<int>(j, "d"), field<int>(j, "n"), field<std::vector<Point>>(j, "points"));
}

PointSet pointset_from_json_text(const std::string& text) { return pointset_from_json(parse(text)); }

std::string poset_to_dot(const Poset& p) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.size(); ++i)
    os << "  " << i << " [label=\"" << dot_escape(p.label(i)) << "\"];\n";
  for (const auto& [a, b] : covers(p)) os << "  " << a << " -> " << b << ";\n";
  os << "}\n";
  return os.str();
}

Json realizer_to_json(const Realizer& r) {
  Json j = Json::array();
  for (const auto& l : r.extensions) j.push_back(l.order);
  return j;
}

Json coord3_to_json(const Coord3& c) { return Json::array({c[0], c[1], c[2]}); }

Json spider_witness_to_json(const SpiderWitness& w) {
  Json j;
  j["a"] = coord3_to_json(w.a);
  j["b"] = Json::array();
  j["c"] = Json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    j["b"].push_back(coord3_to_json(w.b[i]));
    j["c"].push_back(coord3_to_json(w.c[i]));
  }
  Json t;
  t["input_size"] = w.trace.input_size;
  t["filtered_size"] = w.trace.filtered_size;
  t["layer_z"] = w.trace.layer_z;
  t["layer_size"] = w.trace.layer_size;
  t["a_row_y"] = w.trace.a_row_y;
  t["remaining_size"] = w.trace.remaining_size;
  t["row_y"] = w.trace.row_y;
  j["trace"] = std::move(t);
  return j;
}

}  // namespace posetdim
