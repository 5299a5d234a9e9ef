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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "posetdim/constructions.hpp"
#include "posetdim/dimension.hpp"
#include "posetdim/extremal.hpp"
#include "posetdim/patterns.hpp"
#include "posetdim/poset.hpp"

namespace posetdim {

using Json = nlohmann::ordered_json;

// Poset JSON: {"n": int, "relations": [[below, above], ...]} with optional
// "labels" and "coords". Relations are written as covers and closed on load.
struct LoadedPoset {
  Poset poset;
  std::optional<std::vector<Coord>> coords;
};

Json poset_to_json(const Poset& p, const std::vector<Coord>* coords = nullptr);
LoadedPoset poset_from_json(const Json& j);
LoadedPoset poset_from_json_text(const std::string& text);

// PointSet JSON: {"d": int, "n": int, "points": [[...], ...]}.
Json pointset_to_json(const PointSet& a);
PointSet pointset_from_json(const Json& j);
PointSet pointset_from_json_text(const std::string& text);

/// Hasse diagram, edges bottom to top.
std::string poset_to_dot(const Poset& p);

Json realizer_to_json(const Realizer& r);
Json coord3_to_json(const Coord3& c);
Json spider_witness_to_json(const SpiderWitness& w);

}  // namespace posetdim
