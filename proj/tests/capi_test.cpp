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


// Exercises the shared library through its C header only.

#include <gtest/gtest.h>
#include <json.hpp>

#include <string>

#include "posetdim/posetdim.h"

namespace {

using Json = nlohmann::json;

Json take(char* s) {
  EXPECT_NE(s, nullptr);
  Json j = Json::parse(s);
  pd_string_free(s);
  return j;
}

TEST(CApi, VersionAndStatusNames) {
  EXPECT_STREQ(pd_version(), "0.1.0");
  EXPECT_STREQ(pd_status_name(PD_OK), "ok");
  EXPECT_STREQ(pd_status_name(PD_BUDGET_EXCEEDED), "budget exceeded");
}

TEST(CApi, RelationsAndErrors) {
  const size_t pairs[] = {0, 1, 1, 2};
  pd_poset* p = nullptr;
  ASSERT_EQ(pd_poset_from_relations(3, pairs, 2, &p), PD_OK);
  int less = 0;
  ASSERT_EQ(pd_poset_less(p, 0, 2, &less), PD_OK);
  EXPECT_EQ(less, 1);
  EXPECT_EQ(pd_poset_less(p, 0, 7, &less), PD_INDEX_ERROR);
  EXPECT_NE(std::string(pd_last_error()), "");
  pd_poset_free(p);

  const size_t cyc[] = {0, 1, 1, 0};
  EXPECT_EQ(pd_poset_from_relations(2, cyc, 2, &p), PD_CYCLE_ERROR);
  EXPECT_EQ(pd_poset_from_json("{\"n\": 1", &p), PD_PARSE_ERROR);
  EXPECT_EQ(pd_poset_construct("hexagon", 3, 0, &p), PD_INVALID_ARGUMENT);
  EXPECT_EQ(pd_poset_construct("grid", 40, 4, &p), PD_SIZE_ERROR);
  EXPECT_EQ(pd_poset_from_json(nullptr, &p), PD_INVALID_ARGUMENT);
}

TEST(CApi, DimensionOfStandardExample) {
  pd_poset* s = nullptr;
  ASSERT_EQ(pd_poset_construct("standard-example", 3, 0, &s), PD_OK);
  EXPECT_EQ(pd_poset_size(s), 6u);
  char* report = nullptr;
  ASSERT_EQ(pd_dimension(s, nullptr, &report), PD_OK);
  const Json j = take(report);
  EXPECT_EQ(j["dimension"], 3);
  EXPECT_EQ(j["realizer"].size(), 3u);
  EXPECT_TRUE(j["certified"].get<bool>());
  ASSERT_EQ(pd_dimension_at_most(s, 2, nullptr, &report), PD_OK);
  EXPECT_FALSE(take(report)["realizable"].get<bool>());
  pd_poset_free(s);
}

TEST(CApi, JsonRoundTripAndIsomorphism) {
  pd_poset* s = nullptr;
  ASSERT_EQ(pd_poset_construct("spider", 0, 0, &s), PD_OK);
  char* text = nullptr;
  ASSERT_EQ(pd_poset_to_json(s, &text), PD_OK);
  pd_poset* back = nullptr;
  ASSERT_EQ(pd_poset_from_json(text, &back), PD_OK);
  pd_string_free(text);
  int iso = 0;
  ASSERT_EQ(pd_poset_isomorphic(s, back, &iso), PD_OK);
  EXPECT_EQ(iso, 1);
  ASSERT_EQ(pd_poset_to_dot(s, &text), PD_OK);
  EXPECT_NE(std::string(text).find("0 -> 1;"), std::string::npos);
  pd_string_free(text);
  pd_poset_free(s);
  pd_poset_free(back);
}

TEST(CApi, LexProduct) {
  pd_poset *s = nullptr, *p = nullptr;
  ASSERT_EQ(pd_poset_construct("standard-example", 2, 0, &s), PD_OK);
  ASSERT_EQ(pd_poset_lex_product(s, s, &p), PD_OK);
  char* report = nullptr;
  ASSERT_EQ(pd_dimension(p, nullptr, &report), PD_OK);
  EXPECT_EQ(take(report)["dimension"], 2);
  pd_poset_free(s);
  pd_poset_free(p);
}

TEST(CApi, BudgetExhaustion) {
  pd_poset* g = nullptr;
  ASSERT_EQ(pd_poset_construct("grid", 3, 3, &g), PD_OK);
  pd_budget b{-1.0, 1, 1};
  char* report = nullptr;
  EXPECT_EQ(pd_dimension(g, &b, &report), PD_BUDGET_EXCEEDED);
  EXPECT_EQ(report, nullptr);
  b.nodes = 3;
  ASSERT_EQ(pd_max_subposet(g, 2, &b, &report), PD_BUDGET_EXCEEDED);
  const Json j = take(report);
  EXPECT_FALSE(j["optimal"].get<bool>());
  EXPECT_TRUE(j["verified"].get<bool>());
  pd_poset_free(g);
}

TEST(CApi, ExtremalReports) {
  char* report = nullptr;
  ASSERT_EQ(pd_f_value(5, 2, nullptr, &report), PD_OK);
  Json j = take(report);
  EXPECT_EQ(j["rows"].size(), 5u);
  EXPECT_EQ(j["rows"][4]["value"], 5);
  EXPECT_TRUE(j["monotone"].get<bool>());

  ASSERT_EQ(pd_grid_probe(2, 2, nullptr, &report), PD_OK);
  j = take(report);
  EXPECT_EQ(j["best_size"], 7);
  EXPECT_TRUE(j["lower_bound_holds"].get<bool>());

  ASSERT_EQ(pd_extract_spider_sampled(5, 20, 7, "adversarial", nullptr, &report), PD_OK);
  j = take(report);
  EXPECT_EQ(j["verified_count"], 20);
  EXPECT_EQ(pd_extract_spider_sampled(5, 1, 7, "gaussian", nullptr, &report), PD_INVALID_ARGUMENT);

  std::vector<int> cube;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (int z = 0; z < 4; ++z) cube.insert(cube.end(), {x, y, z});
  ASSERT_EQ(pd_extract_spider(cube.data(), 64, 4, nullptr, &report), PD_OK);
  j = take(report);
  EXPECT_EQ(j["witness"]["a"], Json::array({0, 0, 1}));
  EXPECT_EQ(pd_extract_spider(cube.data(), 63, 4, nullptr, &report), PD_PRECONDITION_ERROR);
}

TEST(CApi, Patterns) {
  pd_pointset *host = nullptr, *pat = nullptr, *perm = nullptr;
  ASSERT_EQ(pd_pointset_from_json(R"({"d": 2, "n": 3, "points": [[0, 0], [2, 2]]})", &host), PD_OK);
  ASSERT_EQ(pd_pointset_builtin("identity2", 0, &pat), PD_OK);
  char* report = nullptr;
  ASSERT_EQ(pd_contains(host, pat, &report), PD_OK);
  const Json j = take(report);
  EXPECT_TRUE(j["contains"].get<bool>());
  EXPECT_EQ(j["witness"], Json::parse("[[0, 2], [0, 2]]"));

  ASSERT_EQ(pd_pointset_builtin("standard-permutation", 2, &perm), PD_OK);
  EXPECT_EQ(pd_contains(host, perm, &report), PD_ARITY_MISMATCH);
  ASSERT_EQ(pd_pointset_to_json(perm, &report), PD_OK);
  EXPECT_EQ(take(report)["points"].size(), 6u);

  ASSERT_EQ(pd_max_avoid(3, 2, pat, nullptr, &report), PD_OK);
  EXPECT_EQ(take(report)["size"], 5);
  EXPECT_EQ(pd_pointset_from_json(R"({"d": 2, "n": 2, "points": [[0, 2]]})", &host), PD_INDEX_ERROR);
  pd_pointset_free(host);
  pd_pointset_free(pat);
  pd_pointset_free(perm);
}

TEST(CApi, VerifyAllShortAndCorrupted) {
  pd_verify_options opt{0.0, 1, 0, 0};
  int rows = 0;
  auto count = [](const char*, const char*, const char*, const char*, double, void* user) { ++*static_cast<int*>(user); };
  char* report = nullptr;
  EXPECT_EQ(pd_verify_all(&opt, count, &rows, &report), PD_BUDGET_EXCEEDED);
  EXPECT_EQ(rows, 11);
  Json j = take(report);
  EXPECT_EQ(j["failed"], 0);
  EXPECT_GT(j["skipped"].get<int>(), 0);

  opt.corrupt_c_r = 1;
  EXPECT_EQ(pd_verify_all(&opt, nullptr, nullptr, &report), PD_VERIFICATION_FAILED);
  j = take(report);
  EXPECT_EQ(j["checks"][0]["status"], "FAIL");
}

}  // namespace
