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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace posetdim::acceptance {

enum class Status { Pass, Fail, Skipped };

const char* status_name(Status s);

struct CriterionResult {
  std::string id;  // "C0" preflight, then "1".."10"
  std::string title;
  Status status = Status::Fail;
  std::string detail;
  double seconds = 0.0;
  double limit_seconds = 0.0;
};

struct Options {
  // Caps each check's own time limit. <= 0 skips every check whose limit
  // exceeds kShortCheckSeconds.
  double budget_seconds = 900.0;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  // Negative control: build C_r from a relation that is not transitive.
  bool corrupt_c_r = false;
  std::function<void(const CriterionResult&)> on_result;
};

inline constexpr double kShortCheckSeconds = 10.0;

struct Report {
  std::vector<CriterionResult> results;
  bool any_failed() const;
  bool any_skipped() const;
};

/// Runs the preflight check and all ten acceptance criteria in order.
Report run_all(const Options& options);

}  // namespace posetdim::acceptance
