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


// Runs the preflight and all ten acceptance criteria, one line per check.
// Usage: acceptance [budget_seconds] [jobs]

#include <cstdio>
#include <cstdlib>

#include "posetdim/acceptance.hpp"

int main(int argc, char** argv) {
  using namespace posetdim::acceptance;
  Options opt;
  if (argc > 1) opt.budget_seconds = std::atof(argv[1]);
  if (argc > 2) opt.jobs = static_cast<unsigned>(std::atoi(argv[2]));
  opt.on_result = [](const CriterionResult& r) {
    std::printf("%-7s criterion %-3s %-58s %8.2fs (limit %gs)  %s\n", status_name(r.status), r.id.c_str(),
                r.title.c_str(), r.seconds, r.limit_seconds, r.detail.c_str());
    std::fflush(stdout);
  };
  const Report rep = run_all(opt);
  std::size_t passed = 0;
  for (const auto& r : rep.results) passed += r.status == Status::Pass;
  std::printf("%zu/%zu checks passed\n", passed, rep.results.size());
  return rep.any_failed() || rep.any_skipped() ? 1 : 0;
}
