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

#include "posetdim/budget.hpp"

#include "posetdim/errors.hpp"

namespace posetdim {

void Budget::charge(std::uint64_t k) {
  const std::uint64_t before = used_.fetch_add(k);
  const std::uint64_t after = before + k;
  if (exhausted_.load()) throw BudgetExceeded("search budget exhausted");
  if (nodes_ && after > *nodes_) {
    exhausted_ = true;
    throw BudgetExceeded("node budget of " + std::to_string(*nodes_) + " exhausted");
  }
  if (seconds_ && (before >> 8) != (after >> 8) && elapsed_seconds() > *seconds_) {
    exhausted_ = true;
    throw BudgetExceeded("time budget exhausted");
  }
}

}  // namespace posetdim
