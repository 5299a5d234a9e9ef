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

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>

namespace posetdim {

// Search budget shared by every search routine. A node limit gives
// reproducible cut-offs; the wall-clock limit is checked every 256 nodes.
// Safe to charge from several threads.
class Budget {
 public:
  Budget() : start_(Clock::now()) {}
  Budget(std::optional<double> seconds, std::optional<std::uint64_t> nodes)
      : seconds_(seconds), nodes_(nodes), start_(Clock::now()) {}

  static Budget unlimited() { return Budget(); }
  static Budget with_nodes(std::uint64_t nodes) { return Budget(std::nullopt, nodes); }
  static Budget with_seconds(double s) { return Budget(s, std::nullopt); }

  Budget(const Budget& o)
      : seconds_(o.seconds_), nodes_(o.nodes_), start_(o.start_),
        used_(o.used_.load()), exhausted_(o.exhausted_.load()) {}

  // Counts k search nodes; throws BudgetExceeded once a limit is hit.
  void charge(std::uint64_t k = 1);

  bool exhausted() const { return exhausted_.load(); }
  std::uint64_t nodes_used() const { return used_.load(); }
  double elapsed_seconds() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }
  bool limited() const { return seconds_.has_value() || nodes_.has_value(); }

 private:
  using Clock = std::chrono::steady_clock;

  std::optional<double> seconds_;
  std::optional<std::uint64_t> nodes_;
  Clock::time_point start_;
  std::atomic<std::uint64_t> used_{0};
  std::atomic<bool> exhausted_{false};
};

}  // namespace posetdim
