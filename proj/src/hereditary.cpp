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

#include "posetdim/hereditary.hpp"

#include <unordered_set>

#include "posetdim/errors.hpp"

namespace posetdim {

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const HereditaryProblem& problem, Budget& budget, DynBitset best)
      : problem_(problem), budget_(budget), best_(std::move(best)), best_size_(best_.count()) {}

  void run(const DynBitset& start) {
    // The empty set is valid for every hereditary property we search, so
    // an empty incumbent is only a placeholder.
    have_best_ = best_size_ > 0;
    visit(start);
  }

  const DynBitset& best() const { return best_; }
  std::uint64_t explored() const { return explored_; }

 private:
  bool improves(std::size_t size) const { return !have_best_ || size > best_size_; }

  void visit(const DynBitset& members) {
    budget_.charge();
    ++explored_;
    const std::size_t size = members.count();
    if (!improves(size)) return;
    if (!seen_.insert(problem_.memo_key(members)).second) return;

    auto violation = problem_.find_violation(members);
    if (!violation) {
      best_ = members;
      best_size_ = size;
      have_best_ = true;
      return;
    }

    // Disjoint obstructions each cost one deletion.
    std::size_t deletions = 1;
    DynBitset rest = members;
    for (auto e : *violation) rest.reset(e);
    while (improves(size - deletions)) {
      auto more = problem_.find_violation(rest);
      if (!more) break;
      ++deletions;
      for (auto e : *more) rest.reset(e);
    }
    if (!improves(size - deletions)) return;

    for (auto e : *violation) {
      DynBitset next = members;
      next.reset(e);
      visit(next);
    }
  }

  const HereditaryProblem& problem_;
  Budget& budget_;
  DynBitset best_;
  std::size_t best_size_;
  bool have_best_ = false;
  std::uint64_t explored_ = 0;
  std::unordered_set<std::string> seen_;
};

}  // namespace

HereditaryResult maximum_hereditary_subset(const HereditaryProblem& problem, const DynBitset& start,
                                           Budget& budget, std::optional<DynBitset> incumbent) {
  DynBitset initial = incumbent ? *incumbent : DynBitset(start.size());
  if (initial.size() != start.size()) throw InvalidArgument("incumbent has wrong universe size");
  BranchAndBound bb(problem, budget, std::move(initial));
  HereditaryResult res;
  try {
    bb.run(start);
    res.optimal = true;
  } catch (const BudgetExceeded&) {
    res.optimal = false;
  }
  res.members = bb.best();
  res.explored = bb.explored();
  return res;
}

}  // namespace posetdim
