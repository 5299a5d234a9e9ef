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

#include "posetdim/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

#include "posetdim/constructions.hpp"
#include "posetdim/dimension.hpp"
#include "posetdim/errors.hpp"
#include "posetdim/extremal.hpp"
#include "posetdim/oracles.hpp"
#include "posetdim/patterns.hpp"

namespace posetdim::acceptance {

namespace {

class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw CheckFailed(what);
}

// ---------------------------------------------------------------------------

std::string preflight_c_r(const Options& opt, Budget&) {
  // Adjacent rows only: (x,0,z) < (x',1,z) < (x'',2,z) without the jump.
  const Coord3Order corrupted = [](const Coord3& u, const Coord3& v) {
    return u[2] <= v[2] && (u[1] + 1 == v[1] || (u[1] == v[1] && u[0] == v[0]));
  };
  const Coord3Order& leq = opt.corrupt_c_r ? corrupted : Coord3Order(c_r_leq);
  std::size_t checked = 0;
  for (int r = 1; r <= 6; ++r) {
    try {
      const auto c = c_r_with_order(r, leq);
      checked += c.poset.size();
    } catch (const RelationError& e) {
      throw CheckFailed(cat("C_", r, " relation rejected: ", e.what()));
    }
  }
  return cat("C_1..C_6 certified as strict partial orders (", checked, " elements)");
}

std::string criterion_spider(const Options&, Budget& budget) {
  const Poset s = spider();
  const auto res = dimension_exact(s, budget);
  expect(res.dim == 3 && res.certified_minimal, cat("dim(spider) = ", res.dim));
  expect(!dimension_bruteforce(s, 2).has_value(), "brute force found a 2-realizer of the spider");
  expect(dimension_bruteforce(s, 3).has_value(), "brute force found no 3-realizer of the spider");
  std::ostringstream dims;
  for (std::size_t drop = 0; drop < 7; ++drop) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < 7; ++i)
      if (i != drop) keep.push_back(i);
    const auto sub = dimension_exact(induced_subposet(s, keep).poset, budget);
    expect(sub.dim <= 2, cat("deleting ", s.label(drop), " leaves dimension ", sub.dim));
    dims << sub.dim;
  }
  return cat("dim = 3; single-deletion dims ", dims.str());
}

std::string criterion_standard_examples(const Options&, Budget& budget) {
  std::ostringstream os;
  for (int m = 2; m <= 4; ++m) {
    const auto res = dimension_exact(standard_example(m), budget);
    expect(res.dim == m, cat("dim(S_", m, ") = ", res.dim));
    os << "S_" << m << "=" << res.dim << " ";
  }
  return os.str();
}

std::string criterion_grids(const Options&, Budget& budget) {
  std::ostringstream os;
  for (auto [n, d] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
    const auto res = dimension_exact(grid(n, d).poset, budget);
    expect(res.dim == d, cat("dim(grid(", n, ",", d, ")) = ", res.dim));
    os << "grid(" << n << "," << d << ")=" << res.dim << " ";
  }
  const Poset cube = grid(3, 3).poset;
  auto three = dimension_at_most(cube, 3, budget);
  expect(three.has_value() && three->size() == 3, "grid(3,3) has no 3-realizer");
  Budget refutation = Budget::with_nodes(10'000'000);
  DimensionSearchStats stats;
  try {
    expect(!dimension_at_most(cube, 2, refutation, &stats).has_value(), "grid(3,3) has a 2-realizer");
  } catch (const BudgetExceeded&) {
    throw CheckFailed("d = 2 refutation for grid(3,3) not certified within 10^7 nodes");
  }
  os << "grid(3,3): 3-realizer verified, d=2 refuted in " << stats.nodes << " nodes";
  return os.str();
}

std::string criterion_spider_extraction(const Options& opt, Budget& budget) {
  constexpr int kSamples = 10'000;
  std::mt19937_64 rng(opt.seed ^ 0x5eed0004ULL);
  std::size_t verified = 0;
  for (int r = 4; r <= 6; ++r) {
    for (auto sampler : {SpiderSampler::Uniform, SpiderSampler::Adversarial}) {
      for (int t = 0; t < kSamples; ++t) {
        const auto s = sample_spider_input(r, sampler, rng);
        SpiderWitness w;
        try {
          w = extract_spider(s, r);
        } catch (const InternalError& e) {
          throw CheckFailed(cat("r=", r, " sample ", t, ": ", e.what()));
        }
        const auto v = verify_spider_witness(s, w, budget);
        expect(v.ok(), cat("r=", r, " sample ", t, ": witness failed verification (dimension ", v.dimension, ")"));
        ++verified;
      }
    }
  }
  return cat(verified, " witnesses verified, 0 internal errors (r = 4,5,6; uniform + adversarial)");
}

std::string criterion_f_values(const Options& opt, Budget& budget) {
  const std::size_t expected_classes[] = {1, 1, 2, 5, 16, 63};
  const std::size_t expected_labeled[] = {1, 1, 3, 19, 219, 4231};
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto labeled = oracle::labeled_posets(n);
    const auto oracle_classes = oracle::isomorphism_classes(labeled).size();
    const auto generated = enumerate_posets(n).size();
    expect(labeled.size() == expected_labeled[n], cat("labelled posets on ", n, ": ", labeled.size()));
    expect(oracle_classes == expected_classes[n], cat("oracle classes on ", n, ": ", oracle_classes));
    expect(generated == oracle_classes, cat("enumeration on ", n, " gave ", generated, " classes, oracle ", oracle_classes));
  }
  const auto by_max = enumerate_posets(6, GrowthOrder::AddMaximal).size();
  const auto by_min = enumerate_posets(6, GrowthOrder::AddMinimal).size();
  expect(by_max == 318 && by_min == 318, cat("6-element classes: ", by_max, " / ", by_min));

  std::vector<std::pair<std::size_t, std::size_t>> values;
  std::ostringstream os;
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto f = f_value(n, 2, budget, opt.jobs);
    const std::size_t want = n <= 5 ? n : 5;
    expect(f.value == want, cat("f_2(", n, ") = ", f.value, ", expected ", want));
    values.emplace_back(n, f.value);
    os << "f_2(" << n << ")=" << f.value << " ";
  }
  expect(monotone_f_check(values), "f_2 is not non-decreasing");
  os << "monotone; classes 1,2,5,16,63 match oracle; 318 at n=6 both growth orders";
  return os.str();
}

std::string criterion_permutation_pipeline(const Options&, Budget& budget) {
  std::ostringstream os;
  for (int d = 1; d <= 2; ++d) {
    const Poset s = standard_example(d + 1);
    const auto res = dimension_exact(s, budget);
    expect(res.witness.size() == static_cast<std::size_t>(d + 1), cat("S_", d + 1, " realizer size ", res.witness.size()));
    const PointSet perm = permutation_from_realizer(s, res.witness);
    expect(perm.arity() == d + 1 && perm.side() == 2 * (d + 1), "permutation has wrong shape");
    expect(is_permutation(perm), cat("d=", d, ": not a permutation"));
    const auto g = pointset_to_grid_subposet(perm);
    expect(isomorphic(g.poset, s).has_value(), cat("d=", d, ": product order not isomorphic to S_", d + 1));
    expect(oracle::brute_isomorphic(g.poset, s), cat("d=", d, ": brute-force isomorphism disagrees"));
    os << "d=" << d << ": " << perm.size() << " points in [" << perm.side() << "]^" << perm.arity() << " ~ S_" << d + 1 << "; ";
  }
  return os.str();
}

PointSet standard_permutation(int d, Budget& budget) {
  const Poset s = standard_example(d + 1);
  return permutation_from_realizer(s, dimension_exact(s, budget).witness);
}

std::string criterion_avoidance(const Options& opt, Budget& budget) {
  const PointSet pattern = standard_permutation(2, budget);
  std::mt19937_64 rng(opt.seed ^ 0x5eed0007ULL);
  std::size_t low = 0, high = 0, hits = 0;

  for (int t = 0; t < 500; ++t) {
    const int n = std::uniform_int_distribution<int>(2, 4)(rng);
    const double density = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    std::bernoulli_distribution keep(density);
    std::vector<Point> pts;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (keep(rng)) pts.push_back({x, y, z});
    const PointSet a(3, n, std::move(pts));
    const bool two_dim = dimension_at_most(pointset_to_grid_subposet(a).poset, 2, budget).has_value();
    const bool contained = contains(a, pattern).has_value();
    expect(!(two_dim && contained), cat("sample ", t, ": 2-dimensional but contains the pattern"));
    (two_dim ? low : high)++;
  }

  // Hosts too small for a 6x6x6 pattern make the implication vacuous, so also
  // plant the pattern into larger cubes.
  for (int t = 0; t < 100; ++t) {
    const int n = std::uniform_int_distribution<int>(6, 8)(rng);
    std::vector<std::vector<int>> maps(3);
    for (auto& m : maps) {
      std::vector<int> all(static_cast<std::size_t>(n));
      std::iota(all.begin(), all.end(), 0);
      std::shuffle(all.begin(), all.end(), rng);
      m.assign(all.begin(), all.begin() + 6);
      std::sort(m.begin(), m.end());
    }
    std::bernoulli_distribution noise(std::uniform_real_distribution<double>(0.0, 0.1)(rng));
    std::vector<Point> pts;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (noise(rng)) pts.push_back({x, y, z});
    for (const auto& p : pattern.points()) {
      Point img{maps[0][static_cast<std::size_t>(p[0])], maps[1][static_cast<std::size_t>(p[1])],
                maps[2][static_cast<std::size_t>(p[2])]};
      if (std::find(pts.begin(), pts.end(), img) == pts.end()) pts.push_back(img);
    }
    const PointSet a(3, n, std::move(pts));
    const bool contained = contains(a, pattern).has_value();
    expect(contained, cat("planted sample ", t, ": containment search missed the planted pattern"));
    const bool two_dim = dimension_at_most(pointset_to_grid_subposet(a).poset, 2, budget).has_value();
    expect(!two_dim, cat("planted sample ", t, ": contains the pattern but has dimension <= 2"));
    ++hits;
  }
  return cat("500 random sets in [n]^3, n<=4: ", low, " of dimension <= 2 (all avoid), ", high,
             " of dimension 3; ", hits, " planted hosts in [6..8]^3 contain the pattern and have dimension >= 3");
}

std::string criterion_grid_probe(const Options&, Budget& budget) {
  const auto two = grid_probe(2, 2, budget);
  expect(two.optimal, "grid_probe(2,2) not exhausted");
  const auto oracle_best = oracle::exhaustive_max_subposet(grid(2, 3).poset, 2);
  expect(two.best_size == oracle_best, cat("grid_probe(2,2) = ", two.best_size, ", exhaustive = ", oracle_best));
  expect(two.best_size >= 4 && two.best_size < 8, cat("grid_probe(2,2) = ", two.best_size, " outside [4, 8)"));
  expect(two.baseline_verified && two.baseline == 4, "2x2 slice not verified");

  const auto three = grid_probe(3, 2, budget);
  expect(three.baseline_verified && three.baseline == 9, "3x3 slice not verified");
  expect(three.best_size >= 9, cat("grid_probe(3,2) = ", three.best_size));
  return cat("n=2: exact ", two.best_size, " (exhaustive agrees); n=3: best ", three.best_size,
             three.optimal ? " (optimal)" : " (not certified optimal)", " >= 9");
}

std::string criterion_avoiding_extremal(const Options&, Budget& budget) {
  std::ostringstream os;
  for (int n = 2; n <= 3; ++n) {
    const auto res = max_avoiding_size(n, 2, identity2(), budget);
    const auto brute = oracle::exhaustive_max_avoiding(n, 2, identity2());
    expect(res.optimal, cat("max_avoiding_size(", n, ") not exhausted"));
    expect(res.size == static_cast<std::size_t>(2 * n - 1), cat("max_avoiding_size(", n, ") = ", res.size));
    expect(brute == res.size, cat("exhaustive avoidance for n=", n, " gave ", brute));
    expect(avoids(res.witness, identity2()), "witness contains the pattern");
    os << "n=" << n << ": " << res.size << " ";
  }
  return os.str();
}

std::string criterion_oracle_equivalence(const Options&, Budget& budget) {
  std::size_t classes = 0, comparisons = 0, labeled = 0;
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto all = oracle::labeled_posets(n);
    for (const auto& p : oracle::isomorphism_classes(all)) {
      ++classes;
      for (int d = 1; d <= 3; ++d) {
        const bool fast = dimension_at_most(p, d, budget).has_value();
        const bool brute = dimension_bruteforce(p, d).has_value();
        expect(fast == brute, cat("n=", n, " class ", classes, " d=", d, ": search ", fast, ", brute force ", brute));
        ++comparisons;
      }
    }
    for (const auto& p : all) {
      const auto best = max_subposet_dim(p, 2, budget);
      expect(best.optimal, "max_subposet_dim not exhausted");
      const auto brute = oracle::exhaustive_max_subposet(p, 2);
      expect(best.size == brute, cat("n=", n, " labelled poset ", labeled, ": max subposet ", best.size, ", exhaustive ", brute));
      ++labeled;
    }
  }
  return cat(classes, " classes, ", comparisons, " dimension comparisons agree; max_subposet_dim matches the exhaustive scan on all ",
             labeled, " labelled posets");
}

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;
  std::string (*run)(const Options&, Budget&);
};

const Criterion kCriteria[] = {
    {"C0", "C_r relation is a strict partial order", 10.0, preflight_c_r},
    {"1", "spider has dimension 3 and is 3-irreducible", 5.0, criterion_spider},
    {"2", "dim(S_m) = m for m = 2,3,4", 60.0, criterion_standard_examples},
    {"3", "grid dimensions; grid(3,3) realizer and d=2 refutation", 600.0, criterion_grids},
    {"4", "spider extraction on 60,000 subsets of [r]^3", 120.0, criterion_spider_extraction},
    {"5", "exact f_2(n), n <= 6, and enumeration counts", 600.0, criterion_f_values},
    {"6", "realizer-to-permutation pipeline for S_2, S_3", 10.0, criterion_permutation_pipeline},
    {"7", "2-dimensional grid subsets avoid the S_3 permutation", 300.0, criterion_avoidance},
    {"8", "grid probe lower bound n^2 for n = 2,3", 600.0, criterion_grid_probe},
    {"9", "max identity2-avoiding subset of [n]^2 is 2n-1", 10.0, criterion_avoiding_extremal},
    {"10", "critical-pair search and B&B agree with oracles, n <= 5", 900.0, criterion_oracle_equivalence},
};

}  // namespace

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    case Status::Skipped:
      return "SKIPPED";
  }
  return "?";
}

bool Report::any_failed() const {
  for (const auto& r : results)
    if (r.status == Status::Fail) return true;
  return false;
}

bool Report::any_skipped() const {
  for (const auto& r : results)
    if (r.status == Status::Skipped) return true;
  return false;
}

Report run_all(const Options& options) {
  Report report;
  for (const auto& c : kCriteria) {
    CriterionResult res;
    res.id = c.id;
    res.title = c.title;
    res.limit_seconds = c.limit_seconds;
    if (options.budget_seconds <= 0 && c.limit_seconds > kShortCheckSeconds) {
      res.status = Status::Skipped;
      res.detail = "skipped: no time budget";
    } else {
      const double cap = options.budget_seconds > 0 ? std::min(c.limit_seconds, options.budget_seconds) : c.limit_seconds;
      Budget budget = Budget::with_seconds(cap);
      const auto start = std::chrono::steady_clock::now();
      try {
        res.detail = c.run(options, budget);
        res.status = Status::Pass;
      } catch (const CheckFailed& e) {
        res.detail = e.what();
      } catch (const BudgetExceeded& e) {
        res.detail = std::string("not certified within budget: ") + e.what();
      } catch (const std::exception& e) {
        res.detail = std::string("error: ") + e.what();
      }
      res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (res.status == Status::Pass && res.seconds > c.limit_seconds) {
        res.status = Status::Fail;
        res.detail += cat(" (took ", res.seconds, " s, limit ", c.limit_seconds, " s)");
      }
    }
    if (options.on_result) options.on_result(res);
    report.results.push_back(std::move(res));
  }
  return report;
}

}  // namespace posetdim::acceptance
