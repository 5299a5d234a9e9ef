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

#include "posetdim/posetdim.h"

#include <cstring>
#include <optional>
#include <random>
#include <string>

#include "posetdim/acceptance.hpp"
#include "posetdim/constructions.hpp"
#include "posetdim/dimension.hpp"
#include "posetdim/errors.hpp"
#include "posetdim/extremal.hpp"
#include "posetdim/io.hpp"
#include "posetdim/patterns.hpp"
#include "posetdim/poset.hpp"

struct pd_poset {
  posetdim::Poset poset;
  std::optional<std::vector<posetdim::Coord>> coords;
};

struct pd_pointset {
  posetdim::PointSet points;
};

namespace {

using namespace posetdim;

constexpr const char* kVersion = POSETDIM_VERSION;

thread_local std::string last_error;

pd_status fail(pd_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

// Maps the library's exception hierarchy onto status codes.
template <typename F>
pd_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const IndexError& e) {
    return fail(PD_INDEX_ERROR, e.what());
  } catch (const CycleError& e) {
    return fail(PD_CYCLE_ERROR, e.what());
  } catch (const RelationError& e) {
    return fail(PD_RELATION_ERROR, e.what());
  } catch (const SizeError& e) {
    return fail(PD_SIZE_ERROR, e.what());
  } catch (const BudgetExceeded& e) {
    return fail(PD_BUDGET_EXCEEDED, e.what());
  } catch (const ArityMismatch& e) {
    return fail(PD_ARITY_MISMATCH, e.what());
  } catch (const NotARealizer& e) {
    return fail(PD_NOT_A_REALIZER, e.what());
  } catch (const PreconditionError& e) {
    return fail(PD_PRECONDITION_ERROR, e.what());
  } catch (const ParseError& e) {
    return fail(PD_PARSE_ERROR, e.what());
  } catch (const InvalidArgument& e) {
    return fail(PD_INVALID_ARGUMENT, e.what());
  } catch (const InternalError& e) {
    return fail(PD_INTERNAL_ERROR, e.what());
  } catch (const std::exception& e) {
    return fail(PD_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(PD_INTERNAL_ERROR, "unknown error");
  }
}

char* dup(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pd_status emit(const Json& j, char** out, pd_status s = PD_OK) {
  *out = dup(j.dump());
  return s;
}

Budget make_budget(const pd_budget* b) {
  if (!b) return Budget::unlimited();
  std::optional<double> seconds;
  std::optional<std::uint64_t> nodes;
  if (b->seconds >= 0) seconds = b->seconds;
  if (b->nodes > 0) nodes = b->nodes;
  return Budget(seconds, nodes);
}

unsigned jobs_of(const pd_budget* b) { return b && b->jobs > 0 ? b->jobs : 1; }

void require(bool ok, const char* what) {
  if (!ok) throw InvalidArgument(what);
}

bool dimension_le(const Poset& p, std::span<const std::size_t> members, int d) {
  const auto sub = induced_subposet(p, members).poset;
  const auto r = dimension_at_most(sub, d);
  return r.has_value() && verify_realizer(sub, *r);
}

Json maps_to_json(const InjectionWitness& w) { return w.maps; }

}  // namespace

extern "C" {

const char* pd_version(void) { return kVersion; }

const char* pd_status_name(pd_status s) {
  switch (s) {
    case PD_OK: return "ok";
    case PD_INVALID_ARGUMENT: return "invalid argument";
    case PD_INDEX_ERROR: return "index error";
    case PD_CYCLE_ERROR: return "cycle error";
    case PD_RELATION_ERROR: return "relation error";
    case PD_SIZE_ERROR: return "size error";
    case PD_BUDGET_EXCEEDED: return "budget exceeded";
    case PD_ARITY_MISMATCH: return "arity mismatch";
    case PD_NOT_A_REALIZER: return "not a realizer";
    case PD_PRECONDITION_ERROR: return "precondition error";
    case PD_PARSE_ERROR: return "parse error";
    case PD_VERIFICATION_FAILED: return "verification failed";
    case PD_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

const char* pd_last_error(void) { return last_error.c_str(); }

void pd_string_free(char* s) { delete[] s; }

// ---- posets ---------------------------------------------------------------

pd_status pd_poset_from_relations(size_t n, const size_t* pairs, size_t npairs, pd_poset** out) {
  return guarded([&] {
    require(out && (pairs || npairs == 0), "null argument");
    std::vector<RelationPair> rel;
    for (size_t i = 0; i < npairs; ++i) rel.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
    *out = new pd_poset{poset_from_relations(n, rel), std::nullopt};
    return PD_OK;
  });
}

pd_status pd_poset_from_json(const char* text, pd_poset** out) {
  return guarded([&] {
    require(text && out, "null argument");
    auto loaded = poset_from_json_text(text);
    *out = new pd_poset{std::move(loaded.poset), std::move(loaded.coords)};
    return PD_OK;
  });
}

pd_status pd_poset_construct(const char* kind, int n, int d, pd_poset** out) {
  return guarded([&] {
    require(kind && out, "null argument");
    const std::string k = kind;
    auto count = [&] {
      if (n < 0) throw InvalidArgument("n must be non-negative");
      return static_cast<std::size_t>(n);
    };
    if (k == "chain") {
      *out = new pd_poset{chain(count()), std::nullopt};
    } else if (k == "antichain") {
      *out = new pd_poset{antichain(count()), std::nullopt};
    } else if (k == "grid") {
      auto g = grid(n, d);
      *out = new pd_poset{std::move(g.poset), std::move(g.coords)};
    } else if (k == "standard-example") {
      *out = new pd_poset{standard_example(n), std::nullopt};
    } else if (k == "c-r") {
      auto c = c_r(n);
      *out = new pd_poset{std::move(c.poset), std::move(c.coords)};
    } else if (k == "spider") {
      *out = new pd_poset{spider(), std::nullopt};
    } else {
      throw InvalidArgument("unknown construction \"" + k + "\"");
    }
    return PD_OK;
  });
}

pd_status pd_poset_lex_product(const pd_poset* p, const pd_poset* q, pd_poset** out) {
  return guarded([&] {
    require(p && q && out, "null argument");
    *out = new pd_poset{lexicographic_product(p->poset, q->poset), std::nullopt};
    return PD_OK;
  });
}

void pd_poset_free(pd_poset* p) { delete p; }

size_t pd_poset_size(const pd_poset* p) { return p ? p->poset.size() : 0; }

pd_status pd_poset_less(const pd_poset* p, size_t i, size_t j, int* out) {
  return guarded([&] {
    require(p && out, "null argument");
    if (i >= p->poset.size() || j >= p->poset.size()) throw IndexError("element index out of range");
    *out = p->poset.less(i, j) ? 1 : 0;
    return PD_OK;
  });
}

pd_status pd_poset_isomorphic(const pd_poset* p, const pd_poset* q, int* out) {
  return guarded([&] {
    require(p && q && out, "null argument");
    *out = isomorphic(p->poset, q->poset).has_value() ? 1 : 0;
    return PD_OK;
  });
}

pd_status pd_poset_to_json(const pd_poset* p, char** out) {
  return guarded([&] {
    require(p && out, "null argument");
    return emit(poset_to_json(p->poset, p->coords ? &*p->coords : nullptr), out);
  });
}

pd_status pd_poset_to_dot(const pd_poset* p, char** out) {
  return guarded([&] {
    require(p && out, "null argument");
    *out = dup(poset_to_dot(p->poset));
    return PD_OK;
  });
}

// ---- dimension ------------------------------------------------------------

pd_status pd_dimension(const pd_poset* p, const pd_budget* budget, char** report) {
  return guarded([&] {
    require(p && report, "null argument");
    Budget b = make_budget(budget);
    const auto res = dimension_exact(p->poset, b);
    const bool ok = verify_realizer(p->poset, res.witness) || p->poset.empty();
    Json j;
    j["dimension"] = res.dim;
    j["realizer"] = realizer_to_json(res.witness);
    j["certified"] = res.certified_minimal;
    j["verified"] = ok;
    return emit(j, report, ok ? PD_OK : PD_VERIFICATION_FAILED);
  });
}

pd_status pd_dimension_at_most(const pd_poset* p, int d, const pd_budget* budget, char** report) {
  return guarded([&] {
    require(p && report, "null argument");
    Budget b = make_budget(budget);
    const auto r = dimension_at_most(p->poset, d, b);
    Json j;
    j["d"] = d;
    j["realizable"] = r.has_value();
    j["realizer"] = r ? realizer_to_json(*r) : Json(nullptr);
    const bool ok = !r || p->poset.empty() || verify_realizer(p->poset, *r);
    j["verified"] = ok;
    return emit(j, report, ok ? PD_OK : PD_VERIFICATION_FAILED);
  });
}

// ---- extremal -------------------------------------------------------------

pd_status pd_max_subposet(const pd_poset* p, int d, const pd_budget* budget, char** report) {
  return guarded([&] {
    require(p && report, "null argument");
    Budget b = make_budget(budget);
    const auto res = max_subposet_dim(p->poset, d, b);
    const bool ok = dimension_le(p->poset, res.members, d);
    Json j;
    j["d"] = d;
    j["n"] = p->poset.size();
    j["size"] = res.size;
    j["members"] = res.members;
    if (p->coords) {
      Json pts = Json::array();
      for (auto m : res.members) pts.push_back((*p->coords)[m]);
      j["member_coords"] = std::move(pts);
    }
    j["optimal"] = res.optimal;
    j["explored"] = res.explored;
    j["verified"] = ok;
    pd_status s = !ok ? PD_VERIFICATION_FAILED : res.optimal ? PD_OK : PD_BUDGET_EXCEEDED;
    if (s == PD_BUDGET_EXCEEDED) last_error = "search budget exhausted before optimality was certified";
    return emit(j, report, s);
  });
}

pd_status pd_extract_spider(const int* coords, size_t count, int r, const pd_budget* budget, char** report) {
  return guarded([&] {
    require((coords || count == 0) && report, "null argument");
    std::vector<Coord3> s(count);
    for (size_t i = 0; i < count; ++i) s[i] = {coords[3 * i], coords[3 * i + 1], coords[3 * i + 2]};
    Budget b = make_budget(budget);
    const auto w = extract_spider(s, r);
    const auto v = verify_spider_witness(s, w, b);
    Json j;
    j["r"] = r;
    j["input_size"] = count;
    j["witness"] = spider_witness_to_json(w);
    j["roles"] = v.roles;
    j["isomorphic"] = v.isomorphic;
    j["dimension"] = v.dimension;
    j["verified"] = v.ok();
    return emit(j, report, v.ok() ? PD_OK : PD_VERIFICATION_FAILED);
  });
}

pd_status pd_extract_spider_sampled(int r, size_t samples, uint64_t seed, const char* sampler,
                                    const pd_budget* budget, char** report) {
  return guarded([&] {
    require(sampler && report, "null argument");
    const std::string name = sampler;
    SpiderSampler kind;
    if (name == "uniform") kind = SpiderSampler::Uniform;
    else if (name == "adversarial") kind = SpiderSampler::Adversarial;
    else throw InvalidArgument("unknown sampler \"" + name + "\"");
    if (r < 4) throw PreconditionError("sampling needs r >= 4");

    Budget b = make_budget(budget);
    std::mt19937_64 rng(seed);
    std::size_t verified = 0, internal = 0;
    Json witnesses = Json::array();
    for (size_t t = 0; t < samples; ++t) {
      const auto s = sample_spider_input(r, kind, rng);
      Json row;
      row["sample"] = t;
      try {
        const auto w = extract_spider(s, r);
        const auto v = verify_spider_witness(s, w, b);
        row["witness"] = spider_witness_to_json(w);
        row["verified"] = v.ok();
        if (v.ok()) ++verified;
      } catch (const InternalError& e) {
        ++internal;
        row["error"] = e.what();
        row["verified"] = false;
      }
      witnesses.push_back(std::move(row));
    }
    Json j;
    j["r"] = r;
    j["sampler"] = name;
    j["seed"] = seed;
    j["samples"] = samples;
    j["verified_count"] = verified;
    j["internal_errors"] = internal;
    j["verified"] = verified == samples;
    j["witnesses"] = std::move(witnesses);
    return emit(j, report, verified == samples ? PD_OK : PD_VERIFICATION_FAILED);
  });
}

pd_status pd_f_value(size_t n, int d, const pd_budget* budget, char** report) {
  return guarded([&] {
    require(report, "null argument");
    if (n < 1) throw InvalidArgument("n must be at least 1");
    Budget b = make_budget(budget);
    Json rows = Json::array();
    std::vector<std::pair<std::size_t, std::size_t>> values;
    bool ok = true;
    for (std::size_t m = 1; m <= n; ++m) {
      const auto f = f_value(m, d, b, jobs_of(budget));
      const bool witness_ok = f.witness_subset.size() == f.value && dimension_le(f.witness_poset, f.witness_subset, d) &&
                              max_subposet_dim(f.witness_poset, d, b).size == f.value;
      ok = ok && witness_ok;
      Json row;
      row["n"] = m;
      row["value"] = f.value;
      row["classes"] = f.classes;
      row["witness_poset"] = poset_to_json(f.witness_poset);
      row["witness_subset"] = f.witness_subset;
      row["verified"] = witness_ok;
      rows.push_back(std::move(row));
      values.emplace_back(m, f.value);
    }
    const bool monotone = monotone_f_check(values);
    Json j;
    j["d"] = d;
    j["n"] = n;
    j["rows"] = std::move(rows);
    j["monotone"] = monotone;
    j["verified"] = ok && monotone;
    return emit(j, report, ok && monotone ? PD_OK : PD_VERIFICATION_FAILED);
  });
}

pd_status pd_grid_probe(int n, int d, const pd_budget* budget, char** report) {
  return guarded([&] {
    require(report, "null argument");
    Budget b = make_budget(budget);
    const auto g = grid_probe(n, d, b);
    const auto host = grid(n, d + 1);
    std::vector<std::size_t> members;
    for (const auto& c : g.best_members) members.push_back(host.index_of(c));
    const bool best_ok = dimension_le(host.poset, members, d);
    const bool ok = best_ok && g.baseline_verified && g.best_size >= g.baseline;
    Json j;
    j["n"] = n;
    j["d"] = d;
    j["elements"] = g.elements;
    j["best_size"] = g.best_size;
    j["optimal"] = g.optimal;
    j["baseline"] = g.baseline;
    j["baseline_verified"] = g.baseline_verified;
    j["lower_bound_holds"] = g.best_size >= g.baseline;
    j["explored"] = g.explored;
    j["best_members"] = g.best_members;
    j["verified"] = ok;
    pd_status s = !ok ? PD_VERIFICATION_FAILED : g.optimal ? PD_OK : PD_BUDGET_EXCEEDED;
    if (s == PD_BUDGET_EXCEEDED) last_error = "search budget exhausted before optimality was certified";
    return emit(j, report, s);
  });
}

// ---- patterns -------------------------------------------------------------

pd_status pd_pointset_from_json(const char* text, pd_pointset** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new pd_pointset{pointset_from_json_text(text)};
    return PD_OK;
  });
}

pd_status pd_pointset_builtin(const char* name, int d, pd_pointset** out) {
  return guarded([&] {
    require(name && out, "null argument");
    const std::string k = name;
    if (k == "identity2") {
      *out = new pd_pointset{identity2()};
    } else if (k == "standard-permutation") {
      if (d < 1) throw InvalidArgument("d must be at least 1");
      const Poset s = standard_example(d + 1);
      *out = new pd_pointset{permutation_from_realizer(s, dimension_exact(s).witness)};
    } else {
      throw InvalidArgument("unknown pattern \"" + k + "\"");
    }
    return PD_OK;
  });
}

void pd_pointset_free(pd_pointset* a) { delete a; }

pd_status pd_pointset_to_json(const pd_pointset* a, char** out) {
  return guarded([&] {
    require(a && out, "null argument");
    return emit(pointset_to_json(a->points), out);
  });
}

pd_status pd_contains(const pd_pointset* host, const pd_pointset* pattern, char** report) {
  return guarded([&] {
    require(host && pattern && report, "null argument");
    const auto w = contains(host->points, pattern->points);
    const bool ok = !w || verify_injection(host->points, pattern->points, *w);
    Json j;
    j["contains"] = w.has_value();
    j["witness"] = w ? maps_to_json(*w) : Json(nullptr);
    j["verified"] = ok;
    return emit(j, report, ok ? PD_OK : PD_VERIFICATION_FAILED);
  });
}

pd_status pd_max_avoid(int n, int d, const pd_pointset* pattern, const pd_budget* budget, char** report) {
  return guarded([&] {
    require(pattern && report, "null argument");
    Budget b = make_budget(budget);
    const auto res = max_avoiding_size(n, d, pattern->points, b);
    const bool ok = res.witness.size() == res.size && avoids(res.witness, pattern->points);
    Json j;
    j["n"] = n;
    j["d"] = d;
    j["size"] = res.size;
    j["witness"] = pointset_to_json(res.witness);
    j["optimal"] = res.optimal;
    j["explored"] = res.explored;
    j["verified"] = ok;
    pd_status s = !ok ? PD_VERIFICATION_FAILED : res.optimal ? PD_OK : PD_BUDGET_EXCEEDED;
    if (s == PD_BUDGET_EXCEEDED) last_error = "search budget exhausted before optimality was certified";
    return emit(j, report, s);
  });
}

// ---- acceptance -----------------------------------------------------------

pd_status pd_verify_all(const pd_verify_options* options, pd_verify_callback callback, void* user, char** report) {
  return guarded([&] {
    acceptance::Options opt;
    if (options) {
      opt.budget_seconds = options->budget_seconds;
      opt.jobs = options->jobs > 0 ? options->jobs : 1;
      opt.seed = options->seed;
      opt.corrupt_c_r = options->corrupt_c_r != 0;
    }
    if (callback) {
      opt.on_result = [&](const acceptance::CriterionResult& r) {
        callback(r.id.c_str(), r.title.c_str(), acceptance::status_name(r.status), r.detail.c_str(), r.seconds, user);
      };
    }
    const auto rep = acceptance::run_all(opt);
    Json checks = Json::array();
    std::size_t passed = 0, failed = 0, skipped = 0;
    for (const auto& r : rep.results) {
      Json c;
      c["id"] = r.id;
      c["title"] = r.title;
      c["status"] = acceptance::status_name(r.status);
      c["detail"] = r.detail;
      checks.push_back(std::move(c));
      (r.status == acceptance::Status::Pass ? passed : r.status == acceptance::Status::Fail ? failed : skipped)++;
    }
    Json j;
    j["checks"] = std::move(checks);
    j["passed"] = passed;
    j["failed"] = failed;
    j["skipped"] = skipped;
    j["verified"] = failed == 0 && skipped == 0;
    pd_status s = failed ? PD_VERIFICATION_FAILED : skipped ? PD_BUDGET_EXCEEDED : PD_OK;
    if (report) *report = dup(j.dump());
    if (s == PD_VERIFICATION_FAILED) last_error = "acceptance check failed";
    if (s == PD_BUDGET_EXCEEDED) last_error = "acceptance checks skipped for lack of budget";
    return s;
  });
}

}  // extern "C"
