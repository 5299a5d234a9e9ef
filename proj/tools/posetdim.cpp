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

// Command-line front end. Talks to the library only through posetdim.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "posetdim/posetdim.h"

namespace {

using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kVerificationFailure = 1, kUsage = 2, kBudget = 3 };

struct Config {
  std::string command;
  std::string kind;
  std::string input;
  std::string output;
  std::string format;
  std::string pattern = "identity2";
  std::string sampler = "uniform";
  std::uint64_t seed = 0;
  std::optional<double> budget_seconds;
  std::optional<std::uint64_t> budget_nodes;
  unsigned jobs = 1;
  std::size_t samples = 1;
  std::optional<int> r;
  std::optional<int> n;
  std::optional<int> d;
  bool corrupt_c_r = false;
};

// Thrown for bad flag combinations found after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using PosetPtr = std::unique_ptr<pd_poset, Deleter<pd_poset, pd_poset_free>>;
using PointSetPtr = std::unique_ptr<pd_pointset, Deleter<pd_pointset, pd_pointset_free>>;

int exit_code(pd_status s) {
  switch (s) {
    case PD_OK:
      return kOk;
    case PD_BUDGET_EXCEEDED:
      return kBudget;
    case PD_INVALID_ARGUMENT:
    case PD_INDEX_ERROR:
    case PD_CYCLE_ERROR:
    case PD_SIZE_ERROR:
    case PD_ARITY_MISMATCH:
    case PD_PRECONDITION_ERROR:
    case PD_PARSE_ERROR:
      return kUsage;
    default:
      return kVerificationFailure;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("--input: cannot read \"" + path + "\"");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Takes ownership of a library string.
std::string take(char* s) {
  if (!s) return {};
  std::string out(s);
  pd_string_free(s);
  return out;
}

void check(pd_status s, const char* what) {
  if (s != PD_OK) throw std::runtime_error(std::string(what) + ": " + pd_status_name(s) + ": " + pd_last_error());
}

pd_budget budget_of(const Config& c) {
  pd_budget b{};
  b.seconds = c.budget_seconds ? *c.budget_seconds : -1.0;
  b.nodes = c.budget_nodes ? *c.budget_nodes : 0;
  b.jobs = c.jobs;
  return b;
}

template <typename T>
Json opt_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json config_echo(const Config& c) {
  Json j;
  j["command"] = c.command;
  if (!c.kind.empty()) j["kind"] = c.kind;
  if (!c.input.empty()) j["input"] = c.input;
  j["seed"] = c.seed;
  j["budget_seconds"] = opt_json(c.budget_seconds);
  j["budget_nodes"] = opt_json(c.budget_nodes);
  j["jobs"] = c.jobs;
  j["r"] = opt_json(c.r);
  j["n"] = opt_json(c.n);
  j["d"] = opt_json(c.d);
  if (c.command == "extract-spider") {
    j["samples"] = c.samples;
    j["sampler"] = c.sampler;
  }
  if (c.command == "contains" || c.command == "avoids" || c.command == "max-avoid") j["pattern"] = c.pattern;
  return j;
}

void write_output(const Config& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw UsageError("--output: cannot write \"" + c.output + "\"");
  out << text;
}

// Envelope: tool, version and config first, then the library's fields.
std::string envelope(const Config& c, const std::string& report, pd_status s) {
  Json j;
  j["tool"] = "posetdim";
  j["version"] = pd_version();
  j["config"] = config_echo(c);
  if (!report.empty()) {
    const Json body = Json::parse(report);
    for (const auto& [k, v] : body.items()) j[k] = v;
  }
  if (s != PD_OK) {
    j["status"] = pd_status_name(s);
    j["error"] = pd_last_error();
  }
  if (!j.contains("verified")) j["verified"] = s == PD_OK;
  return j.dump(2) + "\n";
}

int finish(const Config& c, char* raw, pd_status s) {
  const std::string report = take(raw);
  if (report.empty() && s != PD_OK && exit_code(s) == kUsage) {
    std::cerr << "posetdim " << c.command << ": " << pd_status_name(s) << ": " << pd_last_error() << "\n";
    return kUsage;
  }
  write_output(c, envelope(c, report, s));
  if (s != PD_OK) std::cerr << "posetdim " << c.command << ": " << pd_status_name(s) << ": " << pd_last_error() << "\n";
  return exit_code(s);
}

PosetPtr load_poset(const Config& c) {
  if (c.input.empty()) throw UsageError("--input is required");
  const std::string text = read_file(c.input);
  pd_poset* p = nullptr;
  const pd_status s = pd_poset_from_json(text.c_str(), &p);
  if (s != PD_OK) throw UsageError("--input: " + std::string(pd_status_name(s)) + ": " + pd_last_error());
  return PosetPtr(p);
}

PointSetPtr load_pointset(const std::string& text, const char* flag) {
  pd_pointset* a = nullptr;
  const pd_status s = pd_pointset_from_json(text.c_str(), &a);
  if (s != PD_OK) throw UsageError(std::string(flag) + ": " + pd_status_name(s) + ": " + pd_last_error());
  return PointSetPtr(a);
}

// A file path, or a built-in pattern name.
PointSetPtr load_pattern(const Config& c) {
  if (std::filesystem::exists(c.pattern)) return load_pointset(read_file(c.pattern), "--pattern");
  pd_pointset* a = nullptr;
  const pd_status s = pd_pointset_builtin(c.pattern.c_str(), c.d.value_or(2), &a);
  if (s != PD_OK) throw UsageError("--pattern: " + std::string(pd_last_error()));
  return PointSetPtr(a);
}

int require_int(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string(flag) + " is required");
  return *v;
}

// ---------------------------------------------------------------------------

int run_construct(const Config& c) {
  pd_poset* raw = nullptr;
  const int n = c.kind == "c-r" ? c.r.value_or(c.n.value_or(0)) : c.n.value_or(0);
  const pd_status s = pd_poset_construct(c.kind.c_str(), n, c.d.value_or(2), &raw);
  if (s != PD_OK) throw UsageError(std::string(pd_status_name(s)) + ": " + pd_last_error());
  PosetPtr p(raw);
  char* text = nullptr;
  if (c.format == "dot") {
    check(pd_poset_to_dot(p.get(), &text), "export");
    write_output(c, take(text));
  } else {
    check(pd_poset_to_json(p.get(), &text), "export");
    write_output(c, Json::parse(take(text)).dump(2) + "\n");
  }
  return kOk;
}

int run_export_dot(const Config& c) {
  auto p = load_poset(c);
  char* text = nullptr;
  check(pd_poset_to_dot(p.get(), &text), "export");
  write_output(c, take(text));
  return kOk;
}

int run_dim(const Config& c) {
  auto p = load_poset(c);
  const pd_budget b = budget_of(c);
  char* report = nullptr;
  const pd_status s = c.d ? pd_dimension_at_most(p.get(), *c.d, &b, &report) : pd_dimension(p.get(), &b, &report);
  return finish(c, report, s);
}

int run_max_subposet(const Config& c) {
  auto p = load_poset(c);
  const pd_budget b = budget_of(c);
  char* report = nullptr;
  return finish(c, report, pd_max_subposet(p.get(), c.d.value_or(2), &b, &report));
}

int run_extract_spider(const Config& c) {
  const pd_budget b = budget_of(c);
  char* report = nullptr;
  if (c.input.empty()) {
    const int r = require_int(c.r, "--r");
    return finish(c, report, pd_extract_spider_sampled(r, c.samples, c.seed, c.sampler.c_str(), &b, &report));
  }
  // {"r": r, "points": [[x,y,z], ...]} or PointSet JSON with "n" as r.
  Json j;
  try {
    j = Json::parse(read_file(c.input));
  } catch (const Json::exception& e) {
    throw UsageError(std::string("--input: ") + e.what());
  }
  int r = 0;
  std::vector<int> flat;
  try {
    r = j.contains("r") ? j.at("r").get<int>() : j.at("n").get<int>();
    for (const auto& p : j.at("points")) {
      const auto v = p.get<std::vector<int>>();
      if (v.size() != 3) throw UsageError("--input: every point needs three coordinates");
      flat.insert(flat.end(), v.begin(), v.end());
    }
  } catch (const Json::exception& e) {
    throw UsageError(std::string("--input: ") + e.what());
  }
  if (c.r && *c.r != r) throw UsageError("--r disagrees with the input");
  return finish(c, report, pd_extract_spider(flat.data(), flat.size() / 3, r, &b, &report));
}

int run_contains(const Config& c, bool negate) {
  if (c.input.empty()) throw UsageError("--input is required");
  auto host = load_pointset(read_file(c.input), "--input");
  auto pattern = load_pattern(c);
  char* raw = nullptr;
  const pd_status s = pd_contains(host.get(), pattern.get(), &raw);
  std::string report = take(raw);
  if (negate && !report.empty()) {
    Json j = Json::parse(report);
    Json out;
    out["avoids"] = !j["contains"].get<bool>();
    out["witness"] = j["witness"];
    out["verified"] = j["verified"];
    report = out.dump();
  }
  if (report.empty() && exit_code(s) == kUsage) {
    std::cerr << "posetdim " << c.command << ": " << pd_status_name(s) << ": " << pd_last_error() << "\n";
    return kUsage;
  }
  write_output(c, envelope(c, report, s));
  return exit_code(s);
}

int run_max_avoid(const Config& c) {
  auto pattern = load_pattern(c);
  const pd_budget b = budget_of(c);
  char* report = nullptr;
  const int n = require_int(c.n, "--n");
  return finish(c, report, pd_max_avoid(n, c.d.value_or(2), pattern.get(), &b, &report));
}

int run_table(const Config& c, const Json& j, const std::vector<std::string>& cols, const Json& rows, pd_status s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const auto& v = row.contains(cols[i]) ? row[cols[i]] : j[cols[i]];
      os << (i ? "," : "") << v.dump();
    }
    os << "\n";
  }
  write_output(c, os.str());
  if (s != PD_OK) std::cerr << "posetdim " << c.command << ": " << pd_status_name(s) << ": " << pd_last_error() << "\n";
  return exit_code(s);
}

int run_f_value(const Config& c) {
  const pd_budget b = budget_of(c);
  char* raw = nullptr;
  const int n = require_int(c.n, "--n");
  if (n < 1) throw UsageError("--n must be at least 1");
  const pd_status s = pd_f_value(static_cast<std::size_t>(n), c.d.value_or(2), &b, &raw);
  if (c.format != "csv") return finish(c, raw, s);
  const std::string report = take(raw);
  if (report.empty()) return finish(c, nullptr, s);
  const Json j = Json::parse(report);
  return run_table(c, j, {"n", "d", "value", "classes", "verified"}, j["rows"], s);
}

int run_grid_probe(const Config& c) {
  const pd_budget b = budget_of(c);
  char* raw = nullptr;
  const int n = require_int(c.n, "--n");
  const pd_status s = pd_grid_probe(n, c.d.value_or(2), &b, &raw);
  if (c.format != "csv") return finish(c, raw, s);
  const std::string report = take(raw);
  if (report.empty()) return finish(c, nullptr, s);
  const Json j = Json::parse(report);
  return run_table(c, j, {"n", "d", "elements", "best_size", "optimal", "baseline", "baseline_verified", "verified"},
                   Json::array({j}), s);
}

void print_row(const char* id, const char* title, const char* status, const char* detail, double seconds, void*) {
  std::printf("[%-7s] %-3s %-58s %8.2fs  %s\n", status, id, title, seconds, detail);
  std::fflush(stdout);
}

int run_verify_all(const Config& c) {
  pd_verify_options opt{};
  opt.budget_seconds = c.budget_seconds.value_or(900.0);
  opt.jobs = c.jobs;
  opt.seed = c.seed;
  opt.corrupt_c_r = c.corrupt_c_r ? 1 : 0;
  const bool json = c.format == "json";
  char* raw = nullptr;
  const pd_status s = pd_verify_all(&opt, json ? nullptr : print_row, nullptr, &raw);
  const std::string report = take(raw);
  if (json) {
    write_output(c, envelope(c, report, s));
  } else if (!report.empty()) {
    const Json j = Json::parse(report);
    std::printf("%zu passed, %zu failed, %zu skipped\n", j["passed"].get<std::size_t>(),
                j["failed"].get<std::size_t>(), j["skipped"].get<std::size_t>());
  }
  return exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poset dimension toolkit"};
  app.set_version_flag("--version", pd_version());
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--output", cfg.output, "Write the report here instead of stdout");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "dot", "csv"}));
    sub->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    sub->add_option("--budget-seconds", cfg.budget_seconds, "Wall-clock budget")->check(CLI::NonNegativeNumber);
    sub->add_option("--budget-nodes", cfg.budget_nodes, "Search node budget");
    sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1U, 1024U))->capture_default_str();
  };
  auto input = [&](CLI::App* sub, const char* what) { sub->add_option("--input", cfg.input, what); };

  auto* construct = app.add_subcommand("construct", "Build a named poset");
  construct->add_option("kind", cfg.kind, "chain | antichain | grid | standard-example | c-r | spider")
      ->required()
      ->check(CLI::IsMember({"chain", "antichain", "grid", "standard-example", "c-r", "spider"}));
  construct->add_option("--n", cfg.n, "Size, side or m");
  construct->add_option("--d", cfg.d, "Grid arity");
  construct->add_option("--r", cfg.r, "Side of C_r");

  auto* dim = app.add_subcommand("dim", "Exact dimension, or a realizer of size <= d with --d");
  input(dim, "Poset JSON");
  dim->add_option("--d", cfg.d, "Only decide dim <= d");

  auto* maxsub = app.add_subcommand("max-subposet", "Largest induced subposet of dimension <= d");
  input(maxsub, "Poset JSON");
  maxsub->add_option("--d", cfg.d, "Dimension bound (default 2)");

  auto* spider = app.add_subcommand("extract-spider", "Find a spider in a large subset of C_r");
  input(spider, "Point list JSON {\"r\", \"points\"}");
  spider->add_option("--r", cfg.r, "Side of C_r when sampling");
  spider->add_option("--samples", cfg.samples, "Number of random subsets")->capture_default_str();
  spider->add_option("--sampler", cfg.sampler, "uniform | adversarial")
      ->check(CLI::IsMember({"uniform", "adversarial"}))
      ->capture_default_str();

  auto* cont = app.add_subcommand("contains", "Pattern containment in a point set");
  auto* avoid = app.add_subcommand("avoids", "Pattern avoidance in a point set");
  for (auto* sub : {cont, avoid}) {
    input(sub, "Host PointSet JSON");
    sub->add_option("--pattern", cfg.pattern, "PointSet JSON file or identity2 | standard-permutation")
        ->capture_default_str();
    sub->add_option("--d", cfg.d, "d for standard-permutation (S_{d+1})");
  }

  auto* maxavoid = app.add_subcommand("max-avoid", "Largest subset of [n]^d avoiding a pattern");
  maxavoid->add_option("--n", cfg.n, "Side");
  maxavoid->add_option("--d", cfg.d, "Arity (default 2)");
  maxavoid->add_option("--pattern", cfg.pattern, "PointSet JSON file or built-in name")->capture_default_str();

  auto* fval = app.add_subcommand("f-value", "Exact f_d(1..n) by enumeration");
  fval->add_option("--n", cfg.n, "Largest poset size");
  fval->add_option("--d", cfg.d, "Dimension bound (default 2)");

  auto* probe = app.add_subcommand("grid-probe", "Largest d-dimensional subposet of the n^(d+1) grid");
  probe->add_option("--n", cfg.n, "Side");
  probe->add_option("--d", cfg.d, "Dimension bound (default 2)");

  auto* dot = app.add_subcommand("export-dot", "Hasse diagram in DOT");
  input(dot, "Poset JSON");

  auto* verify = app.add_subcommand("verify-all", "Run the acceptance suite");
  verify->add_flag("--corrupt-c-r", cfg.corrupt_c_r, "Negative control")->group("");

  for (auto* sub : app.get_subcommands({})) common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  const std::string& cmd = cfg.command;
  try {
    if (cfg.format == "dot" && cmd != "construct" && cmd != "export-dot")
      throw UsageError("--format dot only applies to construct and export-dot");
    if (cfg.format == "csv" && cmd != "f-value" && cmd != "grid-probe")
      throw UsageError("--format csv only applies to f-value and grid-probe");
    if (cmd == "construct") return run_construct(cfg);
    if (cmd == "dim") return run_dim(cfg);
    if (cmd == "max-subposet") return run_max_subposet(cfg);
    if (cmd == "extract-spider") return run_extract_spider(cfg);
    if (cmd == "contains") return run_contains(cfg, false);
    if (cmd == "avoids") return run_contains(cfg, true);
    if (cmd == "max-avoid") return run_max_avoid(cfg);
    if (cmd == "f-value") return run_f_value(cfg);
    if (cmd == "grid-probe") return run_grid_probe(cfg);
    if (cmd == "export-dot") return run_export_dot(cfg);
    if (cmd == "verify-all") return run_verify_all(cfg);
  } catch (const UsageError& e) {
    std::cerr << "posetdim " << cmd << ": " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "posetdim " << cmd << ": " << e.what() << "\n";
    return kVerificationFailure;
  }
  return kUsage;
}
