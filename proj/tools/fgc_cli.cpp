// Copyright 2026 The fgc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: check, lp, solve, exact, gen, bench, counts.
// Reports go to stdout as one JSON object per line (or a table with
// --pretty); errors go to stderr.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "fgc/fgc.hpp"
#include "json.hpp"

namespace {

using fgc::ErrorCode;
using fgc::FgcError;
using nlohmann::ordered_json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax:
    case ErrorCode::kRange:
      return 2;
    case ErrorCode::kSelfLoop:
    case ErrorCode::kEdgeOutOfRange:
    case ErrorCode::kNegativeCost:
    case ErrorCode::kDisconnected:
    case ErrorCode::kInfeasibleEdgeSet:
    case ErrorCode::kInvalidParameter:
      return 1;
    default:
      return 3;
  }
}

class Timer {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double secs = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return secs;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

std::string render_scalar(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void emit(const ordered_json& report, bool pretty) {
  if (!pretty) {
    std::cout << report.dump() << "\n";
    return;
  }
  std::size_t width = 0;
  for (const auto& [key, value] : report.items()) width = std::max(width, key.size());
  for (const auto& [key, value] : report.items()) {
    std::cout << key << std::string(width - key.size() + 2, ' ') << render_scalar(value) << "\n";
  }
  std::cout << "\n";
}

// Pretty mode for many rows: one header, one line per report.
void emit_table(const std::vector<ordered_json>& rows) {
  if (rows.empty()) return;
  std::vector<std::string> keys;
  for (const auto& [key, value] : rows.front().items()) keys.push_back(key);
  std::vector<std::size_t> width;
  for (const std::string& k : keys) width.push_back(k.size());
  std::vector<std::vector<std::string>> cells;
  for (const ordered_json& row : rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < keys.size(); ++i) {
      line.push_back(row.contains(keys[i]) ? render_scalar(row[keys[i]]) : "-");
      width[i] = std::max(width[i], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto print = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      std::cout << line[i] << (i + 1 < line.size() ? std::string(width[i] - line[i].size() + 2, ' ') : "");
    }
    std::cout << "\n";
  };
  print(keys);
  for (const auto& line : cells) print(line);
}

ordered_json cut_json(const fgc::FgcInstance& inst, const fgc::Cut& cut) {
  return {{"side", cut.side()}, {"edges", fgc::cut_edges(inst.graph, cut)}};
}

fgc::CheckMode parse_check_mode(const std::string& mode) {
  if (mode == "exhaustive") return fgc::CheckMode::kExhaustive;
  if (mode == "contraction") return fgc::CheckMode::kContraction;
  return fgc::CheckMode::kAuto;
}

std::pair<double, double> parse_range(const std::string& text) {
  const std::size_t colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument("no colon");
    std::size_t used = 0;
    const double lo = std::stod(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("trailing");
    const std::string rest = text.substr(colon + 1);
    const double hi = std::stod(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("trailing");
    return {lo, hi};
  } catch (const std::exception&) {
    fgc::fail(ErrorCode::kSyntax, "expected a range lo:hi, got '" + text + "'");
  }
}

struct Suite {
  fgc::GeneratorParams params;
  int count = 10;
};

Suite parse_suite(const std::string& text) {
  Suite suite_def;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) fgc::fail(ErrorCode::kSyntax, "suite item '" + item + "' is not key=value");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    try {
      if (key == "n") {
        suite_def.params.n = std::stoi(value);
      } else if (key == "m") {
        suite_def.params.m = std::stoi(value);
      } else if (key == "p") {
        suite_def.params.p = std::stoi(value);
      } else if (key == "q") {
        suite_def.params.q = std::stoi(value);
      } else if (key == "safe") {
        suite_def.params.safe_fraction = std::stod(value);
      } else if (key == "cost") {
        std::tie(suite_def.params.cost_min, suite_def.params.cost_max) = parse_range(value);
      } else if (key == "count") {
        suite_def.count = std::stoi(value);
      } else if (key == "seed") {
        suite_def.params.seed = std::stoull(value);
      } else {
        fgc::fail(ErrorCode::kSyntax, "unknown suite key '" + key + "'");
      }
    } catch (const std::logic_error&) {
      fgc::fail(ErrorCode::kSyntax, "bad value for suite key '" + key + "'");
    }
  }
  if (suite_def.count < 1) fgc::fail(ErrorCode::kRange, "suite count must be positive");
  return suite_def;
}

int thread_count() {
  if (const char* env = std::getenv("FGC_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

struct SolveFlags {
  std::uint64_t seed = 0;
  double scale_c = 100.0;
  int max_attempts = 64;
  bool with_exact = false;
  bool timings = false;
  bool plain_lp = false;
};

ordered_json solve_report(const fgc::FgcInstance& inst, const SolveFlags& flags) {
  fgc::RoundingConfig cfg;
  cfg.seed = flags.seed;
  cfg.scale_constant = flags.scale_c;
  cfg.max_attempts = flags.max_attempts;
  fgc::check_config(cfg);
  fgc::RelaxationOptions relax;
  relax.separation.knapsack_cover = !flags.plain_lp;

  Timer timer;
  const fgc::RelaxationResult lp = fgc::solve_relaxation(inst, relax);
  const double lp_secs = timer.lap();
  const fgc::RoundingOutcome out = fgc::round_solution(inst, lp.x, lp.value, cfg);
  const double round_secs = timer.lap();

  ordered_json report;
  report["n"] = inst.vertex_count();
  report["m"] = inst.edge_count();
  report["p"] = inst.p;
  report["q"] = inst.q;
  report["lp_value"] = lp.value;
  report["solution_cost"] = out.cost;
  // A zero LP value forces a zero-cost solution, so the ratio is 1.
  report["ratio"] = lp.value > 0.0 ? out.cost / lp.value : 1.0;
  if (flags.with_exact) {
    const fgc::ExactResult exact = fgc::exact_opt(inst);
    report["exact_cost"] = exact.best_cost;
  }
  const double exact_secs = timer.lap();
  report["attempts"] = out.attempts_used;
  report["forced_edges"] = out.forced_set_size;
  report["seed"] = flags.seed;
  report["scale_c"] = flags.scale_c;
  report["separation_iterations"] = lp.iterations;
  report["active_rows"] = lp.active_rows.size();
  report["separation_mode"] = fgc::to_string(lp.separation_mode);
  report["feasibility_mode"] = fgc::to_string(out.feasibility_mode);
  report["knapsack_cover"] = !flags.plain_lp;
  report["selection"] = out.selection.ids();
  if (flags.timings) {
    report["lp_seconds"] = lp_secs;
    report["rounding_seconds"] = round_secs;
    if (flags.with_exact) report["exact_seconds"] = exact_secs;
  }
  return report;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flexible graph connectivity solver"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "print a table instead of JSON lines");

  std::string file;
  auto add_file = [&file](CLI::App* sub) { sub->add_option("file", file, "instance (.fgc or .json)")->required(); };

  CLI::App* check = app.add_subcommand("check", "feasibility of an edge set");
  add_file(check);
  std::vector<int> edge_ids;
  std::string check_mode = "auto";
  check->add_option("--edges", edge_ids, "comma-separated edge ids")->delimiter(',');
  check->add_option("--mode", check_mode, "auto, exhaustive or contraction")
      ->check(CLI::IsMember({"auto", "exhaustive", "contraction"}));
  bool all_edges = false;
  check->add_flag("--all", all_edges, "check the full edge set");

  CLI::App* lp = app.add_subcommand("lp", "solve the relaxation");
  add_file(lp);
  bool plain_lp = false;
  lp->add_flag("--no-knapsack", plain_lp, "separate only the plain cut rows");

  SolveFlags flags;
  CLI::App* solve = app.add_subcommand("solve", "relaxation plus randomized rounding");
  add_file(solve);
  solve->add_option("--seed", flags.seed, "rounding seed");
  solve->add_option("--scale-c", flags.scale_c, "scale constant C");
  solve->add_option("--max-attempts", flags.max_attempts, "rounding attempts");
  solve->add_flag("--with-exact", flags.with_exact, "also run the exact search");
  solve->add_flag("--timings", flags.timings, "report phase timings");
  solve->add_flag("--no-knapsack", flags.plain_lp, "use the plain cut LP");

  CLI::App* exact = app.add_subcommand("exact", "exact optimum by branch and bound");
  add_file(exact);
  int edge_limit = 22;
  exact->add_option("--edge-limit", edge_limit, "largest edge count accepted");

  CLI::App* gen = app.add_subcommand("gen", "write a random instance");
  fgc::GeneratorParams gp;
  std::string cost_range = "1:10";
  std::string out_path;
  gen->add_option("--n", gp.n, "vertices");
  gen->add_option("--m", gp.m, "sampled edges");
  gen->add_option("--safe", gp.safe_fraction, "probability an edge is safe");
  gen->add_option("--cost", cost_range, "cost range lo:hi");
  gen->add_option("--p", gp.p, "p");
  gen->add_option("--q", gp.q, "q");
  gen->add_option("--seed", gp.seed, "generator seed");
  gen->add_option("-o,--output", out_path, "output file (.fgc or .json)")->required();

  CLI::App* bench = app.add_subcommand("bench", "solve a generated suite");
  std::string suite;
  bench->add_option("--suite", suite, "n=..,m=..,p=..,q=..,safe=..,cost=lo:hi,count=..,seed=..")->required();
  bench->add_option("--scale-c", flags.scale_c, "scale constant C");
  bench->add_option("--max-attempts", flags.max_attempts, "rounding attempts");
  bench->add_flag("--with-exact", flags.with_exact, "also run the exact search");
  bench->add_flag("--timings", flags.timings, "report phase timings (output no longer reproducible)");

  CLI::App* counts = app.add_subcommand("counts", "count near-minimum cuts");
  add_file(counts);
  std::vector<double> alphas;
  std::string capacity = "unit";
  counts->add_option("--alpha", alphas, "factor(s) alpha")->required()->delimiter(',');
  counts->add_option("--capacity", capacity, "unit or fgc")->check(CLI::IsMember({"unit", "fgc"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) {
      const fgc::FgcInstance inst = fgc::load_instance(file);
      fgc::EdgeSelection f(inst.edge_count());
      if (all_edges) f = fgc::EdgeSelection::all(inst.edge_count());
      for (int e : edge_ids) {
        if (e < 0 || e >= inst.edge_count()) {
          fgc::fail(ErrorCode::kRange, "edge id " + std::to_string(e) + " is out of range");
        }
        f.insert(e);
      }
      fgc::FeasibilityOptions opts;
      opts.mode = parse_check_mode(check_mode);
      const fgc::FeasibilityVerdict v = fgc::is_feasible(inst, f, opts);
      ordered_json report;
      report["feasible"] = v.feasible;
      report["edges"] = f.ids();
      report["cost"] = fgc::selection_cost(inst, f);
      report["mode"] = fgc::to_string(v.mode);
      if (v.witness) {
        const fgc::CutTally tally = fgc::tally_cut(inst, f, *v.witness);
        report["witness"] = cut_json(inst, *v.witness);
        report["witness_safe"] = tally.safe;
        report["witness_total"] = tally.total;
      }
      emit(report, pretty);
      return v.feasible ? 0 : 1;
    }
    if (*lp) {
      const fgc::FgcInstance inst = fgc::load_instance(file);
      fgc::RelaxationOptions relax;
      relax.separation.knapsack_cover = !plain_lp;
      const fgc::RelaxationResult r = fgc::solve_relaxation(inst, relax);
      ordered_json report;
      report["lp_value"] = r.value;
      report["x"] = std::vector<double>(r.x.values().begin(), r.x.values().end());
      report["iterations"] = r.iterations;
      report["active_rows"] = r.active_rows.size();
      report["separation_mode"] = fgc::to_string(r.separation_mode);
      report["knapsack_cover"] = !plain_lp;
      emit(report, pretty);
      return 0;
    }
    if (*solve) {
      const fgc::FgcInstance inst = fgc::load_instance(file);
      emit(solve_report(inst, flags), pretty);
      return 0;
    }
    if (*exact) {
      const fgc::FgcInstance inst = fgc::load_instance(file);
      fgc::ExactOptions opts;
      opts.edge_limit = edge_limit;
      const fgc::ExactResult r = fgc::exact_opt(inst, opts);
      ordered_json report;
      report["best_cost"] = r.best_cost;
      report["best_selection"] = r.best_selection.ids();
      report["nodes_explored"] = r.nodes_explored;
      emit(report, pretty);
      return 0;
    }
    if (*gen) {
      std::tie(gp.cost_min, gp.cost_max) = parse_range(cost_range);
      const fgc::FgcInstance inst = fgc::gen_random(gp);
      fgc::save_instance(out_path, inst);
      ordered_json report;
      report["output"] = out_path;
      report["n"] = inst.vertex_count();
      report["m"] = inst.edge_count();
      report["repair_edges"] = inst.edge_count() - gp.m;
      emit(report, pretty);
      return 0;
    }
    if (*bench) {
      const Suite suite_def = parse_suite(suite);
      std::vector<ordered_json> rows(static_cast<std::size_t>(suite_def.count));
      std::vector<int> codes(static_cast<std::size_t>(suite_def.count), 0);
      std::atomic<int> next{0};
      auto worker = [&] {
        for (int i = next++; i < suite_def.count; i = next++) {
          fgc::GeneratorParams params = suite_def.params;
          params.seed = suite_def.params.seed + static_cast<std::uint64_t>(i);
          ordered_json row;
          row["item"] = i;
          row["instance_seed"] = params.seed;
          try {
            const fgc::FgcInstance inst = fgc::gen_random(params);
            SolveFlags item_flags = flags;
            item_flags.seed = params.seed;
            const ordered_json report = solve_report(inst, item_flags);
            for (const auto& [key, value] : report.items()) {
              if (key != "selection") row[key] = value;
            }
          } catch (const FgcError& e) {
            row["error"] = fgc::to_string(e.code());
            row["message"] = e.what();
            codes[static_cast<std::size_t>(i)] = exit_code_for(e.code());
          }
          rows[static_cast<std::size_t>(i)] = std::move(row);
        }
      };
      const int threads = std::min(thread_count(), suite_def.count);
      std::vector<std::thread> pool;
      for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
      worker();
      for (std::thread& t : pool) t.join();
      if (pretty) {
        emit_table(rows);
      } else {
        for (const ordered_json& row : rows) emit(row, false);
      }
      return *std::max_element(codes.begin(), codes.end());
    }
    if (*counts) {
      const fgc::FgcInstance inst = fgc::load_instance(file);
      const fgc::Capacities caps = capacity == "fgc"
                                       ? fgc::selection_capacities(inst, fgc::EdgeSelection::all(inst.edge_count()))
                                       : fgc::Capacities::uniform(inst.edge_count(), 1.0);
      const fgc::MinCutResult lowest = fgc::min_cut(inst.graph, caps);
      for (double alpha : alphas) {
        if (!(alpha >= 1.0) || !std::isfinite(alpha)) fgc::fail(ErrorCode::kRange, "alpha must be at least 1");
        const long long count = fgc::count_cuts_at_most(inst.graph, caps, alpha);
        ordered_json report;
        report["alpha"] = alpha;
        report["capacity"] = capacity;
        report["min_cut"] = lowest.value;
        report["count"] = count;
        report["bound"] = std::pow(static_cast<double>(inst.vertex_count()), 2.0 * alpha);
        emit(report, pretty);
      }
      return 0;
    }
  } catch (const FgcError& e) {
    ordered_json err;
    err["error"] = fgc::to_string(e.code());
    err["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << ordered_json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return 3;
  }
  return 0;
}
