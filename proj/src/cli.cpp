// Copyright 2026 The Honey-X Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "honeyx/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "honeyx/bench.hpp"
#include "honeyx/binsearch.hpp"
#include "honeyx/exact.hpp"
#include "honeyx/io.hpp"
#include "json.hpp"

namespace honeyx {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format = "";

  std::string game_file;
  std::string solution_file;

  std::string method = "binsearch";
  double budget = 0.0;
  double tol = kDefaultSearchTolerance;
  bool robustify = false;
  double gap_tol = 1e-6;
  std::int64_t node_limit = 1'000'000;
  double time_limit = 600.0;
  std::string mode = "optimistic";

  std::optional<std::size_t> m, n;
  std::optional<int> samples;
  std::vector<double> budgets, deltas;
  std::vector<std::size_t> sizes;
  std::vector<std::string> methods;
  int threads = 0;
  std::string summary;
  std::string svg;
  bool no_timing = false;
  std::optional<std::int64_t> bench_node_limit;
  std::optional<double> bench_time_limit;
  std::optional<double> bench_gap_tol;
  std::string binsearch_outcome;
};

void Emit(const Options& opt, std::ostream& out, const std::string& text) {
  if (opt.out.empty()) {
    out << text;
  } else {
    io::write_file(opt.out, text);
  }
}

// Flat key,value CSV for a JSON object of scalars and arrays.
std::string ObjectCsv(const ordered_json& doc) {
  std::string csv = "# schema: 1\nkey,value\n";
  for (const auto& [key, value] : doc.items()) {
    if (key == "schema") continue;
    std::string text;
    if (value.is_array()) {
      for (const auto& v : value) {
        if (!text.empty()) text += ' ';
        text += v.dump();
      }
    } else if (value.is_string()) {
      text = value.get<std::string>();
    } else {
      text = value.dump();
    }
    std::replace(text.begin(), text.end(), ',', ' ');
    csv += key + ',' + text + '\n';
  }
  return csv;
}

std::string Render(const Options& opt, const std::string& json_text) {
  if (opt.format == "csv") return ObjectCsv(ordered_json::parse(json_text));
  return json_text;
}

int CmdSolve(const Options& opt, std::ostream& out) {
  const MatrixGame game = io::parse_game(io::read_file(opt.game_file));
  Emit(opt, out, Render(opt, io::to_json(solve_game(game))));
  return kExitOk;
}

int CmdDeceive(const Options& opt, std::ostream& out) {
  const MatrixGame game = io::parse_game(io::read_file(opt.game_file));
  if (!(opt.budget >= 0.0)) throw InvalidArgument("--budget must be >= 0");
  std::string text;
  if (opt.method == "exact") {
    if (opt.robustify) {
      throw InvalidArgument("--robustify applies to --method binsearch");
    }
    ExactOptions eo;
    eo.gap_tol = opt.gap_tol;
    eo.node_limit = opt.node_limit;
    eo.time_limit_s = opt.time_limit;
    text = io::to_json(solve_exact(game, opt.budget, eo), opt.budget);
  } else {
    FeasibleSolution sol = solve_feasible(game, opt.budget, opt.tol);
    if (opt.robustify) robustify(game, sol);
    text = io::to_json(sol);
  }
  Emit(opt, out, Render(opt, text));
  return kExitOk;
}

int CmdEval(const Options& opt, std::ostream& out) {
  const MatrixGame game = io::parse_game(io::read_file(opt.game_file));
  const io::StoredSolution sol =
      io::parse_solution(io::read_file(opt.solution_file));
  if (sol.x.size() != game.rows() || sol.deception.rows() != game.rows() ||
      sol.deception.cols() != game.cols()) {
    throw DimensionMismatch("solution does not match the game's shape");
  }
  const ResponseMode mode = parse_response_mode(opt.mode);
  const bench::Evaluation e =
      bench::evaluate_deception(game, sol.x, sol.deception, mode);
  ordered_json doc;
  doc["schema"] = io::kSchemaVersion;
  doc["method"] = sol.method;
  doc["mode"] = std::string(to_string(mode));
  doc["honest_value"] = e.outcome + e.improvement;
  doc["outcome"] = e.outcome;
  doc["improvement"] = e.improvement;
  Emit(opt, out, Render(opt, doc.dump(2) + "\n"));
  return kExitOk;
}

std::string RecordsJson(const bench::SweepResult& r, bool with_timing) {
  ordered_json doc;
  doc["schema"] = io::kSchemaVersion;
  doc["param"] = r.param_name;
  ordered_json records = ordered_json::array();
  for (const auto& rec : r.records) {
    ordered_json j;
    j["seed"] = rec.seed;
    j["instance"] = rec.instance;
    j["m"] = rec.m;
    j["n"] = rec.n;
    j["budget"] = rec.budget;
    if (rec.delta) {
      j["delta"] = *rec.delta;
    } else {
      j["delta"] = nullptr;
    }
    j["method"] = std::string(bench::to_string(rec.method));
    j["honest_value"] = rec.honest_value;
    j["outcome"] = rec.outcome;
    j["improvement"] = rec.improvement;
    if (with_timing) j["wall_time_ms"] = rec.wall_time_ms;
    j["status"] = rec.status;
    records.push_back(std::move(j));
  }
  doc["records"] = std::move(records);
  return doc.dump(2) + "\n";
}

int CmdBench(const std::string& which, const Options& opt, std::ostream& out) {
  bench::ExperimentConfig cfg = which == "budget" ? bench::budget_sweep_defaults()
                                : which == "size" ? bench::size_sweep_defaults()
                                                  : bench::tolerance_sweep_defaults();
  if (opt.seed) cfg.seed = *opt.seed;
  if (opt.m) cfg.m = *opt.m;
  if (opt.n) cfg.n = *opt.n;
  if (opt.samples) cfg.samples = *opt.samples;
  if (!opt.budgets.empty()) cfg.budgets = opt.budgets;
  if (!opt.deltas.empty()) cfg.deltas = opt.deltas;
  if (!opt.sizes.empty()) cfg.sizes = opt.sizes;
  if (!opt.methods.empty()) {
    cfg.methods.clear();
    for (const auto& m : opt.methods) cfg.methods.push_back(bench::parse_method(m));
  }
  cfg.mode = parse_response_mode(opt.mode);
  if (opt.bench_gap_tol) cfg.gap_tol = *opt.bench_gap_tol;
  if (opt.bench_node_limit) cfg.node_limit = *opt.bench_node_limit;
  if (opt.bench_time_limit) cfg.time_limit_s = *opt.bench_time_limit;
  if (opt.binsearch_outcome == "evaluated") {
    cfg.binsearch_outcome = bench::BinsearchOutcome::kEvaluated;
  } else if (opt.binsearch_outcome == "reported") {
    cfg.binsearch_outcome = bench::BinsearchOutcome::kReported;
  }
  cfg.threads = opt.threads;
  cfg.validate();

  const bench::SweepResult r = which == "budget" ? bench::sweep_budget(cfg)
                               : which == "size" ? bench::sweep_size(cfg)
                                                 : bench::sweep_tolerance(cfg);
  const bool timing = !opt.no_timing;
  Emit(opt, out,
       opt.format == "json" ? RecordsJson(r, timing)
                            : bench::records_csv(r.records, timing));
  if (!opt.summary.empty()) {
    io::write_file(opt.summary, bench::summary_csv(r.summary, timing));
  }
  if (!opt.svg.empty()) {
    io::write_file(opt.svg, bench::summary_svg(r, which + " sweep"));
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Options opt;
  CLI::App app{"Deception in zero-sum matrix games", "honeyx"};
  app.require_subcommand(1, 1);
  app.add_option("--seed", opt.seed, "Base seed for sampled instances");
  app.add_option("--out", opt.out, "Write the result to this file");
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* solve = app.add_subcommand("solve", "Solve a game's value and policies");
  solve->fallthrough();
  solve->add_option("game", opt.game_file, "Game JSON file")->required();

  auto* deceive = app.add_subcommand("deceive", "Compute a deceptive announcement");
  deceive->fallthrough();
  deceive->add_option("game", opt.game_file, "Game JSON file")->required();
  deceive->add_option("--method", opt.method)
      ->check(CLI::IsMember({"exact", "binsearch"}));
  deceive->add_option("--budget", opt.budget, "Deception budget")->required();
  deceive->add_option("--tol", opt.tol, "Binary search tolerance");
  deceive->add_flag("--robustify", opt.robustify, "Add the robust bound");
  deceive->add_option("--gap-tol", opt.gap_tol, "Exact solver gap");
  deceive->add_option("--node-limit", opt.node_limit,
                      "Exact solver node limit");
  deceive->add_option("--time-limit", opt.time_limit, "Seconds");

  auto* eval = app.add_subcommand("eval", "Evaluate a stored deception");
  eval->fallthrough();
  eval->add_option("game", opt.game_file, "Game JSON file")->required();
  eval->add_option("solution", opt.solution_file, "Solution JSON file")
      ->required();
  eval->add_option("--mode", opt.mode)
      ->check(CLI::IsMember({"optimistic", "pessimistic"}));

  auto* bench_cmd = app.add_subcommand("bench", "Run an experiment sweep");
  bench_cmd->fallthrough();
  bench_cmd->require_subcommand(1, 1);
  std::string which;
  for (const char* name : {"budget", "size", "tol"}) {
    auto* sub = bench_cmd->add_subcommand(name, std::string(name) + " sweep");
    sub->fallthrough();
    sub->callback([&which, name] { which = name; });
  }
  bench_cmd->add_option("--m", opt.m, "Rows per game");
  bench_cmd->add_option("--n", opt.n, "Columns per game");
  bench_cmd->add_option("--samples", opt.samples, "Games per cell");
  bench_cmd->add_option("--budgets", opt.budgets, "Comma-separated budgets")
      ->delimiter(',');
  bench_cmd->add_option("--deltas", opt.deltas, "Comma-separated tolerances")
      ->delimiter(',');
  bench_cmd->add_option("--sizes", opt.sizes, "Comma-separated square sizes")
      ->delimiter(',');
  bench_cmd
      ->add_option("--methods", opt.methods,
                   "exact, binsearch, binsearch_robust")
      ->delimiter(',');
  bench_cmd->add_option("--mode", opt.mode)
      ->check(CLI::IsMember({"optimistic", "pessimistic"}));
  bench_cmd->add_option("--binsearch-outcome", opt.binsearch_outcome)
      ->check(CLI::IsMember({"evaluated", "reported"}));
  bench_cmd->add_option("--gap-tol", opt.bench_gap_tol, "Exact solver gap");
  bench_cmd->add_option("--node-limit", opt.bench_node_limit,
                        "Exact solver node limit");
  bench_cmd->add_option("--time-limit", opt.bench_time_limit, "Seconds");
  bench_cmd->add_option("--threads", opt.threads, "Worker threads");
  bench_cmd->add_option("--summary", opt.summary, "Summary CSV path");
  bench_cmd->add_option("--svg", opt.svg, "Summary chart path");
  bench_cmd->add_flag("--no-timing", opt.no_timing,
                      "Leave wall_time_ms empty");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*solve) return CmdSolve(opt, out);
    if (*deceive) return CmdDeceive(opt, out);
    if (*eval) return CmdEval(opt, out);
    return CmdBench(which, opt, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const BudgetViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "solver error: " << e.what() << '\n';
    return kExitSolver;
  }
}

}  // namespace honeyx
