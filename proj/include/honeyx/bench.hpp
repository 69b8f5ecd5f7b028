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

// Seeded random instances, the improvement metric, and the budget, size and
// tolerance sweeps with CSV and SVG output.

#ifndef HONEYX_BENCH_HPP_
#define HONEYX_BENCH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "honeyx/deception.hpp"
#include "honeyx/game.hpp"
#include "honeyx/victim.hpp"

namespace honeyx::bench {

enum class Method { kExact, kBinsearch, kBinsearchRobust };

std::string_view to_string(Method method);
// Throws InvalidArgument for anything but exact, binsearch, binsearch_robust.
Method parse_method(std::string_view text);

// What the binsearch record reports as its outcome: the rational victim's
// response to the announced game, or the algorithm's own v_best.
enum class BinsearchOutcome { kEvaluated, kReported };

struct ExperimentConfig {
  std::size_t m = 5;
  std::size_t n = 5;
  int samples = 20;
  std::uint64_t seed = 0;
  std::vector<double> budgets = {0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
  std::vector<double> deltas = {1e-3};
  std::vector<std::size_t> sizes = {2, 3, 4, 5};  // size sweep, m = n
  std::vector<Method> methods = {Method::kExact, Method::kBinsearch,
                                 Method::kBinsearchRobust};
  ResponseMode mode = ResponseMode::kOptimistic;
  // Unset: evaluated for the budget and size sweeps, reported for the
  // tolerance sweep.
  std::optional<BinsearchOutcome> binsearch_outcome;
  double gap_tol = 1e-6;
  std::int64_t node_limit = 100'000;
  double time_limit_s = 600.0;
  // Worker threads; 0 reads HONEYX_THREADS and falls back to 1.
  int threads = 0;

  // Throws InvalidArgument.
  void validate() const;
};

// Desk-scale defaults for each sweep.
ExperimentConfig budget_sweep_defaults();
ExperimentConfig size_sweep_defaults();
ExperimentConfig tolerance_sweep_defaults();

struct BenchRecord {
  std::uint64_t seed = 0;
  int instance = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  double budget = 0.0;
  std::optional<double> delta;  // binsearch methods only
  Method method = Method::kExact;
  double honest_value = 0.0;
  double outcome = 0.0;
  double improvement = 0.0;
  double wall_time_ms = 0.0;
  std::string status;
};

struct SummaryRow {
  double param = 0.0;
  Method method = Method::kExact;
  double mean_improvement = 0.0;
  double std_improvement = 0.0;  // sample standard deviation
  double mean_time_ms = 0.0;
  int count = 0;  // records with a finite improvement
};

struct SweepResult {
  std::string param_name;  // "budget", "size" or "delta"
  std::vector<BenchRecord> records;
  std::vector<SummaryRow> summary;
};

// Entries i.i.d. uniform on [0, 1), drawn row-major from a splitmix64 stream
// started at `seed`.
MatrixGame sample_game(std::size_t m, std::size_t n, std::uint64_t seed);

struct Evaluation {
  double outcome = 0.0;
  double improvement = 0.0;  // v_G - outcome
};

// The victim answers the announced game G + D rationally in `mode`.
Evaluation evaluate_deception(const MatrixGame& game, const MixedStrategy& x,
                              const DeceptionMatrix& deception,
                              ResponseMode mode);

// Instance k of a sweep uses sample_game(..., cfg.seed + k).
SweepResult sweep_budget(const ExperimentConfig& cfg);
// Square games for each size, at cfg.budgets.front().
SweepResult sweep_size(const ExperimentConfig& cfg);
// Binsearch methods for each delta, at cfg.budgets.front(); exact is skipped.
SweepResult sweep_tolerance(const ExperimentConfig& cfg);

// CSV with a "# schema: 1" comment line and the fixed header. Without
// timing the wall_time_ms column is left empty.
std::string records_csv(const std::vector<BenchRecord>& records,
                        bool with_timing = true);
std::string summary_csv(const std::vector<SummaryRow>& summary,
                        bool with_timing = true);
// Mean improvement per method with a one-standard-deviation band.
std::string summary_svg(const SweepResult& result, std::string_view title);

int worker_count(const ExperimentConfig& cfg);

}  // namespace honeyx::bench

#endif  // HONEYX_BENCH_HPP_
