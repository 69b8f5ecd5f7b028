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

// Acceptance run: one PASS/FAIL line per criterion. Every criterion also
// records its non-timing results in a transcript; the last criterion reruns
// the others and compares transcripts byte for byte.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "honeyx/bench.hpp"
#include "honeyx/binsearch.hpp"
#include "honeyx/deception.hpp"
#include "honeyx/exact.hpp"
#include "honeyx/game.hpp"
#include "honeyx/victim.hpp"
#include "oracles.hpp"

namespace honeyx {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string Short(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

struct Result {
  bool pass = true;
  std::string detail;
  std::string transcript;

  void Require(bool ok) { pass = pass && ok; }
  void Log(const std::string& line) { transcript += line + "\n"; }
};

struct Context {
  std::filesystem::path out_dir;
  bool write_files = true;
};

double MaxRowOneNorm(const Matrix& g) {
  double best = 0.0;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    double s = 0.0;
    for (double v : g.row(i)) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

double MaxColumnAbsSum(const Matrix& d) {
  double best = 0.0;
  for (std::size_t j = 0; j < d.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < d.rows(); ++i) s += std::abs(d(i, j));
    best = std::max(best, s);
  }
  return best;
}

double Bilinear(const Matrix& a, const Vector& x, const Vector& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) s += x[i] * a(i, j) * y[j];
  }
  return s;
}

void WriteFile(const Context& ctx, const std::string& name,
               const std::string& text) {
  if (!ctx.write_files) return;
  std::ofstream(ctx.out_dir / name) << text;
}

// 1. Honest baseline at zero budget.
Result HonestBaseline(const Context&) {
  Result r;
  constexpr double kDelta = 1e-3;
  const auto start = Clock::now();
  double worst_exact = 0.0, worst_ratio = 0.0;
  for (int k = 0; k < 50; ++k) {
    const MatrixGame g = bench::sample_game(5, 5, 1000 + k);
    const double v = oracle::RowLpValue(g.payoffs());
    const ExactSolution ex = solve_exact(g, 0.0);
    const FeasibleSolution bs = solve_feasible(g, 0.0, kDelta);
    const double dev_exact = std::abs(v - ex.objective);
    const double dev_bs = std::abs(v - bs.v_best);
    const double allowed = kDelta * MaxRowOneNorm(g.payoffs());
    worst_exact = std::max(worst_exact, dev_exact);
    worst_ratio = std::max(worst_ratio, dev_bs / allowed);
    r.Require(dev_exact <= 1e-6 && dev_bs <= allowed);
    r.Log(Num(ex.objective) + " " + Num(bs.v_best));
  }
  const double secs = Seconds(start);
  r.Require(secs < 30.0);
  r.detail = "max |exact improvement| " + Short(worst_exact) +
             ", max binsearch improvement / (delta*L) " + Short(worst_ratio) +
             ", " + Short(secs) + " s";
  return r;
}

// 2. Robust and trusting victims coincide.
Result RobustVictim(const Context&) {
  Result r;
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> size(2, 5);
  double worst_grid = 0.0, worst_value = 0.0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t m = size(rng), n = size(rng);
    const Matrix gp = oracle::RandomMatrix(rng, m, n, -1.0, 1.0);
    const double budget = 2.0 * unit(rng);
    const Vector y = oracle::RandomSimplexPoint(rng, n);
    const Vector gy = gp.multiply(y);
    double grid_min = 1e300;
    oracle::ForEachGridPoint(m, 20, [&](const Vector& x) {
      grid_min = std::min(grid_min, dot(x, gy) - budget * *std::max_element(
                                                     x.begin(), x.end()));
    });
    const double closed = *std::min_element(gy.begin(), gy.end()) - budget;
    const double grid_dev = std::abs(grid_min - closed) / gp.max_abs();
    worst_grid = std::max(worst_grid, grid_dev);
    r.Require(grid_dev <= 0.1);

    const MatrixGame announced(gp);
    const GameSolution s = solve_game(announced);
    const Vector gys = gp.multiply(s.col_policy.probs());
    const double attained = *std::min_element(gys.begin(), gys.end()) - budget;
    const double robust = oracle::RowLpValue(gp) - budget;
    const double value_dev = std::abs(attained - robust);
    worst_value = std::max(worst_value, value_dev);
    r.Require(value_dev <= 1e-8 &&
              std::abs(robust_victim_value(announced, budget) - robust) <=
                  1e-8 &&
              is_rational_response(announced, s.col_policy, 1e-9));
    r.Log(Num(grid_min) + " " + Num(attained));
  }
  r.detail = "max grid deviation / max|G'| " + Short(worst_grid) +
             ", max robust value deviation " + Short(worst_value);
  return r;
}

// 3. max over admissible D of x^T D y equals budget * max_i x_i.
Result DualNorm(const Context&) {
  Result r;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> size(2, 6);
  double worst_excess = -1e300, worst_witness = 0.0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t m = size(rng), n = size(rng);
    const double budget = 3.0 * unit(rng);
    const Vector x = oracle::RandomSimplexPoint(rng, m);
    const Vector y = oracle::RandomSimplexPoint(rng, n);
    const double bound = budget * *std::max_element(x.begin(), x.end());
    double sampled = -1e300;
    for (int s = 0; s < 1000; ++s) {
      const Matrix d = oracle::RandomAdmissible(rng, m, n, budget);
      sampled = std::max(sampled, Bilinear(d, x, y));
    }
    worst_excess = std::max(worst_excess, sampled - bound);
    r.Require(sampled <= bound + 1e-9);
    const DualNormMax w = dual_norm_max(MixedStrategy(x, Side::kRow),
                                        MixedStrategy(y, Side::kColumn),
                                        budget);
    const double attained = Bilinear(w.witness.matrix(), x, y);
    const double dev = std::abs(attained - bound);
    worst_witness = std::max(worst_witness, dev);
    r.Require(dev <= 1e-9 &&
              MaxColumnAbsSum(w.witness.matrix()) <= budget + 1e-9);
    r.Log(Num(sampled) + " " + Num(attained));
  }
  r.detail = "max sampled excess over bound " + Short(worst_excess) +
             ", max witness deviation " + Short(worst_witness);
  return r;
}

constexpr std::int64_t kOracleNodeLimit = 20'000;

// 4. Exact solver against the 2x2 brute-force oracle.
Result OracleEquivalence(const Context&) {
  Result r;
  const auto start = Clock::now();
  ExactOptions opts;
  opts.node_limit = kOracleNodeLimit;
  opts.time_limit_s = 1e6;
  double worst_above = -1e300, worst_below = -1e300;
  int proven = 0, total = 0;
  for (int k = 0; k < 20; ++k) {
    const MatrixGame g = bench::sample_game(2, 2, 4000 + k);
    for (double budget : {0.2, 0.5, 1.0}) {
      const double grid =
          oracle::BruteForceDeception2x2(g.payoffs(), budget, 0.05).Solve();
      const ExactSolution ex = solve_exact(g, budget, opts);
      worst_above = std::max(worst_above, ex.objective - grid);
      worst_below = std::max(worst_below, grid - ex.objective);
      r.Require(ex.objective <= grid + 1e-6 && ex.objective >= grid - 0.15);
      proven += ex.status == ExactStatus::kProven;
      ++total;
      r.Log(Num(ex.objective) + " " + Num(ex.best_bound) + " " +
            std::string(to_string(ex.status)));
    }
  }
  const MatrixGame pennies(Matrix::FromRows({{1.0, -1.0}, {-1.0, 1.0}}));
  const ExactSolution mp = solve_exact(pennies, 0.4, opts);
  r.Require(std::abs(mp.objective + 0.2) <= 1e-3);
  r.Log(Num(mp.objective) + " " + std::string(to_string(mp.status)));
  const double secs = Seconds(start);
  r.Require(secs < 300.0);
  r.detail = "max (exact - oracle) " + Short(worst_above) +
             ", max (oracle - exact) " + Short(worst_below) + ", " +
             std::to_string(proven) + "/" + std::to_string(total) +
             " proven, pennies " + Num(mp.objective) + ", " + Short(secs) +
             " s";
  return r;
}

// 5. Binary search against the inducible-level LP.
Result BinarySearch(const Context&) {
  Result r;
  constexpr double kDelta = 1e-3, kBudget = 3.0;
  const auto start = Clock::now();
  double worst_level = 0.0, lemma_lo = 1e300, lemma_hi = -1e300;
  int count_mismatch = 0;
  for (int k = 0; k < 50; ++k) {
    const MatrixGame g = bench::sample_game(5, 5, 5000 + k);
    const FeasibleSolution bs = solve_feasible(g, kBudget, kDelta);
    const double v_star = oracle::InducibleLpValue(g.payoffs(), kBudget);
    const double level_dev = std::abs(bs.v_hat - v_star);
    worst_level = std::max(worst_level, level_dev);
    const double induced =
        oracle::RowLpValue(g.payoffs() + bs.d_bar.matrix()) - bs.v_hat;
    lemma_lo = std::min(lemma_lo, induced);
    lemma_hi = std::max(lemma_hi, induced);
    const auto& p = g.payoffs();
    const auto [lo, hi] = std::minmax_element(p.data().begin(), p.data().end());
    double width = (*hi + kBudget) - (*lo - kBudget);
    int halvings = 0;
    while (width > kDelta) {
      width /= 2.0;
      ++halvings;
    }
    count_mismatch += bs.inducibility_checks != halvings;
    r.Require(level_dev <= kDelta + 1e-6 && induced >= -1e-6 &&
              induced <= kDelta + 1e-6 && bs.inducibility_checks == halvings);
    r.Log(Num(bs.v_hat) + " " + Num(bs.v_best) + " " +
          std::to_string(bs.inducibility_checks));
  }
  const double secs = Seconds(start);
  r.Require(secs < 60.0);
  r.detail = "max |v_hat - v*| " + Short(worst_level) +
             ", v(G+D) - v_hat in [" + Short(lemma_lo) + ", " +
             Short(lemma_hi) + "], call-count mismatches " +
             std::to_string(count_mismatch) + ", " + Short(secs) + " s";
  return r;
}

using Key = std::pair<int, double>;  // (instance, parameter)

std::map<Key, std::map<bench::Method, bench::BenchRecord>> Index(
    const std::vector<bench::BenchRecord>& records, bool by_delta) {
  std::map<Key, std::map<bench::Method, bench::BenchRecord>> out;
  for (const auto& rec : records) {
    const double param = by_delta ? rec.delta.value_or(0.0) : rec.budget;
    out[{rec.instance, param}][rec.method] = rec;
  }
  return out;
}

// 6. Method ordering across budgets.
Result Ordering(const Context& ctx) {
  Result r;
  bench::ExperimentConfig cfg = bench::budget_sweep_defaults();
  cfg.m = cfg.n = 5;
  cfg.samples = 20;
  cfg.seed = 6000;
  cfg.budgets = {0.0, 1.0, 2.0, 3.0};
  cfg.deltas = {1e-3};
  cfg.node_limit = 100'000;
  cfg.time_limit_s = 1e6;
  const auto start = Clock::now();
  const bench::SweepResult sweep = bench::sweep_budget(cfg);
  const double secs = Seconds(start);
  const auto cells = Index(sweep.records, false);
  int violations = 0, excluded = 0, checked = 0;
  std::map<int, std::pair<double, double>> last_exact;  // budget, improvement
  for (const auto& [key, methods] : cells) {
    const auto& ex = methods.at(bench::Method::kExact);
    const auto& bs = methods.at(bench::Method::kBinsearch);
    const auto& rb = methods.at(bench::Method::kBinsearchRobust);
    if (ex.status != "proven") {
      ++excluded;
    } else {
      ++checked;
      if (!(ex.improvement + cfg.gap_tol >= bs.improvement &&
            bs.improvement >= rb.improvement - 1e-6)) {
        ++violations;
      }
    }
    if (rb.improvement > bs.improvement + 1e-6) ++violations;
    auto it = last_exact.find(key.first);
    if (it != last_exact.end() &&
        ex.improvement < it->second.second - cfg.gap_tol) {
      ++violations;
    }
    last_exact[key.first] = {key.second, ex.improvement};
  }
  r.Require(violations == 0 && checked > 0);
  const std::string records = bench::records_csv(sweep.records, false);
  const std::string summary = bench::summary_csv(sweep.summary, false);
  WriteFile(ctx, "budget_sweep_records.csv", records);
  WriteFile(ctx, "budget_sweep_summary.csv", summary);
  r.transcript = records + summary;
  std::string means;
  for (const auto& row : sweep.summary) {
    if (row.param == 3.0) {
      means += std::string(bench::to_string(row.method)) + "=" +
               Short(row.mean_improvement) + " ";
    }
  }
  r.detail = std::to_string(checked) + " cells checked, " +
             std::to_string(excluded) + " not proven (excluded), " +
             std::to_string(violations) + " violations; mean at budget 3: " +
             means + Short(secs) + " s";
  return r;
}

// Least-squares slope of log(time) against size.
double LogSlope(const std::vector<std::pair<double, double>>& points) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(points.size());
  for (const auto& [x, t] : points) {
    const double y = std::log(std::max(t, 1e-9));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

constexpr std::int64_t kScalingNodeLimit = 5'000;

// 7. Runtime growth with game size.
Result Scaling(const Context&) {
  Result r;
  constexpr double kBudget = 3.0;
  constexpr int kInstances = 3;
  ExactOptions opts;
  opts.node_limit = kScalingNodeLimit;
  opts.time_limit_s = 1e6;
  std::vector<std::pair<double, double>> exact_pts, bs_pts;
  std::string sizes;
  for (std::size_t n : {2, 3, 4, 5, 6}) {
    double total = 0.0;
    for (int k = 0; k < kInstances; ++k) {
      const MatrixGame g = bench::sample_game(n, n, 7000 + k);
      const auto start = Clock::now();
      const ExactSolution ex = solve_exact(g, kBudget, opts);
      total += Seconds(start);
      r.Log(Num(ex.objective) + " " + std::to_string(ex.nodes_explored) +
            " " + std::string(to_string(ex.status)));
    }
    exact_pts.emplace_back(n, total / kInstances);
    sizes += "exact n=" + std::to_string(n) + ":" +
             Short(1e3 * total / kInstances) + "ms ";
  }
  for (std::size_t n : {5, 10, 20, 30}) {
    double total = 0.0;
    for (int k = 0; k < kInstances; ++k) {
      const MatrixGame g = bench::sample_game(n, n, 7000 + k);
      const auto start = Clock::now();
      const FeasibleSolution bs = solve_feasible(g, kBudget, 1e-3);
      total += Seconds(start);
      r.Log(Num(bs.v_best));
    }
    bs_pts.emplace_back(n, total / kInstances);
    sizes += "binsearch n=" + std::to_string(n) + ":" +
             Short(1e3 * total / kInstances) + "ms ";
  }
  const double exact_growth = std::exp(LogSlope(exact_pts));
  const double bs_growth = std::exp(LogSlope(bs_pts));
  r.Require(exact_growth > bs_growth);
  r.detail = "time growth per unit size: exact " + Short(exact_growth) +
             "x, binsearch " + Short(bs_growth) + "x; " + sizes;
  return r;
}

// 8. Tolerance sweep properties.
Result Tolerance(const Context& ctx) {
  Result r;
  bench::ExperimentConfig cfg = bench::tolerance_sweep_defaults();
  cfg.m = cfg.n = 5;
  cfg.samples = 20;
  cfg.seed = 8000;
  cfg.budgets = {3.0};
  cfg.deltas = {1e-4, 1e-3, 1e-2, 1e-1};
  const bench::SweepResult sweep = bench::sweep_tolerance(cfg);
  int below = 0, cells = 0;
  for (const auto& [key, methods] : Index(sweep.records, true)) {
    ++cells;
    below += methods.at(bench::Method::kBinsearchRobust).improvement <=
             methods.at(bench::Method::kBinsearch).improvement + 1e-9;
  }
  std::vector<double> means;
  std::string curve;
  for (const auto& row : sweep.summary) {
    if (row.method == bench::Method::kBinsearch) {
      means.push_back(row.mean_improvement);
      curve += Short(row.mean_improvement) + " ";
    }
  }
  bool monotone = means.size() == cfg.deltas.size();
  for (std::size_t k = 1; k < means.size(); ++k) {
    monotone = monotone && means[k] >= means[k - 1] - 1e-6;
  }
  r.Require(below == cells && monotone);
  const std::string records = bench::records_csv(sweep.records, false);
  const std::string summary = bench::summary_csv(sweep.summary, false);
  WriteFile(ctx, "tolerance_sweep_records.csv", records);
  WriteFile(ctx, "tolerance_sweep_summary.csv", summary);
  r.transcript = records + summary;
  r.detail = std::to_string(below) + "/" + std::to_string(cells) +
             " records with robust <= optimistic; optimistic mean by delta: " +
             curve + (monotone ? "(nondecreasing)" : "(not monotone)");
  return r;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Result(const Context&)> run;
};

}  // namespace
}  // namespace honeyx

int main(int argc, char** argv) {
  using namespace honeyx;
  CLI::App app{"honeyx acceptance run"};
  std::string out_dir = ".";
  std::vector<int> only;
  app.add_option("--out-dir", out_dir, "Directory for sweep CSV files");
  app.add_option("--only", only, "Run only these criteria");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {1, "honest baseline", HonestBaseline},
      {2, "robust victim equivalence", RobustVictim},
      {3, "dual-norm identity", DualNorm},
      {4, "exact solver vs brute-force oracle", OracleEquivalence},
      {5, "binary-search correctness", BinarySearch},
      {6, "method ordering over budgets", Ordering},
      {7, "scaling trend", Scaling},
      {8, "tolerance sweep", Tolerance},
  };
  auto selected = [&](int id) {
    return only.empty() ||
           std::find(only.begin(), only.end(), id) != only.end();
  };

  Context ctx{out_dir, true};
  std::filesystem::create_directories(ctx.out_dir);
  std::map<int, std::string> transcripts;
  bool all = true;
  for (const auto& c : criteria) {
    if (!selected(c.id)) continue;
    Result r;
    try {
      r = c.run(ctx);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    all = all && r.pass;
    transcripts[c.id] = r.transcript;
    std::cout << "criterion " << c.id << " " << (r.pass ? "PASS" : "FAIL")
              << " " << c.name << ": " << r.detail << std::endl;
  }

  if (selected(9)) {
    Context rerun{out_dir, false};
    int differing = 0, compared = 0;
    bool ok = true;
    for (const auto& c : criteria) {
      if (!transcripts.count(c.id)) continue;
      Result r;
      try {
        r = c.run(rerun);
      } catch (const std::exception&) {
        ok = false;
      }
      ++compared;
      differing += r.transcript != transcripts[c.id];
    }
    ok = ok && differing == 0 && compared > 0;
    all = all && ok;
    std::cout << "criterion 9 " << (ok ? "PASS" : "FAIL")
              << " determinism: " << compared << " criteria rerun, "
              << differing << " transcripts differ" << std::endl;
  }
  return all ? 0 : 1;
}
