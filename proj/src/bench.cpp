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

#include "honeyx/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>

#include "honeyx/binsearch.hpp"
#include "honeyx/exact.hpp"

namespace honeyx::bench {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

enum class Sweep { kBudget, kSize, kTolerance };

std::uint64_t SplitMix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double ElapsedMs(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

std::string Sanitize(std::string text) {
  for (char& c : text) {
    if (c == ',' || c == '\n' || c == '\r' || c == '"') c = ' ';
  }
  return text;
}

void WarmUp() {
  static std::once_flag once;
  std::call_once(once, [] {
    const MatrixGame g = sample_game(3, 3, 0x5eed);
    solve_feasible(g, 1.0);
    ExactOptions opts;
    opts.node_limit = 5;
    solve_exact(g, 1.0, opts);
  });
}

struct BinsearchRun {
  FeasibleSolution sol;
  double solve_ms = 0.0;
  double robust_ms = 0.0;
  std::string error;
};

class InstanceRunner {
 public:
  InstanceRunner(const ExperimentConfig& cfg, Sweep sweep, int instance)
      : cfg_(cfg), sweep_(sweep), instance_(instance) {}

  std::vector<BenchRecord> Run() {
    switch (sweep_) {
      case Sweep::kBudget: {
        Prepare(cfg_.m, cfg_.n);
        for (double budget : cfg_.budgets) Cell(budget, cfg_.deltas.front());
        break;
      }
      case Sweep::kSize:
        for (std::size_t s : cfg_.sizes) {
          Prepare(s, s);
          Cell(cfg_.budgets.front(), cfg_.deltas.front());
        }
        break;
      case Sweep::kTolerance:
        Prepare(cfg_.m, cfg_.n);
        for (double delta : cfg_.deltas) Cell(cfg_.budgets.front(), delta);
        break;
    }
    return std::move(records_);
  }

 private:
  void Prepare(std::size_t m, std::size_t n) {
    game_.emplace(sample_game(m, n, cfg_.seed + static_cast<std::uint64_t>(instance_)));
    previous_exact_.clear();
    try {
      honest_ = solve_game(*game_).value;
      honest_error_.clear();
    } catch (const Error& e) {
      honest_ = kNaN;
      honest_error_ = e.what();
    }
  }

  BenchRecord Base(double budget, Method method) const {
    BenchRecord r;
    r.seed = cfg_.seed;
    r.instance = instance_;
    r.m = game_->rows();
    r.n = game_->cols();
    r.budget = budget;
    r.method = method;
    r.honest_value = honest_;
    r.outcome = kNaN;
    r.improvement = kNaN;
    return r;
  }

  void Finish(BenchRecord r, double outcome) {
    r.outcome = outcome;
    r.improvement = r.honest_value - outcome;
    records_.push_back(std::move(r));
  }

  void Fail(BenchRecord r, const std::string& what) {
    r.status = "error: " + Sanitize(what);
    records_.push_back(std::move(r));
  }

  void Cell(double budget, double delta) {
    std::optional<BinsearchRun> bs;
    for (Method method : cfg_.methods) {
      if (method == Method::kExact && sweep_ == Sweep::kTolerance) continue;
      BenchRecord r = Base(budget, method);
      if (method != Method::kExact) r.delta = delta;
      if (!honest_error_.empty()) {
        Fail(std::move(r), honest_error_);
        continue;
      }
      if (method == Method::kExact) {
        Exact(std::move(r));
        continue;
      }
      if (!bs) bs = Binsearch(budget, delta);
      if (!bs->error.empty()) {
        Fail(std::move(r), bs->error);
        continue;
      }
      try {
        r.status = "ok";
        if (method == Method::kBinsearchRobust) {
          r.wall_time_ms = bs->solve_ms + bs->robust_ms;
          Finish(std::move(r), *bs->sol.robust_bound);
        } else {
          r.wall_time_ms = bs->solve_ms;
          Finish(std::move(r), BinsearchOutcomeValue(bs->sol));
        }
      } catch (const Error& e) {
        Fail(std::move(r), e.what());
      }
    }
  }

  double BinsearchOutcomeValue(const FeasibleSolution& sol) const {
    const BinsearchOutcome kind = cfg_.binsearch_outcome.value_or(
        sweep_ == Sweep::kTolerance ? BinsearchOutcome::kReported
                                    : BinsearchOutcome::kEvaluated);
    if (kind == BinsearchOutcome::kReported) return sol.v_best;
    return evaluate_deception(*game_, sol.x_bar, sol.d_bar, cfg_.mode).outcome;
  }

  BinsearchRun Binsearch(double budget, double delta) const {
    BinsearchRun run;
    const bool robust =
        std::find(cfg_.methods.begin(), cfg_.methods.end(),
                  Method::kBinsearchRobust) != cfg_.methods.end();
    try {
      auto start = std::chrono::steady_clock::now();
      run.sol = solve_feasible(*game_, budget, delta);
      run.solve_ms = ElapsedMs(start);
      if (robust) {
        start = std::chrono::steady_clock::now();
        robustify(*game_, run.sol);
        run.robust_ms = ElapsedMs(start);
      }
    } catch (const Error& e) {
      run.error = e.what();
    }
    return run;
  }

  void Exact(BenchRecord r) {
    ExactOptions opts;
    opts.gap_tol = cfg_.gap_tol;
    opts.node_limit = cfg_.node_limit;
    opts.time_limit_s = cfg_.time_limit_s;
    for (const DeceptionMatrix& d : previous_exact_) {
      if (d.budget() <= r.budget) opts.warm_starts.push_back(d.matrix());
    }
    try {
      const auto start = std::chrono::steady_clock::now();
      const ExactSolution sol = solve_exact(*game_, r.budget, opts);
      r.wall_time_ms = ElapsedMs(start);
      r.status = std::string(to_string(sol.status));
      previous_exact_.push_back(sol.deception);
      Finish(std::move(r),
             evaluate_deception(*game_, sol.x, sol.deception, cfg_.mode)
                 .outcome);
    } catch (const Error& e) {
      Fail(std::move(r), e.what());
    }
  }

  const ExperimentConfig& cfg_;
  Sweep sweep_;
  int instance_;
  std::optional<MatrixGame> game_;
  double honest_ = kNaN;
  std::string honest_error_;
  std::vector<DeceptionMatrix> previous_exact_;
  std::vector<BenchRecord> records_;
};

double ParamOf(const BenchRecord& r, Sweep sweep) {
  switch (sweep) {
    case Sweep::kBudget:
      return r.budget;
    case Sweep::kSize:
      return static_cast<double>(r.m);
    case Sweep::kTolerance:
      return r.delta.value_or(kNaN);
  }
  return kNaN;
}

std::vector<SummaryRow> Summarize(const ExperimentConfig& cfg, Sweep sweep,
                                  const std::vector<BenchRecord>& records) {
  std::vector<double> params;
  switch (sweep) {
    case Sweep::kBudget:
      params = cfg.budgets;
      break;
    case Sweep::kSize:
      for (std::size_t s : cfg.sizes) params.push_back(static_cast<double>(s));
      break;
    case Sweep::kTolerance:
      params = cfg.deltas;
      break;
  }
  std::vector<SummaryRow> out;
  for (double p : params) {
    for (Method method : cfg.methods) {
      if (method == Method::kExact && sweep == Sweep::kTolerance) continue;
      SummaryRow row;
      row.param = p;
      row.method = method;
      double sum = 0.0;
      double time = 0.0;
      std::vector<double> values;
      for (const BenchRecord& r : records) {
        if (r.method != method || ParamOf(r, sweep) != p) continue;
        if (!std::isfinite(r.improvement)) continue;
        values.push_back(r.improvement);
        sum += r.improvement;
        time += r.wall_time_ms;
      }
      row.count = static_cast<int>(values.size());
      if (row.count > 0) {
        row.mean_improvement = sum / row.count;
        row.mean_time_ms = time / row.count;
        if (row.count > 1) {
          double ss = 0.0;
          for (double v : values) {
            ss += (v - row.mean_improvement) * (v - row.mean_improvement);
          }
          row.std_improvement = std::sqrt(ss / (row.count - 1));
        }
      } else {
        row.mean_improvement = row.std_improvement = row.mean_time_ms = kNaN;
      }
      out.push_back(row);
    }
  }
  return out;
}

SweepResult RunSweep(const ExperimentConfig& cfg, Sweep sweep) {
  cfg.validate();
  WarmUp();
  const int samples = cfg.samples;
  std::vector<std::vector<BenchRecord>> per_instance(samples);
  const int workers = std::min(worker_count(cfg), samples);
  if (workers <= 1) {
    for (int k = 0; k < samples; ++k) {
      per_instance[k] = InstanceRunner(cfg, sweep, k).Run();
    }
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int k = next++; k < samples; k = next++) {
          per_instance[k] = InstanceRunner(cfg, sweep, k).Run();
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  SweepResult result;
  result.param_name = sweep == Sweep::kBudget ? "budget"
                      : sweep == Sweep::kSize ? "size"
                                              : "delta";
  for (auto& recs : per_instance) {
    for (auto& r : recs) result.records.push_back(std::move(r));
  }
  result.summary = Summarize(cfg, sweep, result.records);
  return result;
}

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string Short(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kExact:
      return "exact";
    case Method::kBinsearch:
      return "binsearch";
    case Method::kBinsearchRobust:
      return "binsearch_robust";
  }
  return "unknown";
}

Method parse_method(std::string_view text) {
  if (text == "exact") return Method::kExact;
  if (text == "binsearch") return Method::kBinsearch;
  if (text == "binsearch_robust") return Method::kBinsearchRobust;
  throw InvalidArgument("unknown method \"" + std::string(text) + "\"");
}

void ExperimentConfig::validate() const {
  if (m < 1 || n < 1) throw InvalidArgument("m and n must be >= 1");
  if (samples < 1) throw InvalidArgument("samples must be >= 1");
  if (budgets.empty()) throw InvalidArgument("budgets must be non-empty");
  for (double b : budgets) {
    if (!(b >= 0.0) || !std::isfinite(b)) {
      throw InvalidArgument("budgets must be finite and >= 0");
    }
  }
  if (deltas.empty()) throw InvalidArgument("deltas must be non-empty");
  for (double d : deltas) {
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw InvalidArgument("deltas must be finite and > 0");
    }
  }
  if (sizes.empty()) throw InvalidArgument("sizes must be non-empty");
  for (std::size_t s : sizes) {
    if (s < 1) throw InvalidArgument("sizes must be >= 1");
  }
  if (methods.empty()) throw InvalidArgument("methods must be non-empty");
  if (!(gap_tol >= 0.0)) throw InvalidArgument("gap_tol must be >= 0");
  if (node_limit < 1) throw InvalidArgument("node_limit must be >= 1");
  if (!(time_limit_s > 0.0)) throw InvalidArgument("time_limit must be > 0");
  if (threads < 0) throw InvalidArgument("threads must be >= 0");
}

ExperimentConfig budget_sweep_defaults() { return {}; }

ExperimentConfig size_sweep_defaults() {
  ExperimentConfig cfg;
  cfg.samples = 5;
  cfg.budgets = {3.0};
  return cfg;
}

ExperimentConfig tolerance_sweep_defaults() {
  ExperimentConfig cfg;
  cfg.budgets = {3.0};
  cfg.deltas = {1e-4, 1e-3, 1e-2, 1e-1};
  cfg.methods = {Method::kBinsearch, Method::kBinsearchRobust};
  return cfg;
}

MatrixGame sample_game(std::size_t m, std::size_t n, std::uint64_t seed) {
  if (m < 1 || n < 1) throw InvalidArgument("sample_game: m, n must be >= 1");
  std::uint64_t state = seed;
  Matrix g(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      g(i, j) = static_cast<double>(SplitMix64(state) >> 11) * 0x1.0p-53;
    }
  }
  return MatrixGame(std::move(g));
}

Evaluation evaluate_deception(const MatrixGame& game, const MixedStrategy& x,
                              const DeceptionMatrix& deception,
                              ResponseMode mode) {
  const MatrixGame announced = perturb(game, deception);
  const VictimResponse r = select_response(game, announced, x, mode);
  Evaluation e;
  e.outcome = outcome(game, x, r.y);
  e.improvement = solve_game(game).value - e.outcome;
  return e;
}

SweepResult sweep_budget(const ExperimentConfig& cfg) {
  return RunSweep(cfg, Sweep::kBudget);
}

SweepResult sweep_size(const ExperimentConfig& cfg) {
  return RunSweep(cfg, Sweep::kSize);
}

SweepResult sweep_tolerance(const ExperimentConfig& cfg) {
  return RunSweep(cfg, Sweep::kTolerance);
}

std::string records_csv(const std::vector<BenchRecord>& records,
                        bool with_timing) {
  std::string out =
      "# schema: 1\n"
      "seed,instance,m,n,budget,delta,method,honest_value,outcome,"
      "improvement,wall_time_ms,status\n";
  for (const BenchRecord& r : records) {
    out += std::to_string(r.seed) + ',' + std::to_string(r.instance) + ',' +
           std::to_string(r.m) + ',' + std::to_string(r.n) + ',' +
           Num(r.budget) + ',' + (r.delta ? Num(*r.delta) : "") + ',' +
           std::string(to_string(r.method)) + ',' + Num(r.honest_value) +
           ',' + Num(r.outcome) + ',' + Num(r.improvement) + ',' +
           (with_timing ? Num(r.wall_time_ms) : "") + ',' + r.status + '\n';
  }
  return out;
}

std::string summary_csv(const std::vector<SummaryRow>& summary,
                        bool with_timing) {
  std::string out =
      "# schema: 1\n"
      "param,method,mean_improvement,std_improvement,mean_time_ms\n";
  for (const SummaryRow& s : summary) {
    out += Num(s.param) + ',' + std::string(to_string(s.method)) + ',' +
           Num(s.mean_improvement) + ',' + Num(s.std_improvement) + ',' +
           (with_timing ? Num(s.mean_time_ms) : "") + '\n';
  }
  return out;
}

std::string summary_svg(const SweepResult& result, std::string_view title) {
  constexpr double kWidth = 640, kHeight = 400;
  constexpr double kLeft = 70, kRight = 160, kTop = 40, kBottom = 50;
  const bool log_x = result.param_name == "delta";
  auto xv = [&](double p) { return log_x ? std::log10(p) : p; };

  std::vector<double> params;
  std::vector<Method> methods;
  double ylo = 0.0, yhi = 0.0;
  for (const SummaryRow& s : result.summary) {
    if (std::find(params.begin(), params.end(), s.param) == params.end()) {
      params.push_back(s.param);
    }
    if (std::find(methods.begin(), methods.end(), s.method) == methods.end()) {
      methods.push_back(s.method);
    }
    if (s.count == 0) continue;
    ylo = std::min(ylo, s.mean_improvement - s.std_improvement);
    yhi = std::max(yhi, s.mean_improvement + s.std_improvement);
  }
  if (yhi - ylo < 1e-12) yhi = ylo + 1.0;
  double xlo = 0.0, xhi = 1.0;
  if (!params.empty()) {
    xlo = xhi = xv(params.front());
    for (double p : params) {
      xlo = std::min(xlo, xv(p));
      xhi = std::max(xhi, xv(p));
    }
  }
  if (xhi - xlo < 1e-12) {
    xlo -= 0.5;
    xhi += 0.5;
  }
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double p) { return kLeft + (xv(p) - xlo) / (xhi - xlo) * pw; };
  auto py = [&](double v) { return kTop + (yhi - v) / (yhi - ylo) * ph; };

  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
      "height=\"400\" font-family=\"sans-serif\" font-size=\"12\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + Short(kLeft) + "\" y=\"24\" font-size=\"15\">";
  for (char c : title) {
    if (c == '<') {
      svg += "&lt;";
    } else if (c == '&') {
      svg += "&amp;";
    } else {
      svg += c;
    }
  }
  svg += "</text>\n";
  svg += "<rect x=\"" + Short(kLeft) + "\" y=\"" + Short(kTop) +
         "\" width=\"" + Short(pw) + "\" height=\"" + Short(ph) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
  for (double p : params) {
    svg += "<text x=\"" + Short(px(p)) + "\" y=\"" +
           Short(kTop + ph + 18) + "\" text-anchor=\"middle\">" + Short(p) +
           "</text>\n";
  }
  for (int t = 0; t <= 4; ++t) {
    const double v = ylo + (yhi - ylo) * t / 4.0;
    svg += "<text x=\"" + Short(kLeft - 6) + "\" y=\"" + Short(py(v) + 4) +
           "\" text-anchor=\"end\">" + Short(v) + "</text>\n";
  }
  svg += "<text x=\"" + Short(kLeft + pw / 2) + "\" y=\"" +
         Short(kHeight - 10) + "\" text-anchor=\"middle\">" +
         result.param_name + "</text>\n";
  svg += "<text x=\"16\" y=\"" + Short(kTop + ph / 2) +
         "\" transform=\"rotate(-90 16 " + Short(kTop + ph / 2) +
         ")\" text-anchor=\"middle\">mean improvement</text>\n";

  static constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                            "#9467bd"};
  for (std::size_t k = 0; k < methods.size(); ++k) {
    const char* color = kColors[k % 4];
    std::vector<const SummaryRow*> rows;
    for (const SummaryRow& s : result.summary) {
      if (s.method == methods[k] && s.count > 0) rows.push_back(&s);
    }
    if (rows.empty()) continue;
    std::string band, line;
    for (const SummaryRow* s : rows) {
      band += Short(px(s->param)) + "," +
              Short(py(s->mean_improvement + s->std_improvement)) + " ";
      line += Short(px(s->param)) + "," + Short(py(s->mean_improvement)) + " ";
    }
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
      band += Short(px((*it)->param)) + "," +
              Short(py((*it)->mean_improvement - (*it)->std_improvement)) + " ";
    }
    svg += std::string("<polygon points=\"") + band + "\" fill=\"" + color +
           "\" fill-opacity=\"0.15\" stroke=\"none\"/>\n";
    svg += std::string("<polyline points=\"") + line +
           "\" fill=\"none\" stroke-width=\"2\" stroke=\"" + color + "\"/>\n";
    const double ly = kTop + 16 + 20 * static_cast<double>(k);
    svg += "<line x1=\"" + Short(kLeft + pw + 12) + "\" y1=\"" + Short(ly) +
           "\" x2=\"" + Short(kLeft + pw + 36) + "\" y2=\"" + Short(ly) +
           "\" stroke-width=\"2\" stroke=\"" + color + "\"/>\n";
    svg += "<text x=\"" + Short(kLeft + pw + 42) + "\" y=\"" + Short(ly + 4) +
           "\">" + std::string(to_string(methods[k])) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

int worker_count(const ExperimentConfig& cfg) {
  int requested = cfg.threads;
  if (requested <= 0) {
    requested = 1;
    if (const char* env = std::getenv("HONEYX_THREADS")) {
      requested = std::max(1, std::atoi(env));
    }
    return requested;
  }
  if (const char* env = std::getenv("HONEYX_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) requested = std::min(requested, cap);
  }
  return std::max(1, requested);
}

}  // namespace honeyx::bench
