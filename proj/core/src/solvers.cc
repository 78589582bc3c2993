// Copyright 2026 The posdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "posdp/solvers.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "posdp/capped_softmax.h"
#include "posdp/certify.h"
#include "posdp/errors.h"
#include "posdp/mechanisms.h"
#include "posdp/oracles.h"

namespace posdp {
namespace {

// Collects the trajectory when either a caller trace or a report digest is
// wanted.
class Recorder {
 public:
  Recorder(IterationTrace* trace, bool digest)
      : trace_(trace), active_(trace != nullptr || digest) {}

  void Step(std::size_t j, const OracleScores& eval) {
    if (!active_) return;
    chosen_.push_back(j);
    scores_.push_back(eval.scores[j]);
    if (trace_ != nullptr) {
      if (!std::isnan(eval.smax)) trace_->smax_path.push_back(eval.smax);
      if (!std::isnan(eval.smin)) trace_->smin_path.push_back(eval.smin);
    }
  }

  void Finish(SolveReport& report, std::span<const double> iterate,
              std::span<const std::int64_t> counts, double final_potential) {
    if (trace_ != nullptr) {
      trace_->chosen_coordinates = chosen_;
      trace_->oracle_scores = scores_;
      trace_->final_iterate.assign(iterate.begin(), iterate.end());
    }
    if (!active_ || scores_.empty()) return;
    TraceDigest digest;
    digest.steps = static_cast<std::int64_t>(chosen_.size());
    digest.column_counts.assign(counts.begin(), counts.end());
    const auto [lo, hi] = std::minmax_element(scores_.begin(), scores_.end());
    digest.score_min = *lo;
    digest.score_max = *hi;
    digest.score_mean = std::accumulate(scores_.begin(), scores_.end(), 0.0) /
                        static_cast<double>(scores_.size());
    digest.final_potential = final_potential;
    report.trace = digest;
  }

 private:
  IterationTrace* trace_;
  bool active_;
  std::vector<std::size_t> chosen_;
  std::vector<double> scores_;
};

void CheckLoads(std::span<const double> loads) {
  for (double v : loads) {
    if (!std::isfinite(v)) throw InternalError("constraint load overflowed");
  }
}

std::vector<double> Scaled(std::span<const double> v, double factor) {
  std::vector<double> out(v.begin(), v.end());
  for (double& e : out) e *= factor;
  return out;
}

double Sum(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0);
}

SolveReport BaseReport(const SolverParams& params, const RandomStream& rng) {
  SolveReport report;
  report.kind = params.kind;
  report.seed = rng.seed();
  report.params = params;
  report.vacuous_bound = params.vacuous;
  return report;
}

// Shared loop of the packing and covering solvers.
SolveReport SolvePure(ProblemKind kind, const PositiveMatrix& a,
                      const SolverConfig& config, RandomStream& rng,
                      IterationTrace* trace) {
  const bool packing = kind == ProblemKind::kPacking;
  const std::size_t n = a.rows();
  const std::size_t d = a.cols();
  InstanceShape shape;
  shape.rows = n;
  shape.cols = d;
  shape.cap_rows = n;
  shape.packing_bound = DeclaredEntryBound(a, config.range);
  const SolverParams params = DeriveParams(kind, shape, config);
  const double opt = *params.opt;
  const PositiveMatrix work = config.preprocess ? a.Clipped(*params.H) : a;

  Recorder recorder(trace, config.trace);
  std::vector<double> loads(n, 0.0);
  std::vector<std::int64_t> counts(d, 0);
  for (std::int64_t t = 0; t < params.T; ++t) {
    const OracleScores eval = packing ? PackingScores(work, loads, params)
                                      : CoveringScores(work, loads, params);
    const std::size_t j =
        ExpMechanism(eval.scores, params.sensitivity, params.eps_prime, rng);
    recorder.Step(j, eval);
    ++counts[j];
    work.AddColumn(j, opt, loads);
  }
  CheckLoads(loads);

  std::vector<double> iterate(d);
  std::vector<double> solution(d);
  for (std::size_t j = 0; j < d; ++j) {
    iterate[j] = static_cast<double>(counts[j]) * opt;
    solution[j] = iterate[j] / static_cast<double>(params.T);
  }
  if (packing && config.preprocess) {
    solution = PostProcessPacking(solution, *params.H);
  }

  const std::vector<double> scaled = Scaled(loads, *params.eta);
  const double potential = packing ? SmaxU(scaled, params.U).value
                                   : SminU(scaled, params.U).value;

  SolveReport report = BaseReport(params, rng);
  report.objective = Sum(solution);
  const LpInstance original =
      packing ? LpInstance::Packing(a) : LpInstance::Covering(a);
  report.violations = TakeCensus(original, solution, params.alpha, params.s);
  report.solution = std::move(solution);
  recorder.Finish(report, iterate, counts, potential);
  return report;
}

struct MixedRun {
  std::vector<std::int64_t> counts;
  std::vector<double> iterate;  // x_T
  std::vector<double> p_loads;  // P x_T on the working P
  std::vector<double> c_loads;  // C x_T on the working C
};

MixedRun RunMixedLoop(const PositiveMatrix* p, const PositiveMatrix& c,
                      const SolverParams& params, RandomStream& rng,
                      Recorder& recorder) {
  const std::size_t d = c.cols();
  MixedRun run;
  run.counts.assign(d, 0);
  if (p != nullptr) run.p_loads.assign(p->rows(), 0.0);
  run.c_loads.assign(c.rows(), 0.0);
  for (std::int64_t t = 0; t < params.T; ++t) {
    const OracleScores eval = MpcScores(p, c, run.p_loads, run.c_loads, params.U);
    const std::size_t j =
        ExpMechanism(eval.scores, params.sensitivity, params.eps_prime, rng);
    recorder.Step(j, eval);
    ++run.counts[j];
    if (p != nullptr) p->AddColumn(j, params.step, run.p_loads);
    c.AddColumn(j, params.step, run.c_loads);
  }
  CheckLoads(run.p_loads);
  CheckLoads(run.c_loads);
  run.iterate.resize(d);
  for (std::size_t j = 0; j < d; ++j) {
    run.iterate[j] = static_cast<double>(run.counts[j]) * params.step;
  }
  return run;
}

// Scale search on the scoring matrices, then the census on the original
// instance.
void FinishMixed(const PositiveMatrix& p_original, const PositiveMatrix& c_original,
                 const PositiveMatrix* p_scoring, const MixedRun& run,
                 const SolverParams& params, RandomStream& rng,
                 Recorder& recorder, SolveReport& report) {
  std::vector<double> p_loads;
  if (p_scoring != nullptr) p_loads = p_scoring->Multiply(run.iterate);
  const std::vector<double> c_loads = c_original.Multiply(run.iterate);
  const std::vector<double> grid =
      ScaleGrid(*params.m, *params.M, params.alpha, params.T);
  const double alpha = params.alpha;
  const ScaleChoice choice = ScaleSearch(
      grid,
      [&](double scale) {
        return CountScaledViolations(p_loads, c_loads, scale, alpha);
      },
      params.eps_prime, rng);

  std::vector<double> solution = Scaled(run.iterate, choice.scale);
  double ratio = 0.0;
  if (!run.p_loads.empty()) {
    ratio = SmaxU(run.p_loads, params.U).value /
            SminU(run.c_loads, params.U).value;
    report.ratio_certificate = ratio;
  }
  report.scale = choice.scale;
  report.objective = Sum(solution);
  report.violations =
      TakeCensus(LpInstance::Mixed(p_original, c_original), solution,
                 params.alpha, params.s);
  report.solution = std::move(solution);
  recorder.Finish(report, run.iterate, run.counts, ratio);
}

void CheckMixedShapes(const PositiveMatrix& p, const PositiveMatrix& c) {
  if (p.cols() != c.cols()) {
    std::ostringstream msg;
    msg << "P has " << p.cols() << " columns but C has " << c.cols();
    throw ParseError(msg.str());
  }
}

const EntryRange& RequireRange(const SolverConfig& config) {
  if (!config.range) throw ConfigError("missing entry range (pass --range)");
  return *config.range;
}

}  // namespace

SolveReport SolvePacking(const PositiveMatrix& a, const SolverConfig& config,
                         RandomStream& rng, IterationTrace* trace) {
  return SolvePure(ProblemKind::kPacking, a, config, rng, trace);
}

SolveReport SolveCovering(const PositiveMatrix& a, const SolverConfig& config,
                          RandomStream& rng, IterationTrace* trace) {
  return SolvePure(ProblemKind::kCovering, a, config, rng, trace);
}

SolveReport SolveMixedDd(const PositiveMatrix& p, const PositiveMatrix& c,
                         const SolverConfig& config, RandomStream& rng,
                         IterationTrace* trace) {
  config.Validate();
  CheckMixedShapes(p, c);
  if (!config.feasible_mass) throw ConfigError("missing V (pass --V)");
  const EntryRange& range = RequireRange(config);
  const double v = *config.feasible_mass;
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ConfigError("V must be positive and finite");
  }
  const PositiveMatrix perturbed = PerturbCovering(c, config.alpha, v);

  InstanceShape shape;
  shape.rows = p.rows() + c.rows();
  shape.cols = p.cols();
  shape.cap_rows = std::min(p.rows(), c.rows());
  shape.packing_bound = range.M;
  shape.covering_bound = range.M + config.alpha / v;
  const SolverParams params =
      DeriveParams(ProblemKind::kMixedDataDependent, shape, config);

  Recorder recorder(trace, config.trace);
  const MixedRun run = RunMixedLoop(&p, perturbed, params, rng, recorder);
  SolveReport report = BaseReport(params, rng);
  FinishMixed(p, c, &p, run, params, rng, recorder, report);
  return report;
}

SolveReport SolveMixedDi(const PositiveMatrix& p, const PositiveMatrix& c,
                         const SolverConfig& config, RandomStream& rng,
                         IterationTrace* trace) {
  config.Validate();
  CheckMixedShapes(p, c);
  const EntryRange& range = RequireRange(config);
  const double alpha = config.alpha;
  const double d = static_cast<double>(p.cols());

  const ColumnMaxEstimates est =
      EstimateColumnMaxima(p, range, config.epsilon, config.beta, rng);
  std::vector<double> kept_entries;
  std::size_t kept_rows = 0;
  for (std::size_t i = 0, f = 0; i < p.rows(); ++i) {
    if (f < est.filtered.size() && est.filtered[f] == i) {
      ++f;
      continue;
    }
    const auto row = p.row(i);
    kept_entries.insert(kept_entries.end(), row.begin(), row.end());
    ++kept_rows;
  }
  std::optional<PositiveMatrix> kept;
  if (kept_rows > 0) kept.emplace(kept_rows, p.cols(), std::move(kept_entries));
  const PositiveMatrix clipped = ClipCovering(c, est.estimates, alpha);

  const double k_max =
      *std::max_element(est.estimates.begin(), est.estimates.end());
  InstanceShape shape;
  shape.rows = p.rows() + c.rows();
  shape.cols = p.cols();
  shape.cap_rows = kept ? std::min(kept_rows, c.rows()) : c.rows();
  shape.packing_bound = k_max;
  shape.covering_bound = 40.0 * d * k_max / alpha;
  const SolverParams params =
      DeriveParams(ProblemKind::kMixedDataIndependent, shape, config);

  const PositiveMatrix* working_p = kept ? &*kept : nullptr;
  Recorder recorder(trace, config.trace);
  const MixedRun run = RunMixedLoop(working_p, clipped, params, rng, recorder);
  SolveReport report = BaseReport(params, rng);
  report.filtered_constraints = est.filtered;
  FinishMixed(p, c, working_p, run, params, rng, recorder, report);
  return report;
}

SolverConfig MergeInstanceMetadata(SolverConfig config,
                                   const LpInstance& instance) {
  if (!config.opt) config.opt = instance.opt;
  if (!config.feasible_mass) config.feasible_mass = instance.feasible_mass;
  if (!config.range) config.range = instance.range;
  return config;
}

SolveReport Solve(ProblemKind kind, const LpInstance& instance,
                  const SolverConfig& config, std::uint64_t seed,
                  IterationTrace* trace) {
  if (instance.kind != InstanceKindFor(kind)) {
    throw ConfigError(std::string("solver ") + ProblemKindName(kind) +
                      " cannot run on a " + InstanceKindName(instance.kind) +
                      " instance");
  }
  instance.Validate();
  const SolverConfig merged = MergeInstanceMetadata(config, instance);
  RandomStream rng(seed);
  switch (kind) {
    case ProblemKind::kPacking:
      return SolvePacking(*instance.A, merged, rng, trace);
    case ProblemKind::kCovering:
      return SolveCovering(*instance.A, merged, rng, trace);
    case ProblemKind::kMixedDataDependent:
      return SolveMixedDd(*instance.P, *instance.C, merged, rng, trace);
    case ProblemKind::kMixedDataIndependent:
      return SolveMixedDi(*instance.P, *instance.C, merged, rng, trace);
  }
  throw InternalError("unknown problem kind");
}

std::vector<double> PostProcessPacking(std::span<const double> x, double h) {
  std::vector<double> out(x.begin(), x.end());
  const double floor = 2.0 / h;
  for (double& v : out) {
    if (v <= floor) v = 0.0;
  }
  return out;
}

PositiveMatrix PerturbCovering(const PositiveMatrix& c, double alpha,
                               double feasible_mass) {
  return c.Shifted(alpha / feasible_mass);
}

PositiveMatrix ClipCovering(const PositiveMatrix& c,
                            std::span<const double> estimates, double alpha) {
  if (estimates.size() != c.cols()) {
    throw DomainError("one estimate per column is required");
  }
  const double d = static_cast<double>(c.cols());
  std::vector<double> entries(c.entries());
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) {
      double& e = entries[i * c.cols() + j];
      e = std::min(e + alpha * estimates[j] / d,
                   40.0 * d * estimates[j] / alpha);
    }
  }
  return PositiveMatrix(c.rows(), c.cols(), std::move(entries));
}

ColumnMaxEstimates EstimateColumnMaxima(const PositiveMatrix& p,
                                        const EntryRange& range,
                                        double epsilon, double beta,
                                        RandomStream& rng) {
  const double d = static_cast<double>(p.cols());
  ColumnMaxEstimates out;
  std::vector<bool> hit(p.rows(), false);
  std::vector<double> column(p.rows());
  for (std::size_t j = 0; j < p.cols(); ++j) {
    for (std::size_t i = 0; i < p.rows(); ++i) column[i] = p(i, j);
    const MaxEstimate est = MaxEstimator(column, range.m, range.M,
                                         epsilon / (2.0 * d), beta / (2.0 * d), rng);
    out.estimates.push_back(est.estimate);
    for (std::size_t i : est.filtered) hit[i] = true;
  }
  for (std::size_t i = 0; i < hit.size(); ++i) {
    if (hit[i]) out.filtered.push_back(i);
  }
  return out;
}

std::vector<double> ScaleGrid(double m, double M, double alpha,
                              std::int64_t steps) {
  if (!(m > 0.0) || !(M >= m) || !(alpha > 0.0) || steps < 1) {
    throw DomainError("scale grid needs 0 < m <= M, alpha > 0, T >= 1");
  }
  const double lo = m / (alpha * static_cast<double>(steps) * M);
  const double hi = 60.0 * M / (alpha * m);
  const double base = std::log1p(alpha);
  const auto first = static_cast<std::int64_t>(std::ceil(std::log(lo) / base));
  const auto last = static_cast<std::int64_t>(std::floor(std::log(hi) / base));
  std::vector<double> grid;
  for (std::int64_t i = first; i <= last; ++i) {
    grid.push_back(std::pow(1.0 + alpha, static_cast<double>(i)));
  }
  if (grid.empty()) grid.push_back(lo);
  return grid;
}

std::int64_t CountScaledViolations(std::span<const double> p_loads,
                                   std::span<const double> c_loads,
                                   double scale, double alpha) {
  std::int64_t count = 0;
  for (double v : p_loads) {
    if (IsViolated(scale * v, 1.0 + alpha, Direction::kAtMost)) ++count;
  }
  for (double v : c_loads) {
    if (IsViolated(scale * v, 1.0 - alpha, Direction::kAtLeast)) ++count;
  }
  return count;
}

}  // namespace posdp
