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

#ifndef POSDP_SOLVERS_H_
#define POSDP_SOLVERS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "posdp/instance.h"
#include "posdp/params.h"
#include "posdp/positive_matrix.h"
#include "posdp/random.h"
#include "posdp/report.h"

namespace posdp {

struct IterationTrace {
  std::vector<std::size_t> chosen_coordinates;  // length T
  std::vector<double> oracle_scores;            // score of the chosen column
  // Potential before each step: smax^U(eta A x_t) / smin^U(eta A x_t) for
  // packing / covering, smax^U(P x_t) and smin^U(C x_t) for mixed.
  std::vector<double> smax_path;
  std::vector<double> smin_path;
  // Cumulative iterate x_T before averaging or rescaling.
  std::vector<double> final_iterate;
};

// Each solver draws all of its randomness from `rng`, so a fixed seed gives a
// bit-identical report. `trace`, when given, receives the full trajectory.
// Census and objective are always evaluated on the matrices passed in.
SolveReport SolvePacking(const PositiveMatrix& a, const SolverConfig& config,
                         RandomStream& rng, IterationTrace* trace = nullptr);
SolveReport SolveCovering(const PositiveMatrix& a, const SolverConfig& config,
                          RandomStream& rng, IterationTrace* trace = nullptr);
SolveReport SolveMixedDd(const PositiveMatrix& p, const PositiveMatrix& c,
                         const SolverConfig& config, RandomStream& rng,
                         IterationTrace* trace = nullptr);
SolveReport SolveMixedDi(const PositiveMatrix& p, const PositiveMatrix& c,
                         const SolverConfig& config, RandomStream& rng,
                         IterationTrace* trace = nullptr);

// Fills OPT, V and the entry range from the instance where the config leaves
// them unset.
SolverConfig MergeInstanceMetadata(SolverConfig config,
                                   const LpInstance& instance);

// Dispatches on `kind` with a fresh RandomStream(seed). Throws ConfigError if
// the instance kind does not fit.
SolveReport Solve(ProblemKind kind, const LpInstance& instance,
                  const SolverConfig& config, std::uint64_t seed,
                  IterationTrace* trace = nullptr);

// Zeroes every entry at most 2/H.
std::vector<double> PostProcessPacking(std::span<const double> x, double h);

// C_ij + alpha / V.
PositiveMatrix PerturbCovering(const PositiveMatrix& c, double alpha,
                               double feasible_mass);

// min{C_ij + alpha K_j / d, 40 d K_j / alpha}.
PositiveMatrix ClipCovering(const PositiveMatrix& c,
                            std::span<const double> estimates, double alpha);

struct ColumnMaxEstimates {
  std::vector<double> estimates;       // K_j per column
  std::vector<std::size_t> filtered;   // P rows hit in any column, ascending
};

// Runs the max estimator on every column of P at budget epsilon / (2d) and
// failure probability beta / (2d).
ColumnMaxEstimates EstimateColumnMaxima(const PositiveMatrix& p,
                                        const EntryRange& range,
                                        double epsilon, double beta,
                                        RandomStream& rng);

// Powers of (1 + alpha) inside [m / (alpha T M), 60 M / (alpha m)].
std::vector<double> ScaleGrid(double m, double M, double alpha,
                              std::int64_t steps);

// Rows of P above 1 + alpha plus rows of C below 1 - alpha at loads scaled
// by `scale`.
std::int64_t CountScaledViolations(std::span<const double> p_loads,
                                   std::span<const double> c_loads,
                                   double scale, double alpha);

}  // namespace posdp

#endif  // POSDP_SOLVERS_H_
