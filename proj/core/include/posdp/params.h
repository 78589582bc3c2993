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

#ifndef POSDP_PARAMS_H_
#define POSDP_PARAMS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "posdp/instance.h"
#include "posdp/mechanisms.h"

namespace posdp {

enum class ProblemKind {
  kPacking,
  kCovering,
  kMixedDataDependent,    // perturbed C, caller supplies V
  kMixedDataIndependent,  // private column maxima, filtered P, clipped C
};

const char* ProblemKindName(ProblemKind kind);  // packing, covering, mixed-dd, mixed-di
ProblemKind ParseProblemKind(std::string_view name);
InstanceKind InstanceKindFor(ProblemKind kind);

// Iteration and sparsity counts beyond these are refused rather than run.
inline constexpr std::int64_t kMaxIterations = 200'000'000;
inline constexpr std::int64_t kMaxSparsity = std::int64_t{1} << 62;

struct SolverConfig {
  double alpha = 0.1;
  double beta = 0.05;
  double epsilon = 1.0;  // kArgmaxEpsilon selects the deterministic oracles
  std::optional<double> delta;  // required unless epsilon is infinite
  std::optional<double> opt;
  std::optional<double> feasible_mass;  // V
  std::optional<EntryRange> range;
  bool preprocess = false;
  bool trace = false;

  // Range checks on alpha, beta, epsilon and delta. Throws ConfigError.
  void Validate() const;
};

// What parameter derivation needs to know about the (possibly preprocessed)
// instance.
struct InstanceShape {
  std::size_t rows = 1;       // n, all constraints
  std::size_t cols = 1;       // d
  std::size_t cap_rows = 1;   // rows of the smallest capped simplex in use
  double packing_bound = 1;   // S (entry bound of A or P)
  double covering_bound = 1;  // R (mixed only)
};

struct SolverParams {
  ProblemKind kind = ProblemKind::kPacking;
  double alpha = 0;
  double beta = 0;
  double epsilon = 0;
  double delta = 0;      // 0 in argmax mode without a declared delta
  double eps_prime = 0;  // per-step budget of the iterative oracle
  std::int64_t T = 1;
  std::int64_t s = 1;
  // Cap actually used: 1/s, or 1/cap_rows when s exceeds the row count.
  double U = 1;
  bool vacuous = false;  // s > cap_rows, the violation bound says nothing
  double sensitivity = 0;
  double step = 0;  // per-iteration increment of the chosen coordinate
  std::optional<double> opt;
  std::optional<double> H;
  std::optional<double> eta;
  std::optional<double> S;
  std::optional<double> R;
  std::optional<double> V;
  std::optional<double> m;
  std::optional<double> M;

  // ln d + ln(T / beta), the log factor of every sparsity formula.
  double LogFactor(std::size_t cols) const;

  friend bool operator==(const SolverParams&, const SolverParams&) = default;
};

// Derives T, eps', s, U, step size and sensitivity for one run. For mixed-di
// the shape must describe the instance after filtering and clipping, and
// config.range supplies (m, M). Throws ConfigError on missing OPT/V/range or
// iteration counts above kMaxIterations, BudgetError if composition fails.
SolverParams DeriveParams(ProblemKind kind, const InstanceShape& shape,
                          const SolverConfig& config);

// Packing and covering: entry bound S before preprocessing, the declared
// range maximum when present, else the largest entry.
double DeclaredEntryBound(const PositiveMatrix& a,
                          const std::optional<EntryRange>& range);

}  // namespace posdp

#endif  // POSDP_PARAMS_H_
