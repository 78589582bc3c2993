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

#ifndef POSDP_BASELINES_H_
#define POSDP_BASELINES_H_

#include <cstddef>
#include <optional>

#include "posdp/instance.h"
#include "posdp/positive_matrix.h"
#include "posdp/report.h"

namespace posdp {

inline constexpr std::size_t kExactMaxCols = 3;
inline constexpr std::size_t kExactMaxRows = 12;
inline constexpr double kExactFeasibilitySlack = 1e-9;

// Optimum of a packing or covering instance by vertex enumeration over all
// d-subsets of the row and nonnegativity facets. Throws ConfigError above
// kExactMaxCols columns or kExactMaxRows rows, DomainError if the packing LP
// is unbounded (a zero column) or the covering LP infeasible (a zero row).
double ExactOptTiny(const LpInstance& instance);

// The packing or covering solver with argmax oracles and U = 1, no
// preprocessing. `opt` overrides the instance's OPT.
SolveReport NonprivateMwuBaseline(const LpInstance& instance, double alpha,
                                  std::optional<double> opt = std::nullopt);

// True if the baseline run at `opt` keeps every row within 1 +- alpha.
bool BaselineFeasibleAt(const LpInstance& instance, double alpha, double opt);

// Sum over rows of 1 / (row maximum): the mass of a covering point that
// satisfies each row through its largest entry. Every row must be nonzero.
double CoveringUpperBound(const PositiveMatrix& a);

// Non-private geometric bisection for OPT over [1/(d M), d/m], stopping once
// the bracket ratio is at most 1 + alpha/2. For covering the upper end is
// raised to CoveringUpperBound when that is larger. Packing returns the
// largest bracket end known feasible, covering the smallest. Throws
// ConfigError if the instance declares no range.
double OptSearchHelper(const LpInstance& instance, double alpha);

}  // namespace posdp

#endif  // POSDP_BASELINES_H_
