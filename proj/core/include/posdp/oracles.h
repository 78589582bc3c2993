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

#ifndef POSDP_ORACLES_H_
#define POSDP_ORACLES_H_

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "posdp/params.h"
#include "posdp/positive_matrix.h"
#include "posdp/random.h"

namespace posdp {

// Each *Scores function takes the current constraint loads (A x, or P x and
// C x) and returns one score per column. The matching *Oracle samples a
// column with the exponential mechanism at params.eps_prime and
// params.sensitivity.

struct OracleScores {
  std::vector<double> scores;
  // Potentials at the evaluated loads; NaN where the oracle has none.
  double smax = std::numeric_limits<double>::quiet_NaN();
  double smin = std::numeric_limits<double>::quiet_NaN();
};

// -OPT <grad smax^U(eta A x), A e_j>.
OracleScores PackingScores(const PositiveMatrix& a,
                           std::span<const double> loads,
                           const SolverParams& params);
std::size_t PackingOracle(const PositiveMatrix& a, std::span<const double> x,
                          const SolverParams& params, RandomStream& rng);

// OPT <grad smin^U(eta A x), A e_j>.
OracleScores CoveringScores(const PositiveMatrix& a,
                            std::span<const double> loads,
                            const SolverParams& params);
std::size_t CoveringOracle(const PositiveMatrix& a, std::span<const double> x,
                           const SolverParams& params, RandomStream& rng);

// -<grad smax^U(P x), P e_j> / <grad smin^U(C x), C e_j>. A null `p` stands
// for a packing side with no rows left, whose numerator is zero. Throws
// InternalError on a zero denominator.
OracleScores MpcScores(const PositiveMatrix* p, const PositiveMatrix& c,
                       std::span<const double> p_loads,
                       std::span<const double> c_loads, double cap);
std::size_t MpcOracle(const PositiveMatrix* p, const PositiveMatrix& c,
                      std::span<const double> x, const SolverParams& params,
                      RandomStream& rng);

}  // namespace posdp

#endif  // POSDP_ORACLES_H_
