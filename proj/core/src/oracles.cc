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

#include "posdp/oracles.h"

#include <cmath>
#include <sstream>

#include "posdp/capped_softmax.h"
#include "posdp/errors.h"
#include "posdp/mechanisms.h"

namespace posdp {
namespace {

std::vector<double> Scaled(std::span<const double> v, double factor) {
  std::vector<double> out(v.begin(), v.end());
  for (double& e : out) e *= factor;
  return out;
}

void CheckFinite(const std::vector<double>& scores) {
  for (double s : scores) {
    if (!std::isfinite(s)) {
      throw InternalError("oracle produced a non-finite score");
    }
  }
}

}  // namespace

OracleScores PackingScores(const PositiveMatrix& a,
                           std::span<const double> loads,
                           const SolverParams& params) {
  const SmaxEval eval = SmaxU(Scaled(loads, *params.eta), params.U);
  OracleScores out{a.WeightedColumnSums(eval.gradient.weights())};
  for (double& s : out.scores) s *= -*params.opt;
  CheckFinite(out.scores);
  out.smax = eval.value;
  return out;
}

std::size_t PackingOracle(const PositiveMatrix& a, std::span<const double> x,
                          const SolverParams& params, RandomStream& rng) {
  const OracleScores eval = PackingScores(a, a.Multiply(x), params);
  return ExpMechanism(eval.scores, params.sensitivity, params.eps_prime, rng);
}

OracleScores CoveringScores(const PositiveMatrix& a,
                            std::span<const double> loads,
                            const SolverParams& params) {
  const SmaxEval eval = SminU(Scaled(loads, *params.eta), params.U);
  OracleScores out{a.WeightedColumnSums(eval.gradient.weights())};
  for (double& s : out.scores) s *= *params.opt;
  CheckFinite(out.scores);
  out.smin = eval.value;
  return out;
}

std::size_t CoveringOracle(const PositiveMatrix& a, std::span<const double> x,
                           const SolverParams& params, RandomStream& rng) {
  const OracleScores eval = CoveringScores(a, a.Multiply(x), params);
  return ExpMechanism(eval.scores, params.sensitivity, params.eps_prime, rng);
}

OracleScores MpcScores(const PositiveMatrix* p, const PositiveMatrix& c,
                       std::span<const double> p_loads,
                       std::span<const double> c_loads, double cap) {
  const SmaxEval lower = SminU(c_loads, cap);
  const std::vector<double> gain =
      c.WeightedColumnSums(lower.gradient.weights());
  OracleScores out{std::vector<double>(c.cols(), 0.0)};
  out.smin = lower.value;
  std::vector<double> load;
  if (p != nullptr) {
    const SmaxEval upper = SmaxU(p_loads, cap);
    load = p->WeightedColumnSums(upper.gradient.weights());
    out.smax = upper.value;
  }
  for (std::size_t j = 0; j < out.scores.size(); ++j) {
    if (!(gain[j] > 0.0)) {
      std::ostringstream msg;
      msg << "covering gain of column " << j << " is zero";
      throw InternalError(msg.str());
    }
    if (p != nullptr) out.scores[j] = -load[j] / gain[j];
  }
  CheckFinite(out.scores);
  return out;
}

std::size_t MpcOracle(const PositiveMatrix* p, const PositiveMatrix& c,
                      std::span<const double> x, const SolverParams& params,
                      RandomStream& rng) {
  std::vector<double> p_loads;
  if (p != nullptr) p_loads = p->Multiply(x);
  const OracleScores eval = MpcScores(p, c, p_loads, c.Multiply(x), params.U);
  return ExpMechanism(eval.scores, params.sensitivity, params.eps_prime, rng);
}

}  // namespace posdp
