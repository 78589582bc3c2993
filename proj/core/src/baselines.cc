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

#include "posdp/baselines.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "posdp/errors.h"
#include "posdp/mechanisms.h"
#include "posdp/solvers.h"

namespace posdp {
namespace {

void RequirePureKind(const LpInstance& instance) {
  if (instance.kind == InstanceKind::kMixed || !instance.A) {
    throw ConfigError("expected a packing or covering instance");
  }
}

ProblemKind PureKind(const LpInstance& instance) {
  return instance.kind == InstanceKind::kPacking ? ProblemKind::kPacking
                                                 : ProblemKind::kCovering;
}

// Calls visit(subset) for every increasing k-subset of [0, n).
template <typename Visit>
void ForEachSubset(std::size_t n, std::size_t k, Visit visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

double ExactOptTiny(const LpInstance& instance) {
  RequirePureKind(instance);
  const PositiveMatrix& a = *instance.A;
  const std::size_t n = a.rows();
  const std::size_t d = a.cols();
  if (d > kExactMaxCols || n > kExactMaxRows) {
    throw ConfigError("exact solver handles at most 3 columns and 12 rows");
  }
  const bool packing = instance.kind == InstanceKind::kPacking;
  if (packing) {
    for (double m : a.ColumnMaxima()) {
      if (m == 0.0) throw DomainError("packing LP is unbounded (zero column)");
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const auto row = a.row(i);
      bool zero = true;
      for (double e : row) zero = zero && e == 0.0;
      if (zero) throw DomainError("covering LP is infeasible (zero row)");
    }
  }

  // Facets 0..n-1 are rows (A_i x = 1), n..n+d-1 are x_j = 0.
  double best = packing ? -std::numeric_limits<double>::infinity()
                        : std::numeric_limits<double>::infinity();
  Eigen::MatrixXd system(d, d);
  Eigen::VectorXd rhs(d);
  ForEachSubset(n + d, d, [&](const std::vector<std::size_t>& facets) {
    for (std::size_t r = 0; r < d; ++r) {
      const std::size_t f = facets[r];
      for (std::size_t j = 0; j < d; ++j) {
        system(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) =
            f < n ? a(f, j) : (f - n == j ? 1.0 : 0.0);
      }
      rhs(static_cast<Eigen::Index>(r)) = f < n ? 1.0 : 0.0;
    }
    const Eigen::FullPivLU<Eigen::MatrixXd> lu(system);
    if (lu.rank() < static_cast<Eigen::Index>(d)) return;
    const Eigen::VectorXd x = lu.solve(rhs);
    for (std::size_t j = 0; j < d; ++j) {
      if (x(static_cast<Eigen::Index>(j)) < -kExactFeasibilitySlack) return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      double load = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        load += a(i, j) * x(static_cast<Eigen::Index>(j));
      }
      if (packing ? load > 1.0 + kExactFeasibilitySlack
                  : load < 1.0 - kExactFeasibilitySlack) {
        return;
      }
    }
    const double objective = x.sum();
    best = packing ? std::max(best, objective) : std::min(best, objective);
  });
  if (!std::isfinite(best)) throw InternalError("no feasible vertex found");
  return best;
}

SolveReport NonprivateMwuBaseline(const LpInstance& instance, double alpha,
                                  std::optional<double> opt) {
  RequirePureKind(instance);
  SolverConfig config;
  config.alpha = alpha;
  config.epsilon = kArgmaxEpsilon;
  config.opt = opt ? opt : instance.opt;
  config.preprocess = false;
  return Solve(PureKind(instance), instance, config, 0);
}

bool BaselineFeasibleAt(const LpInstance& instance, double alpha, double opt) {
  return NonprivateMwuBaseline(instance, alpha, opt).violations.count == 0;
}

double CoveringUpperBound(const PositiveMatrix& a) {
  double total = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto row = a.row(i);
    total += 1.0 / *std::max_element(row.begin(), row.end());
  }
  return total;
}

double OptSearchHelper(const LpInstance& instance, double alpha) {
  RequirePureKind(instance);
  if (!instance.range) {
    throw ConfigError("OPT search needs a declared entry range");
  }
  const double d = static_cast<double>(instance.cols());
  double lo = 1.0 / (d * instance.range->M);
  double hi = d / instance.range->m;
  const bool packing = instance.kind == InstanceKind::kPacking;
  // Column maxima do not bound a covering optimum from above. Covering row i
  // through its largest entry is always feasible.
  if (!packing) hi = std::max(hi, CoveringUpperBound(*instance.A));
  const double stop = 1.0 + alpha / 2.0;
  if (packing && BaselineFeasibleAt(instance, alpha, hi)) return hi;
  if (!packing && BaselineFeasibleAt(instance, alpha, lo)) return lo;
  while (hi / lo > stop) {
    const double mid = std::sqrt(lo * hi);
    const bool feasible = BaselineFeasibleAt(instance, alpha, mid);
    if (feasible == packing) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return packing ? lo : hi;
}

}  // namespace posdp
