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

#include "posdp/params.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "posdp/errors.h"

namespace posdp {
namespace {

std::int64_t CeilCount(double value, const char* what) {
  if (std::isnan(value)) throw InternalError(std::string(what) + " is NaN");
  const double count = std::max(1.0, std::ceil(value));
  if (count > static_cast<double>(kMaxIterations)) {
    std::ostringstream msg;
    msg << what << " = " << count << " exceeds the limit of " << kMaxIterations
        << "; raise alpha or shrink the instance";
    throw ConfigError(msg.str());
  }
  return static_cast<std::int64_t>(count);
}

std::int64_t CeilSparsity(double value) {
  if (std::isnan(value)) throw InternalError("sparsity is NaN");
  const double count = std::max(1.0, std::ceil(value));
  if (count >= static_cast<double>(kMaxSparsity)) return kMaxSparsity;
  return static_cast<std::int64_t>(count);
}

double RequirePositive(const std::optional<double>& value, const char* what,
                       const char* flag) {
  if (!value) {
    throw ConfigError(std::string("missing ") + what + " (pass " + flag + ")");
  }
  if (!(*value > 0.0) || !std::isfinite(*value)) {
    throw ConfigError(std::string(what) + " must be positive and finite");
  }
  return *value;
}

}  // namespace

const char* ProblemKindName(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kPacking:
      return "packing";
    case ProblemKind::kCovering:
      return "covering";
    case ProblemKind::kMixedDataDependent:
      return "mixed-dd";
    case ProblemKind::kMixedDataIndependent:
      return "mixed-di";
  }
  return "unknown";
}

ProblemKind ParseProblemKind(std::string_view name) {
  if (name == "packing") return ProblemKind::kPacking;
  if (name == "covering") return ProblemKind::kCovering;
  if (name == "mixed-dd") return ProblemKind::kMixedDataDependent;
  if (name == "mixed-di") return ProblemKind::kMixedDataIndependent;
  throw ConfigError("unknown problem kind '" + std::string(name) +
                    "' (expected packing, covering, mixed-dd or mixed-di)");
}

InstanceKind InstanceKindFor(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kPacking:
      return InstanceKind::kPacking;
    case ProblemKind::kCovering:
      return InstanceKind::kCovering;
    default:
      return InstanceKind::kMixed;
  }
}

void SolverConfig::Validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ConfigError("alpha must lie in (0, 1)");
  }
  if (!(beta > 0.0 && beta < 1.0)) throw ConfigError("beta must lie in (0, 1)");
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  if (IsArgmax(epsilon)) {
    if (delta && !(*delta > 0.0 && *delta < 1.0)) {
      throw ConfigError("delta must lie in (0, 1)");
    }
    return;
  }
  if (!delta) throw ConfigError("missing delta (pass --delta)");
  if (!(*delta > 0.0 && *delta < 1.0)) {
    throw ConfigError("delta must lie in (0, 1)");
  }
}

double SolverParams::LogFactor(std::size_t cols) const {
  return std::log(static_cast<double>(cols)) +
         std::log(static_cast<double>(T) / beta);
}

double DeclaredEntryBound(const PositiveMatrix& a,
                          const std::optional<EntryRange>& range) {
  const double bound = range ? range->M : a.MaxEntry();
  if (!(bound > 0.0)) throw ConfigError("constraint matrix is all zero");
  return bound;
}

SolverParams DeriveParams(ProblemKind kind, const InstanceShape& shape,
                          const SolverConfig& config) {
  config.Validate();
  if (shape.rows == 0 || shape.cols == 0 || shape.cap_rows == 0) {
    throw InternalError("instance shape has an empty dimension");
  }
  SolverParams p;
  p.kind = kind;
  p.alpha = config.alpha;
  p.beta = config.beta;
  p.epsilon = config.epsilon;
  p.delta = config.delta.value_or(0.0);

  const double alpha = config.alpha;
  const double ln_n = std::log(static_cast<double>(shape.rows));
  const double d = static_cast<double>(shape.cols);
  BudgetSplit split = BudgetSplit::kHalf;
  double sparsity_numerator = 0;  // s = numerator * LogFactor / eps'

  switch (kind) {
    case ProblemKind::kPacking:
    case ProblemKind::kCovering: {
      const bool packing = kind == ProblemKind::kPacking;
      const double opt = RequirePositive(config.opt, "OPT", "--opt");
      const double h = config.preprocess
                           ? (packing ? 2.0 : 40.0) * d / (alpha * opt)
                           : shape.packing_bound;
      p.opt = opt;
      p.H = h;
      p.eta = alpha / (10.0 * h * opt);
      p.step = opt;
      const double alpha_power = packing ? alpha * alpha : alpha;
      p.T = CeilCount(20.0 * h * opt * ln_n / alpha_power, "T");
      sparsity_numerator = (packing ? 60.0 : 120.0) * h * opt / alpha;
      break;
    }
    case ProblemKind::kMixedDataDependent: {
      const double v = RequirePositive(config.feasible_mass, "V", "--V");
      if (!config.range) throw ConfigError("missing entry range (pass --range)");
      const double s_bound = shape.packing_bound;
      const double r_bound = shape.covering_bound;
      p.V = v;
      p.S = s_bound;
      p.R = r_bound;
      p.m = config.range->m;
      p.M = config.range->M;
      p.step = alpha / (30.0 * (s_bound + r_bound));
      p.T = CeilCount(480.0 * (s_bound + r_bound) * v * ln_n /
                          (alpha * alpha * alpha),
                      "T");
      sparsity_numerator =
          30.0 * s_bound * r_bound * v * v / (alpha * alpha * alpha);
      break;
    }
    case ProblemKind::kMixedDataIndependent: {
      if (!config.range) throw ConfigError("missing entry range (pass --range)");
      const double s_bound = shape.packing_bound;
      const double r_bound = shape.covering_bound;
      p.S = s_bound;
      p.R = r_bound;
      p.m = config.range->m;
      p.M = config.range->M;
      p.step = alpha / (30.0 * (s_bound + r_bound));
      p.T = CeilCount(480.0 * d * d * ln_n / std::pow(alpha, 4.0), "T");
      split = BudgetSplit::kQuarter;
      sparsity_numerator = 4800.0 * d * d / std::pow(alpha, 4.0);
      break;
    }
  }

  if (IsArgmax(config.epsilon)) {
    p.eps_prime = kArgmaxEpsilon;
  } else {
    p.eps_prime = ComposeBudget(config.epsilon, *config.delta, p.T, split)
                      .per_step_epsilon;
  }
  p.s = CeilSparsity(sparsity_numerator * p.LogFactor(shape.cols) /
                     p.eps_prime);
  p.vacuous = p.s > static_cast<std::int64_t>(shape.cap_rows);
  p.U = p.vacuous ? 1.0 / static_cast<double>(shape.cap_rows)
                  : 1.0 / static_cast<double>(p.s);

  switch (kind) {
    case ProblemKind::kPacking:
    case ProblemKind::kCovering:
      p.sensitivity = 3.0 * *p.H * *p.opt * p.U;
      break;
    case ProblemKind::kMixedDataDependent:
      p.sensitivity = 3.0 * *p.S * *p.R * *p.V * *p.V * p.U / (alpha * alpha);
      break;
    case ProblemKind::kMixedDataIndependent:
      p.sensitivity = 120.0 * d * d * p.U / (alpha * alpha * alpha);
      break;
  }
  return p;
}

}  // namespace posdp
