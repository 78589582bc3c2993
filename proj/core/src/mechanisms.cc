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

#include "posdp/mechanisms.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "posdp/errors.h"

namespace posdp {
namespace {

void CheckCandidates(std::span<const double> scores, double sensitivity,
                     double epsilon) {
  if (scores.empty()) {
    throw DomainError("exponential mechanism over an empty candidate set");
  }
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!std::isfinite(scores[i])) {
      std::ostringstream msg;
      msg << "non-finite score for candidate " << i;
      throw DomainError(msg.str());
    }
  }
  if (!(sensitivity > 0.0) || !std::isfinite(sensitivity)) {
    throw DomainError("sensitivity must be positive and finite");
  }
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
}

std::size_t ArgmaxIndex(std::span<const double> scores) {
  return static_cast<std::size_t>(
      std::max_element(scores.begin(), scores.end()) - scores.begin());
}

}  // namespace

std::size_t ExpMechanism(std::span<const double> scores, double sensitivity,
                         double epsilon, RandomStream& rng) {
  CheckCandidates(scores, sensitivity, epsilon);
  if (IsArgmax(epsilon)) return ArgmaxIndex(scores);
  const double scale = epsilon / (2.0 * sensitivity);
  std::size_t best = 0;
  double best_key = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const double key = scale * scores[i] + rng.Gumbel();
    if (key > best_key) {
      best_key = key;
      best = i;
    }
  }
  return best;
}

std::size_t ExpMechanism(const ScoredCandidates& candidates, double epsilon,
                         RandomStream& rng) {
  return ExpMechanism(candidates.scores, candidates.sensitivity, epsilon, rng);
}

std::vector<double> ExpMechanismProbabilities(std::span<const double> scores,
                                              double sensitivity,
                                              double epsilon) {
  CheckCandidates(scores, sensitivity, epsilon);
  std::vector<double> probs(scores.size(), 0.0);
  if (IsArgmax(epsilon)) {
    probs[ArgmaxIndex(scores)] = 1.0;
    return probs;
  }
  const double scale = epsilon / (2.0 * sensitivity);
  const double top = *std::max_element(scores.begin(), scores.end());
  double total = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    probs[i] = std::exp(scale * (scores[i] - top));
    total += probs[i];
  }
  for (double& p : probs) p /= total;
  return probs;
}

std::size_t ExpMechanismByInversion(std::span<const double> scores,
                                    double sensitivity, double epsilon,
                                    RandomStream& rng) {
  const std::vector<double> probs =
      ExpMechanismProbabilities(scores, sensitivity, epsilon);
  if (IsArgmax(epsilon)) return ArgmaxIndex(scores);
  const double u = rng.Uniform01();
  double cumulative = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    cumulative += probs[i];
    if (u < cumulative) return i;
  }
  // Rounding left the cumulative sum a hair below 1.
  return probs.size() - 1;
}

double EmUtilityBound(double candidates, double beta, double epsilon,
                      double sensitivity) {
  return 2.0 * sensitivity * (std::log(candidates) + std::log(1.0 / beta)) /
         epsilon;
}

double StrongComposition(double per_step_epsilon, double delta,
                         std::int64_t steps) {
  const double t = static_cast<double>(steps);
  return per_step_epsilon * std::sqrt(2.0 * t * std::log(1.0 / delta)) +
         t * per_step_epsilon * per_step_epsilon / 2.0;
}

double PrivacyBudget::Composed() const {
  return StrongComposition(per_step_epsilon, delta, steps);
}

PrivacyBudget ComposeBudget(double total_epsilon, double delta,
                            std::int64_t steps, BudgetSplit split) {
  if (!(total_epsilon > 0.0)) throw DomainError("epsilon must be positive");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError("delta must lie in (0, 1)");
  }
  if (steps < 1) throw DomainError("composition needs at least one step");

  const double denominator_factor = split == BudgetSplit::kHalf ? 2.0 : 4.0;
  const double share =
      split == BudgetSplit::kHalf ? total_epsilon : total_epsilon / 2.0;
  PrivacyBudget budget{total_epsilon, delta, 0.0, steps, split};
  budget.per_step_epsilon =
      total_epsilon /
      (denominator_factor *
       std::sqrt(static_cast<double>(steps) * std::log(1.0 / delta)));
  if (IsArgmax(total_epsilon)) return budget;

  const double composed = budget.Composed();
  if (composed > share) {
    std::ostringstream msg;
    msg << "strong composition of " << steps << " steps at eps' = "
        << budget.per_step_epsilon << " gives " << composed
        << ", exceeding the budget " << share;
    throw BudgetError(msg.str());
  }
  return budget;
}

int MaxEstimatorGridSize(double m, double M) {
  if (!(m > 0.0) || !(M >= m) || !std::isfinite(M)) {
    throw DomainError("max estimator needs 0 < m <= M");
  }
  return static_cast<int>(std::ceil(std::log2(2.0 * M / m))) + 1;
}

double MaxEstimatorFilterBound(double m, double M, double epsilon,
                               double beta) {
  const double ratio = 2.0 * M / m;
  return 2.0 * (std::log(std::log(ratio)) + std::log(1.0 / beta)) *
         (std::log2(ratio) + 1.0) / epsilon;
}

MaxEstimate MaxEstimator(std::span<const double> values, double m, double M,
                         double epsilon, double beta, RandomStream& rng) {
  const int grid = MaxEstimatorGridSize(m, M);
  if (!(beta > 0.0 && beta < 1.0)) {
    throw DomainError("max estimator needs beta in (0, 1)");
  }
  for (double v : values) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw DomainError("max estimator values must be finite and >= 0");
    }
  }
  if (values.empty()) return MaxEstimate{m, 0, {}};

  const double penalty =
      IsArgmax(epsilon)
          ? 0.0
          : 2.0 * (std::log(std::log(2.0 * M / m)) + std::log(1.0 / beta)) /
                epsilon;
  std::vector<double> scores(static_cast<std::size_t>(grid));
  for (int k = 0; k < grid; ++k) {
    const double level = std::ldexp(m, k);
    const auto above = std::count_if(values.begin(), values.end(),
                                     [&](double v) { return v >= level; });
    scores[static_cast<std::size_t>(k)] =
        -static_cast<double>(above) - penalty * k;
  }
  const int k = static_cast<int>(ExpMechanism(scores, 1.0, epsilon, rng));
  MaxEstimate out{std::ldexp(m, k), k, {}};
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= out.estimate) out.filtered.push_back(i);
  }
  return out;
}

ScaleChoice ScaleSearch(
    std::span<const double> candidate_scales,
    const std::function<std::int64_t(double)>& violation_counter,
    double epsilon, RandomStream& rng) {
  if (candidate_scales.empty()) {
    throw DomainError("scale search over an empty candidate set");
  }
  std::vector<std::int64_t> counts(candidate_scales.size());
  std::vector<double> scores(candidate_scales.size());
  for (std::size_t i = 0; i < candidate_scales.size(); ++i) {
    counts[i] = violation_counter(candidate_scales[i]);
    scores[i] = -static_cast<double>(counts[i]);
  }
  const std::size_t pick = ExpMechanism(scores, 1.0, epsilon, rng);
  return ScaleChoice{pick, candidate_scales[pick], counts[pick]};
}

}  // namespace posdp
