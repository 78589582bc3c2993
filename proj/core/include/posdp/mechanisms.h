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

#ifndef POSDP_MECHANISMS_H_
#define POSDP_MECHANISMS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "posdp/random.h"

namespace posdp {

// Passing this as the privacy parameter turns every mechanism into exact
// maximization (ties go to the smallest index). No randomness is consumed.
inline constexpr double kArgmaxEpsilon =
    std::numeric_limits<double>::infinity();

inline bool IsArgmax(double epsilon) { return epsilon == kArgmaxEpsilon; }

// Scores over a finite candidate set together with their sensitivity.
struct ScoredCandidates {
  std::vector<double> scores;
  double sensitivity = 1.0;
};

// Exponential mechanism: returns i with probability proportional to
// exp(epsilon * scores[i] / (2 * sensitivity)). Sampled with the Gumbel-max
// trick in log space, one Gumbel draw per candidate in index order.
//
// Throws DomainError on an empty candidate set, a non-finite score, a
// non-positive sensitivity or a non-positive epsilon.
std::size_t ExpMechanism(std::span<const double> scores, double sensitivity,
                         double epsilon, RandomStream& rng);
std::size_t ExpMechanism(const ScoredCandidates& candidates, double epsilon,
                         RandomStream& rng);

// Selection probabilities of the mechanism above, normalized in log space.
std::vector<double> ExpMechanismProbabilities(std::span<const double> scores,
                                              double sensitivity,
                                              double epsilon);

// Same distribution as ExpMechanism, sampled by inverting the cumulative
// distribution of ExpMechanismProbabilities with a single uniform draw. Kept
// as an independent sampler for cross-checking the Gumbel path.
std::size_t ExpMechanismByInversion(std::span<const double> scores,
                                    double sensitivity, double epsilon,
                                    RandomStream& rng);

// Additive utility loss of the mechanism that holds with probability
// 1 - beta: 2 * sensitivity * (ln candidates + ln(1/beta)) / epsilon.
double EmUtilityBound(double candidates, double beta, double epsilon,
                      double sensitivity);

enum class BudgetSplit {
  kHalf,     // eps' = eps / (2 sqrt(T ln(1/delta)))
  kQuarter,  // eps' = eps / (4 sqrt(T ln(1/delta))), half the budget reserved
};

// Per-step budget of T adaptive mechanism invocations under strong
// composition.
struct PrivacyBudget {
  double epsilon;
  double delta;
  double per_step_epsilon;
  std::int64_t steps;
  BudgetSplit split;

  // eps' sqrt(2 T ln(1/delta)) + T eps'^2 / 2.
  double Composed() const;
};

double StrongComposition(double per_step_epsilon, double delta,
                         std::int64_t steps);

// Throws DomainError for delta outside (0, 1), steps < 1 or epsilon <= 0, and
// BudgetError when the composed loss exceeds the share of epsilon assigned to
// the iterations (all of it for kHalf, half of it for kQuarter). An infinite
// epsilon yields an infinite per-step epsilon (argmax mode).
PrivacyBudget ComposeBudget(double total_epsilon, double delta,
                            std::int64_t steps, BudgetSplit split);

struct MaxEstimate {
  double estimate;                    // K = 2^k m
  int exponent;                       // k
  std::vector<std::size_t> filtered;  // {i : values[i] >= K}, ascending
};

// Private estimate of max(values) on the grid {2^k m : k = 0..ceil(log2(2M/m))}
// with score -|{i : a_i >= 2^k m}| - 2 (ln ln(2M/m) + ln(1/beta)) k / epsilon
// and sensitivity 1. Throws DomainError unless 0 < m <= M.
MaxEstimate MaxEstimator(std::span<const double> values, double m, double M,
                         double epsilon, double beta, RandomStream& rng);

// Number of grid points MaxEstimator chooses from.
int MaxEstimatorGridSize(double m, double M);

// 2 (ln ln(2M/m) + ln(1/beta)) (log2(2M/m) + 1) / epsilon: the high
// probability cap on how many values MaxEstimator filters out.
double MaxEstimatorFilterBound(double m, double M, double epsilon,
                               double beta);

struct ScaleChoice {
  std::size_t index;
  double scale;
  std::int64_t violations;
};

// Exponential mechanism over candidate scales scored by minus the number of
// constraints violated at that scale (sensitivity 1).
ScaleChoice ScaleSearch(
    std::span<const double> candidate_scales,
    const std::function<std::int64_t(double)>& violation_counter,
    double epsilon, RandomStream& rng);

}  // namespace posdp

#endif  // POSDP_MECHANISMS_H_
