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

#ifndef POSDP_CAPPED_SOFTMAX_H_
#define POSDP_CAPPED_SOFTMAX_H_

// Truncated softmax / softmin over the capped simplex
//
//   D^U = { r in simplex_n : max_i r_i <= U },
//   smax^U(x) = max_{r in D^U} <x, r> - sum_i r_i ln r_i,
//   smin^U(x) = -smax^U(-x).
//
// The maximizer is the gradient, r_i = min{U, exp(x_i - t)}, where the
// threshold t normalizes r onto the simplex. The threshold is found in closed
// form by water-filling over the coordinates sorted in decreasing order.
//
// All functions are pure and thread-safe.

#include <cstddef>
#include <span>
#include <vector>

namespace posdp {

// Absolute tolerance used to decide that a coordinate sits on the cap.
inline constexpr double kCapTieTolerance = 1e-12;

// A point of the capped simplex D^U.
class CappedWeights {
 public:
  // Throws DomainError if an entry lies outside [0, cap] (up to 1e-12), the
  // entries do not sum to one (up to 1e-9), or cap is not in (0, 1].
  // Throws InfeasibleCapError if cap < 1/n.
  CappedWeights(std::vector<double> weights, double cap);

  std::span<const double> weights() const { return weights_; }
  double cap() const { return cap_; }
  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }

  // Sum_i r_i ln r_i with 0 ln 0 = 0.
  double NegativeEntropy() const;

 private:
  std::vector<double> weights_;
  double cap_;
};

struct SmaxEval {
  double value;
  CappedWeights gradient;
  double threshold;
  // Coordinates pinned at the cap, ascending.
  std::vector<std::size_t> capped_set;
};

struct ThresholdSolution {
  double threshold;
  std::vector<std::size_t> capped_set;
};

// Validates (x, cap): throws DomainError on empty or non-finite x or a cap
// outside (0, 1], InfeasibleCapError when cap < 1/len(x).
void CheckCappedInput(std::span<const double> x, double cap);

SmaxEval SmaxU(std::span<const double> x, double cap);

// Delegates to SmaxU on -x.
SmaxEval SminU(std::span<const double> x, double cap);

ThresholdSolution SolveThreshold(std::span<const double> x, double cap);

// Mean of the s largest entries of x. Throws DomainError unless 1 <= s <= n.
double TopSAverage(std::span<const double> x, std::size_t s);

// Mean of the s smallest entries of x.
double BottomSAverage(std::span<const double> x, std::size_t s);

}  // namespace posdp

#endif  // POSDP_CAPPED_SOFTMAX_H_
