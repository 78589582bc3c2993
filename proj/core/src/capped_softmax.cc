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

#include "posdp/capped_softmax.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include "posdp/errors.h"

namespace posdp {
namespace {

// Residual mass at or below this is treated as zero (cap exactly 1/s).
constexpr double kDegenerateMass = 1e-12;
// Relative slack when testing whether the first uncapped coordinate fits
// under the cap; absorbs rounding in cap * tail.
constexpr double kAcceptSlack = 1e-12;

struct WaterFill {
  std::vector<double> gradient;
  double threshold;
  double value;
};

// Water-filling over coordinates sorted by decreasing value. For k capped
// coordinates the remaining mass 1 - kU is spread proportionally to exp(x_i)
// over the rest; the smallest k whose largest uncapped weight fits under U is
// the solution. Every exponential is taken relative to the largest remaining
// coordinate, so nothing overflows.
WaterFill Fill(std::span<const double> x, double cap) {
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] > x[b]; });

  // tail[k] = sum_{i >= k} exp(x_(i) - x_(k)), always in [1, n - k].
  std::vector<double> tail(n);
  tail[n - 1] = 1.0;
  for (std::size_t k = n - 1; k-- > 0;) {
    tail[k] = 1.0 + std::exp(x[order[k + 1]] - x[order[k]]) * tail[k + 1];
  }

  const double log_cap = std::log(cap);
  WaterFill out{std::vector<double>(n, 0.0), 0.0, 0.0};
  double capped_sum = 0.0;
  std::size_t k = 0;
  for (; k < n; ++k) {
    const double residual = 1.0 - static_cast<double>(k) * cap;
    if (residual <= kDegenerateMass) break;
    if (residual <= cap * tail[k] * (1.0 + kAcceptSlack)) {
      const double lead = x[order[k]];
      out.threshold = lead + std::log(tail[k]) - std::log(residual);
      for (std::size_t i = 0; i < k; ++i) out.gradient[order[i]] = cap;
      const double scale = residual / tail[k];
      for (std::size_t i = k; i < n; ++i) {
        out.gradient[order[i]] =
            std::min(cap, scale * std::exp(x[order[i]] - lead));
      }
      out.value = cap * (capped_sum - static_cast<double>(k) * log_cap) +
                  residual * out.threshold;
      return out;
    }
    capped_sum += x[order[k]];
  }

  // Degenerate case: the top k coordinates absorb all of the mass.
  for (std::size_t i = 0; i < k; ++i) out.gradient[order[i]] = cap;
  out.threshold = x[order[k - 1]] - log_cap;
  out.value = cap * (capped_sum - static_cast<double>(k) * log_cap);
  return out;
}

std::vector<std::size_t> CappedSet(std::span<const double> gradient,
                                   double cap) {
  std::vector<std::size_t> capped;
  for (std::size_t i = 0; i < gradient.size(); ++i) {
    if (cap - gradient[i] <= kCapTieTolerance) capped.push_back(i);
  }
  return capped;
}

std::vector<double> Negated(std::span<const double> x) {
  std::vector<double> out(x.size());
  std::transform(x.begin(), x.end(), out.begin(), std::negate<>());
  return out;
}

}  // namespace

void CheckCappedInput(std::span<const double> x, double cap) {
  if (x.empty()) throw DomainError("capped softmax of an empty vector");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i])) {
      std::ostringstream msg;
      msg << "non-finite entry x[" << i << "] = " << x[i];
      throw DomainError(msg.str());
    }
  }
  if (!(cap > 0.0 && cap <= 1.0)) {
    std::ostringstream msg;
    msg << "cap U = " << cap << " is outside (0, 1]";
    throw DomainError(msg.str());
  }
  if (cap * static_cast<double>(x.size()) < 1.0 - kCapTieTolerance) {
    std::ostringstream msg;
    msg << "cap U = " << cap << " is below 1/n = 1/" << x.size()
        << ": the capped simplex is empty";
    throw InfeasibleCapError(msg.str());
  }
}

CappedWeights::CappedWeights(std::vector<double> weights, double cap)
    : weights_(std::move(weights)), cap_(cap) {
  if (weights_.empty()) throw DomainError("capped weights must be nonempty");
  if (!(cap_ > 0.0 && cap_ <= 1.0)) {
    throw DomainError("cap must lie in (0, 1]");
  }
  if (cap_ * static_cast<double>(weights_.size()) < 1.0 - kCapTieTolerance) {
    throw InfeasibleCapError("cap below 1/n: the capped simplex is empty");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    const double w = weights_[i];
    if (!(w >= -kCapTieTolerance && w <= cap_ + kCapTieTolerance)) {
      std::ostringstream msg;
      msg << "weight " << i << " = " << w << " lies outside [0, " << cap_
          << "]";
      throw DomainError(msg.str());
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << "weights sum to " << sum << ", not 1";
    throw DomainError(msg.str());
  }
}

double CappedWeights::NegativeEntropy() const {
  double total = 0.0;
  for (double w : weights_) {
    if (w > 0.0) total += w * std::log(w);
  }
  return total;
}

SmaxEval SmaxU(std::span<const double> x, double cap) {
  CheckCappedInput(x, cap);
  WaterFill fill = Fill(x, cap);
  std::vector<std::size_t> capped = CappedSet(fill.gradient, cap);
  return SmaxEval{fill.value, CappedWeights(std::move(fill.gradient), cap),
                  fill.threshold, std::move(capped)};
}

SmaxEval SminU(std::span<const double> x, double cap) {
  CheckCappedInput(x, cap);
  const std::vector<double> negated = Negated(x);
  SmaxEval eval = SmaxU(negated, cap);
  eval.value = -eval.value;
  return eval;
}

ThresholdSolution SolveThreshold(std::span<const double> x, double cap) {
  CheckCappedInput(x, cap);
  WaterFill fill = Fill(x, cap);
  return ThresholdSolution{fill.threshold, CappedSet(fill.gradient, cap)};
}

double TopSAverage(std::span<const double> x, std::size_t s) {
  if (s < 1 || s > x.size()) {
    std::ostringstream msg;
    msg << "top-s average needs 1 <= s <= n, got s = " << s
        << ", n = " << x.size();
    throw DomainError(msg.str());
  }
  std::vector<double> sorted(x.begin(), x.end());
  std::partial_sort(sorted.begin(), sorted.begin() + s, sorted.end(),
                    std::greater<>());
  double sum = 0.0;
  for (std::size_t i = 0; i < s; ++i) sum += sorted[i];
  return sum / static_cast<double>(s);
}

double BottomSAverage(std::span<const double> x, std::size_t s) {
  const std::vector<double> negated = Negated(x);
  return -TopSAverage(negated, s);
}

}  // namespace posdp
