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

#include "posdp/certify.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "posdp/capped_softmax.h"
#include "posdp/errors.h"
#include "posdp/report.h"
#include "posdp/text_format.h"

namespace posdp {
namespace {

std::size_t AverageSize(std::int64_t s, std::size_t n) {
  return static_cast<std::size_t>(
      std::min<std::int64_t>(s, static_cast<std::int64_t>(n)));
}

bool Close(double a, double b) {
  if (a == b) return true;
  return std::abs(a - b) <= kViolationTolerance * std::max(1.0, std::abs(b));
}

bool Close(const std::optional<double>& a, const std::optional<double>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || Close(*a, *b);
}

void CountRows(std::span<const double> loads, double threshold,
               Direction direction, std::size_t offset,
               ViolationCensus& census) {
  for (std::size_t i = 0; i < loads.size(); ++i) {
    if (IsViolated(loads[i], threshold, direction)) {
      census.indices.push_back(offset + i);
    }
  }
}

}  // namespace

bool IsViolated(double value, double threshold, Direction direction) {
  const double slack = kViolationTolerance * std::abs(threshold);
  return direction == Direction::kAtMost ? value > threshold + slack
                                         : value < threshold - slack;
}

TopSCertificate CertifyTopS(std::span<const double> values, std::int64_t s,
                            double threshold, Direction direction) {
  if (s < 1) throw DomainError("certificate needs s >= 1");
  if (values.empty()) throw DomainError("certificate over no values");
  TopSCertificate out;
  out.violated = std::count_if(values.begin(), values.end(), [&](double v) {
    return IsViolated(v, threshold, direction);
  });
  out.pass = out.violated <= s;
  const std::size_t k = AverageSize(s, values.size());
  out.s_average = direction == Direction::kAtMost ? TopSAverage(values, k)
                                                  : BottomSAverage(values, k);
  return out;
}

ViolationCensus TakeCensus(const LpInstance& instance,
                           std::span<const double> x, double alpha,
                           std::int64_t s) {
  if (x.size() != instance.cols()) {
    std::ostringstream msg;
    msg << "solution has " << x.size() << " entries but the instance has "
        << instance.cols() << " columns";
    throw ParseError(msg.str());
  }
  ViolationCensus census;
  const double upper = 1.0 + alpha;
  const double lower = 1.0 - alpha;
  switch (instance.kind) {
    case InstanceKind::kPacking: {
      const std::vector<double> loads = instance.A->Multiply(x);
      census.threshold = upper;
      CountRows(loads, upper, Direction::kAtMost, 0, census);
      census.top_s_average = TopSAverage(loads, AverageSize(s, loads.size()));
      break;
    }
    case InstanceKind::kCovering: {
      const std::vector<double> loads = instance.A->Multiply(x);
      census.threshold = lower;
      CountRows(loads, lower, Direction::kAtLeast, 0, census);
      census.bottom_s_average =
          BottomSAverage(loads, AverageSize(s, loads.size()));
      break;
    }
    case InstanceKind::kMixed: {
      const std::vector<double> p_loads = instance.P->Multiply(x);
      const std::vector<double> c_loads = instance.C->Multiply(x);
      census.threshold = upper;
      census.covering_threshold = lower;
      CountRows(p_loads, upper, Direction::kAtMost, 0, census);
      CountRows(c_loads, lower, Direction::kAtLeast, p_loads.size(), census);
      census.top_s_average =
          TopSAverage(p_loads, AverageSize(s, p_loads.size()));
      census.bottom_s_average =
          BottomSAverage(c_loads, AverageSize(s, c_loads.size()));
      break;
    }
  }
  census.count = static_cast<std::int64_t>(census.indices.size());
  return census;
}

Certification CertifyReport(const LpInstance& instance,
                            const SolveReport& report) {
  if (instance.kind != InstanceKindFor(report.kind)) {
    throw ParseError(std::string("report of kind ") +
                     ProblemKindName(report.kind) + " does not fit a " +
                     InstanceKindName(instance.kind) + " instance");
  }
  Certification out;
  auto fail = [&out](const std::string& line) { out.failures.push_back(line); };

  for (std::size_t j = 0; j < report.solution.size(); ++j) {
    const double v = report.solution[j];
    if (!(v >= 0.0) || !std::isfinite(v)) {
      fail("solution[" + std::to_string(j) + "] = " + FormatDouble(v) +
           " is not a finite nonnegative number");
    }
  }
  const SolverParams& params = report.params;
  out.census = TakeCensus(instance, report.solution, params.alpha, params.s);

  const double objective =
      std::accumulate(report.solution.begin(), report.solution.end(), 0.0);
  if (!Close(objective, report.objective)) {
    fail("objective " + FormatDouble(report.objective) +
         " differs from the solution sum " + FormatDouble(objective));
  }
  if (params.opt) {
    const double opt = *params.opt;
    if (report.kind == ProblemKind::kPacking) {
      if (objective < (1.0 - params.alpha) * opt * (1.0 - kViolationTolerance)) {
        fail("packing objective " + FormatDouble(objective) +
             " is below (1 - alpha) OPT");
      }
      if (objective > opt * (1.0 + kViolationTolerance)) {
        fail("packing objective " + FormatDouble(objective) + " exceeds OPT");
      }
    } else if (report.kind == ProblemKind::kCovering) {
      if (objective > (1.0 + params.alpha) * opt * (1.0 + kViolationTolerance)) {
        fail("covering objective " + FormatDouble(objective) +
             " exceeds (1 + alpha) OPT");
      }
    }
  }

  const std::int64_t allowed =
      params.s + static_cast<std::int64_t>(report.filtered_constraints.size());
  if (out.census.count > allowed) {
    fail(std::to_string(out.census.count) + " violated constraints exceed the bound " +
         std::to_string(allowed));
  }
  if (instance.kind == InstanceKind::kMixed) {
    for (std::size_t i : report.filtered_constraints) {
      if (i >= instance.P->rows()) {
        fail("filtered constraint " + std::to_string(i) + " is not a P row");
      }
    }
  } else if (!report.filtered_constraints.empty()) {
    fail("filtered constraints reported for a " +
         std::string(InstanceKindName(instance.kind)) + " instance");
  }

  const ViolationCensus& claimed = report.violations;
  if (claimed.count != out.census.count || claimed.indices != out.census.indices) {
    fail("reported census (" + std::to_string(claimed.count) +
         " violations) disagrees with the recomputed one (" +
         std::to_string(out.census.count) + ")");
  }
  if (!Close(claimed.threshold, out.census.threshold) ||
      !Close(claimed.covering_threshold, out.census.covering_threshold) ||
      !Close(claimed.top_s_average, out.census.top_s_average) ||
      !Close(claimed.bottom_s_average, out.census.bottom_s_average)) {
    fail("reported thresholds or s-averages disagree with recomputation");
  }
  out.pass = out.failures.empty();
  return out;
}

}  // namespace posdp
