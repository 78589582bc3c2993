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

#ifndef POSDP_CERTIFY_H_
#define POSDP_CERTIFY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posdp/instance.h"
#include "posdp/params.h"

namespace posdp {

inline constexpr double kViolationTolerance = 1e-9;

enum class Direction {
  kAtMost,   // value <= threshold, packing rows
  kAtLeast,  // value >= threshold, covering rows
};

// True if `value` lies strictly beyond `threshold` by more than the relative
// tolerance. Boundary values satisfy the constraint.
bool IsViolated(double value, double threshold, Direction direction);

struct TopSCertificate {
  std::int64_t violated = 0;
  bool pass = false;  // violated <= s
  // Mean of the min(s, n) largest values (kAtMost) or smallest (kAtLeast).
  double s_average = 0;
};

// Throws DomainError if s < 1 or values is empty.
TopSCertificate CertifyTopS(std::span<const double> values, std::int64_t s,
                            double threshold, Direction direction);

struct ViolationCensus {
  std::int64_t count = 0;
  // Violated rows, ascending. Mixed instances number P rows first, then C
  // rows offset by the row count of P.
  std::vector<std::size_t> indices;
  double threshold = 0;  // 1 + alpha for packing rows, 1 - alpha for covering
  std::optional<double> top_s_average;     // packing rows
  std::optional<double> covering_threshold;  // mixed only
  std::optional<double> bottom_s_average;  // covering rows

  friend bool operator==(const ViolationCensus&,
                         const ViolationCensus&) = default;
};

// Evaluates x against every row of the instance as given (callers pass the
// original, unprocessed matrices).
ViolationCensus TakeCensus(const LpInstance& instance,
                           std::span<const double> x, double alpha,
                           std::int64_t s);

struct SolveReport;

struct Certification {
  bool pass = false;
  ViolationCensus census;
  std::vector<std::string> failures;  // one line per failed check
};

// Recomputes the census of `report.solution` on `instance` and checks the
// objective bounds, the violation bound (s, plus filtered rows for mixed-di)
// and agreement with the census stored in the report. Throws ParseError if
// the dimensions disagree.
Certification CertifyReport(const LpInstance& instance,
                            const SolveReport& report);

}  // namespace posdp

#endif  // POSDP_CERTIFY_H_
