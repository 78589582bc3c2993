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

#ifndef POSDP_REPORT_H_
#define POSDP_REPORT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "posdp/certify.h"
#include "posdp/params.h"

namespace posdp {

struct TraceDigest {
  std::int64_t steps = 0;
  std::vector<std::int64_t> column_counts;  // times each column was chosen
  double score_min = 0;
  double score_max = 0;
  double score_mean = 0;
  // smax^U(eta A x_T) for packing, smin^U(eta A x_T) for covering, and the
  // ratio smax^U(P x_T) / smin^U(C x_T) for the mixed solvers.
  double final_potential = 0;

  friend bool operator==(const TraceDigest&, const TraceDigest&) = default;
};

struct SolveReport {
  ProblemKind kind = ProblemKind::kPacking;
  std::uint64_t seed = 0;
  std::vector<double> solution;
  double objective = 0;
  ViolationCensus violations;
  std::vector<std::size_t> filtered_constraints;  // mixed-di, P row indices
  bool vacuous_bound = false;
  std::optional<double> scale;              // mixed: chosen k
  std::optional<double> ratio_certificate;  // mixed: smax/smin at x_T
  SolverParams params;
  std::int64_t wall_time_ms = 0;
  std::optional<TraceDigest> trace;

  friend bool operator==(const SolveReport&, const SolveReport&) = default;
};

// Canonical text form: fixed key order, shortest round-trip decimals,
// non-finite numbers as the strings "inf" / "-inf", trailing newline.
std::string SerializeReport(const SolveReport& report);

// Throws ParseError on malformed input.
SolveReport ParseReport(std::string_view text);

}  // namespace posdp

#endif  // POSDP_REPORT_H_
