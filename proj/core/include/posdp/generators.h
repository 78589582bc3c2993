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

#ifndef POSDP_GENERATORS_H_
#define POSDP_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "posdp/instance.h"

namespace posdp {

enum class Family {
  // Entries U(0,1) kept with probability `density`; no OPT.
  kRandomUniform,
  // 0/1 incidence rows. `groups` disjoint column groups each get a row, and
  // one representative column per group meets every other row at most once
  // (packing) or at least once (covering), so OPT = groups.
  kSetCover,
  // n = d identity; OPT = n, for mixed P = C = I and V = n.
  kIdentity,
  // A hidden x0 is feasible by construction. Packing and covering add a
  // budget row with entries 1 / 1^T x0, which makes OPT = 1^T x0 exact;
  // mixed instances get V = 1^T x0.
  kPlantedFeasible,
};

const char* FamilyName(Family family);  // random_uniform, set_cover, ...
Family ParseFamily(std::string_view name);

struct GeneratorSpec {
  InstanceKind kind = InstanceKind::kPacking;
  Family family = Family::kRandomUniform;
  std::size_t rows = 4;  // n; for mixed, the row count of P and of C each
  std::size_t cols = 4;  // d
  double density = 0.5;
  std::uint64_t seed = 0;
  std::size_t groups = 0;  // set_cover; 0 picks max(1, d / 3)
};

// Deterministic in the spec. Every column and every row of the result has a
// nonzero entry, and the declared range is the observed column range. Throws
// ConfigError for an invalid spec.
LpInstance Generate(const GeneratorSpec& spec);

struct GeneratedInstance {
  LpInstance instance;
  // The hidden point x0 of planted_feasible instances, empty otherwise.
  std::vector<double> witness;
};

GeneratedInstance GenerateWithWitness(const GeneratorSpec& spec);

}  // namespace posdp

#endif  // POSDP_GENERATORS_H_
