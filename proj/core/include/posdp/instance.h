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

#ifndef POSDP_INSTANCE_H_
#define POSDP_INSTANCE_H_

#include <optional>
#include <string>
#include <string_view>

#include "posdp/positive_matrix.h"

namespace posdp {

enum class InstanceKind { kPacking, kCovering, kMixed };

const char* InstanceKindName(InstanceKind kind);
// Throws ParseError on an unknown name.
InstanceKind ParseInstanceKind(std::string_view name);

// Declared range [m, M] holding every column maximum.
struct EntryRange {
  double m;
  double M;

  friend bool operator==(const EntryRange&, const EntryRange&) = default;
};

// A positive LP normalized to unit right-hand sides and unit objective.
//
//   packing:  max 1^T x  s.t. A x <= 1, x >= 0
//   covering: min 1^T x  s.t. A x >= 1, x >= 0
//   mixed:    find x >= 0 with P x <= 1, C x >= 1
struct LpInstance {
  InstanceKind kind = InstanceKind::kPacking;
  std::optional<PositiveMatrix> A;  // packing / covering
  std::optional<PositiveMatrix> P;  // mixed, packing rows
  std::optional<PositiveMatrix> C;  // mixed, covering rows
  std::optional<double> opt;
  std::optional<double> feasible_mass;  // V = 1^T x of a feasible x
  std::optional<EntryRange> range;

  static LpInstance Packing(PositiveMatrix a, std::optional<double> opt = {});
  static LpInstance Covering(PositiveMatrix a, std::optional<double> opt = {});
  static LpInstance Mixed(PositiveMatrix p, PositiveMatrix c,
                          std::optional<double> feasible_mass = {});

  std::size_t cols() const;
  // Constraint count: rows of A, or rows of P plus rows of C.
  std::size_t rows() const;

  // Checks kind/matrix consistency, positive opt and V, 0 < m <= M, and that
  // every column maximum lies in the declared range. Throws ParseError.
  void Validate() const;

  friend bool operator==(const LpInstance&, const LpInstance&) = default;
};

// Declared range spanning the actual column maxima of the instance's
// matrices. Throws DomainError when some column is all zero.
EntryRange ObservedColumnRange(const LpInstance& instance);

}  // namespace posdp

#endif  // POSDP_INSTANCE_H_
