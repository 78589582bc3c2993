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

#include "posdp/instance.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "posdp/errors.h"

namespace posdp {
namespace {

void CheckRange(const PositiveMatrix& matrix, const char* name,
                const EntryRange& range) {
  const std::vector<double> maxima = matrix.ColumnMaxima();
  for (std::size_t j = 0; j < maxima.size(); ++j) {
    if (maxima[j] < range.m || maxima[j] > range.M) {
      std::ostringstream msg;
      msg << "column " << j << " of " << name << " has maximum " << maxima[j]
          << " outside the declared range [" << range.m << ", " << range.M
          << "]";
      throw ParseError(msg.str());
    }
  }
}

}  // namespace

const char* InstanceKindName(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kPacking:
      return "packing";
    case InstanceKind::kCovering:
      return "covering";
    case InstanceKind::kMixed:
      return "mixed";
  }
  return "unknown";
}

InstanceKind ParseInstanceKind(std::string_view name) {
  if (name == "packing") return InstanceKind::kPacking;
  if (name == "covering") return InstanceKind::kCovering;
  if (name == "mixed") return InstanceKind::kMixed;
  throw ParseError("unknown instance kind '" + std::string(name) + "'");
}

LpInstance LpInstance::Packing(PositiveMatrix a, std::optional<double> opt) {
  LpInstance out;
  out.kind = InstanceKind::kPacking;
  out.A = std::move(a);
  out.opt = opt;
  return out;
}

LpInstance LpInstance::Covering(PositiveMatrix a, std::optional<double> opt) {
  LpInstance out;
  out.kind = InstanceKind::kCovering;
  out.A = std::move(a);
  out.opt = opt;
  return out;
}

LpInstance LpInstance::Mixed(PositiveMatrix p, PositiveMatrix c,
                             std::optional<double> feasible_mass) {
  LpInstance out;
  out.kind = InstanceKind::kMixed;
  out.P = std::move(p);
  out.C = std::move(c);
  out.feasible_mass = feasible_mass;
  return out;
}

std::size_t LpInstance::cols() const {
  return kind == InstanceKind::kMixed ? P->cols() : A->cols();
}

std::size_t LpInstance::rows() const {
  return kind == InstanceKind::kMixed ? P->rows() + C->rows() : A->rows();
}

void LpInstance::Validate() const {
  if (kind == InstanceKind::kMixed) {
    if (!P || !C || A) {
      throw ParseError("a mixed instance needs P and C and no A");
    }
    if (P->cols() != C->cols()) {
      std::ostringstream msg;
      msg << "P has " << P->cols() << " columns but C has " << C->cols();
      throw ParseError(msg.str());
    }
  } else if (!A || P || C) {
    throw ParseError(std::string("a ") + InstanceKindName(kind) +
                     " instance needs A and no P/C");
  }
  if (opt && !(*opt > 0.0 && std::isfinite(*opt))) {
    throw ParseError("opt must be positive");
  }
  if (feasible_mass && !(*feasible_mass > 0.0 && std::isfinite(*feasible_mass))) {
    throw ParseError("V must be positive");
  }
  if (range) {
    if (!(range->m > 0.0 && range->M >= range->m && std::isfinite(range->M))) {
      throw ParseError("range needs 0 < m <= M");
    }
    if (A) CheckRange(*A, "A", *range);
    if (P) CheckRange(*P, "P", *range);
    if (C) CheckRange(*C, "C", *range);
  }
}

EntryRange ObservedColumnRange(const LpInstance& instance) {
  std::vector<double> maxima;
  for (const auto* m : {&instance.A, &instance.P, &instance.C}) {
    if (!*m) continue;
    const std::vector<double> col = (*m)->ColumnMaxima();
    maxima.insert(maxima.end(), col.begin(), col.end());
  }
  const auto [lo, hi] = std::minmax_element(maxima.begin(), maxima.end());
  if (!(*lo > 0.0)) throw DomainError("instance has an all-zero column");
  return EntryRange{*lo, *hi};
}

}  // namespace posdp
