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

#include "posdp/generators.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "posdp/errors.h"
#include "posdp/random.h"

namespace posdp {
namespace {

using Rows = std::vector<std::vector<double>>;

double UniformIn(RandomStream& rng, double lo, double hi) {
  return lo + (hi - lo) * rng.Uniform01();
}

std::size_t Index(RandomStream& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng.UniformIndex(bound));
}

void Shuffle(std::vector<std::size_t>& v, RandomStream& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[Index(rng, i)]);
  }
}

// Masked uniform entries with no empty row or column.
Rows RandomRows(std::size_t n, std::size_t d, double density,
                RandomStream& rng) {
  Rows rows(n, std::vector<double>(d, 0.0));
  for (auto& row : rows) {
    for (double& e : row) {
      const double keep = rng.Uniform01();
      const double value = rng.Uniform01();
      if (keep < density) e = value;
    }
  }
  for (std::size_t j = 0; j < d; ++j) {
    bool empty = true;
    for (const auto& row : rows) empty = empty && row[j] == 0.0;
    if (empty) rows[Index(rng, n)][j] = UniformIn(rng, 0.5, 1.0);
  }
  for (auto& row : rows) {
    if (std::all_of(row.begin(), row.end(), [](double e) { return e == 0.0; })) {
      row[Index(rng, d)] = UniformIn(rng, 0.5, 1.0);
    }
  }
  return rows;
}

// Scales every row so that <row, x0> is uniform in [lo, hi].
void PlantRows(Rows& rows, const std::vector<double>& x0, double lo, double hi,
               RandomStream& rng) {
  for (auto& row : rows) {
    const double load =
        std::inner_product(row.begin(), row.end(), x0.begin(), 0.0);
    const double factor = UniformIn(rng, lo, hi) / load;
    for (double& e : row) e *= factor;
  }
}

std::vector<double> PlantedPoint(std::size_t d, RandomStream& rng) {
  std::vector<double> x0(d);
  for (double& v : x0) v = UniformIn(rng, 0.5, 1.5);
  return x0;
}

LpInstance SetCover(const GeneratorSpec& spec, RandomStream& rng) {
  const std::size_t n = spec.rows;
  const std::size_t d = spec.cols;
  const std::size_t k =
      spec.groups == 0 ? std::max<std::size_t>(1, d / 3) : spec.groups;
  if (k > d || k > n) {
    throw ConfigError("set_cover needs groups <= cols and groups <= rows");
  }
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  Shuffle(order, rng);
  std::vector<std::size_t> group(d);
  std::vector<std::size_t> reps(k);
  for (std::size_t pos = 0; pos < d; ++pos) {
    group[order[pos]] = pos % k;
    if (pos < k) reps[pos] = order[pos];
  }
  const bool packing = spec.kind == InstanceKind::kPacking;

  Rows rows(n, std::vector<double>(d, 0.0));
  for (std::size_t g = 0; g < k; ++g) {
    for (std::size_t j = 0; j < d; ++j) rows[g][j] = group[j] == g ? 1.0 : 0.0;
  }
  for (std::size_t i = k; i < n; ++i) {
    auto& row = rows[i];
    for (double& e : row) e = rng.Uniform01() < spec.density ? 1.0 : 0.0;
    std::vector<std::size_t> hit;
    for (std::size_t r : reps) {
      if (row[r] == 1.0) hit.push_back(r);
    }
    if (packing && hit.size() > 1) {
      const std::size_t keep = hit[Index(rng, hit.size())];
      for (std::size_t r : hit) {
        if (r != keep) row[r] = 0.0;
      }
    }
    if (!packing && hit.empty()) row[reps[Index(rng, k)]] = 1.0;
    if (std::all_of(row.begin(), row.end(), [](double e) { return e == 0.0; })) {
      row[Index(rng, d)] = 1.0;
    }
  }
  // Group rows sit at random positions.
  std::vector<std::size_t> row_order(n);
  std::iota(row_order.begin(), row_order.end(), 0);
  Shuffle(row_order, rng);
  Rows shuffled(n);
  for (std::size_t i = 0; i < n; ++i) shuffled[row_order[i]] = std::move(rows[i]);

  const double opt = static_cast<double>(k);
  PositiveMatrix a = PositiveMatrix::FromRows(shuffled);
  return packing ? LpInstance::Packing(std::move(a), opt)
                 : LpInstance::Covering(std::move(a), opt);
}

LpInstance Planted(const GeneratorSpec& spec, RandomStream& rng,
                   std::vector<double>& witness) {
  const std::size_t n = spec.rows;
  const std::size_t d = spec.cols;
  const std::vector<double> x0 = PlantedPoint(d, rng);
  const double mass = std::accumulate(x0.begin(), x0.end(), 0.0);
  witness = x0;
  if (spec.kind == InstanceKind::kMixed) {
    Rows p = RandomRows(n, d, spec.density, rng);
    Rows c = RandomRows(n, d, spec.density, rng);
    PlantRows(p, x0, 0.6, 1.0, rng);
    PlantRows(c, x0, 1.0, 1.4, rng);
    return LpInstance::Mixed(PositiveMatrix::FromRows(p),
                             PositiveMatrix::FromRows(c), mass);
  }
  const bool packing = spec.kind == InstanceKind::kPacking;
  Rows rows = n > 1 ? RandomRows(n - 1, d, spec.density, rng) : Rows{};
  if (packing) {
    PlantRows(rows, x0, 0.6, 1.0, rng);
  } else {
    PlantRows(rows, x0, 1.0, 1.4, rng);
  }
  const std::size_t budget_at = Index(rng, n);
  rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(budget_at),
              std::vector<double>(d, 1.0 / mass));
  PositiveMatrix a = PositiveMatrix::FromRows(rows);
  return packing ? LpInstance::Packing(std::move(a), mass)
                 : LpInstance::Covering(std::move(a), mass);
}

}  // namespace

const char* FamilyName(Family family) {
  switch (family) {
    case Family::kRandomUniform:
      return "random_uniform";
    case Family::kSetCover:
      return "set_cover";
    case Family::kIdentity:
      return "identity";
    case Family::kPlantedFeasible:
      return "planted_feasible";
  }
  return "unknown";
}

Family ParseFamily(std::string_view name) {
  if (name == "random_uniform") return Family::kRandomUniform;
  if (name == "set_cover") return Family::kSetCover;
  if (name == "identity") return Family::kIdentity;
  if (name == "planted_feasible") return Family::kPlantedFeasible;
  throw ConfigError("unknown instance family '" + std::string(name) + "'");
}

GeneratedInstance GenerateWithWitness(const GeneratorSpec& spec) {
  if (spec.rows == 0 || spec.cols == 0) {
    throw ConfigError("generator needs at least one row and one column");
  }
  if (!(spec.density >= 0.0 && spec.density <= 1.0)) {
    throw ConfigError("density must lie in [0, 1]");
  }
  RandomStream rng(spec.seed);
  LpInstance out;
  std::vector<double> witness;
  switch (spec.family) {
    case Family::kIdentity: {
      if (spec.rows != spec.cols) {
        throw ConfigError("identity family needs rows == cols");
      }
      const double n = static_cast<double>(spec.rows);
      const PositiveMatrix eye = PositiveMatrix::Identity(spec.rows);
      if (spec.kind == InstanceKind::kMixed) {
        out = LpInstance::Mixed(eye, eye, n);
      } else {
        out = spec.kind == InstanceKind::kPacking ? LpInstance::Packing(eye, n)
                                                  : LpInstance::Covering(eye, n);
      }
      break;
    }
    case Family::kRandomUniform: {
      if (spec.kind == InstanceKind::kMixed) {
        out = LpInstance::Mixed(
            PositiveMatrix::FromRows(
                RandomRows(spec.rows, spec.cols, spec.density, rng)),
            PositiveMatrix::FromRows(
                RandomRows(spec.rows, spec.cols, spec.density, rng)));
      } else {
        PositiveMatrix a = PositiveMatrix::FromRows(
            RandomRows(spec.rows, spec.cols, spec.density, rng));
        out = spec.kind == InstanceKind::kPacking
                  ? LpInstance::Packing(std::move(a))
                  : LpInstance::Covering(std::move(a));
      }
      break;
    }
    case Family::kSetCover:
      if (spec.kind == InstanceKind::kMixed) {
        throw ConfigError("set_cover family has no mixed variant");
      }
      out = SetCover(spec, rng);
      break;
    case Family::kPlantedFeasible:
      out = Planted(spec, rng, witness);
      break;
  }
  out.range = ObservedColumnRange(out);
  out.Validate();
  return {std::move(out), std::move(witness)};
}

LpInstance Generate(const GeneratorSpec& spec) {
  return GenerateWithWitness(spec).instance;
}

}  // namespace posdp
