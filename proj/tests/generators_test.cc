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

#include <gtest/gtest.h>

#include <numeric>
#include <vector>

#include "posdp/baselines.h"
#include "posdp/errors.h"
#include "posdp/instance_io.h"

namespace posdp {
namespace {

GeneratorSpec Spec(InstanceKind kind, Family family, std::size_t n, std::size_t d,
                   std::uint64_t seed) {
  GeneratorSpec spec;
  spec.kind = kind;
  spec.family = family;
  spec.rows = n;
  spec.cols = d;
  spec.seed = seed;
  return spec;
}

TEST(GenerateTest, IdentityPacking) {
  const LpInstance inst =
      Generate(Spec(InstanceKind::kPacking, Family::kIdentity, 3, 3, 0));
  EXPECT_EQ(*inst.A, PositiveMatrix::Identity(3));
  EXPECT_EQ(*inst.opt, 3.0);
  EXPECT_EQ(*inst.range, (EntryRange{1, 1}));
  EXPECT_THROW(Generate(Spec(InstanceKind::kPacking, Family::kIdentity, 3, 2, 0)),
               ConfigError);
}

TEST(GenerateTest, FamilyNames) {
  for (Family f : {Family::kRandomUniform, Family::kSetCover, Family::kIdentity,
                   Family::kPlantedFeasible}) {
    EXPECT_EQ(ParseFamily(FamilyName(f)), f);
  }
  EXPECT_THROW(ParseFamily("grid"), ConfigError);
}

TEST(GenerateTest, ForcedSetCover) {
  GeneratorSpec spec = Spec(InstanceKind::kCovering, Family::kSetCover, 4, 2, 1);
  spec.groups = 2;
  spec.density = 0.0;
  const LpInstance inst = Generate(spec);
  EXPECT_EQ(*inst.opt, 2.0);
  EXPECT_DOUBLE_EQ(ExactOptTiny(inst), 2.0);
}

TEST(GenerateTest, DeterministicBytes) {
  for (Family f : {Family::kRandomUniform, Family::kSetCover, Family::kPlantedFeasible}) {
    const GeneratorSpec spec = Spec(InstanceKind::kPacking, f, 30, 8, 42);
    EXPECT_EQ(SerializeInstance(Generate(spec)), SerializeInstance(Generate(spec)));
    GeneratorSpec other = spec;
    other.seed = 43;
    EXPECT_NE(SerializeInstance(Generate(spec)), SerializeInstance(Generate(other)));
  }
}

TEST(GenerateTest, KnownOptMatchesExactSolver) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    for (InstanceKind kind : {InstanceKind::kPacking, InstanceKind::kCovering}) {
      for (Family f : {Family::kSetCover, Family::kPlantedFeasible}) {
        GeneratorSpec spec = Spec(kind, f, 4 + seed % 8, 1 + seed % 3, seed);
        if (f == Family::kSetCover) spec.groups = 1 + seed % spec.cols;
        const LpInstance inst = Generate(spec);
        EXPECT_NEAR(ExactOptTiny(inst), *inst.opt, 1e-9 * *inst.opt)
            << FamilyName(f) << " seed " << seed;
      }
    }
  }
}

TEST(GenerateTest, PlantedWitnessIsFeasible) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const GeneratedInstance g = GenerateWithWitness(
        Spec(InstanceKind::kMixed, Family::kPlantedFeasible, 10, 4, seed));
    const LpInstance& inst = g.instance;
    ASSERT_EQ(g.witness.size(), 4u);
    EXPECT_NEAR(std::accumulate(g.witness.begin(), g.witness.end(), 0.0),
                *inst.feasible_mass, 1e-12);
    for (double v : inst.P->Multiply(g.witness)) EXPECT_LE(v, 1.0 + 1e-12);
    for (double v : inst.C->Multiply(g.witness)) EXPECT_GE(v, 1.0 - 1e-12);
  }
  for (InstanceKind kind : {InstanceKind::kPacking, InstanceKind::kCovering}) {
    const GeneratedInstance g =
        GenerateWithWitness(Spec(kind, Family::kPlantedFeasible, 12, 5, 3));
    for (double v : g.instance.A->Multiply(g.witness)) {
      if (kind == InstanceKind::kPacking) {
        EXPECT_LE(v, 1.0 + 1e-12);
      } else {
        EXPECT_GE(v, 1.0 - 1e-12);
      }
    }
  }
  EXPECT_TRUE(GenerateWithWitness(Spec(InstanceKind::kPacking, Family::kIdentity, 2, 2, 0))
                  .witness.empty());
}

TEST(GenerateTest, EveryRowAndColumnNonzero) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GeneratorSpec spec = Spec(InstanceKind::kCovering, Family::kRandomUniform, 25, 6, seed);
    spec.density = 0.05;
    const LpInstance inst = Generate(spec);
    for (std::size_t i = 0; i < inst.A->rows(); ++i) {
      const auto row = inst.A->row(i);
      EXPECT_GT(std::accumulate(row.begin(), row.end(), 0.0), 0.0);
    }
    for (double m : inst.A->ColumnMaxima()) EXPECT_GT(m, 0.0);
  }
}

TEST(GenerateTest, InvalidSpecs) {
  EXPECT_THROW(Generate(Spec(InstanceKind::kPacking, Family::kRandomUniform, 0, 2, 0)),
               ConfigError);
  GeneratorSpec spec = Spec(InstanceKind::kPacking, Family::kRandomUniform, 2, 2, 0);
  spec.density = 1.5;
  EXPECT_THROW(Generate(spec), ConfigError);
  EXPECT_THROW(Generate(Spec(InstanceKind::kMixed, Family::kSetCover, 4, 4, 0)),
               ConfigError);
  spec = Spec(InstanceKind::kPacking, Family::kSetCover, 2, 4, 0);
  spec.groups = 3;
  EXPECT_THROW(Generate(spec), ConfigError);
}

}  // namespace
}  // namespace posdp
