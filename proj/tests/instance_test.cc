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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "posdp/errors.h"
#include "posdp/generators.h"
#include "posdp/instance.h"
#include "posdp/instance_io.h"
#include "posdp/positive_matrix.h"
#include "posdp/text_format.h"
#include "test_support.h"

namespace posdp {
namespace {

ParseIssue IssueOf(const std::string& text) {
  try {
    ParseInstance(text);
  } catch (const InstanceParseError& e) {
    return e.issue();
  }
  ADD_FAILURE() << "accepted: " << text;
  return ParseIssue::kSyntax;
}

std::string MessageOf(const std::string& text) {
  try {
    ParseInstance(text);
  } catch (const InstanceParseError& e) {
    return e.what();
  }
  return "";
}

TEST(PositiveMatrixTest, RejectsBadShapesAndEntries) {
  EXPECT_THROW(PositiveMatrix(0, 1, {}), DomainError);
  EXPECT_THROW(PositiveMatrix(1, 2, {1.0}), DomainError);
  EXPECT_THROW(PositiveMatrix(1, 1, {-1.0}), DomainError);
  EXPECT_THROW(PositiveMatrix(1, 1, {NAN}), DomainError);
  EXPECT_THROW(PositiveMatrix::FromRows({{1, 2}, {3}}), DomainError);
}

TEST(PositiveMatrixTest, ProductsAgreeWithLoops) {
  std::mt19937_64 gen(1);
  const PositiveMatrix a = testing::RandomMatrix(gen, 5, 3, 0, 2);
  const std::vector<double> x = testing::UniformVector(gen, 3, 0, 1);
  const std::vector<double> w = testing::UniformVector(gen, 5, 0, 1);
  const std::vector<double> ax = a.Multiply(x);
  for (std::size_t i = 0; i < 5; ++i) {
    double dot = 0.0;
    for (std::size_t j = 0; j < 3; ++j) dot += a(i, j) * x[j];
    EXPECT_NEAR(ax[i], dot, 1e-14);
  }
  const std::vector<double> sums = a.WeightedColumnSums(w);
  const std::vector<double> dense = testing::DenseColumnDots(a, w);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(sums[j], dense[j], 1e-14);

  std::vector<double> acc(5, 0.0);
  a.AddColumn(2, 0.5, acc);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_DOUBLE_EQ(acc[i], 0.5 * a(i, 2));
}

TEST(PositiveMatrixTest, Transforms) {
  const PositiveMatrix a = PositiveMatrix::FromRows({{1, 5}, {0, 2}});
  EXPECT_EQ(a.Clipped(2), PositiveMatrix::FromRows({{1, 2}, {0, 2}}));
  EXPECT_EQ(a.Shifted(1), PositiveMatrix::FromRows({{2, 6}, {1, 3}}));
  const std::vector<double> row{7, 7};
  EXPECT_EQ(a.WithRow(1, row), PositiveMatrix::FromRows({{1, 5}, {7, 7}}));
  EXPECT_EQ(a.ColumnMaxima(), (std::vector<double>{1, 5}));
  EXPECT_EQ(a.MaxEntry(), 5);
  EXPECT_EQ(a.MinEntry(), 0);
  EXPECT_EQ(PositiveMatrix::Identity(2), PositiveMatrix::FromRows({{1, 0}, {0, 1}}));
}

TEST(LpInstanceTest, Validate) {
  LpInstance ok = LpInstance::Packing(PositiveMatrix::Identity(2), 2.0);
  ok.range = EntryRange{1, 1};
  EXPECT_NO_THROW(ok.Validate());
  EXPECT_EQ(ok.rows(), 2u);
  EXPECT_EQ(ok.cols(), 2u);

  LpInstance bad_opt = ok;
  bad_opt.opt = -1.0;
  EXPECT_THROW(bad_opt.Validate(), ParseError);

  LpInstance bad_range = ok;
  bad_range.range = EntryRange{2, 3};
  EXPECT_THROW(bad_range.Validate(), ParseError);

  LpInstance mixed = LpInstance::Mixed(PositiveMatrix::Identity(2),
                                       PositiveMatrix::FromRows({{1, 1}}), 2.0);
  EXPECT_NO_THROW(mixed.Validate());
  EXPECT_EQ(mixed.rows(), 3u);

  LpInstance mismatch = mixed;
  mismatch.C = PositiveMatrix::FromRows({{1, 1, 1}});
  EXPECT_THROW(mismatch.Validate(), ParseError);

  LpInstance missing = ok;
  missing.A.reset();
  EXPECT_THROW(missing.Validate(), ParseError);
}

TEST(LpInstanceTest, ObservedRange) {
  const LpInstance a = LpInstance::Packing(PositiveMatrix::FromRows({{1, 0}, {3, 0.5}}));
  EXPECT_EQ(ObservedColumnRange(a), (EntryRange{0.5, 3}));
  const LpInstance zero = LpInstance::Packing(PositiveMatrix::FromRows({{1, 0}}));
  EXPECT_THROW(ObservedColumnRange(zero), DomainError);
}

TEST(InstanceIoTest, MinimalPacking) {
  const LpInstance inst = ParseInstance(R"({"kind": "packing", "A": [[1]]})");
  EXPECT_EQ(inst.kind, InstanceKind::kPacking);
  EXPECT_EQ(inst.rows(), 1u);
  EXPECT_EQ(inst.cols(), 1u);
  EXPECT_FALSE(inst.opt.has_value());
}

TEST(InstanceIoTest, NegativeEntryNamesCoordinate) {
  const std::string text = R"({"kind": "packing", "A": [[1, 0], [-0.5, 2]]})";
  EXPECT_EQ(IssueOf(text), ParseIssue::kNegativeEntry);
  EXPECT_NE(MessageOf(text).find("A[1][0]"), std::string::npos);
}

TEST(InstanceIoTest, DistinctIssues) {
  EXPECT_EQ(IssueOf(R"({"kind": "packing", "A": [[1]],})"), ParseIssue::kSyntax);
  EXPECT_NE(MessageOf("{\n \"kind\": }").find("line 2"), std::string::npos);
  EXPECT_EQ(IssueOf(R"({"kind": "packing", "A": [[1, 2], [3]]})"),
            ParseIssue::kDimension);
  EXPECT_EQ(IssueOf(R"({"kind": "packing", "A": []})"), ParseIssue::kDimension);
  EXPECT_EQ(IssueOf(R"({"kind": "mixed", "P": [[1, 2]], "C": [[1]]})"),
            ParseIssue::kDimension);
  EXPECT_EQ(IssueOf(R"({"kind": "packing", "A": [[1]], "b": [1]})"),
            ParseIssue::kSchema);
  EXPECT_EQ(IssueOf(R"({"kind": "packing", "A": [["x"]]})"), ParseIssue::kSchema);
  EXPECT_EQ(IssueOf(R"({"kind": "triangle", "A": [[1]]})"), ParseIssue::kSchema);
  EXPECT_EQ(IssueOf(R"({"kind": "packing", "P": [[1]], "C": [[1]]})"),
            ParseIssue::kSchema);
  EXPECT_EQ(IssueOf(R"({"kind": "packing", "A": [[1]], "range": {"m": 1}})"),
            ParseIssue::kSchema);
  EXPECT_EQ(IssueOf(R"({"kind": "packing", "A": [[1]], "opt": 0})"),
            ParseIssue::kInvariant);
  EXPECT_EQ(IssueOf(R"({"kind": "packing", "A": [[5]], "range": {"m": 1, "M": 2}})"),
            ParseIssue::kInvariant);
}

TEST(InstanceIoTest, CanonicalLayout) {
  LpInstance inst = LpInstance::Packing(PositiveMatrix::Identity(2), 2.0);
  inst.range = EntryRange{1, 1};
  EXPECT_EQ(SerializeInstance(inst),
            "{\n"
            "  \"kind\": \"packing\",\n"
            "  \"A\": [\n"
            "    [1, 0],\n"
            "    [0, 1]\n"
            "  ],\n"
            "  \"opt\": 2,\n"
            "  \"range\": {\"m\": 1, \"M\": 1}\n"
            "}\n");
}

TEST(InstanceIoTest, RoundTripIsBitExact) {
  for (const InstanceKind kind :
       {InstanceKind::kPacking, InstanceKind::kCovering, InstanceKind::kMixed}) {
    GeneratorSpec spec;
    spec.kind = kind;
    spec.family = Family::kRandomUniform;
    spec.rows = 100;
    spec.cols = 7;
    spec.seed = 2026;
    LpInstance inst = Generate(spec);
    inst.opt = 0.1 + 0.2;  // not representable in short decimal form
    if (kind == InstanceKind::kMixed) {
      inst.opt.reset();
      inst.feasible_mass = 1.0 / 3.0;
    }
    const std::string text = SerializeInstance(inst);
    const LpInstance back = ParseInstance(text);
    EXPECT_EQ(back, inst);
    EXPECT_EQ(SerializeInstance(back), text);
  }
}

TEST(InstanceIoTest, AcceptsNonCanonicalWhitespace) {
  const LpInstance inst =
      ParseInstance("{\"A\":[[0.5,1e-3]],\"kind\":\"covering\",\"opt\":1}");
  EXPECT_EQ(SerializeInstance(inst),
            "{\n  \"kind\": \"covering\",\n  \"A\": [\n    [0.5, 0.001]\n  ],\n"
            "  \"opt\": 1\n}\n");
}

TEST(TextFormatTest, ShortestRoundTrip) {
  EXPECT_EQ(FormatDouble(0.1), "0.1");
  EXPECT_EQ(FormatDouble(2.0), "2");
  EXPECT_EQ(FormatDouble(-0.0), "0");
  EXPECT_EQ(FormatDouble(std::numeric_limits<double>::infinity()), "inf");
  std::mt19937_64 gen(3);
  for (int i = 0; i < 10000; ++i) {
    const double v = std::ldexp(testing::UniformVector(gen, 1, 0, 1)[0], i % 200 - 100);
    EXPECT_EQ(std::stod(FormatDouble(v)), v);
  }
}

TEST(TextFormatTest, PositionOf) {
  const TextPosition p = PositionOf("ab\ncd\ne", 4);
  EXPECT_EQ(p.line, 2u);
  EXPECT_EQ(p.column, 2u);
}

}  // namespace
}  // namespace posdp
