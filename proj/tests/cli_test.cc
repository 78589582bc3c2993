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
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "posdp/capped_softmax.h"
#include "posdp/instance.h"
#include "posdp/instance_io.h"
#include "posdp/report.h"
#include "posdp/text_format.h"
#include "test_support.h"

namespace posdp {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("posdp_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  Result Run(const std::string& args) const {
    const std::string cmd =
        std::string(POSDP_CLI_PATH) + " " + args + " 2>" + Path("stderr.txt");
    FILE* pipe = popen(cmd.c_str(), "r");
    EXPECT_NE(pipe, nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
  }

  std::string Stderr() const { return ReadTextFile(Path("stderr.txt")); }

  std::string WriteIdentity(const std::string& name, InstanceKind kind,
                            bool with_opt = true) const {
    LpInstance inst = kind == InstanceKind::kPacking
                          ? LpInstance::Packing(PositiveMatrix::Identity(2))
                          : LpInstance::Covering(PositiveMatrix::Identity(2));
    if (with_opt) inst.opt = 2.0;
    inst.range = EntryRange{1, 1};
    SaveInstance(Path(name), inst);
    return Path(name);
  }

  fs::path dir_;
};

TEST_F(CliTest, SmaxExamples) {
  const Result r = Run("smax --x 0,0 --u 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("value 0.693147180560"), std::string::npos) << r.out;
  EXPECT_EQ(Run("smax --x 0,0 --u 0.2").code, 3);
  EXPECT_EQ(Run("smax --x 0,nope --u 1").code, 3);
}

TEST_F(CliTest, SmaxJsonMatchesLibraryBitExactly) {
  std::mt19937_64 gen(404);
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<double> x = testing::UniformVector(gen, 2 + trial % 6, -5, 5);
    const double cap = 0.5;
    std::string arg;
    for (double v : x) arg += (arg.empty() ? "" : ",") + FormatDouble(v);
    const Result r = Run("smax --json --x " + arg + " --u 0.5");
    ASSERT_EQ(r.code, 0);
    const SmaxEval e = SmaxU(x, cap);
    std::ostringstream expect;
    expect << "{\"value\": " << FormatDouble(e.value)
           << ", \"threshold\": " << FormatDouble(e.threshold) << ", \"capped_set\": [";
    for (std::size_t i = 0; i < e.capped_set.size(); ++i) {
      expect << (i > 0 ? ", " : "") << e.capped_set[i];
    }
    expect << "], \"gradient\": [";
    for (std::size_t i = 0; i < e.gradient.size(); ++i) {
      expect << (i > 0 ? ", " : "") << FormatDouble(e.gradient[i]);
    }
    expect << "]}\n";
    EXPECT_EQ(r.out, expect.str());
  }
}

TEST_F(CliTest, SolveThenCertify) {
  const std::string in = WriteIdentity("id2.lp", InstanceKind::kPacking);
  const Result solve = Run("solve --kind packing --in " + in +
                           " --alpha 0.1 --eps 1 --delta 1e-6 --seed 7 --out " +
                           Path("r.report"));
  ASSERT_EQ(solve.code, 0) << Stderr();
  const SolveReport report = ParseReport(ReadTextFile(Path("r.report")));
  EXPECT_NEAR(report.objective, 2.0, 1e-9);
  EXPECT_EQ(report.seed, 7u);
  const Result cert = Run("certify --report " + Path("r.report") + " --in " + in);
  EXPECT_EQ(cert.code, 0) << cert.out;
  EXPECT_NE(cert.out.find("certified"), std::string::npos);
}

TEST_F(CliTest, DeterministicReportsIgnoreSeed) {
  const std::string in = WriteIdentity("id2.lp", InstanceKind::kCovering);
  const std::string base = "solve --kind covering --in " + in + " --alpha 0.2 --deterministic";
  const Result a = Run(base + " --seed 1");
  const Result b = Run(base + " --seed 99");
  ASSERT_EQ(a.code, 0);
  SolveReport ra = ParseReport(a.out), rb = ParseReport(b.out);
  rb.seed = ra.seed;
  EXPECT_EQ(ra, rb);
}

TEST_F(CliTest, SameSeedSameBytes) {
  const std::string in = WriteIdentity("id2.lp", InstanceKind::kPacking);
  const std::string cmd =
      "solve --kind packing --in " + in + " --alpha 0.3 --eps 0.5 --delta 1e-5 --seed 11";
  EXPECT_EQ(Run(cmd).out, Run(cmd).out);
}

TEST_F(CliTest, ExitCodes) {
  const std::string no_opt = WriteIdentity("noopt.lp", InstanceKind::kPacking, false);
  const Result missing = Run("solve --kind packing --in " + no_opt + " --alpha 0.1 --deterministic");
  EXPECT_EQ(missing.code, 3);
  EXPECT_NE(Stderr().find("--opt"), std::string::npos);

  SaveInstance(Path("ok.lp"), LpInstance::Packing(PositiveMatrix::Identity(1), 1.0));
  WriteTextFile(Path("bad.lp"), "{\"kind\": \"packing\", \"A\": [[-1]]}\n");
  EXPECT_EQ(Run("solve --kind packing --in " + Path("bad.lp") + " --deterministic").code, 2);
  EXPECT_EQ(Run("solve --kind packing --in " + Path("missing.lp") + " --deterministic").code,
            2);
  EXPECT_EQ(Run("solve --kind packing --in " + Path("ok.lp") + " --eps 1").code, 3);
  EXPECT_EQ(Run("solve --kind nonsense --in " + Path("ok.lp") + " --deterministic").code, 3);
  EXPECT_EQ(Run("solve --bogus-flag").code, 2);
  EXPECT_EQ(Run("--help").code, 0);
}

TEST_F(CliTest, CertifyDetectsTampering) {
  const std::string in = WriteIdentity("cov.lp", InstanceKind::kCovering);
  ASSERT_EQ(Run("solve --kind covering --in " + in + " --alpha 0.2 --deterministic --out " +
                Path("r.report"))
                .code,
            0);
  SolveReport r = ParseReport(ReadTextFile(Path("r.report")));
  for (double& v : r.solution) v = 0.0;
  WriteTextFile(Path("t.report"), SerializeReport(r));
  const Result cert = Run("certify --report " + Path("t.report") + " --in " + in);
  EXPECT_EQ(cert.code, 1);
  EXPECT_NE(cert.out.find("violations 2"), std::string::npos) << cert.out;
  EXPECT_NE(cert.out.find("violated_rows 0 1"), std::string::npos) << cert.out;
  EXPECT_NE(cert.out.find("not certified"), std::string::npos);
}

TEST_F(CliTest, CertifyDimensionMismatchIsParseError) {
  const std::string in = WriteIdentity("id2.lp", InstanceKind::kPacking);
  ASSERT_EQ(Run("solve --kind packing --in " + in + " --alpha 0.1 --deterministic --out " +
                Path("r.report"))
                .code,
            0);
  SaveInstance(Path("id3.lp"), LpInstance::Packing(PositiveMatrix::Identity(3), 3.0));
  EXPECT_EQ(Run("certify --report " + Path("r.report") + " --in " + Path("id3.lp")).code, 2);
}

TEST_F(CliTest, GenerateAndExperiment) {
  ASSERT_EQ(Run("generate --kind covering --family set_cover --rows 12 --cols 4 --seed 3 "
                "--out " + Path("g.lp"))
                .code,
            0);
  const LpInstance inst = LoadInstance(Path("g.lp"));
  EXPECT_EQ(inst.rows(), 12u);
  const std::string sweep =
      "experiment --kind packing --family set_cover --rows 20 --cols 5 --seeds 1-4 "
      "--alphas 0.3 --epsilons 1,inf --delta 1e-6 --threads 2";
  const Result a = Run(sweep);
  ASSERT_EQ(a.code, 0) << Stderr();
  EXPECT_EQ(a.out, Run(sweep).out);
  std::istringstream lines(a.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header.rfind("kind\tfamily\talpha\tepsilon\truns", 0), 0u) << header;
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  EXPECT_EQ(rows, 2);
}

}  // namespace
}  // namespace posdp
