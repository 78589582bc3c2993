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

// posdp: private solvers for positive linear programs.
//
//   posdp solve --kind packing --in id2.json --alpha 0.1 --eps 1 --delta 1e-6
//   posdp certify --report r.json --in id2.json
//   posdp experiment --kind packing --family set_cover --seeds 1-20 ...
//   posdp smax --x 0,0 --u 1
//   posdp generate --kind covering --family set_cover --rows 50 --cols 10

#include <exception>
#include <iostream>

#include "CLI11.hpp"
#include "commands.h"
#include "posdp/errors.h"

namespace {

using posdp::cli::kExitConfig;
using posdp::cli::kExitInternal;
using posdp::cli::kExitParse;

int ExitCodeFor(const posdp::Error& e) {
  switch (e.code()) {
    case posdp::ErrorCode::kParse:
      return kExitParse;
    case posdp::ErrorCode::kDomain:
    case posdp::ErrorCode::kInfeasibleCap:
    case posdp::ErrorCode::kBudget:
    case posdp::ErrorCode::kConfig:
      return kExitConfig;
    case posdp::ErrorCode::kInternal:
      return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differentially private solvers for positive linear programs"};
  app.require_subcommand(1);

  posdp::cli::SolveFlags solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Run one solver and write its report");
  solve_cmd->add_option("--kind", solve.kind, "packing, covering, mixed-dd or mixed-di")->required();
  solve_cmd->add_option("--in", solve.in, "Instance file")->required();
  solve_cmd->add_option("--out", solve.out, "Report file (default stdout)");
  solve_cmd->add_option("--alpha", solve.alpha, "Approximation parameter in (0, 1)");
  solve_cmd->add_option("--beta", solve.beta, "Failure probability")->capture_default_str();
  solve_cmd->add_option("--eps", solve.epsilon, "Total privacy budget epsilon");
  solve_cmd->add_option("--delta", solve.delta, "Privacy parameter delta");
  solve_cmd->add_option("--seed", solve.seed, "Random seed")->capture_default_str();
  solve_cmd->add_option("--opt", solve.opt, "Optimal objective (packing/covering)");
  solve_cmd->add_option("--V", solve.feasible_mass, "1^T x of a feasible point (mixed-dd)");
  solve_cmd->add_option("--range", solve.range, "Column-maximum range m,M");
  solve_cmd->add_flag("--preprocess", solve.preprocess, "Clip entries (and post-process packing)");
  solve_cmd->add_flag("--deterministic", solve.deterministic, "Argmax oracles, no privacy");
  solve_cmd->add_flag("--trace", solve.trace, "Include an iteration digest");
  solve_cmd->add_flag("--timing", solve.timing, "Record wall time in the report");

  posdp::cli::CertifyFlags certify;
  CLI::App* certify_cmd = app.add_subcommand("certify", "Re-check a report against its instance");
  certify_cmd->add_option("--report", certify.report, "Report file")->required();
  certify_cmd->add_option("--in", certify.in, "Instance file")->required();

  posdp::cli::ExperimentFlags exp;
  CLI::App* exp_cmd = app.add_subcommand("experiment", "Seed sweep with a summary table");
  exp_cmd->add_option("--kind", exp.kind, "packing, covering, mixed-dd or mixed-di")->required();
  exp_cmd->add_option("--in", exp.in, "Fixed instance file instead of a generator");
  exp_cmd->add_option("--family", exp.family, "Generator family")->capture_default_str();
  exp_cmd->add_option("--rows", exp.rows, "Generated rows")->capture_default_str();
  exp_cmd->add_option("--cols", exp.cols, "Generated columns")->capture_default_str();
  exp_cmd->add_option("--density", exp.density, "Generator density")->capture_default_str();
  exp_cmd->add_option("--groups", exp.groups, "set_cover groups (0 = d/3)");
  exp_cmd->add_option("--seeds", exp.seeds, "Seeds, e.g. 1-20 or 3,5,8")->capture_default_str();
  exp_cmd->add_option("--alphas", exp.alphas, "Comma-separated alphas")->capture_default_str();
  exp_cmd->add_option("--epsilons", exp.epsilons, "Comma-separated epsilons (inf allowed)")->capture_default_str();
  exp_cmd->add_option("--delta", exp.delta, "Privacy parameter delta");
  exp_cmd->add_option("--beta", exp.beta, "Failure probability")->capture_default_str();
  exp_cmd->add_option("--opt", exp.opt, "Override OPT");
  exp_cmd->add_option("--V", exp.feasible_mass, "Override V");
  exp_cmd->add_option("--range", exp.range, "Override the range m,M");
  exp_cmd->add_flag("--preprocess", exp.preprocess, "Enable preprocessing");
  exp_cmd->add_option("--threads", exp.threads, "Worker threads")->capture_default_str();
  exp_cmd->add_option("--out", exp.out, "Table file (default stdout)");

  posdp::cli::SmaxFlags smax;
  CLI::App* smax_cmd = app.add_subcommand("smax", "Evaluate the truncated softmax");
  smax_cmd->add_option("--x", smax.x, "Comma-separated vector");
  smax_cmd->add_option("--file", smax.file, "File with the vector");
  smax_cmd->add_option("--u", smax.cap, "Cap U in (0, 1]")->capture_default_str();
  smax_cmd->add_flag("--min", smax.min, "Evaluate the truncated softmin instead");
  smax_cmd->add_flag("--json", smax.json, "Shortest round-trip JSON output");

  posdp::cli::GenerateFlags gen;
  CLI::App* gen_cmd = app.add_subcommand("generate", "Write a generated instance");
  gen_cmd->add_option("--kind", gen.kind, "packing, covering or mixed")->capture_default_str();
  gen_cmd->add_option("--family", gen.family,
                      "random_uniform, set_cover, identity or planted_feasible")
      ->capture_default_str();
  gen_cmd->add_option("--rows", gen.rows, "Rows (per side for mixed)")->capture_default_str();
  gen_cmd->add_option("--cols", gen.cols, "Columns")->capture_default_str();
  gen_cmd->add_option("--density", gen.density, "Nonzero density")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--groups", gen.groups, "set_cover groups (0 = d/3)");
  gen_cmd->add_option("--out", gen.out, "Instance file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*solve_cmd) return posdp::cli::RunSolve(solve);
    if (*certify_cmd) return posdp::cli::RunCertify(certify);
    if (*exp_cmd) return posdp::cli::RunExperiment(exp);
    if (*smax_cmd) return posdp::cli::RunSmax(smax);
    if (*gen_cmd) return posdp::cli::RunGenerate(gen);
  } catch (const posdp::Error& e) {
    std::cerr << "error (" << posdp::ErrorCodeName(e.code()) << "): " << e.what()
              << "\n";
    return ExitCodeFor(e);
  } catch (const std::exception& e) {
    std::cerr << "error (internal): " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
