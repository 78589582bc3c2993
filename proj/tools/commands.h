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

#ifndef POSDP_TOOLS_COMMANDS_H_
#define POSDP_TOOLS_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace posdp::cli {

// Process exit codes besides 0.
inline constexpr int kExitCertifyFailed = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitConfig = 3;
inline constexpr int kExitInternal = 4;

struct SolveFlags {
  std::string kind;
  std::string in;
  std::string out;  // empty writes to stdout
  double alpha = 0.1;
  double beta = 0.05;
  std::optional<double> epsilon;
  std::optional<double> delta;
  std::uint64_t seed = 0;
  std::optional<double> opt;
  std::optional<double> feasible_mass;
  std::string range;
  bool preprocess = false;
  bool deterministic = false;
  bool trace = false;
  bool timing = false;
};

struct CertifyFlags {
  std::string report;
  std::string in;
};

struct ExperimentFlags {
  std::string kind;
  std::string in;  // fixed instance; otherwise one generated per seed
  std::string family = "set_cover";
  std::size_t rows = 50;
  std::size_t cols = 10;
  double density = 0.3;
  std::size_t groups = 0;
  std::string seeds = "1-20";
  std::string alphas = "0.3";
  std::string epsilons = "1";
  std::optional<double> delta;
  double beta = 0.05;
  std::optional<double> opt;
  std::optional<double> feasible_mass;
  std::string range;
  bool preprocess = false;
  std::size_t threads = 1;
  std::string out;
};

struct SmaxFlags {
  std::string x;
  std::string file;  // whitespace or comma separated values
  double cap = 1.0;
  bool min = false;
  bool json = false;
};

struct GenerateFlags {
  std::string kind = "packing";
  std::string family = "identity";
  std::size_t rows = 3;
  std::size_t cols = 3;
  double density = 0.5;
  std::uint64_t seed = 0;
  std::size_t groups = 0;
  std::string out;
};

// Each command returns its exit status and lets library errors propagate.
int RunSolve(const SolveFlags& flags);
int RunCertify(const CertifyFlags& flags);
int RunExperiment(const ExperimentFlags& flags);
int RunSmax(const SmaxFlags& flags);
int RunGenerate(const GenerateFlags& flags);

}  // namespace posdp::cli

#endif  // POSDP_TOOLS_COMMANDS_H_
