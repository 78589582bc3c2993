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

#include "commands.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "parse_util.h"
#include "posdp/capped_softmax.h"
#include "posdp/certify.h"
#include "posdp/errors.h"
#include "posdp/generators.h"
#include "posdp/instance_io.h"
#include "posdp/mechanisms.h"
#include "posdp/params.h"
#include "posdp/report.h"
#include "posdp/solvers.h"
#include "posdp/text_format.h"

namespace posdp::cli {
namespace {

void Emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
  } else {
    WriteTextFile(path, text);
  }
}

std::string JoinIndices(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

// One experiment cell: a fixed (alpha, epsilon) pair over all seeds.
struct CellResult {
  std::int64_t violations = 0;
  std::int64_t allowed = 0;
  std::int64_t s = 0;
  bool vacuous = false;
};

}  // namespace

int RunSolve(const SolveFlags& flags) {
  const ProblemKind kind = ParseProblemKind(flags.kind);
  const LpInstance instance = LoadInstance(flags.in);

  SolverConfig config;
  config.alpha = flags.alpha;
  config.beta = flags.beta;
  if (flags.deterministic) {
    config.epsilon = kArgmaxEpsilon;
  } else if (flags.epsilon) {
    config.epsilon = *flags.epsilon;
  } else {
    throw ConfigError("missing privacy budget (pass --eps or --deterministic)");
  }
  config.delta = flags.delta;
  config.opt = flags.opt;
  config.feasible_mass = flags.feasible_mass;
  if (!flags.range.empty()) config.range = ParseRange(flags.range);
  config.preprocess = flags.preprocess;
  config.trace = flags.trace;

  const auto start = std::chrono::steady_clock::now();
  SolveReport report = Solve(kind, instance, config, flags.seed);
  if (flags.timing) {
    report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
  }
  if (report.vacuous_bound) {
    std::cerr << "warning: s = " << report.params.s
              << " exceeds the constraint count; the violation bound is "
                 "vacuous\n";
  }
  Emit(flags.out, SerializeReport(report));
  return 0;
}

int RunCertify(const CertifyFlags& flags) {
  const SolveReport report = ParseReport(ReadTextFile(flags.report));
  const LpInstance instance = LoadInstance(flags.in);
  const Certification cert = CertifyReport(instance, report);
  std::cout << "violations " << cert.census.count << " (allowed "
            << report.params.s + static_cast<std::int64_t>(
                                     report.filtered_constraints.size())
            << ")\n";
  if (cert.census.count > 0) {
    std::cout << "violated_rows " << JoinIndices(cert.census.indices) << "\n";
  }
  for (const std::string& line : cert.failures) std::cout << "FAIL " << line << "\n";
  std::cout << (cert.pass ? "certified\n" : "not certified\n");
  return cert.pass ? 0 : kExitCertifyFailed;
}

int RunExperiment(const ExperimentFlags& flags) {
  const ProblemKind kind = ParseProblemKind(flags.kind);
  const std::vector<std::uint64_t> seeds = ParseSeedList(flags.seeds, "--seeds");
  const std::vector<double> alphas = ParseRealList(flags.alphas, "--alphas");
  const std::vector<double> epsilons =
      ParseRealList(flags.epsilons, "--epsilons");
  if (seeds.empty()) throw ConfigError("--seeds is empty");

  std::optional<LpInstance> fixed;
  GeneratorSpec spec;
  if (!flags.in.empty()) {
    fixed = LoadInstance(flags.in);
  } else {
    spec.kind = InstanceKindFor(kind);
    spec.family = ParseFamily(flags.family);
    spec.rows = flags.rows;
    spec.cols = flags.cols;
    spec.density = flags.density;
    spec.groups = flags.groups;
  }

  SolverConfig base;
  base.beta = flags.beta;
  base.delta = flags.delta;
  base.opt = flags.opt;
  base.feasible_mass = flags.feasible_mass;
  if (!flags.range.empty()) base.range = ParseRange(flags.range);
  base.preprocess = flags.preprocess;

  struct Job {
    std::size_t cell;
    std::uint64_t seed;
    SolverConfig config;
  };
  std::vector<Job> jobs;
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    for (std::size_t e = 0; e < epsilons.size(); ++e) {
      SolverConfig config = base;
      config.alpha = alphas[a];
      config.epsilon = epsilons[e];
      for (std::uint64_t seed : seeds) {
        jobs.push_back(Job{a * epsilons.size() + e, seed, config});
      }
    }
  }

  std::vector<CellResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        const Job& job = jobs[i];
        LpInstance instance;
        if (fixed) {
          instance = *fixed;
        } else {
          GeneratorSpec seeded = spec;
          seeded.seed = job.seed;
          instance = Generate(seeded);
        }
        const SolveReport report = Solve(kind, instance, job.config, job.seed);
        results[i] = CellResult{
            report.violations.count,
            report.params.s +
                static_cast<std::int64_t>(report.filtered_constraints.size()),
            report.params.s, report.vacuous_bound};
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next.store(jobs.size());
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, flags.threads);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::ostringstream table;
  table << "kind\tfamily\talpha\tepsilon\truns\tmean_violations\tmax_violations"
           "\ts_bound\tsuccess_rate\ttarget_rate\tvacuous\n";
  const std::string family = fixed ? "file" : FamilyName(spec.family);
  const std::size_t runs = seeds.size();
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    for (std::size_t e = 0; e < epsilons.size(); ++e) {
      const std::size_t cell = a * epsilons.size() + e;
      double total = 0;
      std::int64_t worst = 0;
      std::int64_t s_bound = 0;
      std::size_t successes = 0;
      bool vacuous = false;
      for (std::size_t r = 0; r < runs; ++r) {
        const CellResult& res = results[cell * runs + r];
        total += static_cast<double>(res.violations);
        worst = std::max(worst, res.violations);
        s_bound = std::max(s_bound, res.s);
        if (res.violations <= res.allowed) ++successes;
        vacuous = vacuous || res.vacuous;
      }
      table << ProblemKindName(kind) << '\t' << family << '\t'
            << FormatDouble(alphas[a]) << '\t' << FormatDouble(epsilons[e])
            << '\t' << runs << '\t'
            << FormatDouble(total / static_cast<double>(runs)) << '\t' << worst
            << '\t' << s_bound << '\t'
            << FormatDouble(static_cast<double>(successes) /
                            static_cast<double>(runs))
            << '\t' << FormatDouble(1.0 - flags.beta) << '\t'
            << (vacuous ? "yes" : "no") << '\n';
    }
  }
  Emit(flags.out, table.str());
  return 0;
}

int RunSmax(const SmaxFlags& flags) {
  std::string text = flags.x;
  if (!flags.file.empty()) {
    text = ReadTextFile(flags.file);
    std::replace_if(
        text.begin(), text.end(),
        [](char c) { return c == ' ' || c == '\n' || c == '\t' || c == '\r'; },
        ',');
    text.erase(std::unique(text.begin(), text.end(),
                           [](char a, char b) { return a == ',' && b == ','; }),
               text.end());
    while (!text.empty() && text.back() == ',') text.pop_back();
    while (!text.empty() && text.front() == ',') text.erase(text.begin());
  }
  if (text.empty()) throw DomainError("empty input vector (pass --x or --file)");
  const std::vector<double> x = ParseRealList(text, "--x");
  const SmaxEval eval = flags.min ? SminU(x, flags.cap) : SmaxU(x, flags.cap);

  std::ostringstream out;
  if (flags.json) {
    out << "{\"value\": " << FormatDouble(eval.value)
        << ", \"threshold\": " << FormatDouble(eval.threshold)
        << ", \"capped_set\": [";
    for (std::size_t i = 0; i < eval.capped_set.size(); ++i) {
      out << (i > 0 ? ", " : "") << eval.capped_set[i];
    }
    out << "], \"gradient\": [";
    for (std::size_t i = 0; i < eval.gradient.size(); ++i) {
      out << (i > 0 ? ", " : "") << FormatDouble(eval.gradient[i]);
    }
    out << "]}\n";
  } else {
    out << "value " << Significant12(eval.value) << "\n";
    out << "threshold " << Significant12(eval.threshold) << "\n";
    out << "capped_set";
    for (std::size_t i : eval.capped_set) out << ' ' << i;
    out << "\ngradient";
    for (std::size_t i = 0; i < eval.gradient.size(); ++i) {
      out << ' ' << Significant12(eval.gradient[i]);
    }
    out << "\n";
  }
  std::cout << out.str();
  return 0;
}

int RunGenerate(const GenerateFlags& flags) {
  GeneratorSpec spec;
  try {
    spec.kind = ParseInstanceKind(flags.kind);
  } catch (const ParseError& e) {
    throw ConfigError(e.what());
  }
  spec.family = ParseFamily(flags.family);
  spec.rows = flags.rows;
  spec.cols = flags.cols;
  spec.density = flags.density;
  spec.seed = flags.seed;
  spec.groups = flags.groups;
  Emit(flags.out, SerializeInstance(Generate(spec)));
  return 0;
}

}  // namespace posdp::cli
