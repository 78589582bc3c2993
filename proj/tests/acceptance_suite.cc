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

// Acceptance checks. Prints one [PASS]/[FAIL] line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "posdp/baselines.h"
#include "posdp/capped_softmax.h"
#include "posdp/generators.h"
#include "posdp/instance_io.h"
#include "posdp/mechanisms.h"
#include "posdp/report.h"
#include "posdp/solvers.h"
#include "test_support.h"

namespace posdp {
namespace {

using Clock = std::chrono::steady_clock;
using testing::UniformVector;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void Require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double Dot(const std::vector<double>& a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// 1. smax against the brute-force capped-simplex maximizer.
void OracleEquivalence(Outcome& out) {
  const auto start = Clock::now();
  std::mt19937_64 gen(1);
  std::uniform_int_distribution<int> size(1, 4);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(size(gen));
    const std::vector<double> x = UniformVector(gen, n, -5, 5);
    const double cap =
        std::uniform_real_distribution<double>(1.0 / static_cast<double>(n), 1.0)(gen);
    worst = std::max(worst, std::abs(SmaxU(x, cap).value -
                                     testing::BruteForceSmax(x, cap).value));
  }
  const double elapsed = Seconds(start);
  out.Require(worst <= 1e-6, "value gap");
  out.Require(elapsed < 10.0, "runtime");
  out.detail << "200 cases, max |gap| " << worst << ", " << elapsed << " s";
}

// 2. Central differences away from the cap boundary.
void GradientCheck(Outcome& out) {
  std::mt19937_64 gen(2);
  constexpr double kStep = 1e-5;
  int points = 0, skipped = 0;
  double worst = 0.0;
  while (points < 500) {
    const std::size_t n = 2 + static_cast<std::size_t>(gen() % 10);
    const std::vector<double> x = UniformVector(gen, n, -4, 4);
    const double cap = std::max(1.0 / static_cast<double>(n) + 0.05,
                                UniformVector(gen, 1, 0.2, 1.0)[0]);
    const SmaxEval e = SmaxU(x, cap);
    bool near = false;
    for (double v : x) near = near || std::abs(std::exp(v - e.threshold) - cap) < 1e-4;
    if (near) {
      ++skipped;
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> up(x), down(x);
      up[i] += kStep;
      down[i] -= kStep;
      const double fd = (SmaxU(up, cap).value - SmaxU(down, cap).value) / (2 * kStep);
      worst = std::max(worst, std::abs(fd - e.gradient[i]) / std::max(e.gradient[i], 1e-6));
    }
    ++points;
  }
  out.Require(worst <= 1e-4, "relative error");
  out.detail << "500 points (" << skipped << " near-boundary skipped), max rel err "
             << worst;
}

// 3. smax increase and smin decrease bounds.
void UpdateBounds(Outcome& out) {
  std::mt19937_64 gen(3);
  const double ds[] = {0.1, 0.5, 1.0};
  double worst = -INFINITY;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 9);
    const double d = ds[trial % 3];
    const std::vector<double> x = UniformVector(gen, n, -3, 3);
    const std::vector<double> u = UniformVector(gen, n, 0, d);
    const double cap = std::max(1.0 / static_cast<double>(n), 0.3);
    std::vector<double> xu(x);
    for (std::size_t i = 0; i < n; ++i) xu[i] += u[i];
    const SmaxEval hi = SmaxU(x, cap);
    const double lin = Dot(u, hi.gradient.weights());
    const double next = SmaxU(xu, cap).value;
    worst = std::max(worst, next - (hi.value + (std::exp(d) - 1) / d * lin));
    worst = std::max(worst, next - (hi.value + (1 + d) * lin));
    const SmaxEval lo = SminU(x, cap);
    worst = std::max(worst, (lo.value + (1 - d) * Dot(u, lo.gradient.weights())) -
                                SminU(xu, cap).value);
  }
  out.Require(worst <= 1e-9, "bound exceeded");
  out.detail << "1000 triples x 3 inequalities, worst excess " << worst;
}

// 4. Argmax-mode packing and covering satisfy every row.
void DeterministicLimit(Outcome& out) {
  int runs = 0;
  double slowest = 0.0;
  std::vector<LpInstance> packing, covering;
  for (std::size_t n : {2u, 7u, 10u}) {
    packing.push_back(LpInstance::Packing(PositiveMatrix::Identity(n), static_cast<double>(n)));
    covering.push_back(LpInstance::Covering(PositiveMatrix::Identity(n), static_cast<double>(n)));
  }
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    GeneratorSpec spec;
    spec.family = Family::kPlantedFeasible;
    spec.rows = 10 + 8 * seed;
    spec.cols = 2 + seed % 9;
    spec.seed = seed;
    spec.kind = InstanceKind::kPacking;
    packing.push_back(Generate(spec));
    spec.kind = InstanceKind::kCovering;
    covering.push_back(Generate(spec));
  }
  for (const double alpha : {0.1, 0.3}) {
    SolverConfig config;
    config.alpha = alpha;
    config.epsilon = kArgmaxEpsilon;
    for (int side = 0; side < 2; ++side) {
      const bool pack = side == 0;
      for (const LpInstance& inst : pack ? packing : covering) {
        const auto start = Clock::now();
        const SolveReport r =
            Solve(pack ? ProblemKind::kPacking : ProblemKind::kCovering, inst, config, 0);
        slowest = std::max(slowest, Seconds(start));
        const std::vector<double> loads = inst.A->Multiply(r.solution);
        for (double v : loads) {
          out.Require(pack ? v <= 1 + alpha + 1e-12 : v >= 1 - alpha - 1e-12,
                      std::string(pack ? "packing" : "covering") + " row");
        }
        out.Require(std::abs(r.objective - *inst.opt) <= 1e-9 * std::max(1.0, *inst.opt),
                    "objective != OPT");
        ++runs;
      }
    }
  }
  out.Require(slowest < 5.0, "runtime");
  out.detail << runs << " runs, slowest " << slowest << " s";
}

// 5. Private-mode violation counts against s.
void PrivateViolationBound(Outcome& out) {
  for (const InstanceKind kind : {InstanceKind::kPacking, InstanceKind::kCovering}) {
    int within = 0;
    std::int64_t s = 0, worst = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      GeneratorSpec spec;
      spec.kind = kind;
      spec.family = Family::kSetCover;
      spec.rows = 50;
      spec.cols = 10;
      spec.seed = seed;
      const LpInstance inst = Generate(spec);
      SolverConfig config;
      config.alpha = 0.3;
      config.beta = 0.05;
      config.epsilon = 1.0;
      config.delta = 1e-6;
      const ProblemKind pk =
          kind == InstanceKind::kPacking ? ProblemKind::kPacking : ProblemKind::kCovering;
      const SolveReport r = Solve(pk, inst, config, seed);
      s = r.params.s;
      worst = std::max(worst, r.violations.count);
      if (r.violations.count <= r.params.s) ++within;
    }
    out.Require(within >= 19, "fewer than 19 of 20 runs within s");
    out.detail << InstanceKindName(kind) << " " << within << "/20 within s = " << s
               << " (n = 50, max violations " << worst << "); ";
  }
}

// 6. Mixed ratio certificate and a zero-violation scale.
void MixedCertificate(Outcome& out) {
  const double alpha = 0.3;
  double worst_ratio = 0.0;
  int runs = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GeneratorSpec spec;
    spec.kind = InstanceKind::kMixed;
    spec.family = seed < 2 ? Family::kIdentity : Family::kPlantedFeasible;
    spec.rows = seed < 2 ? 2 + seed : 4 + seed;
    spec.cols = seed < 2 ? spec.rows : 2 + seed % 3;
    spec.seed = seed;
    const LpInstance inst = Generate(spec);
    SolverConfig config;
    config.alpha = alpha;
    config.epsilon = kArgmaxEpsilon;
    const SolveReport r = Solve(ProblemKind::kMixedDataDependent, inst, config, 0);
    worst_ratio = std::max(worst_ratio, *r.ratio_certificate);
    out.Require(*r.ratio_certificate <= 1 + alpha, "ratio above 1 + alpha");
    out.Require(r.violations.count == 0, "chosen scale violates rows");
    ++runs;
  }
  out.detail << runs << " planted runs, max ratio " << worst_ratio;
}

// 7. Neighboring-instance score gaps.
void SensitivityAudit(Outcome& out) {
  std::mt19937_64 gen(7);
  const testing::AuditResult pack =
      testing::AuditPackingCovering(gen, false, 16, 5, 6, 100, 40);
  const testing::AuditResult cover =
      testing::AuditPackingCovering(gen, true, 16, 5, 6, 100, 40);
  const testing::AuditResult dd = testing::AuditMixedDd(gen, 16, 4, 6, 100, 40);
  const testing::AuditResult di = testing::AuditMixedDi(gen, 16, 4, 6, 100, 40);
  out.Require(pack.worst_excess <= 1e-9, "packing");
  out.Require(cover.worst_excess <= 1e-9, "covering");
  out.Require(dd.worst_excess <= 1e-9, "mixed-dd");
  out.Require(di.worst_excess <= 1e-9, "mixed-di");
  out.detail << "max gap / bound: packing " << pack.worst_ratio << ", covering "
             << cover.worst_ratio << ", mixed-dd " << dd.worst_ratio << ", mixed-di "
             << di.worst_ratio;
}

// 8. Exponential mechanism frequencies.
void MechanismDistribution(Outcome& out) {
  const std::vector<std::vector<double>> cases = {
      {2, 1, 0}, {0, 0}, {1, 0}, {-3, 0.5, 4, -10, 2.2, 3.9, 0, -0.7}};
  const double eps[] = {2.0, 1.0, 2.0 * std::log(3.0), 1.7};
  double worst = 0.0;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const std::vector<double>& scores = cases[c];
    const std::vector<double> p = ExpMechanismProbabilities(scores, 1.0, eps[c]);
    std::vector<double> gumbel(scores.size(), 0.0), inverse(scores.size(), 0.0);
    RandomStream a(100 + c), b(200 + c);
    constexpr int kDraws = 100000;
    for (int k = 0; k < kDraws; ++k) {
      gumbel[ExpMechanism(scores, 1.0, eps[c], a)] += 1.0 / kDraws;
      inverse[ExpMechanismByInversion(scores, 1.0, eps[c], b)] += 1.0 / kDraws;
    }
    for (std::size_t i = 0; i < scores.size(); ++i) {
      worst = std::max({worst, std::abs(gumbel[i] - p[i]), std::abs(inverse[i] - p[i])});
    }
  }
  out.Require(worst <= 0.01, "frequency gap");
  out.detail << cases.size() << " score vectors x 1e5 draws x 2 samplers, max |gap| "
             << worst;
}

// 9. MaxEstimator on arrays with a unique maximum.
void MaxEstimatorCheck(Outcome& out) {
  struct Crafted {
    std::vector<double> values;
    double m, M;
  };
  std::vector<Crafted> arrays;
  {
    std::vector<double> v(40, 1.0);
    v[17] = 50.0;
    arrays.push_back({v, 1.0, 64.0});
  }
  {
    std::vector<double> v(100);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = 0.5 + 0.01 * static_cast<double>(i);
    v[63] = 7.5;
    arrays.push_back({v, 0.5, 8.0});
  }
  arrays.push_back({{3.0, 0.2, 0.1}, 0.1, 1000.0});
  for (const Crafted& c : arrays) {
    const double top = *std::max_element(c.values.begin(), c.values.end());
    const double bound = MaxEstimatorFilterBound(c.m, c.M, 1.0, 0.05);
    int k_ok = 0, f_ok = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      RandomStream rng(seed);
      const MaxEstimate e = MaxEstimator(c.values, c.m, c.M, 1.0, 0.05, rng);
      if (e.estimate <= 4 * top) ++k_ok;
      if (static_cast<double>(e.filtered.size()) <= bound) ++f_ok;
    }
    out.Require(k_ok >= 190 && f_ok >= 190, "too few successes");
    out.detail << "[K<=4max " << k_ok << "/200, filtered<=" << bound << " " << f_ok
               << "/200] ";
  }
}

// 10. Covering witness after clipping, packing post-processing implication.
void PreprocessingSoundness(Outcome& out) {
  int witness_checks = 0, rows_checked = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GeneratorSpec spec;
    spec.kind = InstanceKind::kCovering;
    spec.family = Family::kPlantedFeasible;
    spec.rows = 6 + seed % 20;
    spec.cols = 2 + seed % 6;
    spec.seed = seed;
    spec.density = 0.3;
    const GeneratedInstance g = GenerateWithWitness(spec);
    const PositiveMatrix& a = *g.instance.A;
    const double opt = *g.instance.opt, alpha = 0.1 + 0.05 * static_cast<double>(seed % 10);
    const double d = static_cast<double>(a.cols());
    std::vector<double> y(g.witness);
    double sum = 0.0;
    for (double& v : y) {
      v = (v + alpha * opt / (20 * d)) / (1 + alpha / 20);
      sum += v;
    }
    out.Require(std::abs(sum - opt) <= 1e-9 * opt, "witness mass");
    for (double v : a.Clipped(40 * d / (alpha * opt)).Multiply(y)) {
      out.Require(v >= 1 - alpha / 20 - 1e-12, "clipped witness row");
    }
    ++witness_checks;
  }
  std::mt19937_64 gen(10);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 5 + seed % 15, d = 2 + seed % 5;
    PositiveMatrix a = testing::RandomMatrix(gen, n, d, 0.0, 1.0);
    std::vector<double> spike = UniformVector(gen, d, 0.0, 1.0);
    spike[seed % d] = 100.0;
    a = a.WithRow(seed % n, spike);
    SolverConfig config;
    config.alpha = 0.3;
    config.opt = 0.5;
    config.preprocess = true;
    config.epsilon = seed % 2 == 0 ? kArgmaxEpsilon : 1.0;
    config.delta = 1e-6;
    RandomStream rng(seed);
    const SolveReport r = SolvePacking(a, config, rng);
    const std::vector<double> clipped = a.Clipped(*r.params.H).Multiply(r.solution);
    const std::vector<double> original = a.Multiply(r.solution);
    for (std::size_t i = 0; i < n; ++i) {
      if (clipped[i] <= 1.3) {
        out.Require(original[i] <= clipped[i] + 1e-12, "original exceeds clipped");
        ++rows_checked;
      }
    }
    out.Require(r.objective >= 0.7 * 0.5 - 1e-12, "post-processed objective");
  }
  out.detail << witness_checks << " covering witnesses, " << rows_checked
             << " packing rows within 1 + alpha after clipping";
}

// 11. Seed determinism and canonical round trips.
void DeterminismAndFormat(Outcome& out) {
  int reports = 0;
  for (const ProblemKind kind : {ProblemKind::kPacking, ProblemKind::kCovering,
                                 ProblemKind::kMixedDataDependent,
                                 ProblemKind::kMixedDataIndependent}) {
    GeneratorSpec spec;
    spec.kind = InstanceKindFor(kind);
    spec.family = Family::kPlantedFeasible;
    spec.rows = 12;
    spec.cols = 3;
    spec.seed = 5;
    const LpInstance inst = Generate(spec);
    const std::string inst_text = SerializeInstance(inst);
    out.Require(SerializeInstance(ParseInstance(inst_text)) == inst_text, "instance bytes");
    out.Require(ParseInstance(inst_text) == inst, "instance value");
    SolverConfig config;
    config.alpha = 0.4;
    config.epsilon = 1.0;
    config.delta = 1e-6;
    config.trace = true;
    const std::string a = SerializeReport(Solve(kind, inst, config, 99));
    const std::string b = SerializeReport(Solve(kind, inst, config, 99));
    out.Require(a == b, "report bytes differ across identical runs");
    out.Require(SerializeReport(ParseReport(a)) == a, "report round trip");
    ++reports;
  }
  out.detail << reports << " kinds: identical reports, bit-exact round trips";
}

}  // namespace
}  // namespace posdp

int main() {
  using posdp::Outcome;
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"capped-softmax oracle equivalence", posdp::OracleEquivalence},
      {"gradient finite differences", posdp::GradientCheck},
      {"increase/decrease bounds", posdp::UpdateBounds},
      {"deterministic-limit MWU guarantee", posdp::DeterministicLimit},
      {"private-mode violation bound", posdp::PrivateViolationBound},
      {"mixed ratio certificate", posdp::MixedCertificate},
      {"sensitivity audits", posdp::SensitivityAudit},
      {"exponential mechanism distribution", posdp::MechanismDistribution},
      {"max estimator", posdp::MaxEstimatorCheck},
      {"pre/post-processing soundness", posdp::PreprocessingSoundness},
      {"determinism and format", posdp::DeterminismAndFormat},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    const auto start = posdp::Clock::now();
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail << "exception: " << e.what();
    }
    std::printf("[%s] AC%zu %s: %s (%.2f s)\n", out.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first, out.detail.str().c_str(), posdp::Seconds(start));
    std::fflush(stdout);
    if (!out.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
