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

#include "posdp/report.h"

#include <cmath>
#include <limits>
#include <set>

#include "json.hpp"
#include "posdp/errors.h"
#include "posdp/text_format.h"

namespace posdp {
namespace {

using json = nlohmann::json;

std::string Number(double value) {
  const std::string text = FormatDouble(value);
  return std::isfinite(value) ? text : "\"" + text + "\"";
}

template <typename T>
std::string IntList(const std::vector<T>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(values[i]);
  }
  return out + "]";
}

std::string DoubleList(const std::vector<double>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += Number(values[i]);
  }
  return out + "]";
}

// Accumulates `"key": value` lines at one indentation level.
class ObjectWriter {
 public:
  explicit ObjectWriter(int indent) : pad_(static_cast<std::size_t>(indent), ' ') {}

  void Raw(const char* key, const std::string& value) {
    if (!body_.empty()) body_ += ",\n";
    body_ += pad_ + "\"" + key + "\": " + value;
  }
  void Real(const char* key, double value) { Raw(key, Number(value)); }
  void Real(const char* key, const std::optional<double>& value) {
    if (value) Real(key, *value);
  }

  std::string Close() const {
    return "{\n" + body_ + "\n" + pad_.substr(2) + "}";
  }

 private:
  std::string pad_;
  std::string body_;
};

std::string CensusText(const ViolationCensus& census) {
  ObjectWriter w(4);
  w.Raw("count", std::to_string(census.count));
  w.Raw("indices", IntList(census.indices));
  w.Real("threshold", census.threshold);
  w.Real("top_s_average", census.top_s_average);
  w.Real("covering_threshold", census.covering_threshold);
  w.Real("bottom_s_average", census.bottom_s_average);
  return w.Close();
}

std::string ParamsText(const SolverParams& p) {
  ObjectWriter w(4);
  w.Real("alpha", p.alpha);
  w.Real("beta", p.beta);
  w.Real("epsilon", p.epsilon);
  w.Real("delta", p.delta);
  w.Real("eps_prime", p.eps_prime);
  w.Raw("T", std::to_string(p.T));
  w.Raw("s", std::to_string(p.s));
  w.Real("U", p.U);
  w.Raw("vacuous", p.vacuous ? "true" : "false");
  w.Real("sensitivity", p.sensitivity);
  w.Real("step", p.step);
  w.Real("opt", p.opt);
  w.Real("H", p.H);
  w.Real("eta", p.eta);
  w.Real("S", p.S);
  w.Real("R", p.R);
  w.Real("V", p.V);
  w.Real("m", p.m);
  w.Real("M", p.M);
  return w.Close();
}

std::string TraceText(const TraceDigest& t) {
  ObjectWriter w(4);
  w.Raw("steps", std::to_string(t.steps));
  w.Raw("column_counts", IntList(t.column_counts));
  w.Real("score_min", t.score_min);
  w.Real("score_max", t.score_max);
  w.Real("score_mean", t.score_mean);
  w.Real("final_potential", t.final_potential);
  return w.Close();
}

[[noreturn]] void Fail(const std::string& message) {
  throw ParseError("report: " + message);
}

void CheckKeys(const json& object, const std::set<std::string>& allowed,
               const std::string& where) {
  if (!object.is_object()) Fail(where + " must be an object");
  for (const auto& [key, value] : object.items()) {
    if (!allowed.count(key)) Fail("unexpected field '" + key + "' in " + where);
  }
}

const json& Field(const json& object, const char* key) {
  if (!object.contains(key)) Fail(std::string("missing field '") + key + "'");
  return object.at(key);
}

double ReadReal(const json& value, const std::string& key) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    const std::string text = value.get<std::string>();
    if (text == "inf") return std::numeric_limits<double>::infinity();
    if (text == "-inf") return -std::numeric_limits<double>::infinity();
    if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  Fail("field '" + key + "' must be a number");
}

double Real(const json& object, const char* key) {
  return ReadReal(Field(object, key), key);
}

std::optional<double> OptionalReal(const json& object, const char* key) {
  if (!object.contains(key)) return std::nullopt;
  return ReadReal(object.at(key), key);
}

std::int64_t Integer(const json& object, const char* key) {
  const json& v = Field(object, key);
  if (!v.is_number_integer()) Fail(std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

bool Boolean(const json& object, const char* key) {
  const json& v = Field(object, key);
  if (!v.is_boolean()) Fail(std::string("field '") + key + "' must be a boolean");
  return v.get<bool>();
}

template <typename T>
std::vector<T> IntegerList(const json& object, const char* key) {
  const json& v = Field(object, key);
  if (!v.is_array()) Fail(std::string("field '") + key + "' must be an array");
  std::vector<T> out;
  for (const json& e : v) {
    if (!e.is_number_integer() || (std::is_unsigned_v<T> && e.get<std::int64_t>() < 0)) {
      Fail(std::string("field '") + key + "' must hold integers");
    }
    out.push_back(e.get<T>());
  }
  return out;
}

std::vector<double> RealList(const json& object, const char* key) {
  const json& v = Field(object, key);
  if (!v.is_array()) Fail(std::string("field '") + key + "' must be an array");
  std::vector<double> out;
  for (const json& e : v) out.push_back(ReadReal(e, key));
  return out;
}

}  // namespace

std::string SerializeReport(const SolveReport& report) {
  ObjectWriter w(2);
  w.Raw("kind", std::string("\"") + ProblemKindName(report.kind) + "\"");
  w.Raw("seed", std::to_string(report.seed));
  w.Real("objective", report.objective);
  w.Raw("solution", DoubleList(report.solution));
  w.Raw("violations", CensusText(report.violations));
  w.Raw("filtered_constraints", IntList(report.filtered_constraints));
  w.Raw("vacuous_bound", report.vacuous_bound ? "true" : "false");
  w.Real("scale", report.scale);
  w.Real("ratio_certificate", report.ratio_certificate);
  w.Raw("params", ParamsText(report.params));
  w.Raw("wall_time_ms", std::to_string(report.wall_time_ms));
  if (report.trace) w.Raw("trace", TraceText(*report.trace));
  return w.Close() + "\n";
}

SolveReport ParseReport(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const TextPosition pos =
        PositionOf(std::string(text), e.byte == 0 ? 0 : e.byte - 1);
    Fail("syntax error at line " + std::to_string(pos.line) + ", column " +
         std::to_string(pos.column));
  }
  CheckKeys(doc,
            {"kind", "seed", "objective", "solution", "violations",
             "filtered_constraints", "vacuous_bound", "scale",
             "ratio_certificate", "params", "wall_time_ms", "trace"},
            "report");

  SolveReport r;
  const json& kind = Field(doc, "kind");
  if (!kind.is_string()) Fail("field 'kind' must be a string");
  try {
    r.kind = ParseProblemKind(kind.get<std::string>());
  } catch (const ConfigError& e) {
    Fail(e.what());
  }
  const json& seed = Field(doc, "seed");
  if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0)) {
    Fail("field 'seed' must be a nonnegative integer");
  }
  r.seed = seed.get<std::uint64_t>();
  r.objective = Real(doc, "objective");
  r.solution = RealList(doc, "solution");

  const json& census = Field(doc, "violations");
  CheckKeys(census,
            {"count", "indices", "threshold", "top_s_average",
             "covering_threshold", "bottom_s_average"},
            "violations");
  r.violations.count = Integer(census, "count");
  r.violations.indices = IntegerList<std::size_t>(census, "indices");
  r.violations.threshold = Real(census, "threshold");
  r.violations.top_s_average = OptionalReal(census, "top_s_average");
  r.violations.covering_threshold = OptionalReal(census, "covering_threshold");
  r.violations.bottom_s_average = OptionalReal(census, "bottom_s_average");

  r.filtered_constraints = IntegerList<std::size_t>(doc, "filtered_constraints");
  r.vacuous_bound = Boolean(doc, "vacuous_bound");
  r.scale = OptionalReal(doc, "scale");
  r.ratio_certificate = OptionalReal(doc, "ratio_certificate");

  const json& params = Field(doc, "params");
  CheckKeys(params,
            {"alpha", "beta", "epsilon", "delta", "eps_prime", "T", "s", "U",
             "vacuous", "sensitivity", "step", "opt", "H", "eta", "S", "R",
             "V", "m", "M"},
            "params");
  SolverParams& p = r.params;
  p.kind = r.kind;
  p.alpha = Real(params, "alpha");
  p.beta = Real(params, "beta");
  p.epsilon = Real(params, "epsilon");
  p.delta = Real(params, "delta");
  p.eps_prime = Real(params, "eps_prime");
  p.T = Integer(params, "T");
  p.s = Integer(params, "s");
  p.U = Real(params, "U");
  p.vacuous = Boolean(params, "vacuous");
  p.sensitivity = Real(params, "sensitivity");
  p.step = Real(params, "step");
  p.opt = OptionalReal(params, "opt");
  p.H = OptionalReal(params, "H");
  p.eta = OptionalReal(params, "eta");
  p.S = OptionalReal(params, "S");
  p.R = OptionalReal(params, "R");
  p.V = OptionalReal(params, "V");
  p.m = OptionalReal(params, "m");
  p.M = OptionalReal(params, "M");
  if (p.s < 1 || p.T < 1) Fail("params T and s must be positive");

  r.wall_time_ms = Integer(doc, "wall_time_ms");
  if (doc.contains("trace")) {
    const json& trace = doc.at("trace");
    CheckKeys(trace,
              {"steps", "column_counts", "score_min", "score_max", "score_mean",
               "final_potential"},
              "trace");
    TraceDigest t;
    t.steps = Integer(trace, "steps");
    t.column_counts = IntegerList<std::int64_t>(trace, "column_counts");
    t.score_min = Real(trace, "score_min");
    t.score_max = Real(trace, "score_max");
    t.score_mean = Real(trace, "score_mean");
    t.final_potential = Real(trace, "final_potential");
    r.trace = t;
  }
  if (r.violations.count != static_cast<std::int64_t>(r.violations.indices.size())) {
    Fail("violation count does not match the index list");
  }
  return r;
}

}  // namespace posdp
