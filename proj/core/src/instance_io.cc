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

#include "posdp/instance_io.h"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "posdp/text_format.h"

namespace posdp {
namespace {

using json = nlohmann::json;

[[noreturn]] void Fail(ParseIssue issue, const std::string& message) {
  throw InstanceParseError(issue, message);
}

double ReadNumber(const json& value, const std::string& field) {
  if (!value.is_number()) Fail(ParseIssue::kSchema, field + " must be a number");
  const double out = value.get<double>();
  if (!std::isfinite(out)) Fail(ParseIssue::kSchema, field + " is not finite");
  return out;
}

PositiveMatrix ReadMatrix(const json& value, const std::string& name) {
  if (!value.is_array()) {
    Fail(ParseIssue::kSchema, name + " must be an array of rows");
  }
  if (value.empty()) Fail(ParseIssue::kDimension, name + " has no rows");
  std::size_t cols = 0;
  std::vector<double> entries;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const json& row = value[i];
    const std::string row_name = name + "[" + std::to_string(i) + "]";
    if (!row.is_array()) Fail(ParseIssue::kSchema, row_name + " must be an array");
    if (i == 0) {
      cols = row.size();
      if (cols == 0) Fail(ParseIssue::kDimension, row_name + " is empty");
    } else if (row.size() != cols) {
      std::ostringstream msg;
      msg << row_name << " has " << row.size() << " entries, expected " << cols;
      Fail(ParseIssue::kDimension, msg.str());
    }
    for (std::size_t j = 0; j < row.size(); ++j) {
      const std::string field = row_name + "[" + std::to_string(j) + "]";
      const double v = ReadNumber(row[j], field);
      if (v < 0.0) {
        std::ostringstream msg;
        msg << "negative entry " << field << " = " << FormatDouble(v);
        Fail(ParseIssue::kNegativeEntry, msg.str());
      }
      entries.push_back(v);
    }
  }
  return PositiveMatrix(value.size(), cols, std::move(entries));
}

void AppendMatrix(std::string& out, const char* name,
                  const PositiveMatrix& matrix) {
  out += "  \"";
  out += name;
  out += "\": [\n";
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    out += "    [";
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      if (j > 0) out += ", ";
      out += FormatDouble(matrix(i, j));
    }
    out += i + 1 < matrix.rows() ? "],\n" : "]\n";
  }
  out += "  ]";
}

}  // namespace

LpInstance ParseInstance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const TextPosition pos = PositionOf(std::string(text), e.byte == 0 ? 0 : e.byte - 1);
    std::ostringstream msg;
    msg << "syntax error at line " << pos.line << ", column " << pos.column;
    Fail(ParseIssue::kSyntax, msg.str());
  }
  if (!doc.is_object()) Fail(ParseIssue::kSchema, "document must be an object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) {
    Fail(ParseIssue::kSchema, "missing string field 'kind'");
  }

  LpInstance instance;
  try {
    instance.kind = ParseInstanceKind(doc["kind"].get<std::string>());
  } catch (const ParseError& e) {
    Fail(ParseIssue::kSchema, e.what());
  }

  const bool mixed = instance.kind == InstanceKind::kMixed;
  const std::set<std::string> allowed =
      mixed ? std::set<std::string>{"kind", "P", "C", "opt", "V", "range"}
            : std::set<std::string>{"kind", "A", "opt", "V", "range"};
  for (const auto& [key, value] : doc.items()) {
    if (!allowed.count(key)) {
      Fail(ParseIssue::kSchema, "unexpected field '" + key + "' for kind " +
                                    InstanceKindName(instance.kind));
    }
  }

  if (mixed) {
    if (!doc.contains("P") || !doc.contains("C")) {
      Fail(ParseIssue::kSchema, "mixed instance needs fields 'P' and 'C'");
    }
    instance.P = ReadMatrix(doc["P"], "P");
    instance.C = ReadMatrix(doc["C"], "C");
    if (instance.P->cols() != instance.C->cols()) {
      std::ostringstream msg;
      msg << "P has " << instance.P->cols() << " columns but C has "
          << instance.C->cols();
      Fail(ParseIssue::kDimension, msg.str());
    }
  } else {
    if (!doc.contains("A")) Fail(ParseIssue::kSchema, "missing field 'A'");
    instance.A = ReadMatrix(doc["A"], "A");
  }
  if (doc.contains("opt")) instance.opt = ReadNumber(doc["opt"], "opt");
  if (doc.contains("V")) instance.feasible_mass = ReadNumber(doc["V"], "V");
  if (doc.contains("range")) {
    const json& range = doc["range"];
    if (!range.is_object() || range.size() != 2 || !range.contains("m") ||
        !range.contains("M")) {
      Fail(ParseIssue::kSchema, "range must be an object with fields m and M");
    }
    instance.range =
        EntryRange{ReadNumber(range["m"], "range.m"), ReadNumber(range["M"], "range.M")};
  }

  try {
    instance.Validate();
  } catch (const ParseError& e) {
    Fail(ParseIssue::kInvariant, e.what());
  }
  return instance;
}

std::string SerializeInstance(const LpInstance& instance) {
  instance.Validate();
  std::string out = "{\n  \"kind\": \"";
  out += InstanceKindName(instance.kind);
  out += "\",\n";
  if (instance.kind == InstanceKind::kMixed) {
    AppendMatrix(out, "P", *instance.P);
    out += ",\n";
    AppendMatrix(out, "C", *instance.C);
  } else {
    AppendMatrix(out, "A", *instance.A);
  }
  if (instance.opt) out += ",\n  \"opt\": " + FormatDouble(*instance.opt);
  if (instance.feasible_mass) {
    out += ",\n  \"V\": " + FormatDouble(*instance.feasible_mass);
  }
  if (instance.range) {
    out += ",\n  \"range\": {\"m\": " + FormatDouble(instance.range->m) +
           ", \"M\": " + FormatDouble(instance.range->M) + "}";
  }
  out += "\n}\n";
  return out;
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "' for reading");
  std::ostringstream contents;
  contents << in.rdbuf();
  return contents.str();
}

void WriteTextFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot open '" + path + "' for writing");
  out << contents;
  if (!out) throw ConfigError("failed writing '" + path + "'");
}

LpInstance LoadInstance(const std::string& path) {
  return ParseInstance(ReadTextFile(path));
}

void SaveInstance(const std::string& path, const LpInstance& instance) {
  WriteTextFile(path, SerializeInstance(instance));
}

}  // namespace posdp
