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

#ifndef POSDP_INSTANCE_IO_H_
#define POSDP_INSTANCE_IO_H_

// Instance documents are UTF-8 JSON objects with LF newlines:
//
//   {
//     "kind": "packing",
//     "A": [
//       [1, 0.5],
//       [0, 2]
//     ],
//     "opt": 1.5,
//     "range": {"m": 1, "M": 2}
//   }
//
// Keys: `kind` (packing|covering|mixed), `A` or `P` and `C` (row-major arrays
// of nonnegative decimals), optional `opt`, `V` and `range`. The canonical
// serialization writes the keys in that order, one matrix row per line and
// every float in its shortest round-trip form, so serialize(parse(text)) is
// byte-identical for canonical text.

#include <string>
#include <string_view>

#include "posdp/errors.h"
#include "posdp/instance.h"

namespace posdp {

enum class ParseIssue {
  kSyntax,         // not a well-formed document
  kSchema,         // wrong key set or value types
  kDimension,      // ragged rows, empty matrix, P/C column mismatch
  kNegativeEntry,  // an entry below zero
  kInvariant,      // declared metadata inconsistent with the matrices
};

class InstanceParseError : public ParseError {
 public:
  InstanceParseError(ParseIssue issue, const std::string& message)
      : ParseError(message), issue_(issue) {}

  ParseIssue issue() const { return issue_; }

 private:
  ParseIssue issue_;
};

LpInstance ParseInstance(std::string_view text);
std::string SerializeInstance(const LpInstance& instance);

// Whole-file helpers. Read errors surface as ParseError.
std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& contents);

LpInstance LoadInstance(const std::string& path);
void SaveInstance(const std::string& path, const LpInstance& instance);

}  // namespace posdp

#endif  // POSDP_INSTANCE_IO_H_
