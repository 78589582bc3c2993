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

#ifndef POSDP_TEXT_FORMAT_H_
#define POSDP_TEXT_FORMAT_H_

#include <cstddef>
#include <string>

namespace posdp {

// Shortest decimal string that parses back to exactly `value` ("1", "0.1",
// "1e-06"). Non-finite values render as "inf", "-inf" or "nan".
std::string FormatDouble(double value);

// Line and column (1-based) of a byte offset in `text`.
struct TextPosition {
  std::size_t line;
  std::size_t column;
};
TextPosition PositionOf(const std::string& text, std::size_t byte_offset);

}  // namespace posdp

#endif  // POSDP_TEXT_FORMAT_H_
