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

#ifndef POSDP_TOOLS_PARSE_UTIL_H_
#define POSDP_TOOLS_PARSE_UTIL_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "posdp/instance.h"

namespace posdp::cli {

// "1.5" or "inf". Throws ConfigError naming `flag` on bad input.
double ParseReal(std::string_view text, std::string_view flag);

// Comma-separated reals.
std::vector<double> ParseRealList(std::string_view text, std::string_view flag);

// Comma-separated seeds; "a-b" expands to the inclusive range.
std::vector<std::uint64_t> ParseSeedList(std::string_view text,
                                         std::string_view flag);

// "m,M".
EntryRange ParseRange(std::string_view text);

// printf "%#.12g".
std::string Significant12(double value);

}  // namespace posdp::cli

#endif  // POSDP_TOOLS_PARSE_UTIL_H_
