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

#include "parse_util.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

#include "posdp/errors.h"

namespace posdp::cli {
namespace {

std::vector<std::string_view> SplitCommas(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(text.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

[[noreturn]] void Bad(std::string_view flag, std::string_view text) {
  throw ConfigError("invalid value '" + std::string(text) + "' for " +
                    std::string(flag));
}

std::uint64_t ParseU64(std::string_view text, std::string_view flag) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    Bad(flag, text);
  }
  return value;
}

}  // namespace

double ParseReal(std::string_view text, std::string_view flag) {
  double value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty() ||
      std::isnan(value)) {
    Bad(flag, text);
  }
  return value;
}

std::vector<double> ParseRealList(std::string_view text, std::string_view flag) {
  std::vector<double> out;
  for (std::string_view part : SplitCommas(text)) out.push_back(ParseReal(part, flag));
  return out;
}

std::vector<std::uint64_t> ParseSeedList(std::string_view text,
                                         std::string_view flag) {
  std::vector<std::uint64_t> out;
  for (std::string_view part : SplitCommas(text)) {
    const std::size_t dash = part.find('-');
    if (dash == std::string_view::npos) {
      out.push_back(ParseU64(part, flag));
      continue;
    }
    const std::uint64_t first = ParseU64(part.substr(0, dash), flag);
    const std::uint64_t last = ParseU64(part.substr(dash + 1), flag);
    if (last < first || last - first > 1'000'000) Bad(flag, part);
    for (std::uint64_t s = first; s <= last; ++s) out.push_back(s);
  }
  return out;
}

EntryRange ParseRange(std::string_view text) {
  const std::vector<double> parts = ParseRealList(text, "--range");
  if (parts.size() != 2) Bad("--range", text);
  if (!(parts[0] > 0.0 && parts[1] >= parts[0] && std::isfinite(parts[1]))) {
    throw ConfigError("--range needs 0 < m <= M");
  }
  return EntryRange{parts[0], parts[1]};
}

std::string Significant12(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%#.12g", value);
  return buffer;
}

}  // namespace posdp::cli
