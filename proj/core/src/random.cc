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

#include "posdp/random.h"

#include <cmath>

namespace posdp {

RandomStream::RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

std::uint64_t RandomStream::NextU64() {
  ++draws_;
  return engine_();
}

double RandomStream::Uniform01() {
  // 53 random mantissa bits, shifted by half an ulp to exclude 0 and 1.
  return (static_cast<double>(NextU64() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomStream::Gumbel() { return -std::log(-std::log(Uniform01())); }

std::uint64_t RandomStream::UniformIndex(std::uint64_t bound) {
  // Rejection sampling keeps the result unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r;
  do {
    r = NextU64();
  } while (r >= limit);
  return r % bound;
}

RandomStream RandomStream::Fork(std::uint64_t stream_id) const {
  std::seed_seq seq{static_cast<std::uint32_t>(seed_),
                    static_cast<std::uint32_t>(seed_ >> 32),
                    static_cast<std::uint32_t>(stream_id),
                    static_cast<std::uint32_t>(stream_id >> 32)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return RandomStream((static_cast<std::uint64_t>(words[1]) << 32) | words[0]);
}

}  // namespace posdp
