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

#ifndef POSDP_RANDOM_H_
#define POSDP_RANDOM_H_

#include <cstdint>
#include <random>

namespace posdp {

// Seeded randomness stream owned by one solver run.
//
// Draws come from a 64-bit Mersenne Twister whose output sequence is fixed by
// the standard, and are turned into doubles by bit manipulation instead of
// std::uniform_real_distribution, so a (seed, draw order) pair reproduces the
// same values on every platform. The stream counts its draws. Streams must not
// be shared across threads.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t draws() const { return draws_; }

  std::uint64_t NextU64();

  // Uniform on the open interval (0, 1).
  double Uniform01();

  // Standard Gumbel variate, -ln(-ln u).
  double Gumbel();

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t UniformIndex(std::uint64_t bound);

  // Independent stream whose seed is derived from (seed, stream_id) through
  // std::seed_seq.
  RandomStream Fork(std::uint64_t stream_id) const;

 private:
  std::uint64_t seed_;
  std::uint64_t draws_ = 0;
  std::mt19937_64 engine_;
};

}  // namespace posdp

#endif  // POSDP_RANDOM_H_
