// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUBMOD_RNG_H_
#define SUBMOD_RNG_H_

#include <cstdint>
#include <random>

namespace submod {

// Mixes a 64-bit value (splitmix64 finalizer).
uint64_t Mix64(uint64_t x);

// Combines two values into a seed; order-sensitive.
uint64_t HashCombine(uint64_t seed, uint64_t value);

// Seeded random stream. Every random decision of every solver is drawn from
// one of these; there is no global generator. Integer and real draws are
// implemented here rather than through <random> distributions so that the
// sequence does not depend on the standard library vendor.
class RngStream {
 public:
  explicit RngStream(uint64_t seed) : seed_(seed), engine_(Mix64(seed)) {}

  uint64_t seed() const { return seed_; }

  uint64_t NextU64() { return engine_(); }

  // Uniform integer in [lo, hi]. Requires lo <= hi.
  int64_t UniformInt(int64_t lo, int64_t hi);

  // Uniform real in [0, 1).
  double UniformReal();

  // Derives an independent child stream from the next draw of this one.
  RngStream Split() { return RngStream(Mix64(NextU64())); }

  // Derives a child stream from (seed, index) without advancing this stream.
  RngStream Child(uint64_t index) const {
    return RngStream(HashCombine(seed_, index));
  }

 private:
  uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace submod

#endif  // SUBMOD_RNG_H_
