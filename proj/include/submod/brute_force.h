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

#ifndef SUBMOD_BRUTE_FORCE_H_
#define SUBMOD_BRUTE_FORCE_H_

#include <cstdint>

#include "submod/ground_set.h"
#include "submod/oracle.h"

namespace submod {

inline constexpr int kBruteForceMaxElements = 24;

struct OptCertificate {
  Solution opt_set;
  double opt_value = 0.0;
  // Number of candidate subsets evaluated (including the empty set).
  uint64_t enumerated = 0;
};

// Exhaustive maximization over all real subsets of size <= k. Subsets are
// visited in lexicographic order of their sorted ids and only a strictly
// better value replaces the incumbent, so ties go to the lexicographically
// smallest set. Throws kSizeGuard if n_real > kBruteForceMaxElements.
OptCertificate BruteForceOpt(OracleHandle& handle, int k);

}  // namespace submod

#endif  // SUBMOD_BRUTE_FORCE_H_
