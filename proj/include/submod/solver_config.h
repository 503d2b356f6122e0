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

#ifndef SUBMOD_SOLVER_CONFIG_H_
#define SUBMOD_SOLVER_CONFIG_H_

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "submod/ground_set.h"

namespace submod {

enum class PMode {
  // p = 8 k^-1 eps^-2 ln(2 / eps)
  kTheoretical,
  // p = 8 / (k eps)
  kPractical,
};

std::string PModeName(PMode mode);
PMode ParsePMode(const std::string& name);

// Flip point maximizing the combined guarantee; see OptimizeBoundParams.
// Frozen from a 1e-3 grid at eps = 1e-6 (argmax t_s = 0.362, p3 = 0.775,
// bound 0.38560).
inline constexpr double kDefaultFlipPoint = 0.362;

// Accuracy used by the initial-solution Sample Greedy runs: 1/e - 1/4.
inline constexpr double kInitAccuracy = 0.36787944117144233 - 0.25;
// Approximation constant recorded for the initial solution.
inline constexpr double kInitApproximation = 1.0 / 8.0;

struct SolverConfig {
  int k = 1;
  double eps = 0.1;
  double ts = kDefaultFlipPoint;
  PMode p_mode = PMode::kPractical;
  uint64_t seed = 0;
  // Iterations per fast-local-search attempt; default from IterationsFor.
  std::optional<int> iterations;
  // Exclude the current solution from the sampled candidate pool of the
  // stochastic greedy (the literal pseudocode does not).
  bool exclude_current = true;

  // Throws kConfig unless k >= 1, eps in (0, 1), ts in [0, 1].
  void Validate() const;
  // Also checks k against the ground set: k <= n_real, n_dummy >= 2k.
  void Validate(const GroundSet& ground) const;
};

// ceil(log2(1 / eps)), at least 1.
int AttemptCount(double eps);

// ceil(16 k / (eps (1 - 1/e)))
int IterationsFor(int k, double eps);

// Sampling probability of the stochastic greedy, before clamping to 1.
double SamplingProbability(int k, double eps, PMode mode);

}  // namespace submod

#endif  // SUBMOD_SOLVER_CONFIG_H_
