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

#include <algorithm>

#include "submod/fast.h"

namespace submod {

Solution BetterOf(OracleHandle& handle, const Solution& a, const Solution& b) {
  const double fa = handle.Value(a);
  const double fb = handle.Value(b);
  if (fa != fb) return fa > fb ? a : b;
  return a.Sorted() <= b.Sorted() ? a : b;
}

MainResult SolveMain(OracleHandle& handle, const SolverConfig& cfg,
                     RngStream& rng) {
  cfg.Validate(handle.ground());
  const std::optional<Solution> guide = FastLocalSearch(handle, cfg, rng);
  if (!guide) return {Solution(cfg.k), true};
  const Solution greedy = GuidedStochasticGreedy(handle, *guide, cfg, rng);
  return {BetterOf(handle, guide->StripDummies(handle.ground()), greedy),
          false};
}

}  // namespace submod
