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

#ifndef SUBMOD_BASELINE_H_
#define SUBMOD_BASELINE_H_

#include <vector>

#include "submod/fast.h"
#include "submod/ground_set.h"
#include "submod/oracle.h"
#include "submod/rng.h"
#include "submod/solver_config.h"

namespace submod {

// Classical local search over real elements. Starts from InitSolution
// (dummies stripped) and repeatedly applies the best add (|S| < k), else the
// best swap (|S| = k), else the best delete, as long as the move raises f by
// at least (eps / k) f(S). From f(S) = 0 any strictly positive move counts.
Solution LocalSearch(OracleHandle& handle, const SolverConfig& cfg,
                     RngStream& rng);

// k iterations; each adds a uniform element of the k candidates with the
// largest marginals (ties: lower id). The first ceil(k * ts) iterations
// ignore `guide`. Dummies stay in the candidate pool, so negative-marginal
// real elements are only reachable once fewer than k dummies remain.
Solution GuidedRandomGreedy(OracleHandle& handle, const Solution& guide,
                            const SolverConfig& cfg, RngStream& rng,
                            std::vector<int>* picks = nullptr);

// GuidedRandomGreedy with an empty guide and ts = 0.
Solution RandomGreedy(OracleHandle& handle, const SolverConfig& cfg,
                      RngStream& rng);

// GuidedStochasticGreedy with an empty guide and ts = 0.
Solution SampleGreedy(OracleHandle& handle, const SolverConfig& cfg,
                      RngStream& rng);

// Better of LocalSearch and GuidedRandomGreedy guided by it.
Solution WarmupSolve(OracleHandle& handle, const SolverConfig& cfg,
                     RngStream& rng);

}  // namespace submod

#endif  // SUBMOD_BASELINE_H_
