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

#ifndef SUBMOD_FAST_H_
#define SUBMOD_FAST_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "submod/ground_set.h"
#include "submod/oracle.h"
#include "submod/rng.h"
#include "submod/solver_config.h"

namespace submod {

// Approximate local optimality of a size-k set. For every t in [0, k] the
// sum of the t largest add gains must not exceed the sum of the t smallest
// removal losses plus eps * f(S). Taking the t best single-element terms is
// exactly the max/min over t-subsets because each term is fixed per element.
struct LocalOptReport {
  // f(u | S) for u outside S, descending.
  std::vector<double> add_gains;
  // f(v | S - v) for v in S, ascending.
  std::vector<double> removal_losses;
  double f_s = 0.0;
  bool satisfied = false;
  // t with the largest (add prefix - loss prefix - eps f(S)).
  int worst_t = 0;
  double worst_margin = 0.0;
};

// Absolute slack added to the comparison, scaled by max(1, |f(S)|), to
// absorb rounding differences between incremental states.
inline constexpr double kLocalOptTolerance = 1e-9;

// Requires s.size() == s.capacity() (dummy-padded to k); throws
// kInvalidSolution otherwise. Uses total - k + k + 1 queries.
LocalOptReport CheckLocalOptCondition(OracleHandle& handle, const Solution& s,
                                      double eps);

// Best of AttemptCount(cfg.eps) Sample Greedy runs at accuracy
// kInitAccuracy, each on its own child stream, padded with the lowest free
// dummies to exactly k elements.
Solution InitSolution(OracleHandle& handle, const SolverConfig& cfg,
                      RngStream& rng);

// One iteration of a fast-local-search attempt.
struct SwapStep {
  int added = -1;    // u (a dummy when no sampled gain was positive)
  int removed = -1;  // v
  double delta = 0.0;  // f(S - v + u) - f(S)
  bool accepted = false;
};

struct FastLocalSearchStats {
  Solution initial;
  uint64_t init_queries = 0;
  // Per attempt: queries spent, iteration log, chosen index, check result.
  std::vector<uint64_t> attempt_queries;
  std::vector<std::vector<SwapStep>> steps;
  std::vector<int> chosen_index;
  std::vector<bool> attempt_passed;
};

// Queries of one attempt: iterations * (ceil(total / k) + k + 1) for the
// swap loop plus total + 1 for the optimality check.
uint64_t AttemptQueryCount(int total, int k, int iterations);

// Sampled swap local search. Returns a dummy-padded size-k set satisfying
// CheckLocalOptCondition, or nullopt when every attempt's randomly chosen
// iterate fails the check.
std::optional<Solution> FastLocalSearch(OracleHandle& handle,
                                        const SolverConfig& cfg,
                                        RngStream& rng,
                                        FastLocalSearchStats* stats = nullptr);

struct GreedyStep {
  bool guided = false;  // iteration excluded the guiding set
  int sample_size = 0;
  double window = 0.0;  // width of the rank window d is drawn from
  int rank = 0;
  int picked = -1;
  double gain = 0.0;
  bool accepted = false;
};

// Stochastic greedy that avoids `guide` for the first ceil(k * ts)
// iterations. Each iteration samples ceil(p * m) of the m allowed
// candidates, draws d uniformly from (0, window], and takes the element with
// the ceil(d)-th largest gain if that gain is non-negative. Returns the
// selected real elements (dummies stripped).
Solution GuidedStochasticGreedy(OracleHandle& handle, const Solution& guide,
                                const SolverConfig& cfg, RngStream& rng,
                                std::vector<GreedyStep>* trace = nullptr);

struct MainResult {
  Solution solution;
  bool failed = false;
};

// Fast local search followed by the guided stochastic greedy; returns the
// better of the two (dummy-stripped), or the empty set if the local search
// fails.
MainResult SolveMain(OracleHandle& handle, const SolverConfig& cfg,
                     RngStream& rng);

// Returns whichever of a and b has the larger value; ties go to the
// lexicographically smaller sorted id list. Two queries.
Solution BetterOf(OracleHandle& handle, const Solution& a, const Solution& b);

}  // namespace submod

#endif  // SUBMOD_FAST_H_
