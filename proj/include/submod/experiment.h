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

#ifndef SUBMOD_EXPERIMENT_H_
#define SUBMOD_EXPERIMENT_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "submod/ground_set.h"
#include "submod/objectives.h"
#include "submod/oracle.h"
#include "submod/rng.h"
#include "submod/solver_config.h"

namespace submod {

enum class Algo {
  kMain,
  kWarmup,
  kLocalSearch,
  kFastLocalSearch,
  kRandomGreedy,
  kSampleGreedy,
  kGuidedRandomGreedy,
  kGuidedStochasticGreedy,
};

// CLI names: main, warmup, localsearch, fastls, randomgreedy, samplegreedy,
// guidedrg, guidedsg.
std::string AlgoName(Algo algo);
Algo ParseAlgo(const std::string& name);

struct RunOutcome {
  Solution solution;  // dummy-stripped
  bool failed = false;
};

// Runs one solver. The standalone guided variants take their guide from
// the matching local search (localsearch for guidedrg, fastls for guidedsg;
// an empty guide if fastls fails) and report only the guided output.
RunOutcome RunAlgorithm(Algo algo, OracleHandle& handle,
                        const SolverConfig& cfg, RngStream& rng);

struct RunRecord {
  std::string algo;
  int k = 0;
  uint64_t seed = 0;
  double value = 0.0;
  uint64_t queries = 0;
  double wall_ms = 0.0;
  bool failed = false;
};

// One isolated run: fresh ground set, oracle and stream seeded by cfg.seed.
// The recorded value is evaluated outside the ledger.
RunRecord RunOnce(const Instance& inst, Algo algo, const SolverConfig& cfg);

struct ExperimentSpec {
  std::vector<Algo> algos;
  std::vector<int> ks;
  double eps = 0.1;
  double ts = kDefaultFlipPoint;
  PMode p_mode = PMode::kPractical;
  int reps = 8;
  uint64_t master_seed = 0;
  // Worker threads; records do not depend on this.
  int threads = 1;
};

// Seed of one (algo, k, repetition) cell; depends only on its arguments.
uint64_t CellSeed(uint64_t master_seed, Algo algo, int k, int rep);

// All algos x ks x reps runs, ordered by (algo position, k position, rep).
// Throws kConfig before any run if the spec is invalid for the instance.
std::vector<RunRecord> RunExperiment(const Instance& inst,
                                     const ExperimentSpec& spec);

struct SummaryRow {
  std::string algo;
  int k = 0;
  double mean_value = 0.0;
  double std_value = 0.0;  // population standard deviation
  double mean_queries = 0.0;
  double failure_rate = 0.0;
};

// Grouped by (algo, k), rows sorted by algo name then k. Throws kEmptyInput
// on no records.
std::vector<SummaryRow> Summarize(std::span<const RunRecord> records);

}  // namespace submod

#endif  // SUBMOD_EXPERIMENT_H_
