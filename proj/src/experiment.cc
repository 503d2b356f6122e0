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

#include "submod/experiment.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <thread>
#include <utility>

#include "submod/baseline.h"
#include "submod/error.h"
#include "submod/fast.h"

namespace submod {
namespace {

struct AlgoEntry {
  Algo algo;
  const char* name;
};

constexpr AlgoEntry kAlgos[] = {
    {Algo::kMain, "main"},
    {Algo::kWarmup, "warmup"},
    {Algo::kLocalSearch, "localsearch"},
    {Algo::kFastLocalSearch, "fastls"},
    {Algo::kRandomGreedy, "randomgreedy"},
    {Algo::kSampleGreedy, "samplegreedy"},
    {Algo::kGuidedRandomGreedy, "guidedrg"},
    {Algo::kGuidedStochasticGreedy, "guidedsg"},
};

}  // namespace

std::string AlgoName(Algo algo) {
  for (const auto& entry : kAlgos) {
    if (entry.algo == algo) return entry.name;
  }
  return "unknown";
}

Algo ParseAlgo(const std::string& name) {
  for (const auto& entry : kAlgos) {
    if (name == entry.name) return entry.algo;
  }
  throw Error(ErrorKind::kConfig, "unknown algorithm '" + name + "'");
}

RunOutcome RunAlgorithm(Algo algo, OracleHandle& handle,
                        const SolverConfig& cfg, RngStream& rng) {
  const GroundSet& ground = handle.ground();
  switch (algo) {
    case Algo::kMain: {
      MainResult result = SolveMain(handle, cfg, rng);
      return {std::move(result.solution), result.failed};
    }
    case Algo::kWarmup:
      return {WarmupSolve(handle, cfg, rng), false};
    case Algo::kLocalSearch:
      return {LocalSearch(handle, cfg, rng), false};
    case Algo::kFastLocalSearch: {
      const auto found = FastLocalSearch(handle, cfg, rng);
      if (!found) return {Solution(cfg.k), true};
      return {found->StripDummies(ground), false};
    }
    case Algo::kRandomGreedy:
      return {RandomGreedy(handle, cfg, rng), false};
    case Algo::kSampleGreedy:
      return {SampleGreedy(handle, cfg, rng), false};
    case Algo::kGuidedRandomGreedy: {
      const Solution guide = LocalSearch(handle, cfg, rng);
      return {GuidedRandomGreedy(handle, guide, cfg, rng), false};
    }
    case Algo::kGuidedStochasticGreedy: {
      const auto guide = FastLocalSearch(handle, cfg, rng);
      return {GuidedStochasticGreedy(handle, guide ? *guide : Solution(cfg.k),
                                     cfg, rng),
              false};
    }
  }
  throw Error(ErrorKind::kConfig, "unhandled algorithm");
}

RunRecord RunOnce(const Instance& inst, Algo algo, const SolverConfig& cfg) {
  const InstanceObjective objective(inst);
  OracleHandle handle(objective, MakeGroundSet(inst.n_real(), cfg.k));
  RngStream rng(cfg.seed);

  const auto start = std::chrono::steady_clock::now();
  const RunOutcome outcome = RunAlgorithm(algo, handle, cfg, rng);
  const auto stop = std::chrono::steady_clock::now();

  RunRecord record;
  record.algo = AlgoName(algo);
  record.k = cfg.k;
  record.seed = cfg.seed;
  record.value = objective.Evaluate(outcome.solution.elements());
  record.queries = handle.queries();
  record.wall_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  record.failed = outcome.failed;
  return record;
}

uint64_t CellSeed(uint64_t master_seed, Algo algo, int k, int rep) {
  uint64_t seed = HashCombine(master_seed, static_cast<uint64_t>(algo));
  seed = HashCombine(seed, static_cast<uint64_t>(k));
  return HashCombine(seed, static_cast<uint64_t>(rep));
}

std::vector<RunRecord> RunExperiment(const Instance& inst,
                                     const ExperimentSpec& spec) {
  if (spec.algos.empty()) throw Error(ErrorKind::kConfig, "no algorithms");
  if (spec.ks.empty()) throw Error(ErrorKind::kConfig, "no k values");
  if (spec.reps < 1) throw Error(ErrorKind::kConfig, "reps must be >= 1");

  std::vector<SolverConfig> cells;
  std::vector<Algo> cell_algo;
  for (Algo algo : spec.algos) {
    for (int k : spec.ks) {
      for (int rep = 0; rep < spec.reps; ++rep) {
        SolverConfig cfg;
        cfg.k = k;
        cfg.eps = spec.eps;
        cfg.ts = spec.ts;
        cfg.p_mode = spec.p_mode;
        cfg.seed = CellSeed(spec.master_seed, algo, k, rep);
        cfg.Validate();
        if (k > inst.n_real()) {
          throw Error(ErrorKind::kConfig,
                      "k=" + std::to_string(k) + " exceeds n=" +
                          std::to_string(inst.n_real()));
        }
        cells.push_back(cfg);
        cell_algo.push_back(algo);
      }
    }
  }

  std::vector<RunRecord> records(cells.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < cells.size(); i = next++) {
      records[i] = RunOnce(inst, cell_algo[i], cells[i]);
    }
  };
  const int threads = std::max(1, spec.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return records;
}

std::vector<SummaryRow> Summarize(std::span<const RunRecord> records) {
  if (records.empty()) throw Error(ErrorKind::kEmptyInput, "no records");
  std::map<std::pair<std::string, int>, std::vector<const RunRecord*>> groups;
  for (const RunRecord& r : records) groups[{r.algo, r.k}].push_back(&r);

  std::vector<SummaryRow> rows;
  for (const auto& [key, group] : groups) {
    const double count = static_cast<double>(group.size());
    SummaryRow row;
    row.algo = key.first;
    row.k = key.second;
    double failures = 0.0;
    for (const RunRecord* r : group) {
      row.mean_value += r->value;
      row.mean_queries += static_cast<double>(r->queries);
      failures += r->failed ? 1.0 : 0.0;
    }
    row.mean_value /= count;
    row.mean_queries /= count;
    row.failure_rate = failures / count;
    double var = 0.0;
    for (const RunRecord* r : group) {
      var += (r->value - row.mean_value) * (r->value - row.mean_value);
    }
    row.std_value = std::sqrt(var / count);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace submod
