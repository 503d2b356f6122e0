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
#include <cmath>
#include <string>
#include <vector>

#include "index_pool.h"
#include "submod/error.h"
#include "submod/fast.h"

namespace submod {
namespace {

// Pads s with the lowest-id dummies not already present up to k elements.
Solution PadWithDummies(const Solution& s, const GroundSet& ground, int k) {
  std::vector<int> ids(s.elements().begin(), s.elements().end());
  for (int d = ground.n_real(); d < ground.total() &&
                                static_cast<int>(ids.size()) < k;
       ++d) {
    if (!s.Contains(d)) ids.push_back(d);
  }
  return Solution(std::move(ids), k);
}

int LowestFreeDummy(const TrackedSet& set, const GroundSet& ground) {
  for (int d = ground.n_real(); d < ground.total(); ++d) {
    if (!set.Contains(d)) return d;
  }
  // Unreachable with 2k dummies and |S| = k.
  throw Error(ErrorKind::kInvalidConstraint, "no free dummy element");
}

}  // namespace

LocalOptReport CheckLocalOptCondition(OracleHandle& handle, const Solution& s,
                                      double eps) {
  if (s.size() != s.capacity() || s.capacity() < 1) {
    throw Error(ErrorKind::kInvalidSolution,
                "local optimality check needs a full set, got " +
                    std::to_string(s.size()) + " of " +
                    std::to_string(s.capacity()));
  }
  const int k = s.capacity();
  TrackedSet set = handle.Track(s);

  LocalOptReport report;
  report.add_gains.reserve(handle.ground().total() - k);
  for (int u = 0; u < handle.ground().total(); ++u) {
    if (!set.Contains(u)) report.add_gains.push_back(set.Gain(u));
  }
  for (int v : s.elements()) report.removal_losses.push_back(set.Loss(v));
  report.f_s = set.Value();

  std::sort(report.add_gains.begin(), report.add_gains.end(),
            std::greater<>());
  std::sort(report.removal_losses.begin(), report.removal_losses.end());

  const double slack = eps * report.f_s;
  const double tolerance =
      kLocalOptTolerance * std::max(1.0, std::abs(report.f_s));
  double add_prefix = 0.0;
  double loss_prefix = 0.0;
  report.worst_t = 0;
  report.worst_margin = -slack;
  for (int t = 1; t <= k; ++t) {
    add_prefix += report.add_gains[t - 1];
    loss_prefix += report.removal_losses[t - 1];
    const double margin = add_prefix - loss_prefix - slack;
    if (margin > report.worst_margin) {
      report.worst_margin = margin;
      report.worst_t = t;
    }
  }
  report.satisfied = report.worst_margin <= tolerance;
  return report;
}

Solution InitSolution(OracleHandle& handle, const SolverConfig& cfg,
                      RngStream& rng) {
  cfg.Validate(handle.ground());
  SolverConfig inner = cfg;
  inner.eps = kInitAccuracy;
  inner.ts = 0.0;
  const Solution none(cfg.k);

  Solution best(cfg.k);
  double best_value = -1.0;
  for (int r = 0; r < AttemptCount(cfg.eps); ++r) {
    RngStream child = rng.Split();
    Solution candidate = GuidedStochasticGreedy(handle, none, inner, child);
    const double value = handle.Value(candidate);
    if (value > best_value) {
      best_value = value;
      best = std::move(candidate);
    }
  }
  return PadWithDummies(best, handle.ground(), cfg.k);
}

uint64_t AttemptQueryCount(int total, int k, int iterations) {
  const uint64_t sample = (static_cast<uint64_t>(total) + k - 1) / k;
  return static_cast<uint64_t>(iterations) * (sample + k + 1) + total + 1;
}

std::optional<Solution> FastLocalSearch(OracleHandle& handle,
                                        const SolverConfig& cfg,
                                        RngStream& rng,
                                        FastLocalSearchStats* stats) {
  const GroundSet& ground = handle.ground();
  cfg.Validate(ground);
  const int k = cfg.k;
  const int total = ground.total();
  const int iterations = cfg.iterations.value_or(IterationsFor(k, cfg.eps));
  const int sample_size = std::min(total, (total + k - 1) / k);

  const uint64_t before_init = handle.queries();
  const Solution initial = InitSolution(handle, cfg, rng);
  if (stats != nullptr) {
    stats->initial = initial;
    stats->init_queries = handle.queries() - before_init;
  }

  IndexPool everything = IndexPool::Full(total);
  std::vector<SwapStep> steps;
  steps.reserve(iterations);

  for (int attempt = 0; attempt < AttemptCount(cfg.eps); ++attempt) {
    const uint64_t attempt_start = handle.queries();
    TrackedSet set = handle.Track(initial);
    steps.clear();

    for (int i = 0; i < iterations; ++i) {
      int u = -1;
      double u_gain = 0.0;
      for (int candidate : everything.Sample(sample_size, rng)) {
        const double gain = set.Gain(candidate);
        if (u < 0 || gain > u_gain || (gain == u_gain && candidate < u)) {
          u = candidate;
          u_gain = gain;
        }
      }
      if (!(u_gain > 0.0)) u = LowestFreeDummy(set, ground);

      int v = -1;
      double v_loss = 0.0;
      for (int member : set.elements()) {
        const double loss = set.Loss(member);
        if (v < 0 || loss < v_loss || (loss == v_loss && member < v)) {
          v = member;
          v_loss = loss;
        }
      }

      set.Erase(v);
      const double delta = set.Gain(u) - v_loss;
      const bool accepted = delta > 0.0;
      set.Insert(accepted ? u : v);
      steps.push_back({u, v, delta, accepted});
    }

    // S_{i*} for a uniform i* in [0, iterations), rebuilt from S_0 by
    // replaying the accepted swaps.
    const int chosen = static_cast<int>(rng.UniformInt(0, iterations - 1));
    std::vector<int> ids(initial.elements().begin(), initial.elements().end());
    for (int i = 0; i < chosen; ++i) {
      if (!steps[i].accepted) continue;
      *std::find(ids.begin(), ids.end(), steps[i].removed) = steps[i].added;
    }
    Solution candidate(std::move(ids), k);
    const bool passed =
        CheckLocalOptCondition(handle, candidate, cfg.eps).satisfied;

    if (stats != nullptr) {
      stats->attempt_queries.push_back(handle.queries() - attempt_start);
      stats->steps.push_back(steps);
      stats->chosen_index.push_back(chosen);
      stats->attempt_passed.push_back(passed);
    }
    if (passed) return candidate;
  }
  return std::nullopt;
}

}  // namespace submod
