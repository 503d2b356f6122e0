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

#include "submod/baseline.h"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace submod {
namespace {

// Whether a move changing f by `delta` is an improving local-search move.
bool Improves(double delta, double f_s, double eps, int k) {
  return delta > 0.0 && delta >= eps / k * f_s;
}

}  // namespace

Solution LocalSearch(OracleHandle& handle, const SolverConfig& cfg,
                     RngStream& rng) {
  const GroundSet& ground = handle.ground();
  cfg.Validate(ground);
  const int k = cfg.k;
  const int n = ground.n_real();

  TrackedSet set =
      handle.Track(InitSolution(handle, cfg, rng).StripDummies(ground));
  double f_s = set.Value();

  while (true) {
    if (set.size() < k) {
      int best_u = -1;
      double best = 0.0;
      for (int u = 0; u < n; ++u) {
        if (set.Contains(u)) continue;
        const double gain = set.Gain(u);
        if (best_u < 0 || gain > best) {
          best_u = u;
          best = gain;
        }
      }
      if (best_u >= 0 && Improves(best, f_s, cfg.eps, k)) {
        set.Insert(best_u);
        f_s += best;
        continue;
      }
    } else {
      std::vector<int> members(set.elements().begin(), set.elements().end());
      std::sort(members.begin(), members.end());
      int best_u = -1;
      int best_v = -1;
      double best = 0.0;
      for (int v : members) {
        const double loss = set.Loss(v);
        set.Erase(v);
        for (int u = 0; u < n; ++u) {
          if (u == v || set.Contains(u)) continue;
          const double delta = set.Gain(u) - loss;
          if (best_u < 0 || delta > best) {
            best_u = u;
            best_v = v;
            best = delta;
          }
        }
        set.Insert(v);
      }
      if (best_u >= 0 && Improves(best, f_s, cfg.eps, k)) {
        set.Erase(best_v);
        set.Insert(best_u);
        f_s += best;
        continue;
      }
    }

    if (set.size() > 0) {
      std::vector<int> members(set.elements().begin(), set.elements().end());
      std::sort(members.begin(), members.end());
      int best_v = -1;
      double best = 0.0;
      for (int v : members) {
        const double delta = -set.Loss(v);
        if (best_v < 0 || delta > best) {
          best_v = v;
          best = delta;
        }
      }
      if (Improves(best, f_s, cfg.eps, k)) {
        set.Erase(best_v);
        f_s += best;
        continue;
      }
    }
    break;
  }
  return set.ToSolution(k);
}

Solution GuidedRandomGreedy(OracleHandle& handle, const Solution& guide,
                            const SolverConfig& cfg, RngStream& rng,
                            std::vector<int>* picks) {
  const GroundSet& ground = handle.ground();
  cfg.Validate(ground);
  const int k = cfg.k;
  const int total = ground.total();
  const int guided_iterations =
      static_cast<int>(std::ceil(k * cfg.ts - 1e-12));

  std::vector<char> in_guide(total, 0);
  for (int id : guide.elements()) {
    handle.CheckId(id);
    in_guide[id] = 1;
  }

  TrackedSet set = handle.Track();
  std::vector<std::pair<double, int>> scored;
  for (int i = 1; i <= k; ++i) {
    const bool guided = i <= guided_iterations;
    scored.clear();
    for (int u = 0; u < total; ++u) {
      if (set.Contains(u) || (guided && in_guide[u])) continue;
      scored.emplace_back(set.Gain(u), u);
    }
    if (scored.empty()) continue;
    const int top = std::min<int>(k, static_cast<int>(scored.size()));
    std::partial_sort(scored.begin(), scored.begin() + top, scored.end(),
                      [](const auto& a, const auto& b) {
                        return a.first != b.first ? a.first > b.first
                                                  : a.second < b.second;
                      });
    const int u = scored[rng.UniformInt(0, top - 1)].second;
    set.Insert(u);
    if (picks != nullptr) picks->push_back(u);
  }
  return set.ToSolution(k).StripDummies(ground);
}

Solution RandomGreedy(OracleHandle& handle, const SolverConfig& cfg,
                      RngStream& rng) {
  SolverConfig plain = cfg;
  plain.ts = 0.0;
  return GuidedRandomGreedy(handle, Solution(cfg.k), plain, rng);
}

Solution SampleGreedy(OracleHandle& handle, const SolverConfig& cfg,
                      RngStream& rng) {
  SolverConfig plain = cfg;
  plain.ts = 0.0;
  return GuidedStochasticGreedy(handle, Solution(cfg.k), plain, rng);
}

Solution WarmupSolve(OracleHandle& handle, const SolverConfig& cfg,
                     RngStream& rng) {
  const Solution local = LocalSearch(handle, cfg, rng);
  const Solution greedy = GuidedRandomGreedy(handle, local, cfg, rng);
  return BetterOf(handle, local, greedy);
}

}  // namespace submod
