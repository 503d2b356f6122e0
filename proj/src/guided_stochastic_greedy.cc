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
#include <utility>
#include <vector>

#include "index_pool.h"
#include "submod/fast.h"

namespace submod {

Solution GuidedStochasticGreedy(OracleHandle& handle, const Solution& guide,
                                const SolverConfig& cfg, RngStream& rng,
                                std::vector<GreedyStep>* trace) {
  const GroundSet& ground = handle.ground();
  cfg.Validate(ground);
  const int k = cfg.k;
  const int total = ground.total();
  const double p = SamplingProbability(k, cfg.eps, cfg.p_mode);
  const int guided_iterations =
      static_cast<int>(std::ceil(k * cfg.ts - 1e-12));

  for (int id : guide.elements()) handle.CheckId(id);
  const double guided_scale =
      total > guide.size() ? static_cast<double>(k) / (total - guide.size())
                           : 0.0;
  const double open_scale = static_cast<double>(k) / total;

  IndexPool pool = IndexPool::Full(total);
  if (guided_iterations > 0) {
    for (int id : guide.elements()) pool.Remove(id);
  }
  TrackedSet set = handle.Track();
  std::vector<std::pair<double, int>> scored;

  for (int i = 1; i <= k; ++i) {
    const bool guided = i <= guided_iterations;
    if (i == guided_iterations + 1) {
      for (int id : guide.elements()) {
        if (!(cfg.exclude_current && set.Contains(id))) pool.Add(id);
      }
    }
    const int m = pool.size();
    if (m == 0) continue;
    const int sample_size =
        static_cast<int>(std::min<double>(m, std::ceil(p * m)));
    const auto sample = pool.Sample(sample_size, rng);

    scored.clear();
    for (int u : sample) scored.emplace_back(set.Gain(u), u);

    const double scale = guided ? guided_scale : open_scale;
    const double window =
        std::clamp(scale * sample_size, 1.0, static_cast<double>(sample_size));
    // d in (0, window]
    const double d = window * (1.0 - rng.UniformReal());
    const int rank =
        std::clamp(static_cast<int>(std::ceil(d)), 1, sample_size);

    // rank-th largest gain, lowest id first among equal gains.
    auto by_gain = [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    };
    std::nth_element(scored.begin(), scored.begin() + (rank - 1), scored.end(),
                     by_gain);
    const auto [gain, u] = scored[rank - 1];

    const bool accepted = gain >= 0.0 && !set.Contains(u);
    if (accepted) {
      set.Insert(u);
      if (cfg.exclude_current) pool.Remove(u);
    }
    if (trace != nullptr) {
      trace->push_back({guided, sample_size, window, rank, u, gain, accepted});
    }
  }
  return set.ToSolution(k).StripDummies(ground);
}

}  // namespace submod
