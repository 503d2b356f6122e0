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

#include "submod/synthetic.h"

#include <vector>

#include "submod/error.h"

namespace submod {

Instance GenSynthetic(const SyntheticSpec& spec, RngStream& rng) {
  if (spec.n < 2) throw Error(ErrorKind::kConfig, "synthetic n must be >= 2");
  if (spec.kind == ObjectiveKind::kGraphCut) {
    if (!(spec.density >= 0.0 && spec.density <= 1.0)) {
      throw Error(ErrorKind::kConfig, "density must lie in [0, 1]");
    }
    if (!(spec.weight_lo >= 0.0 && spec.weight_lo <= spec.weight_hi)) {
      throw Error(ErrorKind::kConfig, "weight range must be 0 <= lo <= hi");
    }
    std::vector<Edge> edges;
    for (int u = 0; u < spec.n; ++u) {
      for (int v = u + 1; v < spec.n; ++v) {
        if (rng.UniformReal() < spec.density) {
          const double w = spec.weight_lo + (spec.weight_hi - spec.weight_lo) *
                                                rng.UniformReal();
          edges.push_back({u, v, w});
        }
      }
    }
    return MakeGraphCut(WeightedGraph(spec.n, edges));
  }

  if (spec.dim < 1) throw Error(ErrorKind::kConfig, "dim must be >= 1");
  std::vector<double> features(static_cast<size_t>(spec.n) * spec.dim);
  for (double& x : features) x = rng.UniformReal();
  std::vector<double> gram(static_cast<size_t>(spec.n) * spec.n);
  for (int u = 0; u < spec.n; ++u) {
    const double* fu = &features[static_cast<size_t>(u) * spec.dim];
    for (int v = u; v < spec.n; ++v) {
      const double* fv = &features[static_cast<size_t>(v) * spec.dim];
      double dot = 0.0;
      for (int d = 0; d < spec.dim; ++d) dot += fu[d] * fv[d];
      gram[static_cast<size_t>(u) * spec.n + v] = dot;
      gram[static_cast<size_t>(v) * spec.n + u] = dot;
    }
  }
  SimilarityMatrix s(spec.n, std::move(gram));
  if (spec.kind == ObjectiveKind::kCoverageDiversity) {
    return MakeCoverageDiversity(std::move(s), spec.lambda);
  }
  return MakeFacilityDiversity(std::move(s));
}

}  // namespace submod
