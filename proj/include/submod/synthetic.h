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

#ifndef SUBMOD_SYNTHETIC_H_
#define SUBMOD_SYNTHETIC_H_

#include "submod/objectives.h"
#include "submod/rng.h"

namespace submod {

struct SyntheticSpec {
  ObjectiveKind kind = ObjectiveKind::kGraphCut;
  int n = 0;
  // Edge probability for graph-cut instances.
  double density = 0.5;
  // Coverage-diversity trade-off.
  double lambda = 0.75;
  // Uniform edge weight range for graph-cut instances.
  double weight_lo = 0.0;
  double weight_hi = 1.0;
  // Feature dimension for similarity instances.
  int dim = 25;
};

// Graph-cut: Erdos-Renyi edges with uniform weights. Similarity kinds: Gram
// matrix of n random non-negative feature vectors in [0, 1)^dim.
// Throws kConfig on an invalid spec.
Instance GenSynthetic(const SyntheticSpec& spec, RngStream& rng);

}  // namespace submod

#endif  // SUBMOD_SYNTHETIC_H_
