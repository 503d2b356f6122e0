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

#ifndef SUBMOD_BOUND_PARAMS_H_
#define SUBMOD_BOUND_PARAMS_H_

#include <optional>

namespace submod {

// Weights of a convex combination of the lower bounds on f(Z) and f(A), the
// flip point, and the resulting coefficient of f(OPT).
struct BoundParams {
  double p1 = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;
  double ts = 0.0;
  double bound_value = 0.0;
};

// Per-t_s terms of the combined guarantee (k -> infinity):
//   opt(t)          = (2 - t - e^-t) e^(t-1)
//   union_pen(t)    = e^(t-1) (2 - t - 2 e^-t)
//   intersect_pen(t)= e^(t-1) (1 - e^-t)
double OptTerm(double ts);
double UnionPenalty(double ts);
double IntersectionPenalty(double ts);

// Guarantee coefficient for fixed weights, or nullopt when either the
// f(OPT u Z) or f(OPT n Z) coefficient would be negative. With a finite k the
// O(1/k) losses are charged; with nullopt k the limit is used.
std::optional<double> BoundValue(double p1, double p2, double p3, double ts,
                                 double eps, std::optional<int> k);

// Grid search over ts in [0, 1] and the (p1, p2, p3) simplex with the given
// step (1/step must be an integer). For each (ts, p3) only the smallest
// feasible p1 needs checking: raising p1 at fixed p3 lowers p2, which only
// tightens the intersection constraint because 1/(1+eps) > 1/(2+eps). Ties
// keep the first (ts ascending, then p3 ascending) maximizer.
BoundParams OptimizeBoundParams(std::optional<int> k, double eps,
                                double step = 1e-3);

}  // namespace submod

#endif  // SUBMOD_BOUND_PARAMS_H_
