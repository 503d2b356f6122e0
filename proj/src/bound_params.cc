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

#include "submod/bound_params.h"

#include <algorithm>
#include <cmath>

#include "submod/error.h"

namespace submod {
namespace {

constexpr double kInvE = 0.36787944117144233;

struct Penalties {
  double opt;        // coefficient of f(OPT) per unit p3
  double union_pen;  // required p1 / (2 + eps) per unit p3
  double inter_pen;  // required p2/(1+eps) + p1/(2+eps) per unit p3
};

Penalties PenaltiesAt(double ts, double eps, std::optional<int> k) {
  Penalties pen{OptTerm(ts), UnionPenalty(ts), IntersectionPenalty(ts)};
  const double alpha_k = k ? std::pow(1.0 - 1.0 / *k, *k) : kInvE;
  pen.opt -= 2.0 * eps * (1.0 - alpha_k);
  if (k) {
    pen.opt -= 3.0 / *k;
    pen.union_pen += (1.0 + 2.0 * kInvE) / *k;
    pen.inter_pen += kInvE / *k;
  }
  return pen;
}

}  // namespace

double OptTerm(double ts) {
  return (2.0 - ts - std::exp(-ts)) * std::exp(ts - 1.0);
}

double UnionPenalty(double ts) {
  return std::exp(ts - 1.0) * (2.0 - ts - 2.0 * std::exp(-ts));
}

double IntersectionPenalty(double ts) {
  return std::exp(ts - 1.0) * (1.0 - std::exp(-ts));
}

std::optional<double> BoundValue(double p1, double p2, double p3, double ts,
                                 double eps, std::optional<int> k) {
  const Penalties pen = PenaltiesAt(ts, eps, k);
  const double union_coef = p1 / (2.0 + eps) - p3 * pen.union_pen;
  const double inter_coef =
      p2 / (1.0 + eps) + p1 / (2.0 + eps) - p3 * pen.inter_pen;
  constexpr double kFeasTol = 1e-12;
  if (union_coef < -kFeasTol || inter_coef < -kFeasTol) return std::nullopt;
  return p3 * pen.opt;
}

BoundParams OptimizeBoundParams(std::optional<int> k, double eps,
                                double step) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw Error(ErrorKind::kConfig, "eps must lie in (0, 1)");
  }
  if (k && *k < 1) throw Error(ErrorKind::kConfig, "k must be >= 1");
  const int grid = static_cast<int>(std::lround(1.0 / step));
  if (grid < 1 || std::abs(grid * step - 1.0) > 1e-9) {
    throw Error(ErrorKind::kConfig, "1/step must be a positive integer");
  }

  BoundParams best{0.0, 1.0, 0.0, 0.0, 0.0};
  bool have = false;
  for (int ti = 0; ti <= grid; ++ti) {
    const double ts = static_cast<double>(ti) / grid;
    const Penalties pen = PenaltiesAt(ts, eps, k);
    for (int j = 0; j <= grid; ++j) {
      const double p3 = static_cast<double>(j) / grid;
      const double need = std::max(0.0, (2.0 + eps) * p3 * pen.union_pen);
      const int l = static_cast<int>(std::ceil(need * grid - 1e-9));
      if (l + j > grid) continue;
      const double p1 = static_cast<double>(l) / grid;
      const double p2 = static_cast<double>(grid - j - l) / grid;
      const auto value = BoundValue(p1, p2, p3, ts, eps, k);
      if (!value) continue;
      if (!have || *value > best.bound_value) {
        best = {p1, p2, p3, ts, *value};
        have = true;
      }
    }
  }
  return best;
}

}  // namespace submod
