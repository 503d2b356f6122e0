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

#include "submod/solver_config.h"

#include "submod/error.h"

namespace submod {

std::string PModeName(PMode mode) {
  return mode == PMode::kTheoretical ? "theoretical" : "practical";
}

PMode ParsePMode(const std::string& name) {
  if (name == "theoretical") return PMode::kTheoretical;
  if (name == "practical") return PMode::kPractical;
  throw Error(ErrorKind::kConfig, "unknown p-mode '" + name + "'");
}

void SolverConfig::Validate() const {
  if (k < 1) throw Error(ErrorKind::kConfig, "k must be >= 1");
  if (!(eps > 0.0 && eps < 1.0)) {
    throw Error(ErrorKind::kConfig, "eps must lie in (0, 1)");
  }
  if (!(ts >= 0.0 && ts <= 1.0)) {
    throw Error(ErrorKind::kConfig, "ts must lie in [0, 1]");
  }
  if (iterations && *iterations < 1) {
    throw Error(ErrorKind::kConfig, "iterations must be >= 1");
  }
}

void SolverConfig::Validate(const GroundSet& ground) const {
  Validate();
  if (k > ground.n_real()) {
    throw Error(ErrorKind::kConfig, "k=" + std::to_string(k) +
                                        " exceeds ground set size " +
                                        std::to_string(ground.n_real()));
  }
  if (ground.n_dummy() < 2 * k) {
    throw Error(ErrorKind::kConfig, "ground set needs at least 2k dummies");
  }
}

int AttemptCount(double eps) {
  const int count = static_cast<int>(std::ceil(std::log2(1.0 / eps) - 1e-12));
  return count < 1 ? 1 : count;
}

int IterationsFor(int k, double eps) {
  const double one_minus_inv_e = 1.0 - 0.36787944117144233;
  return static_cast<int>(std::ceil(16.0 * k / (eps * one_minus_inv_e)));
}

double SamplingProbability(int k, double eps, PMode mode) {
  if (mode == PMode::kTheoretical) {
    return 8.0 / (k * eps * eps) * std::log(2.0 / eps);
  }
  return 8.0 / (k * eps);
}

}  // namespace submod
