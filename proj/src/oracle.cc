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

#include "submod/oracle.h"

#include <string>
#include <utility>

#include "submod/error.h"

namespace submod {

OracleHandle::OracleHandle(const Objective& objective, GroundSet ground)
    : objective_(&objective), ground_(ground) {
  if (objective.size() != ground.n_real()) {
    throw Error(ErrorKind::kInvalidConstraint,
                "objective has " + std::to_string(objective.size()) +
                    " elements but ground set has " +
                    std::to_string(ground.n_real()));
  }
}

void OracleHandle::CheckId(int id) const {
  if (!ground_.IsValid(id)) {
    throw Error(ErrorKind::kInvalidElement,
                "id " + std::to_string(id) + " outside [0, " +
                    std::to_string(ground_.total()) + ")");
  }
}

double OracleHandle::Value(const Solution& s) {
  std::vector<int> real;
  real.reserve(s.size());
  for (int id : s.elements()) {
    CheckId(id);
    if (!ground_.IsDummy(id)) real.push_back(id);
  }
  ledger_.Record();
  return objective_->Evaluate(real);
}

double OracleHandle::Marginal(int u, const Solution& s) {
  CheckId(u);
  for (int id : s.elements()) CheckId(id);
  ledger_.Record();
  if (ground_.IsDummy(u) || s.Contains(u)) return 0.0;
  auto state = objective_->NewState();
  for (int id : s.elements()) {
    if (!ground_.IsDummy(id)) state->Insert(id);
  }
  return state->Gain(u);
}

TrackedSet OracleHandle::Track(const Solution& s) {
  TrackedSet set(*this);
  for (int id : s.elements()) {
    CheckId(id);
    set.Insert(id);
  }
  return set;
}

TrackedSet OracleHandle::Track() { return TrackedSet(*this); }

TrackedSet::TrackedSet(OracleHandle& handle)
    : handle_(&handle),
      state_(handle.objective().NewState()),
      member_(handle.ground().total(), 0),
      position_(handle.ground().total(), -1) {}

double TrackedSet::Gain(int u) {
  handle_->ledger_.Record();
  if (handle_->ground_.IsDummy(u) || member_[u]) return 0.0;
  return state_->Gain(u);
}

double TrackedSet::Loss(int v) {
  handle_->ledger_.Record();
  if (!member_[v]) {
    throw Error(ErrorKind::kInvalidElement,
                "removal loss of non-member " + std::to_string(v));
  }
  if (handle_->ground_.IsDummy(v)) return 0.0;
  return state_->Loss(v);
}

double TrackedSet::Value() {
  handle_->ledger_.Record();
  return state_->Value();
}

void TrackedSet::Insert(int u) {
  if (member_[u]) {
    throw Error(ErrorKind::kInvalidSolution,
                "element " + std::to_string(u) + " already present");
  }
  member_[u] = 1;
  position_[u] = static_cast<int>(elements_.size());
  elements_.push_back(u);
  if (!handle_->ground_.IsDummy(u)) state_->Insert(u);
}

void TrackedSet::Erase(int v) {
  if (!member_[v]) {
    throw Error(ErrorKind::kInvalidElement,
                "element " + std::to_string(v) + " not present");
  }
  const int pos = position_[v];
  const int last = elements_.back();
  elements_[pos] = last;
  position_[last] = pos;
  elements_.pop_back();
  position_[v] = -1;
  member_[v] = 0;
  if (!handle_->ground_.IsDummy(v)) state_->Erase(v);
}

Solution TrackedSet::ToSolution(int capacity) const {
  return Solution(elements_, capacity);
}

bool SubmodularityProbe(OracleHandle& handle, int trials, RngStream& rng) {
  if (trials < 1) {
    throw Error(ErrorKind::kPrecondition, "trials must be >= 1");
  }
  const int n = handle.ground().n_real();
  if (n < 2) return true;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int trial = 0; trial < trials; ++trial) {
    // A random permutation; T is a prefix that leaves at least one element
    // out, S a prefix of T, and u the first element after T.
    for (int i = n - 1; i > 0; --i) {
      std::swap(perm[i], perm[rng.UniformInt(0, i)]);
    }
    const int t_size = static_cast<int>(rng.UniformInt(0, n - 1));
    const int s_size = static_cast<int>(rng.UniformInt(0, t_size));
    const int u = perm[t_size];
    std::vector<int> t_ids(perm.begin(), perm.begin() + t_size);
    std::vector<int> s_ids(perm.begin(), perm.begin() + s_size);
    const Solution t_set(t_ids, n);
    const Solution s_set(s_ids, n);
    if (handle.Marginal(u, s_set) < handle.Marginal(u, t_set) - 1e-9) {
      return false;
    }
  }
  return true;
}

}  // namespace submod
