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

#ifndef SUBMOD_ORACLE_H_
#define SUBMOD_ORACLE_H_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "submod/ground_set.h"
#include "submod/objective.h"
#include "submod/rng.h"

namespace submod {

// Counts oracle invocations. One value-or-marginal call is one query, even
// when the objective answers it from cached sums.
class QueryLedger {
 public:
  void Record(uint64_t n = 1) { queries_ += n; }
  uint64_t count() const { return queries_; }
  void Reset() { queries_ = 0; }

 private:
  uint64_t queries_ = 0;
};

class TrackedSet;

// Evaluation surface for one run: an objective, the ground set (with its
// dummy suffix) and the query ledger. Owned by a single run; not thread-safe.
class OracleHandle {
 public:
  // Throws kInvalidConstraint if the objective size differs from n_real.
  OracleHandle(const Objective& objective, GroundSet ground);

  const GroundSet& ground() const { return ground_; }
  const Objective& objective() const { return *objective_; }

  // f(S) with dummies ignored. One query.
  double Value(const Solution& s);
  // f(S + u) - f(S); exactly 0 for a dummy or a member of S. One query.
  double Marginal(int u, const Solution& s);

  // Incremental view of a set; its Gain/Loss/Value calls are charged here.
  TrackedSet Track(const Solution& s);
  TrackedSet Track();

  uint64_t queries() const { return ledger_.count(); }
  QueryLedger& ledger() { return ledger_; }

  // Throws kInvalidElement for ids outside the ground set.
  void CheckId(int id) const;

 private:
  friend class TrackedSet;

  const Objective* objective_;
  GroundSet ground_;
  QueryLedger ledger_;
};

// A set under modification with O(1)-amortized membership and the
// objective's incremental state. Insert/Erase are bookkeeping and free;
// Gain/Loss/Value are queries.
class TrackedSet {
 public:
  explicit TrackedSet(OracleHandle& handle);

  // f(u | S). Zero for dummies and members.
  double Gain(int u);
  // f(v | S - v) for a member v. Zero for dummies.
  double Loss(int v);
  double Value();

  void Insert(int u);
  void Erase(int v);

  bool Contains(int id) const { return member_[id] != 0; }
  std::span<const int> elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }

  Solution ToSolution(int capacity) const;

 private:
  OracleHandle* handle_;
  std::unique_ptr<IncrementalState> state_;
  std::vector<char> member_;
  std::vector<int> elements_;
  std::vector<int> position_;
};

// Samples random chains S ⊆ T and u ∉ T over the real elements and checks
// f(u | S) >= f(u | T) - 1e-9 in every trial. Throws kPrecondition if
// trials == 0.
bool SubmodularityProbe(OracleHandle& handle, int trials, RngStream& rng);

}  // namespace submod

#endif  // SUBMOD_ORACLE_H_
