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

#ifndef SUBMOD_OBJECTIVE_H_
#define SUBMOD_OBJECTIVE_H_

#include <memory>
#include <span>

namespace submod {

// Running state of an objective for one evolving set of real element ids.
// Implementations keep whatever per-element sums make Gain and Loss cheap.
class IncrementalState {
 public:
  virtual ~IncrementalState() = default;

  virtual void Insert(int u) = 0;
  virtual void Erase(int v) = 0;
  // f(u | S) for u not in S.
  virtual double Gain(int u) const = 0;
  // f(v | S - v) for v in S.
  virtual double Loss(int v) const = 0;
  virtual double Value() const = 0;
};

// A set function over the real ids [0, size()). Dummies are handled by the
// oracle layer and are never passed in here.
class Objective {
 public:
  virtual ~Objective() = default;

  virtual int size() const = 0;
  // Direct evaluation from the definition; ids are distinct and in range.
  virtual double Evaluate(std::span<const int> ids) const = 0;
  virtual std::unique_ptr<IncrementalState> NewState() const = 0;
};

}  // namespace submod

#endif  // SUBMOD_OBJECTIVE_H_
