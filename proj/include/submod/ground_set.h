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

#ifndef SUBMOD_GROUND_SET_H_
#define SUBMOD_GROUND_SET_H_

#include <span>
#include <vector>

namespace submod {

// Element ids are dense integers in [0, total()). Real elements come first;
// the dummy ids occupy the suffix [n_real, n_real + n_dummy). Dummies have an
// identically zero marginal and never reach an objective.
class GroundSet {
 public:
  GroundSet() = default;
  GroundSet(int n_real, int n_dummy) : n_real_(n_real), n_dummy_(n_dummy) {}

  int n_real() const { return n_real_; }
  int n_dummy() const { return n_dummy_; }
  int total() const { return n_real_ + n_dummy_; }

  bool IsValid(int id) const { return id >= 0 && id < total(); }
  bool IsDummy(int id) const { return id >= n_real_; }

 private:
  int n_real_ = 0;
  int n_dummy_ = 0;
};

// Builds a ground set of n_real elements plus exactly 2k dummies.
// Throws kInvalidConstraint unless 1 <= k <= n_real.
GroundSet MakeGroundSet(int n_real, int k);

// A duplicate-free list of element ids with at most `capacity` entries.
class Solution {
 public:
  Solution() = default;
  explicit Solution(int capacity) : capacity_(capacity) {}
  // Throws kInvalidSolution on duplicates or overflow.
  Solution(std::vector<int> elements, int capacity);

  std::span<const int> elements() const { return elements_; }
  int capacity() const { return capacity_; }
  int size() const { return static_cast<int>(elements_.size()); }
  bool empty() const { return elements_.empty(); }

  bool Contains(int id) const;

  // Throws kInvalidSolution if full or already present.
  void Add(int id);

  // Copy with all dummy ids removed; order of real ids is kept.
  Solution StripDummies(const GroundSet& ground) const;

  // Ids in ascending order.
  std::vector<int> Sorted() const;

  friend bool operator==(const Solution&, const Solution&) = default;

 private:
  std::vector<int> elements_;
  int capacity_ = 0;
};

}  // namespace submod

#endif  // SUBMOD_GROUND_SET_H_
