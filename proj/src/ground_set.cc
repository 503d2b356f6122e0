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

#include "submod/ground_set.h"

#include <algorithm>
#include <string>

#include "submod/error.h"

namespace submod {

GroundSet MakeGroundSet(int n_real, int k) {
  if (n_real < 1) {
    throw Error(ErrorKind::kInvalidConstraint, "ground set must be non-empty");
  }
  if (k < 1 || k > n_real) {
    throw Error(ErrorKind::kInvalidConstraint,
                "k=" + std::to_string(k) + " outside [1, " +
                    std::to_string(n_real) + "]");
  }
  return GroundSet(n_real, 2 * k);
}

Solution::Solution(std::vector<int> elements, int capacity)
    : capacity_(capacity) {
  if (static_cast<int>(elements.size()) > capacity) {
    throw Error(ErrorKind::kInvalidSolution,
                "solution has " + std::to_string(elements.size()) +
                    " elements, capacity " + std::to_string(capacity));
  }
  std::vector<int> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::kInvalidSolution, "duplicate element id");
  }
  elements_ = std::move(elements);
}

bool Solution::Contains(int id) const {
  return std::find(elements_.begin(), elements_.end(), id) != elements_.end();
}

void Solution::Add(int id) {
  if (size() >= capacity_) {
    throw Error(ErrorKind::kInvalidSolution, "solution is full");
  }
  if (Contains(id)) {
    throw Error(ErrorKind::kInvalidSolution,
                "element " + std::to_string(id) + " already present");
  }
  elements_.push_back(id);
}

Solution Solution::StripDummies(const GroundSet& ground) const {
  Solution out(capacity_);
  for (int id : elements_) {
    if (!ground.IsDummy(id)) out.elements_.push_back(id);
  }
  return out;
}

std::vector<int> Solution::Sorted() const {
  std::vector<int> ids = elements_;
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace submod
