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

#ifndef SUBMOD_SRC_INDEX_POOL_H_
#define SUBMOD_SRC_INDEX_POOL_H_

#include <span>
#include <vector>

#include "submod/rng.h"

namespace submod {

// A subset of [0, universe) supporting O(1) insert/remove and uniform
// sampling without replacement in O(sample size).
class IndexPool {
 public:
  explicit IndexPool(int universe) : position_(universe, -1) {}

  static IndexPool Full(int universe);

  int size() const { return static_cast<int>(ids_.size()); }
  bool Contains(int id) const { return position_[id] >= 0; }

  void Add(int id);
  void Remove(int id);

  // Partial Fisher-Yates: moves a uniform random `count`-subset to the front
  // and returns it. The view is invalidated by the next mutation.
  std::span<const int> Sample(int count, RngStream& rng);

 private:
  void Swap(int i, int j);

  std::vector<int> ids_;
  std::vector<int> position_;
};

}  // namespace submod

#endif  // SUBMOD_SRC_INDEX_POOL_H_
