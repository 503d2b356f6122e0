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

#include "index_pool.h"

#include <algorithm>

namespace submod {

IndexPool IndexPool::Full(int universe) {
  IndexPool pool(universe);
  pool.ids_.resize(universe);
  for (int i = 0; i < universe; ++i) {
    pool.ids_[i] = i;
    pool.position_[i] = i;
  }
  return pool;
}

void IndexPool::Add(int id) {
  if (Contains(id)) return;
  position_[id] = static_cast<int>(ids_.size());
  ids_.push_back(id);
}

void IndexPool::Remove(int id) {
  if (!Contains(id)) return;
  const int pos = position_[id];
  Swap(pos, static_cast<int>(ids_.size()) - 1);
  ids_.pop_back();
  position_[id] = -1;
}

std::span<const int> IndexPool::Sample(int count, RngStream& rng) {
  count = std::clamp(count, 0, size());
  const int last = size() - 1;
  for (int i = 0; i < count; ++i) {
    Swap(i, static_cast<int>(rng.UniformInt(i, last)));
  }
  return {ids_.data(), static_cast<size_t>(count)};
}

void IndexPool::Swap(int i, int j) {
  if (i == j) return;
  std::swap(ids_[i], ids_[j]);
  position_[ids_[i]] = i;
  position_[ids_[j]] = j;
}

}  // namespace submod
