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

#include "submod/brute_force.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "submod/error.h"

namespace submod {
namespace {

struct Search {
  OracleHandle& handle;
  TrackedSet set;
  int n;
  int k;
  std::vector<int> current;
  std::vector<int> best;
  double best_value;
  uint64_t enumerated = 0;

  void Visit() {
    const double value = set.Value();
    ++enumerated;
    if (value > best_value + 1e-12 * (1.0 + std::abs(best_value))) {
      best_value = value;
      best = current;
    }
  }

  // Depth-first in lexicographic order: each prefix is visited before its
  // extensions.
  void Extend(int next) {
    if (static_cast<int>(current.size()) == k) return;
    for (int u = next; u < n; ++u) {
      set.Insert(u);
      current.push_back(u);
      Visit();
      Extend(u + 1);
      current.pop_back();
      set.Erase(u);
    }
  }
};

}  // namespace

OptCertificate BruteForceOpt(OracleHandle& handle, int k) {
  const int n = handle.ground().n_real();
  if (n > kBruteForceMaxElements) {
    throw Error(ErrorKind::kSizeGuard,
                "brute force limited to " +
                    std::to_string(kBruteForceMaxElements) + " elements, got " +
                    std::to_string(n));
  }
  if (k < 0) throw Error(ErrorKind::kInvalidConstraint, "k must be >= 0");
  Search search{handle, handle.Track(), n, std::min(k, n), {}, {}, 0.0};
  search.best_value = search.set.Value();
  search.enumerated = 1;
  search.Extend(0);

  OptCertificate cert;
  cert.opt_set = Solution(search.best, std::max(k, 1));
  cert.opt_value = handle.Value(cert.opt_set);
  cert.enumerated = search.enumerated;
  return cert;
}

}  // namespace submod
