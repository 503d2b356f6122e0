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

#include <cmath>
#include <optional>

#include "gtest/gtest.h"
#include "submod/bound_params.h"
#include "submod/solver_config.h"

namespace submod {
namespace {

TEST(BoundParamsTest, LimitBoundExceedsConstant) {
  const BoundParams best = OptimizeBoundParams(std::nullopt, 1e-6);
  EXPECT_GT(best.bound_value, 0.385);
  EXPECT_NEAR(best.p1 + best.p2 + best.p3, 1.0, 1e-12);
  EXPECT_GE(best.p1, 0.0);
  EXPECT_GE(best.p2, 0.0);
  EXPECT_GE(best.p3, 0.0);
}

TEST(BoundParamsTest, FrozenFlipPointIsArgmax) {
  const BoundParams best = OptimizeBoundParams(std::nullopt, 1e-6);
  EXPECT_NEAR(best.ts, kDefaultFlipPoint, 1e-3);
}

TEST(BoundParamsTest, ZeroWeightOnGreedyGivesZero) {
  for (double ts : {0.0, 0.3, 1.0}) {
    const auto value = BoundValue(0.5, 0.5, 0.0, ts, 0.1, std::nullopt);
    ASSERT_TRUE(value.has_value());
    EXPECT_EQ(*value, 0.0);
  }
}

TEST(BoundParamsTest, InfeasibleWeightsAreRejected) {
  EXPECT_FALSE(BoundValue(0.0, 0.0, 1.0, 0.5, 0.1, std::nullopt).has_value());
}

TEST(BoundParamsTest, FiniteKIsWeakerThanLimit) {
  const double limit = OptimizeBoundParams(std::nullopt, 0.01, 0.01).bound_value;
  const double finite = OptimizeBoundParams(50, 0.01, 0.01).bound_value;
  EXPECT_LT(finite, limit);
  EXPECT_GT(finite, 0.0);
}

TEST(BoundParamsTest, MatchesFullSimplexGrid) {
  const int grid = 100;
  for (std::optional<int> k : {std::optional<int>(), std::optional<int>(20)}) {
    for (double eps : {1e-6, 0.1}) {
      double best = -1.0;
      for (int ti = 0; ti <= grid; ++ti) {
        for (int a = 0; a <= grid; ++a) {
          for (int b = 0; a + b <= grid; ++b) {
            const auto v =
                BoundValue(static_cast<double>(a) / grid,
                           static_cast<double>(grid - a - b) / grid,
                           static_cast<double>(b) / grid,
                           static_cast<double>(ti) / grid, eps, k);
            if (v && *v > best) best = *v;
          }
        }
      }
      const BoundParams fast = OptimizeBoundParams(k, eps, 0.01);
      EXPECT_NEAR(fast.bound_value, best, 1e-12);
      const auto check =
          BoundValue(fast.p1, fast.p2, fast.p3, fast.ts, eps, k);
      ASSERT_TRUE(check.has_value());
      EXPECT_NEAR(*check, fast.bound_value, 1e-15);
    }
  }
}

TEST(BoundParamsTest, RejectsBadInputs) {
  EXPECT_ANY_THROW(OptimizeBoundParams(std::nullopt, 0.0));
  EXPECT_ANY_THROW(OptimizeBoundParams(0, 0.1));
  EXPECT_ANY_THROW(OptimizeBoundParams(std::nullopt, 0.1, 0.3));
}

}  // namespace
}  // namespace submod
