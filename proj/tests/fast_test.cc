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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "gtest/gtest.h"
#include "submod/error.h"
#include "submod/fast.h"
#include "submod/objectives.h"
#include "submod/oracle.h"
#include "submod/rng.h"
#include "submod/synthetic.h"
#include "test_util.h"

namespace submod {
namespace {

SolverConfig Config(int k, double eps) {
  SolverConfig cfg;
  cfg.k = k;
  cfg.eps = eps;
  return cfg;
}

Instance RandomCut(int n, double density, uint64_t seed) {
  RngStream rng(seed);
  return GenSynthetic({ObjectiveKind::kGraphCut, n, density}, rng);
}

TEST(ConfigTest, DerivedCounts) {
  EXPECT_EQ(AttemptCount(0.1), 4);
  EXPECT_EQ(AttemptCount(0.5), 1);
  EXPECT_EQ(AttemptCount(0.25), 2);
  EXPECT_EQ(IterationsFor(10, 0.25), 1013);
  EXPECT_DOUBLE_EQ(SamplingProbability(100, 0.1, PMode::kPractical), 0.8);
  EXPECT_NEAR(SamplingProbability(10, 0.5, PMode::kTheoretical),
              8.0 / (10 * 0.25) * std::log(4.0), 1e-12);
}

TEST(ConfigTest, Validation) {
  SolverConfig cfg = Config(0, 0.1);
  EXPECT_THROW(cfg.Validate(), Error);
  cfg = Config(2, 1.0);
  EXPECT_THROW(cfg.Validate(), Error);
  cfg = Config(2, 0.1);
  cfg.ts = 1.5;
  EXPECT_THROW(cfg.Validate(), Error);
  cfg = Config(5, 0.1);
  EXPECT_THROW(cfg.Validate(GroundSet(4, 10)), Error);
  EXPECT_THROW(cfg.Validate(GroundSet(8, 9)), Error);
  EXPECT_EQ(ParsePMode(PModeName(PMode::kTheoretical)), PMode::kTheoretical);
  EXPECT_THROW(ParsePMode("fast"), Error);
}

TEST(InitSolutionTest, FullSizeWithDummyPadding) {
  const Instance inst = RandomCut(30, 0.2, 1);
  const InstanceObjective f(inst);
  for (double eps : {0.1, 0.5}) {
    const GroundSet g = MakeGroundSet(30, 6);
    OracleHandle h(f, g);
    RngStream rng(2);
    const Solution s = InitSolution(h, Config(6, eps), rng);
    EXPECT_EQ(s.size(), 6);
    EXPECT_EQ(s.capacity(), 6);
  }
}

TEST(LocalOptConditionTest, SignCaseHoldsEverywhere) {
  const testing::ModularObjective f({1, 1, 0, 0});
  const GroundSet g = MakeGroundSet(4, 2);
  OracleHandle h(f, g);
  const LocalOptReport r = CheckLocalOptCondition(h, Solution({0, 1}, 2), 0.1);
  EXPECT_TRUE(r.satisfied);
  EXPECT_EQ(r.worst_t, 0);
  EXPECT_EQ(r.removal_losses.size(), 2u);
  EXPECT_EQ(r.add_gains.size(), static_cast<size_t>(g.total() - 2));
  EXPECT_TRUE(std::is_sorted(r.add_gains.rbegin(), r.add_gains.rend()));
  EXPECT_TRUE(std::is_sorted(r.removal_losses.begin(), r.removal_losses.end()));
}

TEST(LocalOptConditionTest, BottomKModularViolatedAtOne) {
  const testing::ModularObjective f({4, 3, 2, 1});
  OracleHandle h(f, MakeGroundSet(4, 2));
  const LocalOptReport r = CheckLocalOptCondition(h, Solution({2, 3}, 2), 0.0);
  EXPECT_FALSE(r.satisfied);
  EXPECT_GT(r.add_gains[0] - r.removal_losses[0], 0.0);
  EXPECT_DOUBLE_EQ(r.f_s, 3.0);
}

TEST(LocalOptConditionTest, EmptyPrefixAlwaysHolds) {
  // With t = 0 the margin is -eps f(S) <= 0 for any non-negative f(S).
  RngStream rng(3);
  const Instance inst = RandomCut(20, 0.3, 4);
  const InstanceObjective f(inst);
  const GroundSet g = MakeGroundSet(20, 4);
  OracleHandle h(f, g);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> ids;
    while (ids.size() < 4) {
      const int id = static_cast<int>(rng.UniformInt(0, g.total() - 1));
      if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
    }
    const LocalOptReport r = CheckLocalOptCondition(h, Solution(ids, 4), 0.2);
    EXPECT_GE(r.worst_margin, -0.2 * r.f_s - 1e-12);
    if (r.worst_t == 0) EXPECT_TRUE(r.satisfied);
  }
}

TEST(LocalOptConditionTest, SizeMismatchIsRejected) {
  const testing::ModularObjective f({1, 2, 3});
  OracleHandle h(f, MakeGroundSet(3, 2));
  try {
    CheckLocalOptCondition(h, Solution({0}, 2), 0.1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidSolution);
  }
}

TEST(FastLocalSearchTest, AttemptQueriesMatchClosedForm) {
  const Instance inst = RandomCut(60, 0.2, 5);
  const InstanceObjective f(inst);
  for (int seed = 0; seed < 5; ++seed) {
    const GroundSet g = MakeGroundSet(60, 5);
    OracleHandle h(f, g);
    RngStream rng(seed);
    SolverConfig cfg = Config(5, 0.1);
    FastLocalSearchStats stats;
    FastLocalSearch(h, cfg, rng, &stats);
    ASSERT_FALSE(stats.attempt_queries.empty());
    const uint64_t expected =
        AttemptQueryCount(g.total(), 5, IterationsFor(5, 0.1));
    uint64_t sum = stats.init_queries;
    for (uint64_t q : stats.attempt_queries) {
      EXPECT_EQ(q, expected);
      sum += q;
    }
    EXPECT_EQ(h.queries(), sum);
  }
}

TEST(FastLocalSearchTest, IterationOverride) {
  const Instance inst = RandomCut(40, 0.2, 6);
  const InstanceObjective f(inst);
  OracleHandle h(f, MakeGroundSet(40, 4));
  SolverConfig cfg = Config(4, 0.3);
  cfg.iterations = 7;
  RngStream rng(1);
  FastLocalSearchStats stats;
  FastLocalSearch(h, cfg, rng, &stats);
  for (const auto& steps : stats.steps) EXPECT_EQ(steps.size(), 7u);
  for (int chosen : stats.chosen_index) {
    EXPECT_GE(chosen, 0);
    EXPECT_LT(chosen, 7);
  }
}

TEST(FastLocalSearchTest, TrajectoryIsMonotone) {
  const Instance inst = RandomCut(50, 0.2, 7);
  const InstanceObjective f(inst);
  const GroundSet g = MakeGroundSet(50, 5);
  OracleHandle h(f, g);
  RngStream rng(8);
  FastLocalSearchStats stats;
  FastLocalSearch(h, Config(5, 0.2), rng, &stats);
  for (const auto& steps : stats.steps) {
    std::vector<int> ids(stats.initial.elements().begin(),
                         stats.initial.elements().end());
    double prev = h.Value(Solution(ids, 5));
    for (const SwapStep& step : steps) {
      if (!step.accepted) continue;
      EXPECT_GT(step.delta, 0.0);
      *std::find(ids.begin(), ids.end(), step.removed) = step.added;
      const double next = h.Value(Solution(ids, 5));
      EXPECT_GE(next, prev - 1e-9);
      EXPECT_NEAR(next - prev, step.delta, 1e-9);
      prev = next;
    }
  }
}

TEST(FastLocalSearchTest, OutputsPassIndependentCheck) {
  const Instance inst = RandomCut(80, 0.1, 9);
  const InstanceObjective f(inst);
  for (int seed = 0; seed < 20; ++seed) {
    OracleHandle h(f, MakeGroundSet(80, 6));
    RngStream rng(seed);
    const auto result = FastLocalSearch(h, Config(6, 0.25), rng);
    if (!result) continue;
    EXPECT_EQ(result->size(), 6);
    OracleHandle fresh(f, MakeGroundSet(80, 6));
    EXPECT_TRUE(CheckLocalOptCondition(fresh, *result, 0.25).satisfied);
  }
}

TEST(FastLocalSearchTest, ZeroObjectiveNeverFails) {
  const testing::ModularObjective zero(std::vector<double>(12, 0.0));
  for (int seed = 0; seed < 10; ++seed) {
    OracleHandle h(zero, MakeGroundSet(12, 3));
    RngStream rng(seed);
    FastLocalSearchStats stats;
    ASSERT_TRUE(FastLocalSearch(h, Config(3, 0.2), rng, &stats).has_value());
    EXPECT_TRUE(stats.attempt_passed.front());
  }
}

TEST(GuidedStochasticGreedyTest, ForcedArgmax) {
  const testing::ModularObjective f({3, 1, 2});
  for (int seed = 0; seed < 10; ++seed) {
    OracleHandle h(f, MakeGroundSet(3, 1));
    RngStream rng(seed);
    std::vector<GreedyStep> trace;
    const Solution s =
        GuidedStochasticGreedy(h, Solution(1), Config(1, 0.1), rng, &trace);
    EXPECT_EQ(s.Sorted(), std::vector<int>{0});
    ASSERT_EQ(trace.size(), 1u);
    EXPECT_EQ(trace[0].sample_size, 5);
    EXPECT_EQ(trace[0].rank, 1);
  }
}

TEST(GuidedStochasticGreedyTest, PracticalSampleSize) {
  const Instance inst = RandomCut(500, 0.02, 10);
  const InstanceObjective f(inst);
  const GroundSet g = MakeGroundSet(500, 100);
  OracleHandle h(f, g);
  RngStream rng(1);
  std::vector<GreedyStep> trace;
  SolverConfig cfg = Config(100, 0.1);
  cfg.ts = 0.0;
  GuidedStochasticGreedy(h, Solution(100), cfg, rng, &trace);
  ASSERT_FALSE(trace.empty());
  EXPECT_EQ(trace[0].sample_size,
            static_cast<int>(std::ceil(0.8 * g.total())));
}

TEST(GuidedStochasticGreedyTest, PhaseOneAvoidsGuideAndGainsNonNegative) {
  RngStream gen(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = GenSynthetic(
        {ObjectiveKind::kCoverageDiversity, 60, 0.0, 0.9}, gen);
    const InstanceObjective f(inst);
    const int k = 8;
    const GroundSet g = MakeGroundSet(60, k);
    OracleHandle h(f, g);
    std::vector<int> guide_ids;
    for (int u = 0; u < 60; ++u) {
      if (gen.UniformReal() < 0.2) guide_ids.push_back(u);
    }
    const Solution guide(guide_ids, g.total());
    SolverConfig cfg = Config(k, 0.2);
    cfg.ts = trial % 2 == 0 ? 1.0 : 0.5;
    RngStream rng(trial);
    std::vector<GreedyStep> trace;
    GuidedStochasticGreedy(h, guide, cfg, rng, &trace);
    for (const GreedyStep& step : trace) {
      if (step.guided) EXPECT_FALSE(guide.Contains(step.picked));
      if (step.accepted) EXPECT_GE(step.gain, -1e-12);
      EXPECT_GE(step.window, 1.0);
      EXPECT_LE(step.window, step.sample_size);
    }
  }
}

TEST(GuidedStochasticGreedyTest, TopElementGuideNeverPicked) {
  const testing::ModularObjective f({9, 1, 2, 3, 4});
  const GroundSet g = MakeGroundSet(5, 2);
  SolverConfig cfg = Config(2, 0.1);
  cfg.ts = 1.0;
  for (int seed = 0; seed < 20; ++seed) {
    OracleHandle h(f, g);
    RngStream rng(seed);
    const Solution s =
        GuidedStochasticGreedy(h, Solution({0}, g.total()), cfg, rng);
    EXPECT_FALSE(s.Contains(0));
  }
}

TEST(SolveMainTest, AtLeastBothComponents) {
  const Instance inst = RandomCut(60, 0.15, 12);
  const InstanceObjective f(inst);
  const SolverConfig cfg = Config(5, 0.25);
  for (int seed = 0; seed < 10; ++seed) {
    OracleHandle h(f, MakeGroundSet(60, 5));
    RngStream rng(seed);
    const MainResult main = SolveMain(h, cfg, rng);
    const double value = f.Evaluate(main.solution.elements());
    EXPECT_GE(value, 0.0);

    OracleHandle h2(f, MakeGroundSet(60, 5));
    RngStream replay(seed);
    const auto z = FastLocalSearch(h2, cfg, replay);
    EXPECT_EQ(main.failed, !z.has_value());
    if (!z) {
      EXPECT_TRUE(main.solution.empty());
      continue;
    }
    const Solution a = GuidedStochasticGreedy(h2, *z, cfg, replay);
    EXPECT_GE(value, f.Evaluate(z->elements()) - 1e-12);
    EXPECT_GE(value, f.Evaluate(a.elements()) - 1e-12);
  }
}

TEST(SolveMainTest, BetterOfBreaksTiesByLowestIds) {
  const testing::ModularObjective f({1, 1, 1});
  OracleHandle h(f, MakeGroundSet(3, 1));
  EXPECT_EQ(BetterOf(h, Solution({2}, 1), Solution({1}, 1)).Sorted(),
            std::vector<int>{1});
  EXPECT_EQ(BetterOf(h, Solution({0}, 1), Solution({2}, 1)).Sorted(),
            std::vector<int>{0});
}

TEST(SolveMainTest, ModularNearTopK) {
  std::vector<double> weights;
  for (int i = 0; i < 30; ++i) weights.push_back(1.0 + 0.37 * ((i * 7) % 30));
  const testing::ModularObjective f(weights);
  const int k = 5;
  std::vector<int> best;
  const double opt = testing::EnumerateOptimum(f, k, &best);
  std::vector<double> sorted = weights;
  std::sort(sorted.rbegin(), sorted.rend());
  EXPECT_NEAR(opt, std::accumulate(sorted.begin(), sorted.begin() + k, 0.0),
              1e-9);
  SolverConfig cfg = Config(k, 0.05);
  cfg.p_mode = PMode::kTheoretical;  // p >= 1 covers the whole pool
  for (int seed = 0; seed < 50; ++seed) {
    OracleHandle h(f, MakeGroundSet(30, k));
    RngStream rng(seed);
    const MainResult r = SolveMain(h, cfg, rng);
    EXPECT_GE(f.Evaluate(r.solution.elements()), opt * (1 - 0.05)) << seed;
  }
}

TEST(SolveMainTest, ScalingInvariance) {
  RngStream gen(13);
  const Instance base =
      GenSynthetic({ObjectiveKind::kCoverageDiversity, 40, 0.0, 0.75}, gen);
  for (double c : {0.5, 4.0}) {
    std::vector<double> data = base.similarity().data();
    for (double& x : data) x *= c;
    const Instance scaled =
        MakeCoverageDiversity(SimilarityMatrix(40, data), 0.75);
    const InstanceObjective f1(base), f2(scaled);
    for (int seed = 0; seed < 5; ++seed) {
      const SolverConfig cfg = Config(4, 0.25);
      OracleHandle h1(f1, MakeGroundSet(40, 4)), h2(f2, MakeGroundSet(40, 4));
      RngStream r1(seed), r2(seed);
      const MainResult a = SolveMain(h1, cfg, r1);
      const MainResult b = SolveMain(h2, cfg, r2);
      EXPECT_EQ(a.failed, b.failed);
      EXPECT_EQ(a.solution.Sorted(), b.solution.Sorted());
      EXPECT_EQ(h1.queries(), h2.queries());
    }
  }
}

}  // namespace
}  // namespace submod
