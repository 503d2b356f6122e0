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
#include <cstdint>
#include <memory>
#include <vector>

#include "gtest/gtest.h"
#include "submod/baseline.h"
#include "submod/brute_force.h"
#include "submod/error.h"
#include "submod/fast.h"
#include "submod/ground_set.h"
#include "submod/objectives.h"
#include "submod/oracle.h"
#include "submod/rng.h"
#include "submod/synthetic.h"
#include "test_util.h"

namespace submod {
namespace {

Instance SingleEdge() {
  const std::vector<Edge> edges{{0, 1, 2.0}};
  return MakeGraphCut(WeightedGraph(3, edges));
}

TEST(GroundSetTest, AppendsTwoKDummies) {
  const GroundSet g = MakeGroundSet(10, 3);
  EXPECT_EQ(g.total(), 16);
  EXPECT_EQ(g.n_dummy(), 6);
  for (int id = 0; id < 10; ++id) EXPECT_FALSE(g.IsDummy(id));
  for (int id = 10; id < 16; ++id) EXPECT_TRUE(g.IsDummy(id));
  EXPECT_FALSE(g.IsValid(16));
}

TEST(GroundSetTest, MinimalCase) { EXPECT_EQ(MakeGroundSet(1, 1).total(), 3); }

TEST(GroundSetTest, RejectsBadK) {
  for (int k : {6, 0, -1}) {
    try {
      MakeGroundSet(5, k);
      FAIL() << "k=" << k;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kInvalidConstraint);
    }
  }
}

TEST(SolutionTest, RejectsDuplicatesAndOverflow) {
  EXPECT_THROW(Solution({1, 2, 1}, 5), Error);
  EXPECT_THROW(Solution({1, 2, 3}, 2), Error);
  Solution s(2);
  s.Add(4);
  EXPECT_THROW(s.Add(4), Error);
  s.Add(5);
  EXPECT_THROW(s.Add(6), Error);
}

TEST(SolutionTest, StripDummiesKeepsRealIdsInOrder) {
  const GroundSet g = MakeGroundSet(4, 2);
  const Solution s({5, 2, 7, 0}, 4);
  EXPECT_EQ(s.StripDummies(g), Solution({2, 0}, 4));
}

TEST(OracleTest, CutValuesAndDummyInvariance) {
  const Instance inst = SingleEdge();
  const InstanceObjective f(inst);
  OracleHandle h(f, MakeGroundSet(3, 1));
  EXPECT_EQ(h.Value(Solution(3)), 0.0);
  EXPECT_EQ(h.Value(Solution({0, 1, 2}, 3)), 0.0);
  EXPECT_EQ(h.Value(Solution({0}, 3)), 2.0);
  EXPECT_EQ(h.Value(Solution({0, 3, 4}, 3)), 2.0);
  EXPECT_EQ(h.queries(), 4u);
}

TEST(OracleTest, MarginalConventions) {
  const Instance inst = SingleEdge();
  const InstanceObjective f(inst);
  OracleHandle h(f, MakeGroundSet(3, 1));
  EXPECT_EQ(h.Marginal(0, Solution(3)), 2.0);
  EXPECT_EQ(h.Marginal(3, Solution({0}, 3)), 0.0);  // dummy
  EXPECT_EQ(h.Marginal(0, Solution({0}, 3)), 0.0);  // member
  EXPECT_EQ(h.queries(), 3u);
}

TEST(OracleTest, RejectsOutOfRangeIds) {
  const Instance inst = SingleEdge();
  const InstanceObjective f(inst);
  OracleHandle h(f, MakeGroundSet(3, 1));
  try {
    h.Value(Solution({5}, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidElement);
  }
  EXPECT_THROW(h.Marginal(-1, Solution(3)), Error);
  EXPECT_THROW(h.Marginal(0, Solution({9}, 3)), Error);
}

TEST(OracleTest, TrackedSetChargesQueriesNotBookkeeping) {
  RngStream rng(3);
  const Instance inst = GenSynthetic({ObjectiveKind::kGraphCut, 12}, rng);
  const InstanceObjective f(inst);
  OracleHandle h(f, MakeGroundSet(12, 3));
  TrackedSet set = h.Track();
  set.Insert(1);
  set.Insert(14);
  set.Erase(14);
  EXPECT_EQ(h.queries(), 0u);
  set.Gain(2);
  set.Loss(1);
  set.Value();
  EXPECT_EQ(h.queries(), 3u);
}

TEST(OracleTest, DummyInvarianceRandom) {
  RngStream rng(11);
  for (ObjectiveKind kind :
       {ObjectiveKind::kCoverageDiversity, ObjectiveKind::kFacilityDiversity,
        ObjectiveKind::kGraphCut}) {
    const Instance inst = GenSynthetic({kind, 15, 0.4}, rng);
    const InstanceObjective f(inst);
    const GroundSet g = MakeGroundSet(15, 5);
    OracleHandle h(f, g);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<int> real, padded;
      for (int id = 0; id < g.total(); ++id) {
        if (rng.UniformReal() < 0.3) {
          padded.push_back(id);
          if (!g.IsDummy(id)) real.push_back(id);
        }
      }
      EXPECT_LE(std::abs(h.Value(Solution(padded, g.total())) -
                         h.Value(Solution(real, g.total()))),
                1e-12);
    }
  }
}

TEST(OracleTest, MarginalMatchesValueDifference) {
  RngStream rng(12);
  for (ObjectiveKind kind :
       {ObjectiveKind::kCoverageDiversity, ObjectiveKind::kFacilityDiversity,
        ObjectiveKind::kGraphCut}) {
    const Instance inst = GenSynthetic({kind, 20, 0.3}, rng);
    const InstanceObjective f(inst);
    const GroundSet g = MakeGroundSet(20, 4);
    OracleHandle h(f, g);
    for (int trial = 0; trial < 10000 / 3; ++trial) {
      std::vector<int> ids;
      for (int id = 0; id < g.total(); ++id) {
        if (rng.UniformReal() < 0.25) ids.push_back(id);
      }
      const int u = static_cast<int>(rng.UniformInt(0, g.total() - 1));
      const Solution s(ids, g.total());
      std::vector<int> plus = ids;
      if (!s.Contains(u)) plus.push_back(u);
      const double direct =
          h.Value(Solution(plus, g.total())) - h.Value(s);
      EXPECT_NEAR(h.Marginal(u, s), direct, 1e-9);
    }
  }
}

TEST(OracleTest, SubmodularityProbeDetectsSupermodularStub) {
  const testing::SquareSizeObjective square(8);
  OracleHandle h(square, MakeGroundSet(8, 2));
  RngStream rng(1);
  EXPECT_FALSE(SubmodularityProbe(h, 1000, rng));
}

TEST(OracleTest, SubmodularityProbeRejectsZeroTrials) {
  const testing::ModularObjective modular({1.0, 2.0});
  OracleHandle h(modular, MakeGroundSet(2, 1));
  RngStream rng(1);
  try {
    SubmodularityProbe(h, 0, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kPrecondition);
  }
}

TEST(RngTest, SameSeedSameSequence) {
  RngStream a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(a.UniformInt(0, 1000), b.UniformInt(0, 1000));
    EXPECT_EQ(a.UniformReal(), b.UniformReal());
  }
  EXPECT_EQ(RngStream(7).Child(3).NextU64(), RngStream(7).Child(3).NextU64());
  EXPECT_NE(RngStream(7).Child(3).NextU64(), RngStream(7).Child(4).NextU64());
}

TEST(RngTest, UniformIntCoversRangeEvenly) {
  RngStream rng(5);
  std::vector<int> counts(6, 0);
  for (int i = 0; i < 60000; ++i) ++counts[rng.UniformInt(0, 5)];
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
}

// Counts every call made through a wrapped objective, so the ledger can be
// checked against an independent tally.
class CountingObjective : public Objective {
 public:
  explicit CountingObjective(const Objective& inner) : inner_(inner) {}

  int size() const override { return inner_.size(); }
  double Evaluate(std::span<const int> ids) const override {
    ++calls_;
    return inner_.Evaluate(ids);
  }
  std::unique_ptr<IncrementalState> NewState() const override {
    return std::make_unique<State>(inner_.NewState(), calls_);
  }
  uint64_t calls() const { return calls_; }

 private:
  class State : public IncrementalState {
   public:
    State(std::unique_ptr<IncrementalState> inner, uint64_t& calls)
        : inner_(std::move(inner)), calls_(calls) {}
    void Insert(int u) override { inner_->Insert(u); }
    void Erase(int v) override { inner_->Erase(v); }
    double Gain(int u) const override {
      ++calls_;
      return inner_->Gain(u);
    }
    double Loss(int v) const override {
      ++calls_;
      return inner_->Loss(v);
    }
    double Value() const override {
      ++calls_;
      return inner_->Value();
    }

   private:
    std::unique_ptr<IncrementalState> inner_;
    uint64_t& calls_;
  };

  const Objective& inner_;
  mutable uint64_t calls_ = 0;
};

// Brute force only touches real non-member ids, so every charged query
// reaches the objective and the two tallies must agree.
TEST(QueryAccountingTest, LedgerMatchesIndependentCount) {
  RngStream gen(21);
  const Instance inst = GenSynthetic({ObjectiveKind::kGraphCut, 10, 0.4}, gen);
  const InstanceObjective base(inst);
  const CountingObjective counted(base);
  OracleHandle h(counted, MakeGroundSet(10, 3));
  BruteForceOpt(h, 3);
  EXPECT_GT(h.queries(), 0u);
  EXPECT_EQ(h.queries(), counted.calls());
}

TEST(QueryAccountingTest, ShortcutsAreStillCharged) {
  const testing::ModularObjective modular({1.0, 2.0, 3.0});
  const CountingObjective counted(modular);
  OracleHandle h(counted, MakeGroundSet(3, 1));
  TrackedSet set = h.Track();
  set.Insert(0);
  set.Gain(0);  // member
  set.Gain(4);  // dummy
  EXPECT_EQ(h.queries(), 2u);
  EXPECT_EQ(counted.calls(), 0u);
}

TEST(ReproducibilityTest, SameConfigSameSolutionAndLedger) {
  RngStream gen(31);
  const Instance inst =
      GenSynthetic({ObjectiveKind::kCoverageDiversity, 40, 0.0, 0.75}, gen);
  const InstanceObjective f(inst);
  SolverConfig cfg;
  cfg.k = 5;
  cfg.eps = 0.25;
  auto run = [&](auto solver) {
    OracleHandle h(f, MakeGroundSet(40, cfg.k));
    RngStream rng(99);
    Solution s = solver(h, rng);
    return std::make_pair(s, h.queries());
  };
  auto main_solver = [&](OracleHandle& h, RngStream& rng) {
    return SolveMain(h, cfg, rng).solution;
  };
  auto warmup = [&](OracleHandle& h, RngStream& rng) {
    return WarmupSolve(h, cfg, rng);
  };
  auto sample = [&](OracleHandle& h, RngStream& rng) {
    return SampleGreedy(h, cfg, rng);
  };
  EXPECT_EQ(run(main_solver), run(main_solver));
  EXPECT_EQ(run(warmup), run(warmup));
  EXPECT_EQ(run(sample), run(sample));
}

}  // namespace
}  // namespace submod
