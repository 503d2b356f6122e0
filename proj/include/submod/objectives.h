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

#ifndef SUBMOD_OBJECTIVES_H_
#define SUBMOD_OBJECTIVES_H_

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "submod/objective.h"

namespace submod {

enum class ObjectiveKind { kCoverageDiversity, kFacilityDiversity, kGraphCut };

std::string ObjectiveKindName(ObjectiveKind kind);
// Accepts "coverage", "facility" and "cut". Throws kConfig otherwise.
ObjectiveKind ParseObjectiveKind(const std::string& name);

// Dense n x n matrix of non-negative similarities, row-major.
class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;
  // Throws kShape if data.size() != n * n, kValue on a negative entry.
  SimilarityMatrix(int n, std::vector<double> data);

  int n() const { return n_; }
  double at(int row, int col) const {
    return data_[static_cast<size_t>(row) * n_ + col];
  }
  std::span<const double> row(int r) const {
    return {data_.data() + static_cast<size_t>(r) * n_,
            static_cast<size_t>(n_)};
  }
  const std::vector<double>& data() const { return data_; }

 private:
  int n_ = 0;
  std::vector<double> data_;
};

struct Edge {
  int u;
  int v;
  double weight;
};

// Undirected graph with non-negative weights and no self-loops, stored as
// symmetric adjacency lists.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  // Each edge is added in both directions. Parallel edges are summed.
  // Throws kValue on negative weights or self-loops, kInvalidElement on
  // out-of-range endpoints.
  WeightedGraph(int n, std::span<const Edge> edges);

  int n() const { return static_cast<int>(adjacency_.size()); }
  const std::vector<std::pair<int, double>>& neighbors(int u) const {
    return adjacency_[u];
  }
  // Total incident weight.
  double degree(int u) const { return degree_[u]; }
  // Each undirected edge once, with u < v, sorted.
  std::vector<Edge> Edges() const;
  double Weight(int u, int v) const;

 private:
  std::vector<std::vector<std::pair<int, double>>> adjacency_;
  std::vector<double> degree_;
};

// The data behind one objective. Immutable after construction.
struct Instance {
  ObjectiveKind kind = ObjectiveKind::kGraphCut;
  std::variant<SimilarityMatrix, WeightedGraph> payload;
  double lambda = 0.0;  // only used by coverage-diversity

  int n_real() const;
  const SimilarityMatrix& similarity() const;
  const WeightedGraph& graph() const;
};

// Throws kConfig if lambda is outside [0, 1].
Instance MakeCoverageDiversity(SimilarityMatrix s, double lambda);
Instance MakeFacilityDiversity(SimilarityMatrix s);
Instance MakeGraphCut(WeightedGraph g);

// sum_{u in N} sum_{v in S} s(u,v) - lambda * sum_{u in S} sum_{v in S} s(u,v)
double CoverageDiversityValue(const Instance& inst, std::span<const int> set);
// sum_{u in N} max_{v in S} s(u,v) - (1/n) sum_{u in S} sum_{v in S} s(u,v),
// with the max over an empty set taken as 0.
double FacilityDiversityValue(const Instance& inst, std::span<const int> set);
// Total weight of edges with exactly one endpoint in S.
double CutValue(const Instance& inst, std::span<const int> set);

// Dispatches on inst.kind.
double EvaluateInstance(const Instance& inst, std::span<const int> set);

// Objective view of an instance; the instance must outlive it.
class InstanceObjective : public Objective {
 public:
  explicit InstanceObjective(const Instance& inst) : inst_(&inst) {}

  int size() const override { return inst_->n_real(); }
  double Evaluate(std::span<const int> ids) const override {
    return EvaluateInstance(*inst_, ids);
  }
  std::unique_ptr<IncrementalState> NewState() const override;

 private:
  const Instance* inst_;
};

}  // namespace submod

#endif  // SUBMOD_OBJECTIVES_H_
