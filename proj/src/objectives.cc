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

#include "submod/objectives.h"

#include <algorithm>
#include <map>
#include <string>

#include "submod/error.h"

namespace submod {
namespace {

void RequireKind(const Instance& inst, ObjectiveKind kind) {
  if (inst.kind != kind) {
    throw Error(ErrorKind::kWrongObjective,
                "instance is " + ObjectiveKindName(inst.kind) + ", expected " +
                    ObjectiveKindName(kind));
  }
}

// sum_{u in S} sum_{v in S} s(u, v)
double PairSum(const SimilarityMatrix& s, std::span<const int> set) {
  double total = 0.0;
  for (int u : set) {
    for (int v : set) total += s.at(u, v);
  }
  return total;
}

// Row and column sums of s restricted to the current set:
// in_row[w] = sum_{x in S} s(w, x), in_col[w] = sum_{x in S} s(x, w).
struct PairSums {
  explicit PairSums(int n) : in_row(n, 0.0), in_col(n, 0.0) {}

  void Add(const SimilarityMatrix& s, int u, double sign) {
    const auto row = s.row(u);
    for (int w = 0; w < s.n(); ++w) {
      in_row[w] += sign * s.at(w, u);
      in_col[w] += sign * row[w];
    }
  }
  // sum over pairs gained by inserting u (u not in S).
  double InsertDelta(const SimilarityMatrix& s, int u) const {
    return in_row[u] + in_col[u] + s.at(u, u);
  }
  // sum over pairs lost by erasing v (v in S).
  double EraseDelta(const SimilarityMatrix& s, int v) const {
    return in_row[v] + in_col[v] - s.at(v, v);
  }

  std::vector<double> in_row;
  std::vector<double> in_col;
};

class CoverageDiversityState : public IncrementalState {
 public:
  explicit CoverageDiversityState(const Instance& inst)
      : s_(inst.similarity()),
        lambda_(inst.lambda),
        column_sum_(s_.n(), 0.0),
        pairs_(s_.n()) {
    for (int u = 0; u < s_.n(); ++u) {
      const auto row = s_.row(u);
      for (int v = 0; v < s_.n(); ++v) column_sum_[v] += row[v];
    }
  }

  void Insert(int u) override {
    value_ += Gain(u);
    pairs_.Add(s_, u, 1.0);
  }
  void Erase(int v) override {
    value_ -= Loss(v);
    pairs_.Add(s_, v, -1.0);
  }
  double Gain(int u) const override {
    return column_sum_[u] - lambda_ * pairs_.InsertDelta(s_, u);
  }
  double Loss(int v) const override {
    return column_sum_[v] - lambda_ * pairs_.EraseDelta(s_, v);
  }
  double Value() const override { return value_; }

 private:
  const SimilarityMatrix& s_;
  double lambda_;
  std::vector<double> column_sum_;
  PairSums pairs_;
  double value_ = 0.0;
};

// Keeps, for every u, the largest and second largest s(u, v) over v in S
// (floored at 0) together with their arguments. Erasing an argument triggers
// a rescan of that row only.
class FacilityDiversityState : public IncrementalState {
 public:
  explicit FacilityDiversityState(const Instance& inst)
      : s_(inst.similarity()),
        inv_n_(1.0 / s_.n()),
        pairs_(s_.n()),
        best_(s_.n(), 0.0),
        second_(s_.n(), 0.0),
        best_arg_(s_.n(), -1),
        second_arg_(s_.n(), -1) {}

  void Insert(int u) override {
    value_ += Gain(u);
    pairs_.Add(s_, u, 1.0);
    members_.push_back(u);
    for (int x = 0; x < s_.n(); ++x) Offer(x, u, s_.at(x, u));
  }

  void Erase(int v) override {
    value_ -= Loss(v);
    pairs_.Add(s_, v, -1.0);
    members_.erase(std::find(members_.begin(), members_.end(), v));
    for (int x = 0; x < s_.n(); ++x) {
      if (best_arg_[x] == v || second_arg_[x] == v) Rescan(x);
    }
  }

  double Gain(int u) const override {
    double cover = 0.0;
    for (int x = 0; x < s_.n(); ++x) {
      cover += std::max(0.0, s_.at(x, u) - best_[x]);
    }
    return cover - inv_n_ * pairs_.InsertDelta(s_, u);
  }

  double Loss(int v) const override {
    double cover = 0.0;
    for (int x = 0; x < s_.n(); ++x) {
      if (best_arg_[x] == v) cover += best_[x] - second_[x];
    }
    return cover - inv_n_ * pairs_.EraseDelta(s_, v);
  }

  double Value() const override { return value_; }

 private:
  void Offer(int x, int v, double val) {
    if (val > best_[x]) {
      second_[x] = best_[x];
      second_arg_[x] = best_arg_[x];
      best_[x] = val;
      best_arg_[x] = v;
    } else if (val > second_[x]) {
      second_[x] = val;
      second_arg_[x] = v;
    }
  }

  void Rescan(int x) {
    best_[x] = second_[x] = 0.0;
    best_arg_[x] = second_arg_[x] = -1;
    for (int v : members_) Offer(x, v, s_.at(x, v));
  }

  const SimilarityMatrix& s_;
  double inv_n_;
  PairSums pairs_;
  std::vector<double> best_;
  std::vector<double> second_;
  std::vector<int> best_arg_;
  std::vector<int> second_arg_;
  std::vector<int> members_;
  double value_ = 0.0;
};

class CutState : public IncrementalState {
 public:
  explicit CutState(const Instance& inst)
      : g_(inst.graph()), inside_weight_(g_.n(), 0.0) {}

  void Insert(int u) override {
    value_ += Gain(u);
    for (const auto& [j, w] : g_.neighbors(u)) inside_weight_[j] += w;
  }
  void Erase(int v) override {
    value_ -= Loss(v);
    for (const auto& [j, w] : g_.neighbors(v)) inside_weight_[j] -= w;
  }
  // Edges to the outside start crossing, edges into S stop crossing.
  double Gain(int u) const override {
    return g_.degree(u) - 2.0 * inside_weight_[u];
  }
  double Loss(int v) const override {
    return g_.degree(v) - 2.0 * inside_weight_[v];
  }
  double Value() const override { return value_; }

 private:
  const WeightedGraph& g_;
  std::vector<double> inside_weight_;
  double value_ = 0.0;
};

}  // namespace

std::string ObjectiveKindName(ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::kCoverageDiversity: return "coverage";
    case ObjectiveKind::kFacilityDiversity: return "facility";
    case ObjectiveKind::kGraphCut: return "cut";
  }
  return "unknown";
}

ObjectiveKind ParseObjectiveKind(const std::string& name) {
  if (name == "coverage") return ObjectiveKind::kCoverageDiversity;
  if (name == "facility") return ObjectiveKind::kFacilityDiversity;
  if (name == "cut") return ObjectiveKind::kGraphCut;
  throw Error(ErrorKind::kConfig, "unknown objective '" + name + "'");
}

SimilarityMatrix::SimilarityMatrix(int n, std::vector<double> data)
    : n_(n), data_(std::move(data)) {
  if (n < 0 || data_.size() != static_cast<size_t>(n) * n) {
    throw Error(ErrorKind::kShape, "similarity data is not " +
                                       std::to_string(n) + "x" +
                                       std::to_string(n));
  }
  for (double x : data_) {
    if (!(x >= 0.0)) {
      throw Error(ErrorKind::kValue, "similarities must be non-negative");
    }
  }
}

WeightedGraph::WeightedGraph(int n, std::span<const Edge> edges)
    : adjacency_(n), degree_(n, 0.0) {
  std::map<std::pair<int, int>, double> merged;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(ErrorKind::kInvalidElement, "edge endpoint out of range");
    }
    if (e.u == e.v) throw Error(ErrorKind::kValue, "self-loop");
    if (!(e.weight >= 0.0)) {
      throw Error(ErrorKind::kValue, "negative edge weight");
    }
    merged[{std::min(e.u, e.v), std::max(e.u, e.v)}] += e.weight;
  }
  for (const auto& [key, w] : merged) {
    adjacency_[key.first].emplace_back(key.second, w);
    adjacency_[key.second].emplace_back(key.first, w);
    degree_[key.first] += w;
    degree_[key.second] += w;
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::vector<Edge> WeightedGraph::Edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n(); ++u) {
    for (const auto& [v, w] : adjacency_[u]) {
      if (u < v) out.push_back({u, v, w});
    }
  }
  return out;
}

double WeightedGraph::Weight(int u, int v) const {
  const auto& list = adjacency_[u];
  auto it = std::lower_bound(list.begin(), list.end(),
                             std::pair<int, double>(v, -1.0));
  return (it != list.end() && it->first == v) ? it->second : 0.0;
}

int Instance::n_real() const {
  return std::visit([](const auto& p) { return p.n(); }, payload);
}

const SimilarityMatrix& Instance::similarity() const {
  if (const auto* s = std::get_if<SimilarityMatrix>(&payload)) return *s;
  throw Error(ErrorKind::kWrongObjective, "instance has no similarity matrix");
}

const WeightedGraph& Instance::graph() const {
  if (const auto* g = std::get_if<WeightedGraph>(&payload)) return *g;
  throw Error(ErrorKind::kWrongObjective, "instance has no graph");
}

Instance MakeCoverageDiversity(SimilarityMatrix s, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw Error(ErrorKind::kConfig, "lambda must lie in [0, 1]");
  }
  return Instance{ObjectiveKind::kCoverageDiversity, std::move(s), lambda};
}

Instance MakeFacilityDiversity(SimilarityMatrix s) {
  return Instance{ObjectiveKind::kFacilityDiversity, std::move(s), 0.0};
}

Instance MakeGraphCut(WeightedGraph g) {
  return Instance{ObjectiveKind::kGraphCut, std::move(g), 0.0};
}

double CoverageDiversityValue(const Instance& inst, std::span<const int> set) {
  RequireKind(inst, ObjectiveKind::kCoverageDiversity);
  const SimilarityMatrix& s = inst.similarity();
  double coverage = 0.0;
  for (int u = 0; u < s.n(); ++u) {
    for (int v : set) coverage += s.at(u, v);
  }
  return coverage - inst.lambda * PairSum(s, set);
}

double FacilityDiversityValue(const Instance& inst, std::span<const int> set) {
  RequireKind(inst, ObjectiveKind::kFacilityDiversity);
  const SimilarityMatrix& s = inst.similarity();
  double coverage = 0.0;
  for (int u = 0; u < s.n(); ++u) {
    double best = 0.0;
    for (int v : set) best = std::max(best, s.at(u, v));
    coverage += best;
  }
  return coverage - PairSum(s, set) / s.n();
}

double CutValue(const Instance& inst, std::span<const int> set) {
  RequireKind(inst, ObjectiveKind::kGraphCut);
  const WeightedGraph& g = inst.graph();
  std::vector<char> inside(g.n(), 0);
  for (int u : set) inside[u] = 1;
  double total = 0.0;
  for (int u : set) {
    for (const auto& [v, w] : g.neighbors(u)) {
      if (!inside[v]) total += w;
    }
  }
  return total;
}

double EvaluateInstance(const Instance& inst, std::span<const int> set) {
  switch (inst.kind) {
    case ObjectiveKind::kCoverageDiversity:
      return CoverageDiversityValue(inst, set);
    case ObjectiveKind::kFacilityDiversity:
      return FacilityDiversityValue(inst, set);
    case ObjectiveKind::kGraphCut:
      return CutValue(inst, set);
  }
  return 0.0;
}

std::unique_ptr<IncrementalState> InstanceObjective::NewState() const {
  switch (inst_->kind) {
    case ObjectiveKind::kCoverageDiversity:
      return std::make_unique<CoverageDiversityState>(*inst_);
    case ObjectiveKind::kFacilityDiversity:
      return std::make_unique<FacilityDiversityState>(*inst_);
    case ObjectiveKind::kGraphCut:
      return std::make_unique<CutState>(*inst_);
  }
  return nullptr;
}

}  // namespace submod
