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

#include "submod/loaders.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>

#include "submod/error.h"

namespace submod {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool ParseDouble(std::string_view token, double* out) {
  if (token.empty()) return false;
  if (token.front() == '+') token.remove_prefix(1);
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), *out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

bool ParseId(std::string_view token, int* out) {
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), *out);
  return ec == std::errc() && ptr == token.data() + token.size() && *out >= 0;
}

Error LineError(ErrorKind kind, int line, const std::string& what) {
  return Error(kind, "line " + std::to_string(line) + ": " + what);
}

std::ifstream OpenOrThrow(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open '" + path + "'");
  return in;
}

std::string FormatExact(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

SimilarityMatrix ParseSimilarityCsv(std::istream& in,
                                    std::vector<std::string>* warnings) {
  std::vector<double> data;
  size_t width = 0;
  int rows = 0;
  int clamped = 0;
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    std::string_view rest = Trim(line);
    if (rest.empty()) continue;
    size_t cells = 0;
    while (true) {
      const auto comma = rest.find(',');
      const std::string_view cell = Trim(rest.substr(0, comma));
      double value = 0.0;
      if (!ParseDouble(cell, &value)) {
        throw LineError(ErrorKind::kParse, line_no,
                        "non-numeric cell '" + std::string(cell) + "'");
      }
      if (value < 0.0) {
        value = 0.0;
        ++clamped;
      }
      data.push_back(value);
      ++cells;
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (rows == 0) {
      width = cells;
    } else if (cells != width) {
      throw LineError(ErrorKind::kParse, line_no,
                      "expected " + std::to_string(width) + " cells, got " +
                          std::to_string(cells));
    }
    ++rows;
  }
  if (rows == 0) throw Error(ErrorKind::kShape, "empty similarity matrix");
  if (static_cast<size_t>(rows) != width) {
    throw Error(ErrorKind::kShape, "matrix is " + std::to_string(rows) + "x" +
                                       std::to_string(width) +
                                       ", expected square");
  }
  if (clamped > 0 && warnings != nullptr) {
    warnings->push_back("clamped " + std::to_string(clamped) +
                        " negative similarities to 0");
  }
  return SimilarityMatrix(rows, std::move(data));
}

WeightedGraph ParseEdgeList(std::istream& in,
                            std::vector<std::string>* warnings) {
  std::vector<Edge> edges;
  int max_id = -1;
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    const std::string_view trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#' || trimmed.front() == '%') {
      continue;
    }
    std::istringstream tokens{std::string(trimmed)};
    std::string a, b, c, extra;
    if (!(tokens >> a >> b >> c) || (tokens >> extra)) {
      throw LineError(ErrorKind::kParse, line_no, "expected 'u v w'");
    }
    int u = 0, v = 0;
    if (!ParseId(a, &u) || !ParseId(b, &v)) {
      throw LineError(ErrorKind::kParse, line_no, "non-integer node id");
    }
    double w = 0.0;
    if (!ParseDouble(c, &w)) {
      throw LineError(ErrorKind::kParse, line_no, "non-numeric weight");
    }
    if (w < 0.0) {
      throw LineError(ErrorKind::kValue, line_no, "negative weight");
    }
    max_id = std::max({max_id, u, v});
    if (u == v) {
      if (warnings != nullptr) {
        warnings->push_back("line " + std::to_string(line_no) +
                            ": dropped self-loop on node " +
                            std::to_string(u));
      }
      continue;
    }
    edges.push_back({u, v, w});
  }
  return WeightedGraph(max_id + 1, edges);
}

Instance LoadSimilarityCsv(const std::string& path, ObjectiveKind kind,
                           double lambda, std::vector<std::string>* warnings) {
  std::ifstream in = OpenOrThrow(path);
  SimilarityMatrix s = ParseSimilarityCsv(in, warnings);
  switch (kind) {
    case ObjectiveKind::kCoverageDiversity:
      return MakeCoverageDiversity(std::move(s), lambda);
    case ObjectiveKind::kFacilityDiversity:
      return MakeFacilityDiversity(std::move(s));
    case ObjectiveKind::kGraphCut:
      break;
  }
  throw Error(ErrorKind::kWrongObjective,
              "similarity data cannot back a cut objective");
}

Instance LoadEdgeList(const std::string& path,
                      std::vector<std::string>* warnings) {
  std::ifstream in = OpenOrThrow(path);
  return MakeGraphCut(ParseEdgeList(in, warnings));
}

void WriteInstance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kIo, "cannot write '" + path + "'");
  if (inst.kind == ObjectiveKind::kGraphCut) {
    for (const Edge& e : inst.graph().Edges()) {
      out << e.u << ' ' << e.v << ' ' << FormatExact(e.weight) << '\n';
    }
  } else {
    const SimilarityMatrix& s = inst.similarity();
    for (int u = 0; u < s.n(); ++u) {
      for (int v = 0; v < s.n(); ++v) {
        if (v > 0) out << ',';
        out << FormatExact(s.at(u, v));
      }
      out << '\n';
    }
  }
  if (!out) throw Error(ErrorKind::kIo, "write to '" + path + "' failed");
}

}  // namespace submod
