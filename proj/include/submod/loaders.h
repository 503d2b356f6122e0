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

#ifndef SUBMOD_LOADERS_H_
#define SUBMOD_LOADERS_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "submod/objectives.h"

namespace submod {

// n x n comma-separated decimal matrix, no header, row i holding the
// similarities of element i. Blank lines are skipped. Negative entries are
// clamped to 0 and reported in `warnings`. Errors: kParse (with line number)
// on a ragged row or non-numeric cell, kShape when not square or empty.
SimilarityMatrix ParseSimilarityCsv(std::istream& in,
                                    std::vector<std::string>* warnings);

// Whitespace-separated "u v w" lines with 0-based ids and a non-negative
// weight. Blank lines and lines starting with '#' or '%' are skipped.
// Repeated pairs (in either direction) are summed; self-loops are dropped
// with a warning. The node count is the largest id seen plus one.
// Errors: kParse on a malformed line or non-integer id, kValue on a
// negative weight.
WeightedGraph ParseEdgeList(std::istream& in,
                            std::vector<std::string>* warnings);

// File wrappers; kIo if the file cannot be opened.
Instance LoadSimilarityCsv(const std::string& path, ObjectiveKind kind,
                           double lambda, std::vector<std::string>* warnings);
Instance LoadEdgeList(const std::string& path,
                      std::vector<std::string>* warnings);

// Writes an instance in the format its loader reads back exactly.
void WriteInstance(const Instance& inst, const std::string& path);

}  // namespace submod

#endif  // SUBMOD_LOADERS_H_
