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

#ifndef SUBMOD_REPORT_H_
#define SUBMOD_REPORT_H_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "submod/experiment.h"

namespace submod {

// Decimal with 9 significant digits.
std::string FormatReal(double x);

// Header `algo,k,seed,value,queries,wall_ms,failed` plus one row per record.
std::string RecordsCsv(std::span<const RunRecord> records);
// Header `algo,k,mean_value,std_value,mean_queries,failure_rate`.
std::string SummaryCsv(std::span<const SummaryRow> rows);

// Throw kIo on failure.
void WriteRecordsCsv(std::span<const RunRecord> records,
                     const std::string& path);
void WriteSummaryCsv(std::span<const SummaryRow> rows,
                     const std::string& path);

// Inverse of RecordsCsv. Throws kParse on malformed input.
std::vector<RunRecord> ParseRecordsCsv(std::istream& in);

// Fixed viewport of the value-vs-k chart.
struct SvgLayout {
  static constexpr double kWidth = 720.0;
  static constexpr double kHeight = 440.0;
  static constexpr double kLeft = 70.0;
  static constexpr double kRight = 170.0;
  static constexpr double kTop = 30.0;
  static constexpr double kBottom = 50.0;

  double k_min = 0.0;
  double k_max = 1.0;
  double y_min = 0.0;
  double y_max = 1.0;

  // Fits k to the data and y to [min(0, mean - std), max(mean + std)] with
  // 5% headroom.
  static SvgLayout Fit(std::span<const SummaryRow> rows);

  double X(double k) const;
  double Y(double value) const;
  // Pixels per unit of value.
  double YScale() const;
};

// One polyline of mean value per algorithm over k, a translucent polygon for
// mean +- std, and a legend. Throws kEmptyInput on no rows.
std::string RenderSvgString(std::span<const SummaryRow> rows);
void RenderSvg(std::span<const SummaryRow> rows, const std::string& path);

}  // namespace submod

#endif  // SUBMOD_REPORT_H_
