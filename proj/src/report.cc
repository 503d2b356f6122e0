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

#include "submod/report.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "submod/error.h"

namespace submod {
namespace {

constexpr const char* kRecordsHeader = "algo,k,seed,value,queries,wall_ms,failed";
constexpr const char* kSummaryHeader =
    "algo,k,mean_value,std_value,mean_queries,failure_rate";

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#ff7f0e", "#9467bd", "#8c564b",
                                    "#e377c2", "#17becf"};

void WriteText(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorKind::kIo, "write to '" + path + "' failed");
}

std::string XmlEscape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string Px(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", x);
  return buf;
}

template <typename T>
T ParseField(const std::string& field, int line) {
  T value{};
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw Error(ErrorKind::kParse, "line " + std::to_string(line) +
                                       ": bad field '" + field + "'");
  }
  return value;
}

}  // namespace

std::string FormatReal(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

std::string RecordsCsv(std::span<const RunRecord> records) {
  std::ostringstream out;
  out << kRecordsHeader << '\n';
  for (const RunRecord& r : records) {
    out << r.algo << ',' << r.k << ',' << r.seed << ',' << FormatReal(r.value)
        << ',' << r.queries << ',' << FormatReal(r.wall_ms) << ','
        << (r.failed ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string SummaryCsv(std::span<const SummaryRow> rows) {
  std::ostringstream out;
  out << kSummaryHeader << '\n';
  for (const SummaryRow& r : rows) {
    out << r.algo << ',' << r.k << ',' << FormatReal(r.mean_value) << ','
        << FormatReal(r.std_value) << ',' << FormatReal(r.mean_queries) << ','
        << FormatReal(r.failure_rate) << '\n';
  }
  return out.str();
}

void WriteRecordsCsv(std::span<const RunRecord> records,
                     const std::string& path) {
  WriteText(RecordsCsv(records), path);
}

void WriteSummaryCsv(std::span<const SummaryRow> rows,
                     const std::string& path) {
  WriteText(SummaryCsv(rows), path);
}

std::vector<RunRecord> ParseRecordsCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kRecordsHeader) {
    throw Error(ErrorKind::kParse, "line 1: missing records header");
  }
  std::vector<RunRecord> records;
  for (int line_no = 2; std::getline(in, line); ++line_no) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string field; std::getline(ss, field, ',');) {
      fields.push_back(field);
    }
    if (fields.size() != 7) {
      throw Error(ErrorKind::kParse,
                  "line " + std::to_string(line_no) + ": expected 7 fields");
    }
    RunRecord r;
    r.algo = fields[0];
    r.k = ParseField<int>(fields[1], line_no);
    r.seed = ParseField<uint64_t>(fields[2], line_no);
    r.value = ParseField<double>(fields[3], line_no);
    r.queries = ParseField<uint64_t>(fields[4], line_no);
    r.wall_ms = ParseField<double>(fields[5], line_no);
    r.failed = ParseField<int>(fields[6], line_no) != 0;
    records.push_back(std::move(r));
  }
  return records;
}

SvgLayout SvgLayout::Fit(std::span<const SummaryRow> rows) {
  SvgLayout layout;
  if (rows.empty()) return layout;
  layout.k_min = layout.k_max = rows.front().k;
  layout.y_min = 0.0;
  layout.y_max = rows.front().mean_value + rows.front().std_value;
  for (const SummaryRow& r : rows) {
    layout.k_min = std::min<double>(layout.k_min, r.k);
    layout.k_max = std::max<double>(layout.k_max, r.k);
    layout.y_min = std::min(layout.y_min, r.mean_value - r.std_value);
    layout.y_max = std::max(layout.y_max, r.mean_value + r.std_value);
  }
  if (layout.y_max <= layout.y_min) layout.y_max = layout.y_min + 1.0;
  layout.y_max += 0.05 * (layout.y_max - layout.y_min);
  return layout;
}

double SvgLayout::X(double k) const {
  const double plot_w = kWidth - kLeft - kRight;
  if (k_max <= k_min) return kLeft + plot_w / 2.0;
  return kLeft + (k - k_min) / (k_max - k_min) * plot_w;
}

double SvgLayout::YScale() const {
  return (kHeight - kTop - kBottom) / (y_max - y_min);
}

double SvgLayout::Y(double value) const {
  return kHeight - kBottom - (value - y_min) * YScale();
}

std::string RenderSvgString(std::span<const SummaryRow> rows) {
  if (rows.empty()) throw Error(ErrorKind::kEmptyInput, "no summary rows");
  const SvgLayout layout = SvgLayout::Fit(rows);

  // Algorithms in first-appearance order, each with its rows sorted by k.
  std::vector<std::string> order;
  std::map<std::string, std::vector<SummaryRow>> series;
  for (const SummaryRow& r : rows) {
    if (!series.count(r.algo)) order.push_back(r.algo);
    series[r.algo].push_back(r);
  }

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << SvgLayout::kWidth << "\" height=\"" << SvgLayout::kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const double x0 = SvgLayout::kLeft;
  const double x1 = SvgLayout::kWidth - SvgLayout::kRight;
  const double y0 = SvgLayout::kHeight - SvgLayout::kBottom;
  const double y1 = SvgLayout::kTop;
  svg << "<line x1=\"" << Px(x0) << "\" y1=\"" << Px(y0) << "\" x2=\""
      << Px(x1) << "\" y2=\"" << Px(y0) << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << Px(x0) << "\" y1=\"" << Px(y0) << "\" x2=\""
      << Px(x0) << "\" y2=\"" << Px(y1) << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << Px((x0 + x1) / 2) << "\" y=\""
      << Px(SvgLayout::kHeight - 12) << "\" text-anchor=\"middle\">k</text>\n"
      << "<text x=\"16\" y=\"" << Px((y0 + y1) / 2)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << Px((y0 + y1) / 2) << ")\">value</text>\n";
  for (int tick = 0; tick <= 4; ++tick) {
    const double v = layout.y_min + (layout.y_max - layout.y_min) * tick / 4;
    svg << "<text x=\"" << Px(x0 - 6) << "\" y=\"" << Px(layout.Y(v) + 4)
        << "\" text-anchor=\"end\" font-size=\"11\">" << FormatReal(v)
        << "</text>\n";
  }

  std::vector<int> ks;
  for (const SummaryRow& r : rows) ks.push_back(r.k);
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  for (int k : ks) {
    svg << "<text x=\"" << Px(layout.X(k)) << "\" y=\"" << Px(y0 + 16)
        << "\" text-anchor=\"middle\" font-size=\"11\">" << k
        << "</text>\n";
  }

  for (size_t a = 0; a < order.size(); ++a) {
    auto& points = series[order[a]];
    std::sort(points.begin(), points.end(),
              [](const SummaryRow& l, const SummaryRow& r) { return l.k < r.k; });
    const std::string color = kPalette[a % std::size(kPalette)];
    const std::string name = XmlEscape(order[a]);

    svg << "<polygon class=\"band\" data-algo=\"" << name << "\" fill=\""
        << color << "\" fill-opacity=\"0.2\" stroke=\"none\" points=\"";
    for (const SummaryRow& r : points) {
      svg << Px(layout.X(r.k)) << ',' << Px(layout.Y(r.mean_value + r.std_value))
          << ' ';
    }
    for (auto it = points.rbegin(); it != points.rend(); ++it) {
      svg << Px(layout.X(it->k)) << ','
          << Px(layout.Y(it->mean_value - it->std_value)) << ' ';
    }
    svg << "\"/>\n";

    svg << "<polyline class=\"mean\" data-algo=\"" << name
        << "\" fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"2\" points=\"";
    for (const SummaryRow& r : points) {
      svg << Px(layout.X(r.k)) << ',' << Px(layout.Y(r.mean_value)) << ' ';
    }
    svg << "\"/>\n";
    for (const SummaryRow& r : points) {
      svg << "<circle cx=\"" << Px(layout.X(r.k)) << "\" cy=\""
          << Px(layout.Y(r.mean_value)) << "\" r=\"3\" fill=\"" << color
          << "\"/>\n";
    }

    const double ly = SvgLayout::kTop + 20.0 * a;
    svg << "<rect x=\"" << Px(x1 + 14) << "\" y=\"" << Px(ly) << "\" width=\"12\""
        << " height=\"12\" fill=\"" << color << "\"/>\n"
        << "<text x=\"" << Px(x1 + 32) << "\" y=\"" << Px(ly + 10)
        << "\" font-size=\"12\">" << name << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void RenderSvg(std::span<const SummaryRow> rows, const std::string& path) {
  WriteText(RenderSvgString(rows), path);
}

}  // namespace submod
