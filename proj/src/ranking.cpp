// Copyright 2026 The degrank Authors
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

#include "degrank/ranking.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string_view>

#include "degrank/error.hpp"

namespace degrank {

// Evaluated as n * (k^(1-g) - k_max^(1-g)) / (k_min^(1-g) - k_max^(1-g)) + 1,
// which equals a * k^(1-g) + b but does not cancel two large terms near k_max.
double predict_rank(const NetworkParams& p, double k) {
  const double e = 1.0 - p.gamma;
  const double lo = std::pow(static_cast<double>(p.k_min), e);
  const double hi = std::pow(static_cast<double>(p.k_max), e);
  return p.n_est * ((std::pow(k, e) - hi) / (lo - hi)) + 1.0;
}

double clamp_rank(double rank, double n) { return std::clamp(rank, 1.0, std::max(1.0, n)); }

std::size_t exact_rank(const Graph& g, NodeId u) {
  if (u >= g.node_count()) {
    throw Error(ErrorCode::kUnknownNode, "node " + std::to_string(u) + " is outside the graph");
  }
  const Degree du = g.degree(u);
  std::size_t greater = 0;
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    if (g.degree(static_cast<NodeId>(v)) > du) ++greater;
  }
  return greater + 1;
}

RankTable exact_rank_table(const DegreeHistogram& h) {
  RankTable table;
  std::size_t above = 0;
  for (auto it = h.counts.rbegin(); it != h.counts.rend(); ++it) {
    table.emplace_hint(table.begin(), it->first, above + 1);
    above += it->second;
  }
  return table;
}

RankTable exact_rank_table(const Graph& g) { return exact_rank_table(degree_histogram(g)); }

ErrorReport summarize(const DegreeRankTable& table, std::size_t network_size,
                      ErrorWeighting weighting) {
  ErrorReport r;
  r.network_size = network_size;
  double weight_sum = 0.0;
  double sum = 0.0;
  for (const RankRow& row : table.rows) {
    const double w = weighting == ErrorWeighting::kPerNode ? static_cast<double>(row.node_count) : 1.0;
    weight_sum += w;
    sum += w * row.abs_error;
  }
  if (weight_sum == 0.0) return r;
  r.average_error = sum / weight_sum;
  double sq = 0.0;
  for (const RankRow& row : table.rows) {
    const double w = weighting == ErrorWeighting::kPerNode ? static_cast<double>(row.node_count) : 1.0;
    const double d = row.abs_error - r.average_error;
    sq += w * d * d;
  }
  r.std_dev = std::sqrt(sq / weight_sum);
  if (network_size > 0) r.pct_error = r.average_error * 100.0 / static_cast<double>(network_size);
  return r;
}

Evaluation evaluate(const DegreeHistogram& h, const NetworkParams& p, const EvaluateOptions& opts) {
  Evaluation ev;
  const RankTable actual = exact_rank_table(h);
  ev.table.rows.reserve(actual.size());
  for (const auto& [k, rank] : actual) {
    // Isolated nodes have no defined prediction.
    if (k == 0) continue;
    double predicted = predict_rank(p, static_cast<double>(k));
    if (opts.clamp) predicted = clamp_rank(predicted, p.n_est);
    ev.table.rows.push_back(RankRow{k, rank, predicted,
                                    std::abs(static_cast<double>(rank) - predicted),
                                    h.counts.at(k)});
  }
  ev.report = summarize(ev.table, h.node_count, opts.weighting);
  return ev;
}

Evaluation evaluate(const Graph& g, const NetworkParams& p, const EvaluateOptions& opts) {
  return evaluate(degree_histogram(g), p, opts);
}

MedianSplit split_error_by_median(const DegreeRankTable& table) {
  MedianSplit split;
  const std::size_t n = table.rows.size();
  if (n == 0) return split;
  // Rows are sorted by degree, so the median sits in the middle.
  const double median =
      n % 2 == 1 ? static_cast<double>(table.rows[n / 2].degree)
                 : 0.5 * (static_cast<double>(table.rows[n / 2 - 1].degree) +
                          static_cast<double>(table.rows[n / 2].degree));
  double above = 0.0;
  double below = 0.0;
  for (const RankRow& row : table.rows) {
    const auto k = static_cast<double>(row.degree);
    if (k > median) {
      above += row.abs_error;
      ++split.above_rows;
    } else if (k < median) {
      below += row.abs_error;
      ++split.below_rows;
    }
  }
  if (split.above_rows > 0) split.above = above / static_cast<double>(split.above_rows);
  if (split.below_rows > 0) split.below = below / static_cast<double>(split.below_rows);
  return split;
}

namespace {

constexpr std::string_view kCsvHeader = "degree,actual_rank,predicted_rank,abs_error";

void append_real(std::string& out, double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  out.append(buf, res.ptr);
}

template <typename T>
bool parse_field(std::string_view token, T& out) {
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

std::string format_table_csv(const DegreeRankTable& table) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const RankRow& row : table.rows) {
    out += std::to_string(row.degree);
    out += ',';
    out += std::to_string(row.actual_rank);
    out += ',';
    append_real(out, row.predicted_rank);
    out += ',';
    append_real(out, row.abs_error);
    out += '\n';
  }
  return out;
}

void write_table_csv(const DegreeRankTable& table, const std::filesystem::path& path) {
  write_file_atomic(path, format_table_csv(table));
}

DegreeRankTable parse_table_csv(const std::string& text) {
  DegreeRankTable table;
  std::string_view rest(text);
  std::uint64_t line_no = 0;
  while (!rest.empty()) {
    const std::size_t nl = rest.find('\n');
    std::string_view line = rest.substr(0, nl);
    rest = nl == std::string_view::npos ? std::string_view() : rest.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line_no == 1) {
      if (line != kCsvHeader) throw Error(ErrorCode::kParse, "unexpected CSV header", 1);
      continue;
    }
    if (line.empty()) continue;

    std::string_view fields[4];
    std::size_t nfields = 0;
    while (nfields < 4) {
      const std::size_t comma = line.find(',');
      fields[nfields++] = line.substr(0, comma);
      if (comma == std::string_view::npos) {
        line = {};
        break;
      }
      line.remove_prefix(comma + 1);
    }
    RankRow row{};
    if (nfields != 4 || !line.empty() || !parse_field(fields[0], row.degree) ||
        !parse_field(fields[1], row.actual_rank) || !parse_field(fields[2], row.predicted_rank) ||
        !parse_field(fields[3], row.abs_error)) {
      throw Error(ErrorCode::kParse, "malformed CSV row on line " + std::to_string(line_no),
                  line_no);
    }
    table.rows.push_back(row);
  }
  if (line_no == 0) throw Error(ErrorCode::kParse, "empty CSV", 1);
  return table;
}

}  // namespace degrank
