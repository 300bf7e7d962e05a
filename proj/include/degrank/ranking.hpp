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

#ifndef DEGRANK_RANKING_HPP_
#define DEGRANK_RANKING_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "degrank/graph.hpp"
#include "degrank/sampler.hpp"

namespace degrank {

// a * k^(1 - gamma) + b, computed from n_est, k_min, k_max and gamma.
// Unclamped: k_max maps to 1 and k_min to n_est + 1.
double predict_rank(const NetworkParams& p, double k);

// Restricts a predicted rank to [1, n].
double clamp_rank(double rank, double n);

// 1 + number of nodes with strictly greater degree. Throws kUnknownNode.
std::size_t exact_rank(const Graph& g, NodeId u);

// degree -> competition rank, for every degree present.
using RankTable = std::map<Degree, std::size_t>;
RankTable exact_rank_table(const DegreeHistogram& h);
RankTable exact_rank_table(const Graph& g);

struct RankRow {
  Degree degree;
  std::size_t actual_rank;
  double predicted_rank;
  double abs_error;
  std::size_t node_count;  // nodes with this degree
};

// One row per distinct positive degree, ascending by degree.
struct DegreeRankTable {
  std::vector<RankRow> rows;
};

struct ErrorReport {
  std::size_t network_size = 0;
  double average_error = 0.0;
  double std_dev = 0.0;  // population
  double pct_error = 0.0;
};

enum class ErrorWeighting {
  kPerDegree,  // every distinct degree counts once
  kPerNode,    // rows weighted by how many nodes carry the degree
};

struct EvaluateOptions {
  ErrorWeighting weighting = ErrorWeighting::kPerDegree;
  bool clamp = false;
};

struct Evaluation {
  DegreeRankTable table;
  ErrorReport report;
};

Evaluation evaluate(const Graph& g, const NetworkParams& p, const EvaluateOptions& opts = {});
Evaluation evaluate(const DegreeHistogram& h, const NetworkParams& p,
                    const EvaluateOptions& opts = {});

ErrorReport summarize(const DegreeRankTable& table, std::size_t network_size,
                      ErrorWeighting weighting = ErrorWeighting::kPerDegree);

// Mean abs_error over rows strictly above / strictly below the median
// distinct degree.
struct MedianSplit {
  double above = 0.0;
  double below = 0.0;
  std::size_t above_rows = 0;
  std::size_t below_rows = 0;
};
MedianSplit split_error_by_median(const DegreeRankTable& table);

// CSV with header "degree,actual_rank,predicted_rank,abs_error"; reals are
// written in shortest round-trip form.
std::string format_table_csv(const DegreeRankTable& table);
void write_table_csv(const DegreeRankTable& table, const std::filesystem::path& path);
DegreeRankTable parse_table_csv(const std::string& text);

}  // namespace degrank

#endif  // DEGRANK_RANKING_HPP_
