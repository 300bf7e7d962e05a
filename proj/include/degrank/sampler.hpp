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

#ifndef DEGRANK_SAMPLER_HPP_
#define DEGRANK_SAMPLER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "degrank/graph.hpp"

namespace degrank {

struct WalkConfig {
  std::size_t burn_in_steps = 1000;
  std::size_t sample_count = 1000;
  std::size_t thinning_interval = 10;
  std::uint64_t rng_seed = 0;
  // When unset the walk starts from a degree-proportional draw.
  std::optional<NodeId> start_node;
};

// 1% of a caller-supplied size hint, never below 2.
std::size_t default_sample_count(std::size_t budget_hint);

struct Observation {
  NodeId node;
  Degree degree;
};

struct WalkSample {
  std::vector<Observation> observations;
  std::size_t unique_node_count = 0;
  std::uint64_t steps = 0;  // walk moves, burn-in included
};

WalkSample make_sample(std::vector<Observation> observations);

// Simple random walk: each move goes to a uniformly chosen neighbor. After
// burn_in_steps moves, every thinning_interval-th visited node is retained
// until sample_count observations exist.
WalkSample random_walk(const Graph& g, const WalkConfig& cfg);

// Degree-corrected collision estimate of the node count,
//   ((R - 1) / R) * sum(d_i) * sum(1 / d_i) / (2 C),
// C counting index pairs i < j that visit the same node.
// Throws Error(kNoCollisions) when C == 0.
double estimate_size(const WalkSample& s);

// Harmonic mean of observed degrees.
double estimate_avg_degree(const WalkSample& s);

struct DegreeBounds {
  Degree k_min;
  Degree k_max;
};

DegreeBounds estimate_degree_bounds(const WalkSample& s);

/// Power-law model for a network.
///
/// gamma = 2 + k_min / (d_avg - k_min) and c normalizes c * k^-gamma over
/// [k_min, k_max]. The predicted rank of degree k is a * k^(1 - gamma) + b
/// with a = n / (k_min^(1-gamma) - k_max^(1-gamma)) and
/// b = 1 - n * k_max^(1-gamma) / (k_min^(1-gamma) - k_max^(1-gamma)).
struct NetworkParams {
  double n_est = 0.0;
  Degree k_min = 0;
  Degree k_max = 0;
  double d_avg = 0.0;
  double gamma = 0.0;
  double c = 0.0;
  double a = 0.0;
  double b = 0.0;
};

// Throws kInvalidArgument (n_est <= 0 or k_min == 0), kDegenerateDegrees
// (k_min >= k_max) or kNonScaleFree (d_avg <= k_min).
NetworkParams fit_params(double n_est, Degree k_min, Degree k_max, double d_avg);

// Fit from exact graph statistics instead of a walk.
NetworkParams params_from_histogram(const DegreeHistogram& h);

struct EstimateResult {
  NetworkParams params;
  WalkConfig walk;
  std::uint64_t steps = 0;
  std::size_t unique_node_count = 0;
};

EstimateResult estimate_all(const Graph& g, const WalkConfig& cfg);

}  // namespace degrank

#endif  // DEGRANK_SAMPLER_HPP_
