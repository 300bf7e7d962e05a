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

#include "degrank/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "degrank/error.hpp"
#include "degrank/rng.hpp"

namespace degrank {

std::size_t default_sample_count(std::size_t budget_hint) {
  return std::max<std::size_t>(2, budget_hint / 100);
}

WalkSample make_sample(std::vector<Observation> observations) {
  WalkSample s;
  std::unordered_set<NodeId> seen;
  seen.reserve(observations.size());
  for (const Observation& o : observations) seen.insert(o.node);
  s.unique_node_count = seen.size();
  s.observations = std::move(observations);
  return s;
}

WalkSample random_walk(const Graph& g, const WalkConfig& cfg) {
  if (g.edge_count() == 0) {
    throw Error(ErrorCode::kInsufficientGraph, "random walk needs at least one edge");
  }
  if (cfg.sample_count < 1 || cfg.thinning_interval < 1) {
    throw Error(ErrorCode::kInvalidArgument, "sample_count and thinning_interval must be >= 1");
  }
  Rng rng(cfg.rng_seed);

  NodeId current = 0;
  if (cfg.start_node) {
    current = *cfg.start_node;
    if (current >= g.node_count()) {
      throw Error(ErrorCode::kUnknownNode, "start node " + std::to_string(current) +
                                               " is outside the graph");
    }
    if (g.degree(current) == 0) {
      throw Error(ErrorCode::kStuckWalk,
                  "start node " + std::to_string(current) + " has no neighbors");
    }
  } else {
    current = g.endpoint_owner(rng.below(2 * g.edge_count()));
  }

  std::uint64_t steps = 0;
  auto move = [&] {
    const auto nbrs = g.neighbors(current);
    current = nbrs[rng.below(nbrs.size())];
    ++steps;
  };

  for (std::size_t i = 0; i < cfg.burn_in_steps; ++i) move();

  std::vector<Observation> observations;
  observations.reserve(cfg.sample_count);
  while (observations.size() < cfg.sample_count) {
    for (std::size_t i = 0; i < cfg.thinning_interval; ++i) move();
    observations.push_back({current, g.degree(current)});
  }

  WalkSample s = make_sample(std::move(observations));
  s.steps = steps;
  return s;
}

namespace {

void require_nonempty(const WalkSample& s) {
  if (s.observations.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "walk sample is empty");
  }
  for (const Observation& o : s.observations) {
    if (o.degree == 0) {
      throw Error(ErrorCode::kInvalidArgument, "walk sample holds a degree-0 observation");
    }
  }
}

// sum_i 1/d_i accumulated per distinct degree.
double inverse_degree_sum(const std::map<Degree, std::size_t>& by_degree) {
  double sum = 0.0;
  for (const auto& [d, count] : by_degree) {
    sum += static_cast<double>(count) / static_cast<double>(d);
  }
  return sum;
}

std::map<Degree, std::size_t> degree_counts(const WalkSample& s) {
  std::map<Degree, std::size_t> by_degree;
  for (const Observation& o : s.observations) ++by_degree[o.degree];
  return by_degree;
}

}  // namespace

double estimate_size(const WalkSample& s) {
  if (s.observations.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "size estimate needs at least two observations");
  }
  require_nonempty(s);

  std::unordered_map<NodeId, std::uint64_t> visits;
  visits.reserve(s.observations.size());
  std::uint64_t degree_sum = 0;
  for (const Observation& o : s.observations) {
    ++visits[o.node];
    degree_sum += o.degree;
  }
  std::uint64_t collisions = 0;
  for (const auto& [node, count] : visits) collisions += count * (count - 1) / 2;
  if (collisions == 0) {
    throw Error(ErrorCode::kNoCollisions,
                "no repeated nodes among " + std::to_string(s.observations.size()) +
                    " observations; enlarge the sample");
  }

  const auto r = static_cast<double>(s.observations.size());
  const double psi_plus = static_cast<double>(degree_sum);
  const double psi_minus = inverse_degree_sum(degree_counts(s));
  return ((r - 1.0) / r) * psi_plus * psi_minus / (2.0 * static_cast<double>(collisions));
}

double estimate_avg_degree(const WalkSample& s) {
  require_nonempty(s);
  const auto by_degree = degree_counts(s);
  // A constant sample has that constant as its harmonic mean.
  if (by_degree.size() == 1) return static_cast<double>(by_degree.begin()->first);
  return static_cast<double>(s.observations.size()) / inverse_degree_sum(by_degree);
}

DegreeBounds estimate_degree_bounds(const WalkSample& s) {
  require_nonempty(s);
  const auto [lo, hi] = std::minmax_element(
      s.observations.begin(), s.observations.end(),
      [](const Observation& x, const Observation& y) { return x.degree < y.degree; });
  return {lo->degree, hi->degree};
}

NetworkParams fit_params(double n_est, Degree k_min, Degree k_max, double d_avg) {
  if (!(n_est > 0.0) || !std::isfinite(n_est)) {
    throw Error(ErrorCode::kInvalidArgument, "network size estimate must be positive");
  }
  if (k_min == 0) throw Error(ErrorCode::kInvalidArgument, "k_min must be positive");
  const double kmin = k_min;
  const double kmax = k_max;
  // Checked first so a regular graph (d_avg == k_min == k_max) reports the
  // missing exponent rather than the collapsed degree range.
  if (!(d_avg > kmin) || !std::isfinite(d_avg)) {
    throw Error(ErrorCode::kNonScaleFree,
                "average degree must exceed k_min for a power-law exponent to exist");
  }
  if (k_min >= k_max) {
    throw Error(ErrorCode::kDegenerateDegrees,
                "k_min (" + std::to_string(k_min) + ") must be below k_max (" +
                    std::to_string(k_max) + ")");
  }

  NetworkParams p;
  p.n_est = n_est;
  p.k_min = k_min;
  p.k_max = k_max;
  p.d_avg = d_avg;
  p.gamma = 2.0 + kmin / (d_avg - kmin);
  const double lo = std::pow(kmin, 1.0 - p.gamma);
  const double hi = std::pow(kmax, 1.0 - p.gamma);
  const double span = lo - hi;
  if (!(span > 0.0) || !std::isfinite(p.gamma)) {
    throw Error(ErrorCode::kNonScaleFree, "power-law normalization is degenerate");
  }
  p.c = (p.gamma - 1.0) / span;
  p.a = n_est / span;
  p.b = -(n_est * hi / span - 1.0);
  return p;
}

NetworkParams params_from_histogram(const DegreeHistogram& h) {
  return fit_params(static_cast<double>(h.node_count), h.k_min, h.k_max, h.d_avg);
}

EstimateResult estimate_all(const Graph& g, const WalkConfig& cfg) {
  if (cfg.sample_count < 2) {
    throw Error(ErrorCode::kInvalidArgument, "sample_count must be at least 2");
  }
  const WalkSample s = random_walk(g, cfg);
  const DegreeBounds bounds = estimate_degree_bounds(s);
  EstimateResult r;
  r.params = fit_params(estimate_size(s), bounds.k_min, bounds.k_max, estimate_avg_degree(s));
  r.walk = cfg;
  r.steps = s.steps;
  r.unique_node_count = s.unique_node_count;
  return r;
}

}  // namespace degrank
