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

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <map>
#include <vector>

#include "degrank/error.hpp"
#include "degrank/generator.hpp"
#include "degrank/rng.hpp"
#include "degrank/sampler.hpp"
#include "doctest.h"
#include "test_graphs.hpp"

namespace degrank {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected degrank::Error");
  return ErrorCode::kInvalidArgument;
}

WalkSample sample_of(std::vector<Observation> obs) { return make_sample(std::move(obs)); }

// Number of index pairs i < j landing on the same node, by enumeration.
std::size_t count_collisions(const WalkSample& s) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < s.observations.size(); ++i) {
    for (std::size_t j = i + 1; j < s.observations.size(); ++j) {
      c += s.observations[i].node == s.observations[j].node ? 1 : 0;
    }
  }
  return c;
}

// Integral of c * k^-gamma over [k_min, k_max], in log space.
double normalization_integral(const NetworkParams& p) {
  auto f = [&](double t) { return p.c * std::exp((1.0 - p.gamma) * t); };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, std::log(static_cast<double>(p.k_min)), std::log(static_cast<double>(p.k_max)), 15,
      1e-14);
}

TEST_CASE("walk on a regular graph only sees its degree") {
  const Graph g = testing::complete_graph(4);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    WalkConfig cfg;
    cfg.sample_count = 50;
    cfg.burn_in_steps = seed * 3;
    cfg.thinning_interval = 1 + seed;
    cfg.rng_seed = seed;
    const WalkSample s = random_walk(g, cfg);
    CHECK(s.observations.size() == 50);
    CHECK(s.steps == cfg.burn_in_steps + 50 * cfg.thinning_interval);
    for (const Observation& o : s.observations) CHECK(o.degree == 3);
  }
}

TEST_CASE("walk on a path alternates between the middle and the ends") {
  const Graph g = testing::path_graph(3);
  WalkConfig cfg;
  cfg.sample_count = 40;
  cfg.burn_in_steps = 0;
  cfg.thinning_interval = 1;
  cfg.start_node = 1;
  const WalkSample s = random_walk(g, cfg);
  bool saw_zero = false;
  bool saw_two = false;
  for (std::size_t i = 0; i < s.observations.size(); ++i) {
    const Observation& o = s.observations[i];
    CHECK(o.degree == g.degree(o.node));
    if (i % 2 == 0) {
      CHECK(o.node != 1);
      saw_zero = saw_zero || o.node == 0;
      saw_two = saw_two || o.node == 2;
    } else {
      CHECK(o.node == 1);
    }
  }
  CHECK(saw_zero);
  CHECK(saw_two);
  CHECK(s.unique_node_count == 3);
}

TEST_CASE("walk errors") {
  const Edge edges[] = {{0, 2}};
  const Graph gap = build_graph(edges);
  WalkConfig cfg;
  cfg.start_node = 1;
  CHECK(code_of([&] { random_walk(gap, cfg); }) == ErrorCode::kStuckWalk);
  cfg.start_node = 7;
  CHECK(code_of([&] { random_walk(gap, cfg); }) == ErrorCode::kUnknownNode);
  CHECK(code_of([&] { random_walk(Graph{}, WalkConfig{}); }) == ErrorCode::kInsufficientGraph);
}

TEST_CASE("walk is deterministic and records true degrees") {
  const Graph g = generate_ba({3000, 10, 10, 5});
  WalkConfig cfg;
  cfg.sample_count = 300;
  cfg.rng_seed = 77;
  const WalkSample a = random_walk(g, cfg);
  const WalkSample b = random_walk(g, cfg);
  REQUIRE(a.observations.size() == b.observations.size());
  for (std::size_t i = 0; i < a.observations.size(); ++i) {
    CHECK(a.observations[i].node == b.observations[i].node);
    CHECK(a.observations[i].degree == g.degree(a.observations[i].node));
  }
  const EstimateResult ea = estimate_all(g, cfg);
  const EstimateResult eb = estimate_all(g, cfg);
  CHECK(ea.params.n_est == eb.params.n_est);
  CHECK(ea.params.gamma == eb.params.gamma);
  CHECK(ea.walk.rng_seed == 77);
}

TEST_CASE("estimate_size examples") {
  SUBCASE("hand-evaluated sample on a 2-regular graph") {
    // ids [a, b, a, c, d]: C = 1, sum d = 10, sum 1/d = 2.5 -> (4/5) * 25 / 2.
    const WalkSample s = sample_of({{0, 2}, {1, 2}, {0, 2}, {2, 2}, {3, 2}});
    CHECK(estimate_size(s) == doctest::Approx(10.0).epsilon(1e-14));
  }
  SUBCASE("single repeated node collapses to one") {
    const WalkSample s = sample_of({{4, 7}, {4, 7}, {4, 7}, {4, 7}, {4, 7}, {4, 7}});
    CHECK(estimate_size(s) == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("no collisions") {
    const WalkSample s = sample_of({{0, 2}, {1, 2}, {2, 3}});
    CHECK(code_of([&] { estimate_size(s); }) == ErrorCode::kNoCollisions);
  }
  SUBCASE("too short") {
    CHECK(code_of([] { estimate_size(sample_of({{0, 2}})); }) == ErrorCode::kInvalidArgument);
  }
}

TEST_CASE("estimate_size reduces to the birthday estimator on regular graphs") {
  const Graph g = testing::cubic_graph(40);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    WalkConfig cfg;
    cfg.sample_count = 60;
    cfg.rng_seed = seed;
    const WalkSample s = random_walk(g, cfg);
    const double r = static_cast<double>(s.observations.size());
    const double c = static_cast<double>(count_collisions(s));
    CHECK(estimate_size(s) == doctest::Approx(r * (r - 1.0) / (2.0 * c)).epsilon(1e-12));
  }
}

TEST_CASE("estimate_avg_degree examples") {
  CHECK(estimate_avg_degree(sample_of({{0, 2}, {1, 2}, {2, 2}})) == 2.0);
  CHECK(estimate_avg_degree(sample_of({{0, 1}, {1, 3}})) == doctest::Approx(1.5).epsilon(1e-15));
  const Graph g = testing::complete_graph(9);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    WalkConfig cfg;
    cfg.sample_count = 37;
    cfg.rng_seed = seed;
    CHECK(estimate_avg_degree(random_walk(g, cfg)) == 8.0);
  }
}

TEST_CASE("estimate_degree_bounds") {
  const auto b = estimate_degree_bounds(sample_of({{0, 10}, {1, 37}, {2, 12}}));
  CHECK(b.k_min == 10);
  CHECK(b.k_max == 37);
  const auto r = estimate_degree_bounds(sample_of({{0, 3}, {1, 3}}));
  CHECK(r.k_min == 3);
  CHECK(r.k_max == 3);

  const Graph g = generate_ba({20000, 10, 10, 2});
  const DegreeHistogram h = degree_histogram(g);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    WalkConfig cfg;
    cfg.sample_count = 200;
    cfg.rng_seed = seed;
    const auto est = estimate_degree_bounds(random_walk(g, cfg));
    CHECK(est.k_min >= 10);
    CHECK(est.k_min >= h.k_min);
    CHECK(est.k_max <= h.k_max);
    CHECK(est.k_min <= est.k_max);
  }
}

TEST_CASE("fit_params examples") {
  SUBCASE("gamma from k_min and d_avg") {
    CHECK(fit_params(1000, 10, 100, 20).gamma == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(fit_params(1000, 10, 100, 30).gamma == doctest::Approx(2.5).epsilon(1e-15));
  }
  SUBCASE("closed-form constants") {
    const NetworkParams p = fit_params(1000, 10, 100, 20);
    // Exact values: a = 1000 / (1/100 - 1/10000) = 10^7 / 99, c = 2 / 0.0099.
    CHECK(p.a == doctest::Approx(101010.10101010101).epsilon(1e-12));
    CHECK(p.c == doctest::Approx(202.02020202020202).epsilon(1e-12));
    // b = 1 - 1000 * 10^-4 / 0.0099 = 1 - 100/9.9
    CHECK(p.b == doctest::Approx(-9.1010101010101).epsilon(1e-12));
  }
  SUBCASE("errors") {
    CHECK(code_of([] { fit_params(1000, 10, 10, 20); }) == ErrorCode::kDegenerateDegrees);
    CHECK(code_of([] { fit_params(1000, 12, 10, 20); }) == ErrorCode::kDegenerateDegrees);
    CHECK(code_of([] { fit_params(1000, 10, 100, 10); }) == ErrorCode::kNonScaleFree);
    CHECK(code_of([] { fit_params(1000, 10, 100, 9); }) == ErrorCode::kNonScaleFree);
    CHECK(code_of([] { fit_params(0, 10, 100, 20); }) == ErrorCode::kInvalidArgument);
    CHECK(code_of([] { fit_params(1000, 0, 100, 20); }) == ErrorCode::kInvalidArgument);
  }
}

TEST_CASE("fitted power law integrates to one") {
  Rng rng(2024);
  for (int i = 0; i < 100; ++i) {
    const auto k_min = static_cast<Degree>(1 + rng.below(50));
    const auto k_max = static_cast<Degree>(k_min + 1 + rng.below(5000));
    const double d_avg = k_min + 0.05 + rng.unit() * 4.0 * k_min;
    const NetworkParams p = fit_params(1e5, k_min, k_max, d_avg);
    CHECK(p.c > 0);
    CHECK(p.a > 0);
    CHECK(p.gamma == doctest::Approx(2.0 + k_min / (d_avg - k_min)).epsilon(1e-14));
    CHECK(std::abs(normalization_integral(p) - 1.0) < 1e-9);
  }
}

TEST_CASE("estimate_all") {
  SUBCASE("ground-truth composition") {
    const Graph g = generate_ba({10000, 10, 10, 4});
    const DegreeHistogram h = degree_histogram(g);
    const NetworkParams p = params_from_histogram(h);
    CHECK(p.n_est == 10000.0);
    CHECK(p.k_min == h.k_min);
    CHECK(p.k_max == h.k_max);
    CHECK(p.gamma == doctest::Approx(2.0 + h.k_min / (h.d_avg - h.k_min)).epsilon(1e-15));
  }
  SUBCASE("regular graph is not scale-free") {
    WalkConfig cfg;
    cfg.sample_count = 50;
    CHECK(code_of([&] { estimate_all(testing::complete_graph(6), cfg); }) ==
          ErrorCode::kNonScaleFree);
    CHECK(code_of([&] { params_from_histogram(degree_histogram(testing::cubic_graph(10))); }) ==
          ErrorCode::kNonScaleFree);
  }
  SUBCASE("average at the minimum degree has no exponent") {
    CHECK(code_of([] { fit_params(10, 1, 2, 1.0); }) == ErrorCode::kNonScaleFree);
  }
  SUBCASE("walk estimates on a BA graph") {
    const Graph g = generate_ba({20000, 10, 10, 8});
    WalkConfig cfg;
    cfg.sample_count = default_sample_count(20000) * 4;
    cfg.rng_seed = 3;
    const EstimateResult r = estimate_all(g, cfg);
    CHECK(r.params.k_min == 10);
    CHECK(r.params.gamma > 2.0);
    CHECK(r.params.n_est > 5000);
    CHECK(r.params.n_est < 80000);
    CHECK(r.steps == cfg.burn_in_steps + cfg.sample_count * cfg.thinning_interval);
  }
}

TEST_CASE("default sample count is one percent of the budget") {
  CHECK(default_sample_count(100000) == 1000);
  CHECK(default_sample_count(12345) == 123);
  CHECK(default_sample_count(10) == 2);
}

}  // namespace
}  // namespace degrank
