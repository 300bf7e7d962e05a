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

#include "degrank/degrank.h"

#include <exception>
#include <fstream>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "degrank/error.hpp"
#include "degrank/generator.hpp"
#include "degrank/graph.hpp"
#include "degrank/ranking.hpp"
#include "degrank/sampler.hpp"

#ifndef DEGRANK_VERSION_STRING
#define DEGRANK_VERSION_STRING "0.0.0"
#endif

struct degrank_graph {
  degrank::Graph graph;
};

struct degrank_sample {
  degrank::WalkSample sample;
};

struct degrank_table {
  degrank::DegreeRankTable table;
};

namespace {

thread_local std::string g_last_error;
thread_local std::uint64_t g_last_error_line = 0;

degrank_status fail(degrank_status status, std::string message, std::uint64_t line = 0) {
  g_last_error = std::move(message);
  g_last_error_line = line;
  return status;
}

// Runs body, translating library exceptions into status codes.
template <typename Fn>
degrank_status guarded(Fn&& body) {
  try {
    body();
    return DEGRANK_OK;
  } catch (const degrank::Error& e) {
    return fail(static_cast<degrank_status>(e.code()), e.what(), e.line());
  } catch (const std::bad_alloc&) {
    return fail(DEGRANK_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DEGRANK_ERR_INTERNAL, e.what());
  }
}

degrank_status null_argument(const char* what) {
  return fail(DEGRANK_ERR_INVALID_ARGUMENT, std::string(what) + " must not be NULL");
}

degrank::NetworkParams to_cpp(const degrank_params& p) {
  return {p.n_est, p.k_min, p.k_max, p.d_avg, p.gamma, p.c, p.a, p.b};
}

degrank_params to_c(const degrank::NetworkParams& p) {
  return {p.n_est, p.k_min, p.k_max, p.d_avg, p.gamma, p.c, p.a, p.b};
}

degrank::WalkConfig to_cpp(const degrank_walk_config& c) {
  degrank::WalkConfig cfg;
  cfg.burn_in_steps = c.burn_in_steps;
  cfg.sample_count = c.sample_count;
  cfg.thinning_interval = c.thinning_interval;
  cfg.rng_seed = c.rng_seed;
  if (c.has_start_node) cfg.start_node = c.start_node;
  return cfg;
}

degrank_report to_c(const degrank::ErrorReport& r) {
  return {r.network_size, r.average_error, r.std_dev, r.pct_error};
}

}  // namespace

extern "C" {

const char* degrank_version(void) { return DEGRANK_VERSION_STRING; }

const char* degrank_status_name(degrank_status status) {
  if (status == DEGRANK_OK) return "OK";
  if (status == DEGRANK_ERR_INTERNAL) return "InternalError";
  return degrank::error_code_name(static_cast<degrank::ErrorCode>(status));
}

const char* degrank_last_error(void) { return g_last_error.c_str(); }

uint64_t degrank_last_error_line(void) { return g_last_error_line; }

degrank_status degrank_graph_from_edges(const uint32_t* pairs, size_t edge_count,
                                        degrank_graph** out) {
  if (out == nullptr) return null_argument("out");
  if (pairs == nullptr && edge_count > 0) return null_argument("pairs");
  return guarded([&] {
    std::vector<degrank::Edge> edges(edge_count);
    for (size_t i = 0; i < edge_count; ++i) edges[i] = {pairs[2 * i], pairs[2 * i + 1]};
    *out = new degrank_graph{degrank::build_graph(edges)};
  });
}

degrank_status degrank_graph_load(const char* path, degrank_graph** out) {
  if (path == nullptr) return null_argument("path");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = new degrank_graph{degrank::load_edge_list(path)}; });
}

degrank_status degrank_graph_save(const degrank_graph* g, const char* path, const char* header) {
  if (g == nullptr) return null_argument("graph");
  if (path == nullptr) return null_argument("path");
  return guarded([&] {
    std::vector<std::string> comments;
    if (header != nullptr) {
      std::istringstream lines(header);
      for (std::string line; std::getline(lines, line);) comments.push_back(line);
    }
    degrank::save_edge_list(g->graph, path, comments);
  });
}

void degrank_graph_free(degrank_graph* g) { delete g; }

uint64_t degrank_graph_node_count(const degrank_graph* g) {
  return g == nullptr ? 0 : g->graph.node_count();
}

uint64_t degrank_graph_edge_count(const degrank_graph* g) {
  return g == nullptr ? 0 : g->graph.edge_count();
}

degrank_status degrank_graph_degree(const degrank_graph* g, uint32_t node, uint32_t* out) {
  if (g == nullptr) return null_argument("graph");
  if (out == nullptr) return null_argument("out");
  if (node >= g->graph.node_count()) {
    return fail(DEGRANK_ERR_UNKNOWN_NODE, "node " + std::to_string(node) + " is outside the graph");
  }
  *out = g->graph.degree(node);
  return DEGRANK_OK;
}

degrank_status degrank_graph_degree_stats(const degrank_graph* g, degrank_degree_stats* out) {
  if (g == nullptr) return null_argument("graph");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    const degrank::DegreeHistogram h = degrank::degree_histogram(g->graph);
    *out = {h.node_count, g->graph.edge_count(), h.k_min, h.k_max, h.d_avg};
  });
}

degrank_status degrank_graph_histogram(const degrank_graph* g, uint32_t* degrees, uint64_t* counts,
                                       size_t capacity, size_t* len) {
  if (g == nullptr) return null_argument("graph");
  if (len == nullptr) return null_argument("len");
  if (capacity > 0 && (degrees == nullptr || counts == nullptr)) {
    return null_argument("degrees/counts");
  }
  return guarded([&] {
    const degrank::DegreeHistogram h = degrank::degree_histogram(g->graph);
    *len = h.counts.size();
    size_t i = 0;
    for (const auto& [k, count] : h.counts) {
      if (i >= capacity) break;
      degrees[i] = k;
      counts[i] = count;
      ++i;
    }
  });
}

degrank_status degrank_graph_exact_rank(const degrank_graph* g, uint32_t node, uint64_t* out) {
  if (g == nullptr) return null_argument("graph");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = degrank::exact_rank(g->graph, node); });
}

void degrank_ba_config_default(degrank_ba_config* cfg) {
  if (cfg == nullptr) return;
  const degrank::BaConfig d;
  *cfg = {d.n, d.n0, d.m, d.rng_seed};
}

degrank_status degrank_generate_ba(const degrank_ba_config* cfg, degrank_graph** out) {
  if (cfg == nullptr) return null_argument("cfg");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    const degrank::BaConfig c{cfg->nodes, cfg->seed_nodes, cfg->edges_per_node, cfg->rng_seed};
    *out = new degrank_graph{degrank::generate_ba(c)};
  });
}

void degrank_walk_config_default(degrank_walk_config* cfg) {
  if (cfg == nullptr) return;
  const degrank::WalkConfig d;
  *cfg = {d.burn_in_steps, d.sample_count, d.thinning_interval, d.rng_seed, 0, 0};
}

uint64_t degrank_default_sample_count(uint64_t budget_hint) {
  return degrank::default_sample_count(budget_hint);
}

degrank_status degrank_random_walk(const degrank_graph* g, const degrank_walk_config* cfg,
                                   degrank_sample** out) {
  if (g == nullptr) return null_argument("graph");
  if (cfg == nullptr) return null_argument("cfg");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = new degrank_sample{degrank::random_walk(g->graph, to_cpp(*cfg))}; });
}

degrank_status degrank_sample_from_observations(const uint32_t* nodes, const uint32_t* degrees,
                                                size_t len, degrank_sample** out) {
  if (out == nullptr) return null_argument("out");
  if (len > 0 && (nodes == nullptr || degrees == nullptr)) return null_argument("nodes/degrees");
  return guarded([&] {
    std::vector<degrank::Observation> obs(len);
    for (size_t i = 0; i < len; ++i) obs[i] = {nodes[i], degrees[i]};
    *out = new degrank_sample{degrank::make_sample(std::move(obs))};
  });
}

void degrank_sample_free(degrank_sample* s) { delete s; }

degrank_status degrank_sample_stats(const degrank_sample* s, degrank_walk_stats* out) {
  if (s == nullptr) return null_argument("sample");
  if (out == nullptr) return null_argument("out");
  *out = {s->sample.steps, s->sample.observations.size(), s->sample.unique_node_count};
  return DEGRANK_OK;
}

degrank_status degrank_sample_observation(const degrank_sample* s, size_t index, uint32_t* node,
                                          uint32_t* degree) {
  if (s == nullptr) return null_argument("sample");
  if (index >= s->sample.observations.size()) {
    return fail(DEGRANK_ERR_INVALID_ARGUMENT, "observation index out of range");
  }
  const degrank::Observation& o = s->sample.observations[index];
  if (node != nullptr) *node = o.node;
  if (degree != nullptr) *degree = o.degree;
  return DEGRANK_OK;
}

degrank_status degrank_estimate_size(const degrank_sample* s, double* out) {
  if (s == nullptr) return null_argument("sample");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = degrank::estimate_size(s->sample); });
}

degrank_status degrank_estimate_avg_degree(const degrank_sample* s, double* out) {
  if (s == nullptr) return null_argument("sample");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = degrank::estimate_avg_degree(s->sample); });
}

degrank_status degrank_estimate_degree_bounds(const degrank_sample* s, uint32_t* k_min,
                                              uint32_t* k_max) {
  if (s == nullptr) return null_argument("sample");
  if (k_min == nullptr || k_max == nullptr) return null_argument("k_min/k_max");
  return guarded([&] {
    const auto b = degrank::estimate_degree_bounds(s->sample);
    *k_min = b.k_min;
    *k_max = b.k_max;
  });
}

degrank_status degrank_fit_params(double n_est, uint32_t k_min, uint32_t k_max, double d_avg,
                                  degrank_params* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = to_c(degrank::fit_params(n_est, k_min, k_max, d_avg)); });
}

degrank_status degrank_ground_truth_params(const degrank_graph* g, degrank_params* out) {
  if (g == nullptr) return null_argument("graph");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = to_c(degrank::params_from_histogram(degrank::degree_histogram(g->graph)));
  });
}

degrank_status degrank_estimate_all(const degrank_graph* g, const degrank_walk_config* cfg,
                                    degrank_params* out, degrank_walk_stats* stats) {
  if (g == nullptr) return null_argument("graph");
  if (cfg == nullptr) return null_argument("cfg");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    const degrank::EstimateResult r = degrank::estimate_all(g->graph, to_cpp(*cfg));
    *out = to_c(r.params);
    if (stats != nullptr) *stats = {r.steps, r.walk.sample_count, r.unique_node_count};
  });
}

degrank_status degrank_predict_rank(const degrank_params* p, double k, int clamp, double* out) {
  if (p == nullptr) return null_argument("params");
  if (out == nullptr) return null_argument("out");
  if (!(k > 0.0)) return fail(DEGRANK_ERR_INVALID_ARGUMENT, "degree must be positive");
  const degrank::NetworkParams params = to_cpp(*p);
  double r = degrank::predict_rank(params, k);
  if (clamp) r = degrank::clamp_rank(r, params.n_est);
  *out = r;
  return DEGRANK_OK;
}

degrank_status degrank_evaluate(const degrank_graph* g, const degrank_params* p,
                                int per_node_weighting, int clamp, degrank_table** table,
                                degrank_report* report) {
  if (g == nullptr) return null_argument("graph");
  if (p == nullptr) return null_argument("params");
  if (table == nullptr && report == nullptr) return null_argument("table and report");
  return guarded([&] {
    degrank::EvaluateOptions opts;
    opts.weighting = per_node_weighting ? degrank::ErrorWeighting::kPerNode
                                        : degrank::ErrorWeighting::kPerDegree;
    opts.clamp = clamp != 0;
    degrank::Evaluation ev = degrank::evaluate(g->graph, to_cpp(*p), opts);
    if (report != nullptr) *report = to_c(ev.report);
    if (table != nullptr) *table = new degrank_table{std::move(ev.table)};
  });
}

void degrank_table_free(degrank_table* t) { delete t; }

uint64_t degrank_table_row_count(const degrank_table* t) {
  return t == nullptr ? 0 : t->table.rows.size();
}

degrank_status degrank_table_row(const degrank_table* t, size_t index, uint32_t* degree,
                                 uint64_t* actual_rank, double* predicted_rank,
                                 double* abs_error) {
  if (t == nullptr) return null_argument("table");
  if (index >= t->table.rows.size()) {
    return fail(DEGRANK_ERR_INVALID_ARGUMENT, "row index out of range");
  }
  const degrank::RankRow& row = t->table.rows[index];
  if (degree != nullptr) *degree = row.degree;
  if (actual_rank != nullptr) *actual_rank = row.actual_rank;
  if (predicted_rank != nullptr) *predicted_rank = row.predicted_rank;
  if (abs_error != nullptr) *abs_error = row.abs_error;
  return DEGRANK_OK;
}

degrank_status degrank_table_median_split(const degrank_table* t, degrank_median_split* out) {
  if (t == nullptr) return null_argument("table");
  if (out == nullptr) return null_argument("out");
  const degrank::MedianSplit s = degrank::split_error_by_median(t->table);
  *out = {s.above, s.below, s.above_rows, s.below_rows};
  return DEGRANK_OK;
}

degrank_status degrank_table_write_csv(const degrank_table* t, const char* path) {
  if (t == nullptr) return null_argument("table");
  if (path == nullptr) return null_argument("path");
  return guarded([&] { degrank::write_table_csv(t->table, path); });
}

degrank_status degrank_table_summarize_csv(const char* path, uint64_t network_size,
                                           degrank_report* out) {
  if (path == nullptr) return null_argument("path");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw degrank::Error(degrank::ErrorCode::kIo, std::string("cannot open ") + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    *out = to_c(degrank::summarize(degrank::parse_table_csv(buffer.str()), network_size));
  });
}

}  // extern "C"
