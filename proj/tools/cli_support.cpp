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

#include "cli_support.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

namespace degrank::cli {

int exit_code_for(degrank_status status) {
  switch (status) {
    case DEGRANK_OK:
      return kExitOk;
    case DEGRANK_ERR_IO:
      return kExitIo;
    case DEGRANK_ERR_STUCK_WALK:
    case DEGRANK_ERR_INSUFFICIENT_GRAPH:
    case DEGRANK_ERR_NO_COLLISIONS:
    case DEGRANK_ERR_DEGENERATE_DEGREES:
    case DEGRANK_ERR_NON_SCALE_FREE:
      return kExitEstimator;
    case DEGRANK_ERR_INTERNAL:
      return kExitInternal;
    default:
      return kExitValidation;
  }
}

void check(degrank_status status, const std::string& context) {
  if (status == DEGRANK_OK) return;
  throw Failure{exit_code_for(status), context + ": " + degrank_status_name(status) + ": " +
                                           degrank_last_error()};
}

GraphPtr load_graph(const std::string& path) {
  degrank_graph* g = nullptr;
  check(degrank_graph_load(path.c_str(), &g), "loading " + path);
  return GraphPtr(g);
}

void write_json(const std::filesystem::path& path, const nlohmann::ordered_json& doc) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Failure{kExitIo, "cannot write " + tmp.string()};
    out << doc.dump(2) << '\n';
    if (!out) throw Failure{kExitIo, "write failed: " + tmp.string()};
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Failure{kExitIo, "cannot rename into " + path.string()};
}

nlohmann::json read_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitIo, "cannot open " + path.string()};
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Failure{kExitValidation, path.string() + ": " + e.what()};
  }
}

std::string manifest_path_for(const std::string& output) { return output + ".manifest.json"; }

nlohmann::ordered_json params_to_json(const degrank_params& p) {
  nlohmann::ordered_json doc;
  doc["n_est"] = p.n_est;
  doc["k_min"] = p.k_min;
  doc["k_max"] = p.k_max;
  doc["d_avg"] = p.d_avg;
  doc["gamma"] = p.gamma;
  doc["c"] = p.c;
  doc["a"] = p.a;
  doc["b"] = p.b;
  return doc;
}

degrank_params params_from_json(const nlohmann::json& doc) {
  degrank_params p{};
  try {
    check(degrank_fit_params(doc.at("n_est").get<double>(), doc.at("k_min").get<std::uint32_t>(),
                             doc.at("k_max").get<std::uint32_t>(), doc.at("d_avg").get<double>(),
                             &p),
          "params");
  } catch (const nlohmann::json::exception& e) {
    throw Failure{kExitValidation, std::string("params document: ") + e.what()};
  }
  const std::pair<const char*, double> derived[] = {
      {"gamma", p.gamma}, {"c", p.c}, {"a", p.a}, {"b", p.b}};
  for (const auto& [key, value] : derived) {
    if (!doc.contains(key)) continue;
    const double stored = doc.at(key).get<double>();
    if (std::abs(stored - value) > 1e-9 * std::max(1.0, std::abs(value))) {
      throw Failure{kExitValidation,
                    std::string("params document: stored ") + key +
                        " disagrees with the value implied by n_est, k_min, k_max, d_avg"};
    }
  }
  return p;
}

WalkOutcome estimate_with_retry(const degrank_graph* g, degrank_walk_config cfg, int max_retries) {
  WalkOutcome out;
  for (int attempt = 0;; ++attempt) {
    degrank_sample* raw = nullptr;
    check(degrank_random_walk(g, &cfg, &raw), "random walk");
    SamplePtr sample(raw);
    degrank_walk_stats stats{};
    check(degrank_sample_stats(sample.get(), &stats), "random walk");
    out.total_steps += stats.steps;

    double n_est = 0.0;
    const degrank_status status = degrank_estimate_size(sample.get(), &n_est);
    if (status == DEGRANK_ERR_NO_COLLISIONS && attempt < max_retries) {
      cfg.sample_count *= 2;
      ++out.retries;
      continue;
    }
    if (status == DEGRANK_ERR_NO_COLLISIONS) {
      throw Failure{kExitEstimator,
                    "no collisions after " + std::to_string(attempt + 1) + " attempts (last " +
                        std::to_string(cfg.sample_count) + " samples, " +
                        std::to_string(out.total_steps) + " steps); rerun with a larger --samples"};
    }
    check(status, "size estimate");

    double d_avg = 0.0;
    check(degrank_estimate_avg_degree(sample.get(), &d_avg), "average degree estimate");
    std::uint32_t k_min = 0;
    std::uint32_t k_max = 0;
    check(degrank_estimate_degree_bounds(sample.get(), &k_min, &k_max), "degree bounds");
    check(degrank_fit_params(n_est, k_min, k_max, d_avg, &out.params), "parameter fit");

    out.stats = stats;
    out.size_estimate = n_est;
    out.final_sample_count = cfg.sample_count;
    return out;
  }
}

}  // namespace degrank::cli
