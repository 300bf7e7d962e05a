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

// Thin RAII and error plumbing over the C API for the command-line tool.

#ifndef DEGRANK_TOOLS_CLI_SUPPORT_HPP_
#define DEGRANK_TOOLS_CLI_SUPPORT_HPP_

#include <filesystem>
#include <memory>
#include <string>

#include "degrank/degrank.h"
#include "json.hpp"

namespace degrank::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitValidation = 2,
  kExitIo = 3,
  kExitEstimator = 4,
};

int exit_code_for(degrank_status status);

// Thrown by command implementations; main() prints the message and exits.
struct Failure {
  int exit_code;
  std::string message;
};

// Throws Failure when status is not DEGRANK_OK.
void check(degrank_status status, const std::string& context);

struct GraphDeleter {
  void operator()(degrank_graph* g) const { degrank_graph_free(g); }
};
struct SampleDeleter {
  void operator()(degrank_sample* s) const { degrank_sample_free(s); }
};
struct TableDeleter {
  void operator()(degrank_table* t) const { degrank_table_free(t); }
};
using GraphPtr = std::unique_ptr<degrank_graph, GraphDeleter>;
using SamplePtr = std::unique_ptr<degrank_sample, SampleDeleter>;
using TablePtr = std::unique_ptr<degrank_table, TableDeleter>;

GraphPtr load_graph(const std::string& path);

// Writes a JSON document atomically with a trailing newline.
void write_json(const std::filesystem::path& path, const nlohmann::ordered_json& doc);
nlohmann::json read_json(const std::filesystem::path& path);

std::string manifest_path_for(const std::string& output);

nlohmann::ordered_json params_to_json(const degrank_params& p);

// Reads n_est, k_min, k_max and d_avg from a params document, refits, and
// rejects documents whose stored gamma/c/a/b disagree with the refit.
degrank_params params_from_json(const nlohmann::json& doc);

struct WalkOutcome {
  degrank_params params{};
  degrank_walk_stats stats{};  // of the successful walk
  double size_estimate = 0.0;
  std::uint64_t total_steps = 0;  // over every attempt
  std::uint64_t final_sample_count = 0;
  int retries = 0;
};

// Walk + estimators + fit. A NoCollisions failure is retried with a doubled
// sample_count, at most max_retries times.
WalkOutcome estimate_with_retry(const degrank_graph* g, degrank_walk_config cfg, int max_retries);

}  // namespace degrank::cli

#endif  // DEGRANK_TOOLS_CLI_SUPPORT_HPP_
