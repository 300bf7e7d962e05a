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

// degrank: generate Barabasi-Albert networks, estimate their power-law
// parameters by random walk, and compare predicted against exact degree
// ranks.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "cli_support.hpp"
#include "degrank/degrank.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace degrank::cli {
namespace {

std::string real(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

ordered_json make_manifest(const std::string& command, const std::vector<std::string>& args,
                           ordered_json inputs, ordered_json seeds,
                           const std::vector<std::string>& outputs) {
  ordered_json m;
  m["command"] = command;
  m["tool_version"] = degrank_version();
  m["arguments"] = args;
  m["inputs"] = std::move(inputs);
  m["seeds"] = std::move(seeds);
  m["outputs"] = outputs;
  return m;
}

// --- generate ---------------------------------------------------------------

struct GenerateOptions {
  std::uint64_t nodes = 0;
  std::uint64_t m = 10;
  std::uint64_t seed_nodes = 10;
  std::uint64_t seed = 1;
  std::string out;
};

int run_generate(const GenerateOptions& o, const std::vector<std::string>& args) {
  degrank_ba_config cfg{o.nodes, o.seed_nodes, o.m, o.seed};
  degrank_graph* raw = nullptr;
  check(degrank_generate_ba(&cfg, &raw), "generate");
  GraphPtr g(raw);

  const std::string manifest = manifest_path_for(o.out);
  const std::string header = "degrank generate n=" + std::to_string(o.nodes) +
                             " n0=" + std::to_string(o.seed_nodes) + " m=" + std::to_string(o.m) +
                             " seed=" + std::to_string(o.seed) + "\nmanifest: " +
                             fs::path(manifest).filename().string();
  check(degrank_graph_save(g.get(), o.out.c_str(), header.c_str()), "writing " + o.out);

  degrank_degree_stats st{};
  check(degrank_graph_degree_stats(g.get(), &st), "degree stats");

  ordered_json inputs;
  inputs["nodes"] = o.nodes;
  inputs["seed_nodes"] = o.seed_nodes;
  inputs["m"] = o.m;
  ordered_json seeds;
  seeds["generation"] = o.seed;
  write_json(manifest, make_manifest("generate", args, inputs, seeds, {o.out}));

  std::cout << "nodes " << st.node_count << "\n"
            << "edges " << st.edge_count << "\n"
            << "k_min " << st.k_min << "\n"
            << "k_max " << st.k_max << "\n";
  return kExitOk;
}

// --- estimate ---------------------------------------------------------------

struct EstimateOptions {
  std::string graph;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> budget;
  std::uint64_t burn_in = 1000;
  std::uint64_t thin = 10;
  std::uint64_t seed = 1;
  std::optional<std::uint32_t> start_node;
  int max_retries = 4;
  bool ground_truth = false;
  std::string out;
};

int run_estimate(const EstimateOptions& o, const std::vector<std::string>& args) {
  GraphPtr g = load_graph(o.graph);
  degrank_degree_stats truth{};
  check(degrank_graph_degree_stats(g.get(), &truth), "degree stats");

  const std::string manifest = manifest_path_for(o.out);
  ordered_json doc;
  ordered_json inputs;
  inputs["graph"] = o.graph;
  ordered_json seeds;
  degrank_params p{};

  if (o.ground_truth) {
    check(degrank_ground_truth_params(g.get(), &p), "ground-truth fit");
    doc = params_to_json(p);
    doc["mode"] = "ground_truth";
    inputs["ground_truth"] = true;
  } else {
    degrank_walk_config cfg;
    degrank_walk_config_default(&cfg);
    if (o.samples) {
      cfg.sample_count = *o.samples;
    } else if (o.budget) {
      cfg.sample_count = degrank_default_sample_count(*o.budget);
    } else {
      throw Failure{kExitValidation, "estimate needs --samples, --budget or --ground-truth"};
    }
    if (cfg.sample_count < 2) throw Failure{kExitValidation, "--samples must be at least 2"};
    if (o.thin < 1) throw Failure{kExitValidation, "--thin must be at least 1"};
    cfg.burn_in_steps = o.burn_in;
    cfg.thinning_interval = o.thin;
    cfg.rng_seed = o.seed;
    if (o.start_node) {
      cfg.has_start_node = 1;
      cfg.start_node = *o.start_node;
    }
    const WalkOutcome w = estimate_with_retry(g.get(), cfg, o.max_retries);
    p = w.params;
    doc = params_to_json(p);
    doc["mode"] = "walk";
    doc["seed"] = o.seed;
    doc["burn_in"] = o.burn_in;
    doc["thinning"] = o.thin;
    doc["sample_count"] = w.final_sample_count;
    doc["requested_sample_count"] = cfg.sample_count;
    doc["retries"] = w.retries;
    doc["total_steps"] = w.total_steps;
    doc["unique_nodes"] = w.stats.unique_node_count;
    if (o.start_node) doc["start_node"] = *o.start_node;
    inputs["samples"] = cfg.sample_count;
    if (o.budget) inputs["budget"] = *o.budget;
    inputs["burn_in"] = o.burn_in;
    inputs["thinning"] = o.thin;
    inputs["max_retries"] = o.max_retries;
    seeds["walk"] = o.seed;
    std::cout << "walk steps " << w.total_steps << " (retries " << w.retries << ")\n";
  }
  doc["graph"] = o.graph;
  doc["manifest"] = fs::path(manifest).filename().string();
  write_json(o.out, doc);
  write_json(manifest, make_manifest("estimate", args, inputs, seeds, {o.out}));

  std::printf("%-6s %-22s true %s\n", "n_est", real(p.n_est).c_str(),
              std::to_string(truth.node_count).c_str());
  std::printf("%-6s %-22u true %u\n", "k_min", p.k_min, truth.k_min);
  std::printf("%-6s %-22u true %u\n", "k_max", p.k_max, truth.k_max);
  std::printf("%-6s %-22s true %s\n", "d_avg", real(p.d_avg).c_str(), real(truth.d_avg).c_str());
  std::printf("%-6s %s\n", "gamma", real(p.gamma).c_str());
  std::printf("%-6s %s\n", "c", real(p.c).c_str());
  std::printf("%-6s %s\n", "a", real(p.a).c_str());
  std::printf("%-6s %s\n", "b", real(p.b).c_str());
  return kExitOk;
}

// --- predict ----------------------------------------------------------------

struct PredictOptions {
  std::string params;
  std::optional<double> degree;
  bool all_degrees = false;
  bool clamp = false;
};

int run_predict(const PredictOptions& o) {
  const degrank_params p = params_from_json(read_json(o.params));
  const int clamp = o.clamp ? 1 : 0;
  if (o.degree) {
    double r = 0.0;
    check(degrank_predict_rank(&p, *o.degree, clamp, &r), "predict");
    std::cout << real(r) << "\n";
    return kExitOk;
  }
  std::cout << "degree,predicted_rank\n";
  for (std::uint64_t k = p.k_min; k <= p.k_max; ++k) {
    double r = 0.0;
    check(degrank_predict_rank(&p, static_cast<double>(k), clamp, &r), "predict");
    std::cout << k << ',' << real(r) << "\n";
  }
  return kExitOk;
}

// --- evaluate ---------------------------------------------------------------

struct EvaluateOptions {
  std::string graph;
  std::string params;
  bool ground_truth_params = false;
  std::string table_out;
  std::string report_out;
  bool per_node = false;
  bool clamp = false;
};

void print_table1_header() {
  std::printf("%-16s %-16s %-20s %s\n", "Number of Nodes", "Average Error", "Standard Deviation",
              "Pct Error");
}

int run_evaluate(const EvaluateOptions& o, const std::vector<std::string>& args) {
  GraphPtr g = load_graph(o.graph);
  degrank_params p{};
  if (o.ground_truth_params) {
    check(degrank_ground_truth_params(g.get(), &p), "ground-truth fit");
  } else {
    p = params_from_json(read_json(o.params));
  }

  degrank_table* raw = nullptr;
  degrank_report report{};
  check(degrank_evaluate(g.get(), &p, o.per_node ? 1 : 0, o.clamp ? 1 : 0, &raw, &report),
        "evaluate");
  TablePtr table(raw);
  check(degrank_table_write_csv(table.get(), o.table_out.c_str()), "writing " + o.table_out);

  degrank_median_split split{};
  check(degrank_table_median_split(table.get(), &split), "median split");

  const std::string manifest = manifest_path_for(o.report_out);
  ordered_json doc;
  doc["network_size"] = report.network_size;
  doc["average_error"] = report.average_error;
  doc["std_dev"] = report.std_dev;
  doc["pct_error"] = report.pct_error;
  doc["weighting"] = o.per_node ? "per_node" : "per_degree";
  doc["clamp"] = o.clamp;
  doc["rows"] = degrank_table_row_count(table.get());
  doc["mean_error_above_median_degree"] = split.above;
  doc["mean_error_below_median_degree"] = split.below;
  doc["graph"] = o.graph;
  doc["params"] = o.ground_truth_params ? "ground_truth" : o.params;
  doc["table"] = o.table_out;
  doc["manifest"] = fs::path(manifest).filename().string();
  write_json(o.report_out, doc);

  ordered_json inputs;
  inputs["graph"] = o.graph;
  inputs["params"] = o.ground_truth_params ? "ground_truth" : o.params;
  inputs["weighting"] = doc["weighting"];
  inputs["clamp"] = o.clamp;
  write_json(manifest, make_manifest("evaluate", args, inputs, ordered_json::object(),
                                     {o.table_out, o.report_out}));

  print_table1_header();
  std::printf("%-16llu %-16.2f %-20.2f %.4f%%\n",
              static_cast<unsigned long long>(report.network_size), report.average_error,
              report.std_dev, report.pct_error);
  return kExitOk;
}

// --- sweep ------------------------------------------------------------------

struct SweepOptions {
  std::vector<std::string> sizes;
  std::optional<std::uint64_t> step;
  int repeats = 3;
  std::string out_dir;
  std::uint64_t m = 10;
  std::uint64_t seed_nodes = 10;
  std::uint64_t seed = 1;
  std::uint64_t burn_in = 1000;
  std::uint64_t thin = 10;
  int max_retries = 4;
  int jobs = 1;
  bool keep_graphs = false;
};

std::uint64_t parse_count(const std::string& text) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v == 0) {
    throw Failure{kExitValidation, "invalid size '" + text + "'"};
  }
  return v;
}

// Items are plain counts or inclusive ranges "lo..hi" stepped by --step.
std::vector<std::uint64_t> expand_sizes(const std::vector<std::string>& items,
                                        std::optional<std::uint64_t> step) {
  std::vector<std::uint64_t> sizes;
  for (const std::string& item : items) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      sizes.push_back(parse_count(item));
      continue;
    }
    const std::uint64_t lo = parse_count(item.substr(0, dots));
    const std::uint64_t hi = parse_count(item.substr(dots + 2));
    const std::uint64_t s = step.value_or(lo);
    if (s == 0 || hi < lo) throw Failure{kExitValidation, "invalid size range '" + item + "'"};
    for (std::uint64_t n = lo; n <= hi; n += s) sizes.push_back(n);
  }
  if (sizes.empty()) throw Failure{kExitValidation, "no sizes given"};
  return sizes;
}

struct RunResult {
  std::uint64_t nodes = 0;
  int repeat = 0;
  bool ok = false;
  std::string error;
  degrank_report report{};
  double n_est = 0.0;
};

RunResult run_single(const SweepOptions& o, std::uint64_t nodes, int repeat) {
  RunResult r;
  r.nodes = nodes;
  r.repeat = repeat;
  const std::uint64_t gen_seed = o.seed + static_cast<std::uint64_t>(repeat);
  const std::uint64_t walk_seed = gen_seed ^ 0x9E3779B97F4A7C15ULL;
  const fs::path dir =
      fs::path(o.out_dir) / ("n" + std::to_string(nodes) + "_r" + std::to_string(repeat));

  ordered_json inputs;
  inputs["nodes"] = nodes;
  inputs["seed_nodes"] = o.seed_nodes;
  inputs["m"] = o.m;
  inputs["budget"] = nodes;
  inputs["burn_in"] = o.burn_in;
  inputs["thinning"] = o.thin;
  inputs["max_retries"] = o.max_retries;
  ordered_json seeds;
  seeds["generation"] = gen_seed;
  seeds["walk"] = walk_seed;
  std::vector<std::string> outputs;

  try {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Failure{kExitIo, "cannot create " + dir.string()};

    degrank_ba_config cfg{nodes, o.seed_nodes, o.m, gen_seed};
    degrank_graph* raw = nullptr;
    check(degrank_generate_ba(&cfg, &raw), "generate");
    GraphPtr g(raw);
    if (o.keep_graphs) {
      const std::string path = (dir / "graph.txt").string();
      check(degrank_graph_save(g.get(), path.c_str(), "manifest: manifest.json"), "writing graph");
      outputs.push_back(path);
    }

    degrank_walk_config wc;
    degrank_walk_config_default(&wc);
    wc.sample_count = degrank_default_sample_count(nodes);
    wc.burn_in_steps = o.burn_in;
    wc.thinning_interval = o.thin;
    wc.rng_seed = walk_seed;
    const WalkOutcome w = estimate_with_retry(g.get(), wc, o.max_retries);

    ordered_json params = params_to_json(w.params);
    params["mode"] = "walk";
    params["seed"] = walk_seed;
    params["burn_in"] = o.burn_in;
    params["thinning"] = o.thin;
    params["sample_count"] = w.final_sample_count;
    params["retries"] = w.retries;
    params["total_steps"] = w.total_steps;
    params["manifest"] = "manifest.json";
    write_json(dir / "params.json", params);
    outputs.push_back((dir / "params.json").string());

    degrank_table* traw = nullptr;
    check(degrank_evaluate(g.get(), &w.params, 0, 0, &traw, &r.report), "evaluate");
    TablePtr table(traw);
    const std::string table_path = (dir / "table.csv").string();
    check(degrank_table_write_csv(table.get(), table_path.c_str()), "writing table");
    outputs.push_back(table_path);

    ordered_json report;
    report["network_size"] = r.report.network_size;
    report["average_error"] = r.report.average_error;
    report["std_dev"] = r.report.std_dev;
    report["pct_error"] = r.report.pct_error;
    report["manifest"] = "manifest.json";
    write_json(dir / "report.json", report);
    outputs.push_back((dir / "report.json").string());

    r.n_est = w.params.n_est;
    r.ok = true;
  } catch (const Failure& f) {
    r.error = f.message;
  }

  ordered_json manifest = make_manifest("sweep-run", {}, inputs, seeds, outputs);
  manifest["status"] = r.ok ? "ok" : "failed";
  if (!r.ok) manifest["error"] = r.error;
  try {
    write_json(dir / "manifest.json", manifest);
  } catch (const Failure& f) {
    if (r.ok) {
      r.ok = false;
      r.error = f.message;
    }
  }
  return r;
}

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

MeanStd mean_std(const std::vector<double>& xs) {
  MeanStd s;
  if (xs.empty()) return s;
  for (const double x : xs) s.mean += x;
  s.mean /= static_cast<double>(xs.size());
  for (const double x : xs) s.std += (x - s.mean) * (x - s.mean);
  s.std = std::sqrt(s.std / static_cast<double>(xs.size()));
  return s;
}

int run_sweep(const SweepOptions& o, const std::vector<std::string>& args) {
  const std::vector<std::uint64_t> sizes = expand_sizes(o.sizes, o.step);
  if (o.repeats < 1) throw Failure{kExitValidation, "--repeats must be at least 1"};
  for (const std::uint64_t n : sizes) {
    if (!(o.m >= 1 && o.m <= o.seed_nodes && o.seed_nodes < n)) {
      throw Failure{kExitValidation, "size " + std::to_string(n) +
                                         " violates 1 <= m <= seed-nodes < nodes"};
    }
  }
  std::error_code ec;
  fs::create_directories(o.out_dir, ec);
  if (ec) throw Failure{kExitIo, "cannot create " + o.out_dir};

  struct Task {
    std::uint64_t nodes;
    int repeat;
  };
  std::vector<Task> tasks;
  for (const std::uint64_t n : sizes) {
    for (int r = 0; r < o.repeats; ++r) tasks.push_back({n, r});
  }
  std::vector<RunResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      results[i] = run_single(o, tasks[i].nodes, tasks[i].repeat);
    }
  };
  const int jobs = std::max(1, std::min<int>(o.jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  std::string csv =
      "nodes,runs,failed,mean_average_error,std_average_error,mean_std_dev,mean_pct_error,"
      "std_pct_error,mean_n_est\n";
  print_table1_header();
  int failures = 0;
  ordered_json runs = ordered_json::array();
  for (const std::uint64_t n : sizes) {
    std::vector<double> avg, sd, pct, nest;
    int failed = 0;
    for (const RunResult& r : results) {
      if (r.nodes != n) continue;
      ordered_json entry;
      entry["nodes"] = r.nodes;
      entry["repeat"] = r.repeat;
      entry["status"] = r.ok ? "ok" : "failed";
      if (!r.ok) {
        entry["error"] = r.error;
        ++failed;
      } else {
        avg.push_back(r.report.average_error);
        sd.push_back(r.report.std_dev);
        pct.push_back(r.report.pct_error);
        nest.push_back(r.n_est);
      }
      runs.push_back(entry);
    }
    failures += failed;
    const MeanStd a = mean_std(avg);
    const MeanStd s = mean_std(sd);
    const MeanStd p = mean_std(pct);
    const MeanStd ne = mean_std(nest);
    csv += std::to_string(n) + ',' + std::to_string(avg.size()) + ',' + std::to_string(failed) +
           ',' + real(a.mean) + ',' + real(a.std) + ',' + real(s.mean) + ',' + real(p.mean) + ',' +
           real(p.std) + ',' + real(ne.mean) + '\n';
    std::printf("%-16llu %-16s %-20.2f %.4f%%\n", static_cast<unsigned long long>(n),
                (std::to_string(static_cast<long long>(std::llround(a.mean))) + " +/- " +
                 std::to_string(static_cast<long long>(std::llround(a.std))))
                    .c_str(),
                s.mean, p.mean);
  }

  const fs::path summary = fs::path(o.out_dir) / "summary.csv";
  {
    std::ofstream out(fs::path(summary).concat(".tmp"), std::ios::binary | std::ios::trunc);
    if (!out) throw Failure{kExitIo, "cannot write " + summary.string()};
    out << csv;
  }
  fs::rename(fs::path(summary).concat(".tmp"), summary, ec);
  if (ec) throw Failure{kExitIo, "cannot rename into " + summary.string()};

  ordered_json inputs;
  inputs["sizes"] = sizes;
  inputs["repeats"] = o.repeats;
  inputs["seed_nodes"] = o.seed_nodes;
  inputs["m"] = o.m;
  inputs["burn_in"] = o.burn_in;
  inputs["thinning"] = o.thin;
  inputs["max_retries"] = o.max_retries;
  inputs["sample_fraction"] = 0.01;
  ordered_json seeds;
  seeds["base"] = o.seed;
  ordered_json manifest =
      make_manifest("sweep", args, inputs, seeds, {summary.string()});
  manifest["runs"] = runs;
  write_json(fs::path(o.out_dir) / "sweep.manifest.json", manifest);

  if (failures > 0) {
    std::cerr << "degrank: " << failures << " sweep run(s) failed; see sweep.manifest.json\n";
    return kExitEstimator;
  }
  return kExitOk;
}

}  // namespace
}  // namespace degrank::cli

int main(int argc, char** argv) {
  using namespace degrank::cli;
  const std::vector<std::string> args(argv + 1, argv + argc);

  CLI::App app{"Degree-rank prediction for scale-free networks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(degrank_version()));

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Generate a Barabasi-Albert network");
  generate->add_option("--nodes", gen.nodes, "Total node count n")->required();
  generate->add_option("--m", gen.m, "Edges added per new node")->capture_default_str();
  generate->add_option("--seed-nodes", gen.seed_nodes, "Disconnected seed nodes n0")
      ->capture_default_str();
  generate->add_option("--seed", gen.seed, "Generation RNG seed")->capture_default_str();
  generate->add_option("--out", gen.out, "Edge-list output path")->required();

  EstimateOptions est;
  auto* estimate = app.add_subcommand("estimate", "Estimate network parameters");
  estimate->add_option("--graph", est.graph, "Edge-list file")->required();
  auto* samples = estimate->add_option("--samples", est.samples, "Retained walk observations");
  auto* budget =
      estimate->add_option("--budget", est.budget, "Size hint; samples default to 1% of it");
  estimate->add_option("--burn-in", est.burn_in, "Discarded initial steps")->capture_default_str();
  estimate->add_option("--thin", est.thin, "Steps between retained observations")
      ->capture_default_str();
  estimate->add_option("--seed", est.seed, "Walk RNG seed")->capture_default_str();
  estimate->add_option("--start-node", est.start_node, "Walk start node");
  estimate->add_option("--max-retries", est.max_retries, "Doublings on NoCollisions")
      ->capture_default_str();
  auto* gt = estimate->add_flag("--ground-truth", est.ground_truth,
                                "Fit from the exact degree histogram instead of a walk");
  estimate->add_option("--out", est.out, "Params document path")->required();
  samples->excludes(budget);
  gt->excludes(samples)->excludes(budget);

  PredictOptions pred;
  auto* predict = app.add_subcommand("predict", "Predict degree ranks from a params document");
  predict->add_option("--params", pred.params, "Params document")->required();
  auto* degree = predict->add_option("--degree", pred.degree, "Degree to rank");
  auto* all = predict->add_flag("--all-degrees", pred.all_degrees, "Rank every k_min..k_max");
  predict->add_flag("--clamp", pred.clamp, "Clamp predictions to [1, n_est]");
  degree->excludes(all);
  predict->require_option(1, 3);

  EvaluateOptions ev;
  auto* evaluate = app.add_subcommand("evaluate", "Compare predicted and exact ranks");
  evaluate->add_option("--graph", ev.graph, "Edge-list file")->required();
  auto* params = evaluate->add_option("--params", ev.params, "Params document");
  auto* gtp = evaluate->add_flag("--ground-truth-params", ev.ground_truth_params,
                                 "Fit params from the graph's exact histogram");
  evaluate->add_option("--table-out", ev.table_out, "Per-degree CSV output")->required();
  evaluate->add_option("--report-out", ev.report_out, "Error report output")->required();
  evaluate->add_flag("--per-node", ev.per_node, "Weight degree rows by node count");
  evaluate->add_flag("--clamp", ev.clamp, "Clamp predictions to [1, n_est]");
  params->excludes(gtp);

  SweepOptions sw;
  auto* sweep = app.add_subcommand("sweep", "Run the full pipeline over several network sizes");
  sweep->add_option("--sizes", sw.sizes, "Sizes or lo..hi ranges")->required()->delimiter(',');
  sweep->add_option("--step", sw.step, "Step for lo..hi ranges");
  sweep->add_option("--repeats", sw.repeats, "Runs per size")->capture_default_str();
  sweep->add_option("--out-dir", sw.out_dir, "Output directory")->required();
  sweep->add_option("--m", sw.m, "Edges added per new node")->capture_default_str();
  sweep->add_option("--seed-nodes", sw.seed_nodes, "Seed nodes n0")->capture_default_str();
  sweep->add_option("--seed", sw.seed, "Base RNG seed")->capture_default_str();
  sweep->add_option("--burn-in", sw.burn_in, "Discarded initial steps")->capture_default_str();
  sweep->add_option("--thin", sw.thin, "Steps between retained observations")
      ->capture_default_str();
  sweep->add_option("--max-retries", sw.max_retries, "Doublings on NoCollisions")
      ->capture_default_str();
  sweep->add_option("--jobs", sw.jobs, "Parallel runs")->capture_default_str();
  sweep->add_flag("--keep-graphs", sw.keep_graphs, "Also write each generated edge list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*generate) return run_generate(gen, args);
    if (*estimate) return run_estimate(est, args);
    if (*predict) {
      if (!pred.degree && !pred.all_degrees) {
        throw Failure{kExitValidation, "predict needs --degree or --all-degrees"};
      }
      return run_predict(pred);
    }
    if (*evaluate) {
      if (ev.params.empty() && !ev.ground_truth_params) {
        throw Failure{kExitValidation, "evaluate needs --params or --ground-truth-params"};
      }
      return run_evaluate(ev, args);
    }
    if (*sweep) return run_sweep(sw, args);
  } catch (const Failure& f) {
    std::cerr << "degrank: " << f.message << "\n";
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "degrank: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
