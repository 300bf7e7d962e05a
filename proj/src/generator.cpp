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

#include "degrank/generator.hpp"

#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "degrank/error.hpp"
#include "degrank/rng.hpp"

namespace degrank {

void validate(const BaConfig& cfg) {
  if (cfg.m < 1 || cfg.m > cfg.n0 || cfg.n0 >= cfg.n) {
    throw Error(ErrorCode::kInvalidConfig,
                "BA config needs 1 <= m <= n0 < n (got n=" + std::to_string(cfg.n) +
                    ", n0=" + std::to_string(cfg.n0) + ", m=" + std::to_string(cfg.m) + ")");
  }
  if (cfg.n > std::numeric_limits<NodeId>::max()) {
    throw Error(ErrorCode::kInvalidConfig, "node count exceeds the 32-bit id space");
  }
}

Graph generate_ba(const BaConfig& cfg) {
  validate(cfg);
  Rng rng(cfg.rng_seed);

  const std::size_t new_nodes = cfg.n - cfg.n0;
  // Flat endpoint list: each edge contributes both ends, so a uniform index
  // selects a node with probability degree / total degree.
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * new_nodes * cfg.m);

  // chosen[x] == v marks x as already targeted by incoming node v.
  std::vector<NodeId> chosen(cfg.n, std::numeric_limits<NodeId>::max());
  std::vector<NodeId> targets(cfg.m);
  std::vector<NodeId> pool;

  for (std::size_t step = cfg.n0; step < cfg.n; ++step) {
    const auto v = static_cast<NodeId>(step);
    if (endpoints.empty()) {
      // Partial Fisher-Yates over the existing ids.
      pool.resize(step);
      std::iota(pool.begin(), pool.end(), NodeId{0});
      for (std::size_t i = 0; i < cfg.m; ++i) {
        const std::size_t j = i + rng.below(pool.size() - i);
        std::swap(pool[i], pool[j]);
        targets[i] = pool[i];
      }
    } else {
      const std::size_t total = endpoints.size();
      for (std::size_t i = 0; i < cfg.m; ++i) {
        NodeId t = 0;
        do {
          t = endpoints[rng.below(total)];
        } while (chosen[t] == v);
        chosen[t] = v;
        targets[i] = t;
      }
    }
    for (const NodeId t : targets) {
      endpoints.push_back(v);
      endpoints.push_back(t);
    }
  }

  std::vector<Edge> edges(endpoints.size() / 2);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    edges[i] = Edge{endpoints[2 * i], endpoints[2 * i + 1]};
  }
  return build_graph(edges);
}

}  // namespace degrank
