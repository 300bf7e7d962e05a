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

// Graph builders and brute-force oracles shared by the test binaries. Nothing
// here calls into the ranking or sampler code it is used to check.

#ifndef DEGRANK_TESTS_TEST_GRAPHS_HPP_
#define DEGRANK_TESTS_TEST_GRAPHS_HPP_

#include <cstdint>
#include <vector>

#include "degrank/graph.hpp"
#include "degrank/rng.hpp"

namespace degrank::testing {

inline Graph path_graph(NodeId n) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return build_graph(edges);
}

inline Graph complete_graph(NodeId n) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return build_graph(edges);
}

// Mobius ladder on an even number of nodes: cycle plus antipodal chords,
// 3-regular for n >= 6.
inline Graph cubic_graph(NodeId n) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  for (NodeId i = 0; i < n / 2; ++i) edges.push_back({i, i + n / 2});
  return build_graph(edges);
}

// G(n, p) plus a spanning path so every node has an edge and ids stay dense.
inline Graph random_graph(NodeId n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (v == u + 1 || rng.unit() < p) edges.push_back({u, v});
    }
  }
  return build_graph(edges);
}

// 1 + |{v : deg(v) > deg(u)}| by direct comparison.
inline std::size_t brute_force_rank(const Graph& g, NodeId u) {
  std::size_t greater = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) > g.degree(u)) ++greater;
  }
  return greater + 1;
}

}  // namespace degrank::testing

#endif  // DEGRANK_TESTS_TEST_GRAPHS_HPP_
