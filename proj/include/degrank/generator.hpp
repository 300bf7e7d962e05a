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

#ifndef DEGRANK_GENERATOR_HPP_
#define DEGRANK_GENERATOR_HPP_

#include <cstddef>
#include <cstdint>

#include "degrank/graph.hpp"

namespace degrank {

/// Barabasi-Albert growth parameters.
///
/// Growth starts from n0 disconnected seed nodes; each of the remaining
/// n - n0 nodes attaches to m distinct existing nodes, chosen with
/// probability proportional to current degree. Requires 1 <= m <= n0 < n.
struct BaConfig {
  std::size_t n = 0;
  std::size_t n0 = 10;
  std::size_t m = 10;
  std::uint64_t rng_seed = 0;
};

// Throws Error(kInvalidConfig) when the constraints above fail.
void validate(const BaConfig& cfg);

// Deterministic in cfg. The result has exactly (n - n0) * m edges.
// The first attaching node sees zero total degree and picks its targets
// uniformly without replacement; every later draw is degree-proportional.
Graph generate_ba(const BaConfig& cfg);

}  // namespace degrank

#endif  // DEGRANK_GENERATOR_HPP_
