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

#ifndef DEGRANK_GRAPH_HPP_
#define DEGRANK_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace degrank {

using NodeId = std::uint32_t;
using Degree = std::uint32_t;

struct Edge {
  NodeId u;
  NodeId v;
};

/// Immutable undirected simple graph in compressed sparse row form.
///
/// Node ids are dense in [0, node_count()). Every neighbor list is sorted
/// ascending, so two graphs with the same edge set compare equal.
class Graph {
 public:
  Graph() = default;

  std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return adjacency_.size() / 2; }

  Degree degree(NodeId v) const {
    return static_cast<Degree>(offsets_[v + 1] - offsets_[v]);
  }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  // Owner of the slot-th adjacency entry, slot in [0, 2 * edge_count()).
  // A uniformly drawn slot selects a node with probability degree / (2|E|).
  NodeId endpoint_owner(std::size_t slot) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(std::span<const Edge> edges);

  Graph(std::vector<std::size_t> offsets, std::vector<NodeId> adjacency)
      : offsets_(std::move(offsets)), adjacency_(std::move(adjacency)) {}

  std::vector<std::size_t> offsets_;
  std::vector<NodeId> adjacency_;
};

// Builds a simple graph; node_count is 1 + the largest id seen.
// Throws Error with kEmptyEdgeSet, kSelfLoop or kDuplicateEdge.
Graph build_graph(std::span<const Edge> edges);

struct DegreeHistogram {
  std::map<Degree, std::size_t> counts;  // degree -> number of nodes
  std::size_t node_count = 0;
  Degree k_min = 0;
  Degree k_max = 0;
  double d_avg = 0.0;  // sum_k k * count(k) / node_count
};

DegreeHistogram degree_histogram(const Graph& g);

// Whitespace-separated "u v" per line; '#' starts a comment line; blank lines
// are skipped. Throws Error(kParse, line) on malformed lines, kIo on failure.
Graph load_edge_list(const std::filesystem::path& path);
Graph parse_edge_list(const std::string& text);

// Writes every edge once as "u v" with u < v, ordered by (u, v). Each entry
// of header_comments is emitted first as a "# ..." line. The file is written
// to a temporary sibling and renamed into place.
void save_edge_list(const Graph& g, const std::filesystem::path& path,
                    std::span<const std::string> header_comments = {});
std::string format_edge_list(const Graph& g,
                             std::span<const std::string> header_comments = {});

// Atomic whole-file write shared by every writer in the library.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace degrank

#endif  // DEGRANK_GRAPH_HPP_
