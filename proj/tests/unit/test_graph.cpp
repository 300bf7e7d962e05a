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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "degrank/error.hpp"
#include "degrank/generator.hpp"
#include "degrank/graph.hpp"
#include "doctest.h"
#include "test_graphs.hpp"

namespace degrank {
namespace {

namespace fs = std::filesystem;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected degrank::Error");
  return ErrorCode::kInvalidArgument;
}

fs::path temp_file(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "degrank_unit";
  fs::create_directories(dir);
  return dir / name;
}

std::string read_all(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::set<std::pair<NodeId, NodeId>> edge_set(const Graph& g) {
  std::set<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (const NodeId v : g.neighbors(u)) edges.insert({std::min(u, v), std::max(u, v)});
  }
  return edges;
}

TEST_CASE("build_graph on a three-node path") {
  const Edge edges[] = {{0, 1}, {1, 2}};
  const Graph g = build_graph(edges);
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(2) == 1);
}

TEST_CASE("build_graph rejects forbidden input") {
  const Edge loop[] = {{0, 0}};
  CHECK(code_of([&] { build_graph(loop); }) == ErrorCode::kSelfLoop);
  const Edge dup[] = {{0, 1}, {0, 1}};
  CHECK(code_of([&] { build_graph(dup); }) == ErrorCode::kDuplicateEdge);
  const Edge reversed[] = {{0, 1}, {1, 0}};
  CHECK(code_of([&] { build_graph(reversed); }) == ErrorCode::kDuplicateEdge);
  CHECK(code_of([] { build_graph({}); }) == ErrorCode::kEmptyEdgeSet);
}

TEST_CASE("build_graph keeps gaps in the id space as isolated nodes") {
  const Edge edges[] = {{0, 4}};
  const Graph g = build_graph(edges);
  CHECK(g.node_count() == 5);
  CHECK(g.degree(2) == 0);
  CHECK(g.degree(4) == 1);
}

TEST_CASE("graph invariants hold on random graphs") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Graph g = testing::random_graph(static_cast<NodeId>(20 + seed * 7), 0.05, seed);
    std::size_t degree_sum = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      degree_sum += g.degree(v);
      const auto nbrs = g.neighbors(v);
      CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
      CHECK(std::adjacent_find(nbrs.begin(), nbrs.end()) == nbrs.end());
      for (const NodeId w : nbrs) {
        CHECK(w != v);
        const auto back = g.neighbors(w);
        CHECK(std::binary_search(back.begin(), back.end(), v));
      }
    }
    CHECK(degree_sum % 2 == 0);
    CHECK(degree_sum == 2 * g.edge_count());

    const DegreeHistogram h = degree_histogram(g);
    std::size_t count_sum = 0;
    std::size_t weighted = 0;
    for (const auto& [k, c] : h.counts) {
      count_sum += c;
      weighted += k * c;
      CHECK(k >= h.k_min);
      CHECK(k <= h.k_max);
    }
    CHECK(count_sum == g.node_count());
    CHECK(weighted == degree_sum);
    CHECK(h.d_avg == static_cast<double>(degree_sum) / static_cast<double>(g.node_count()));
  }
}

TEST_CASE("endpoint_owner maps adjacency slots to nodes") {
  const Graph g = testing::path_graph(3);
  CHECK(g.endpoint_owner(0) == 0);
  CHECK(g.endpoint_owner(1) == 1);
  CHECK(g.endpoint_owner(2) == 1);
  CHECK(g.endpoint_owner(3) == 2);
}

TEST_CASE("degree_histogram examples") {
  SUBCASE("path of three nodes") {
    const DegreeHistogram h = degree_histogram(testing::path_graph(3));
    CHECK(h.counts == std::map<Degree, std::size_t>{{1, 2}, {2, 1}});
    CHECK(h.d_avg == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(h.k_min == 1);
    CHECK(h.k_max == 2);
  }
  SUBCASE("complete graph on four nodes") {
    const DegreeHistogram h = degree_histogram(testing::complete_graph(4));
    CHECK(h.counts == std::map<Degree, std::size_t>{{3, 4}});
    CHECK(h.k_min == 3);
    CHECK(h.k_max == 3);
  }
  SUBCASE("BA graph with m = 10") {
    const Graph g = generate_ba({1000, 10, 10, 3});
    for (NodeId v = 10; v < g.node_count(); ++v) CHECK(g.degree(v) >= 10);
  }
}

TEST_CASE("parse_edge_list") {
  SUBCASE("plain path") {
    const Graph g = parse_edge_list("0 1\n1 2\n");
    CHECK(g == testing::path_graph(3));
  }
  SUBCASE("comments, blank lines, tabs and CRLF") {
    const Graph g = parse_edge_list("# header\n\n0\t1\r\n  1 2  \n# trailing\n");
    CHECK(g == testing::path_graph(3));
  }
  SUBCASE("missing final newline") { CHECK(parse_edge_list("0 1\n1 2") == testing::path_graph(3)); }
  SUBCASE("malformed line reports its number") {
    try {
      parse_edge_list("0 x\n");
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kParse);
      CHECK(e.line() == 1);
    }
    try {
      parse_edge_list("# c\n0 1\n1 2 3\n");
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.line() == 3);
    }
    CHECK(code_of([] { parse_edge_list("-1 2\n"); }) == ErrorCode::kParse);
    CHECK(code_of([] { parse_edge_list("0\n"); }) == ErrorCode::kParse);
  }
  SUBCASE("empty and duplicate input") {
    CHECK(code_of([] { parse_edge_list("# nothing\n"); }) == ErrorCode::kEmptyEdgeSet);
    CHECK(code_of([] { parse_edge_list("0 1\n1 0\n"); }) == ErrorCode::kDuplicateEdge);
    CHECK(code_of([] { parse_edge_list("3 3\n"); }) == ErrorCode::kSelfLoop);
  }
}

TEST_CASE("edge list files") {
  const fs::path in = temp_file("messy.txt");
  {
    std::ofstream out(in, std::ios::binary);
    out << "# unordered input\n2 1\n0 1\n\n3 0\n";
  }
  const Graph g = load_edge_list(in);
  const fs::path saved = temp_file("saved.txt");
  save_edge_list(g, saved);
  CHECK(read_all(saved) == "0 1\n0 3\n1 2\n");
  CHECK_FALSE(fs::exists(fs::path(saved).concat(".tmp")));

  const std::string comments[] = {"made by a test", "second line"};
  save_edge_list(g, saved, comments);
  CHECK(read_all(saved) == "# made by a test\n# second line\n0 1\n0 3\n1 2\n");
  CHECK(load_edge_list(saved) == g);

  CHECK(code_of([] { load_edge_list("/nonexistent/degrank/graph.txt"); }) == ErrorCode::kIo);
}

TEST_CASE("edge list round-trip preserves adjacency on random graphs") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = testing::random_graph(static_cast<NodeId>(15 * seed), 0.1, seed);
    const std::string text = format_edge_list(g);
    const Graph back = parse_edge_list(text);
    CHECK(back == g);
    CHECK(edge_set(back) == edge_set(g));
    CHECK(format_edge_list(back) == text);
  }
}

}  // namespace
}  // namespace degrank
