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

#include "degrank/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>
#include <system_error>

#include "degrank/error.hpp"

namespace degrank {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kEmptyEdgeSet: return "EmptyEdgeSet";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kStuckWalk: return "StuckWalk";
    case ErrorCode::kInsufficientGraph: return "InsufficientGraph";
    case ErrorCode::kNoCollisions: return "NoCollisions";
    case ErrorCode::kDegenerateDegrees: return "DegenerateDegrees";
    case ErrorCode::kNonScaleFree: return "NonScaleFree";
    case ErrorCode::kUnknownNode: return "UnknownNode";
  }
  return "Unknown";
}

NodeId Graph::endpoint_owner(std::size_t slot) const {
  // offsets_ is non-decreasing; the owner is the last row starting at or
  // before slot.
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), slot);
  return static_cast<NodeId>(std::distance(offsets_.begin(), it) - 1);
}

Graph build_graph(std::span<const Edge> edges) {
  if (edges.empty()) throw Error(ErrorCode::kEmptyEdgeSet, "edge set is empty");

  NodeId max_id = 0;
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw Error(ErrorCode::kSelfLoop, "self-loop at node " + std::to_string(e.u));
    }
    max_id = std::max({max_id, e.u, e.v});
  }
  const std::size_t n = static_cast<std::size_t>(max_id) + 1;

  std::vector<std::size_t> offsets(n + 1, 0);
  for (const Edge& e : edges) {
    ++offsets[e.u + 1];
    ++offsets[e.v + 1];
  }
  for (std::size_t i = 1; i <= n; ++i) offsets[i] += offsets[i - 1];

  std::vector<NodeId> adjacency(offsets[n]);
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const Edge& e : edges) {
    adjacency[cursor[e.u]++] = e.v;
    adjacency[cursor[e.v]++] = e.u;
  }

  for (std::size_t v = 0; v < n; ++v) {
    const auto first = adjacency.begin() + static_cast<std::ptrdiff_t>(offsets[v]);
    const auto last = adjacency.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]);
    std::sort(first, last);
    if (const auto dup = std::adjacent_find(first, last); dup != last) {
      const NodeId a = static_cast<NodeId>(std::min<std::size_t>(v, *dup));
      const NodeId b = static_cast<NodeId>(std::max<std::size_t>(v, *dup));
      throw Error(ErrorCode::kDuplicateEdge,
                  "duplicate edge (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
  }
  return Graph(std::move(offsets), std::move(adjacency));
}

DegreeHistogram degree_histogram(const Graph& g) {
  DegreeHistogram h;
  h.node_count = g.node_count();
  std::uint64_t degree_sum = 0;
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    const Degree d = g.degree(static_cast<NodeId>(v));
    ++h.counts[d];
    degree_sum += d;
  }
  if (!h.counts.empty()) {
    h.k_min = h.counts.begin()->first;
    h.k_max = h.counts.rbegin()->first;
    h.d_avg = static_cast<double>(degree_sum) / static_cast<double>(h.node_count);
  }
  return h;
}

namespace {

bool parse_id(std::string_view token, NodeId& out) {
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  std::vector<Edge> edges;
  std::string_view rest(text);
  std::uint64_t line_no = 0;
  while (!rest.empty()) {
    const std::size_t nl = rest.find('\n');
    const std::string_view line = rest.substr(0, nl);
    rest = nl == std::string_view::npos ? std::string_view() : rest.substr(nl + 1);
    ++line_no;

    if (!line.empty() && line.front() == '#') continue;
    const auto tokens = split_whitespace(line);
    if (tokens.empty()) continue;
    Edge e{};
    if (tokens.size() != 2 || !parse_id(tokens[0], e.u) || !parse_id(tokens[1], e.v)) {
      throw Error(ErrorCode::kParse,
                  "malformed edge on line " + std::to_string(line_no), line_no);
    }
    edges.push_back(e);
  }
  return build_graph(edges);
}

Graph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "read failed: " + path.string());
  return parse_edge_list(buffer.str());
}

std::string format_edge_list(const Graph& g, std::span<const std::string> header_comments) {
  std::string out;
  out.reserve(g.edge_count() * 14);
  for (const std::string& comment : header_comments) {
    out += "# ";
    out += comment;
    out += '\n';
  }
  char buf[16];
  for (std::size_t u = 0; u < g.node_count(); ++u) {
    const std::size_t u_len = static_cast<std::size_t>(
        std::to_chars(buf, buf + sizeof(buf), u).ptr - buf);
    const std::string u_text(buf, u_len);
    for (const NodeId v : g.neighbors(static_cast<NodeId>(u))) {
      if (v <= u) continue;
      out += u_text;
      out += ' ';
      out.append(buf, std::to_chars(buf, buf + sizeof(buf), v).ptr);
      out += '\n';
    }
  }
  return out;
}

void save_edge_list(const Graph& g, const std::filesystem::path& path,
                    std::span<const std::string> header_comments) {
  write_file_atomic(path, format_edge_list(g, header_comments));
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw Error(ErrorCode::kIo, "write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::kIo, "cannot rename into " + path.string());
  }
}

}  // namespace degrank
