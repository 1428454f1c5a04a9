// Copyright 2026 The gapkit Authors.
//
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

#include <cctype>
#include <charconv>
#include <cmath>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "gapkit/error.hpp"
#include "gapkit/experiment.hpp"
#include "gapkit/graph.hpp"

namespace gapkit {
namespace {

// Splits text into lines and whitespace tokens, skipping blanks and `#`
// comments. Calls visit(line_number, tokens) for every data line.
template <typename Visit>
void for_each_record(std::string_view text, Visit&& visit) {
  std::size_t line_no = 0;
  std::vector<std::string_view> tokens;
  while (!text.empty()) {
    std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++line_no;

    tokens.clear();
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (tokens.empty() || tokens.front().front() == '#') continue;
    visit(line_no, tokens);
  }
}

std::string at_line(std::size_t line_no) {
  return "line " + std::to_string(line_no) + ": ";
}

}  // namespace

EdgeListParse parse_edge_list(std::string_view text) {
  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  EdgeListParse result;

  auto intern = [&](std::string_view token) {
    auto [it, inserted] = ids.try_emplace(std::string(token),
                                          static_cast<NodeId>(labels.size()));
    if (inserted) labels.emplace_back(token);
    return it->second;
  };

  for_each_record(text, [&](std::size_t line_no, const auto& tokens) {
    if (tokens.size() != 2) {
      throw_input(at_line(line_no) + "expected two node tokens, found " +
                  std::to_string(tokens.size()));
    }
    NodeId a = intern(tokens[0]);
    NodeId b = intern(tokens[1]);
    if (a == b) {
      ++result.self_loops;
      return;
    }
    Edge e = make_edge(a, b);
    if (!seen.insert(e).second) {
      ++result.duplicate_edges;
      return;
    }
    edges.push_back(e);
  });

  if (labels.empty()) throw_input("empty graph");
  result.graph = Graph::from_edges(labels.size(), edges);
  result.graph.set_labels(std::move(labels));
  return result;
}

OpinionParse parse_opinions(std::string_view text, const Graph& g) {
  std::unordered_map<std::string, NodeId> ids;
  ids.reserve(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) ids.emplace(g.label(i), i);

  std::vector<double> values(g.node_count(), 0.0);
  std::vector<bool> assigned(g.node_count(), false);

  for_each_record(text, [&](std::size_t line_no, const auto& tokens) {
    if (tokens.size() != 2) {
      throw_input(at_line(line_no) + "expected `node value`, found " +
                  std::to_string(tokens.size()) + " tokens");
    }
    auto it = ids.find(std::string(tokens[0]));
    if (it == ids.end()) {
      throw_input(at_line(line_no) + "unknown node `" + std::string(tokens[0]) + "`");
    }
    std::string_view tok = tokens[1];
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(value)) {
      throw_input(at_line(line_no) + "invalid opinion value `" +
                  std::string(tokens[1]) + "`");
    }
    if (assigned[it->second]) {
      throw_input(at_line(line_no) + "node `" + std::string(tokens[0]) +
                  "` listed twice");
    }
    assigned[it->second] = true;
    values[it->second] = value;
  });

  OpinionParse result;
  for (bool a : assigned) result.missing_nodes += a ? 0 : 1;
  result.opinions = OpinionVector(std::move(values));
  return result;
}

std::string format_edge_list(const Graph& g) {
  // Lines are ordered by larger endpoint so that first appearance reproduces
  // node ids on re-parse. A node that would otherwise surface out of order,
  // or not at all (isolated), is introduced by a `v v` self-loop line, which
  // the parser drops after registering the node.
  std::string out;
  NodeId next = 0;
  auto write_line = [&](NodeId a, NodeId b) {
    out += g.label(a);
    out += ' ';
    out += g.label(b);
    out += '\n';
  };
  auto declare_below = [&](NodeId t) {
    for (; next < t; ++next) write_line(next, next);
  };
  for (NodeId v = 0; v < g.node_count(); ++v) {
    for (NodeId u : g.neighbors(v)) {
      if (u >= v) break;
      if (u >= next) {
        declare_below(u);
        if (v == u + 1) {
          write_line(u, v);
          next = v + 1;
          continue;
        }
        write_line(u, u);
        next = u + 1;
      }
      if (v >= next) {
        declare_below(v);
        next = v + 1;
      }
      write_line(u, v);
    }
  }
  declare_below(static_cast<NodeId>(g.node_count()));
  return out;
}

std::string format_opinions(const Graph& g, const OpinionVector& s) {
  check_dimensions(g, s);
  std::string out;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    out += g.label(i);
    out += ' ';
    out += format_real(s[i]);
    out += '\n';
  }
  return out;
}

}  // namespace gapkit
