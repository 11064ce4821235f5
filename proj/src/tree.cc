// Copyright 2026 The treematch Authors
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

#include "treematch/tree.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <sstream>

#include "treematch/common.h"

namespace treematch {
namespace {

Error NotATree(const std::string& why) {
  return Error(ErrorCode::kNotATree, "not a tree: " + why);
}

bool ParseInt(std::string_view token, int& out) {
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace

Tree::Tree() : adjacency_(1) {}

Tree Tree::FromEdges(int n, std::span<const Edge> edges) {
  if (n < 1) throw NotATree("order must be at least 1");
  if (static_cast<int>(edges.size()) != n - 1) {
    throw NotATree("expected " + std::to_string(n - 1) + " edges, got " +
                   std::to_string(edges.size()));
  }
  std::vector<std::vector<int>> adjacency(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw NotATree("edge (" + std::to_string(e.u) + "," +
                     std::to_string(e.v) + ") out of range");
    }
    if (e.u == e.v) throw NotATree("self-loop at " + std::to_string(e.u));
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
  }
  for (int v = 0; v < n; ++v) {
    auto& list = adjacency[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw NotATree("duplicate edge at vertex " + std::to_string(v));
    }
  }
  // n-1 edges + connected => acyclic.
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adjacency[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) throw NotATree("graph is disconnected or has a cycle");
  return Tree(std::move(adjacency));
}

Tree Tree::Parse(std::string_view text) {
  std::vector<std::vector<std::string_view>> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    auto tokens = Tokens(line);
    if (!tokens.empty() && tokens[0][0] != '#') lines.push_back(tokens);
    start = end + 1;
  }
  if (lines.empty()) throw NotATree("empty input");
  int n = 0;
  if (lines[0].size() != 1 || !ParseInt(lines[0][0], n)) {
    throw NotATree("first line must hold the vertex count");
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    Edge e;
    if (lines[i].size() != 2 || !ParseInt(lines[i][0], e.u) ||
        !ParseInt(lines[i][1], e.v)) {
      throw NotATree("malformed edge line " + std::to_string(i + 1));
    }
    edges.push_back(e);
  }
  return FromEdges(n, edges);
}

bool Tree::adjacent(int u, int v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Tree::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count());
  for (int u = 0; u < order(); ++u) {
    for (int v : adjacency_[u]) {
      if (u < v) result.push_back({u, v});
    }
  }
  return result;
}

std::vector<int> Tree::leaves() const {
  std::vector<int> result;
  for (int v = 0; v < order(); ++v) {
    if (is_leaf(v)) result.push_back(v);
  }
  return result;
}

std::vector<int> Tree::degrees() const {
  std::vector<int> result(order());
  for (int v = 0; v < order(); ++v) result[v] = degree(v);
  return result;
}

std::string Tree::ToEdgeList() const {
  std::ostringstream out;
  out << order() << '\n';
  for (const Edge& e : edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::vector<int> Distances(const Tree& tree, int source) {
  std::vector<int> dist(tree.order(), -1);
  std::deque<int> queue = {source};
  dist[source] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : tree.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DiameterPath Diameter(const Tree& tree) {
  auto farthest = [](const std::vector<int>& dist) {
    return static_cast<int>(std::max_element(dist.begin(), dist.end()) -
                            dist.begin());
  };
  int a = farthest(Distances(tree, 0));
  std::vector<int> from_a = Distances(tree, a);
  int b = farthest(from_a);
  DiameterPath result;
  result.length = from_a[b];
  // Walk back from b toward a along strictly decreasing distance.
  int v = b;
  result.path.push_back(v);
  while (v != a) {
    for (int w : tree.neighbors(v)) {
      if (from_a[w] == from_a[v] - 1) {
        v = w;
        break;
      }
    }
    result.path.push_back(v);
  }
  std::reverse(result.path.begin(), result.path.end());
  return result;
}

Tree OneSubdivision(const Tree& tree) {
  const int n = tree.order();
  std::vector<Edge> edges;
  int next = n;
  for (const Edge& e : tree.edges()) {
    edges.push_back({e.u, next});
    edges.push_back({next, e.v});
    ++next;
  }
  return Tree::FromEdges(2 * n - 1, edges);
}

std::vector<int> Centroids(const Tree& tree) {
  const int n = tree.order();
  std::vector<int> parent(n, -1), order;
  order.reserve(n);
  std::vector<int> stack = {0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : tree.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<int> size(n, 1), heaviest(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (parent[v] >= 0) {
      size[parent[v]] += size[v];
      heaviest[parent[v]] = std::max(heaviest[parent[v]], size[v]);
    }
  }
  int best = n;
  std::vector<int> result;
  for (int v = 0; v < n; ++v) {
    int branch = std::max(heaviest[v], n - size[v]);
    if (branch < best) {
      best = branch;
      result = {v};
    } else if (branch == best) {
      result.push_back(v);
    }
  }
  return result;
}

std::vector<int> Bipartition(const Tree& tree) {
  std::vector<int> dist = Distances(tree, 0);
  for (int& d : dist) d &= 1;
  return dist;
}

}  // namespace treematch
