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

#ifndef TREEMATCH_TREE_H_
#define TREEMATCH_TREE_H_

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace treematch {

struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// An immutable free tree on vertices 0..n-1.
//
// Construction validates the input: exactly n-1 edges, endpoints in range,
// no self-loops, no duplicates, connected. Invalid input raises
// Error(kNotATree).
class Tree {
 public:
  // The single-vertex tree.
  Tree();

  static Tree FromEdges(int n, std::span<const Edge> edges);

  // Edge-list text: a line "n" followed by n-1 lines "u v". Blank lines and
  // lines starting with '#' are ignored.
  static Tree Parse(std::string_view text);

  int order() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return order() - 1; }

  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  bool is_leaf(int v) const { return degree(v) == 1; }
  bool adjacent(int u, int v) const;

  // Edges with u < v, sorted.
  std::vector<Edge> edges() const;
  std::vector<int> leaves() const;
  std::vector<int> degrees() const;

  std::string ToEdgeList() const;

 private:
  explicit Tree(std::vector<std::vector<int>> adjacency)
      : adjacency_(std::move(adjacency)) {}

  std::vector<std::vector<int>> adjacency_;
};

struct DiameterPath {
  int length = 0;
  // length + 1 vertices, endpoints first and last.
  std::vector<int> path;
};

// Double BFS.
DiameterPath Diameter(const Tree& tree);

// Replaces every edge uv by u - x_uv - v. Original vertices keep their ids;
// the subdivision vertex of the i-th edge of tree.edges() gets id n + i.
Tree OneSubdivision(const Tree& tree);

// Vertices of minimum maximal-branch size; one or two (adjacent) vertices.
std::vector<int> Centroids(const Tree& tree);

// BFS distances from source.
std::vector<int> Distances(const Tree& tree, int source);

// Side of the unique bipartition (0 or 1), vertex 0 on side 0.
std::vector<int> Bipartition(const Tree& tree);

}  // namespace treematch

#endif  // TREEMATCH_TREE_H_
