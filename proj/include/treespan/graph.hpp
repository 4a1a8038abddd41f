// Copyright 2026 The treespan Authors
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

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace treespan {

/// Vertices are dense integers 0..n-1.
using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Returns the normalized edge {min(a,b), max(a,b)}.
inline Edge make_edge(Vertex a, Vertex b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::string to_string(const Edge& e);

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Neighbor lists are sorted, the edge list is sorted lexicographically, and
/// construction rejects self-loops, parallel edges and out-of-range
/// endpoints. Values are cheap to move and safe to share between threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  /// O(log deg) lookup.
  bool has_edge(Vertex a, Vertex b) const;

  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> offsets_ = {0};
  std::vector<Vertex> adjacency_;
};

/// Induced subgraph relabeled to 0..k-1; `to_parent[i]` is the original id.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Vertices with degree n-1, ascending.
std::vector<Vertex> universal_vertices(const Graph& g);

/// uv is an edge of the result iff u != v and uv is not an edge of g.
Graph complement(const Graph& g);

}  // namespace treespan
