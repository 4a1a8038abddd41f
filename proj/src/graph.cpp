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

#include "treespan/graph.hpp"

#include <algorithm>

namespace treespan {

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw GraphError("negative vertex count");
  for (auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw GraphError("edge " + to_string(e) + " has an endpoint outside 0.." +
                       std::to_string(n - 1));
    }
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    e = make_edge(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) throw GraphError("duplicate edge " + to_string(*dup));

  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (int v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
  adjacency_.resize(2 * edges_.size());
  std::vector<std::int64_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted by (u, v), so both halves land in ascending order:
  // for fixed w, all smaller neighbors u arrive (as e.v == w) in order of u,
  // before any edge (w, x) arrives with w as the smaller endpoint.
  for (const auto& e : edges_) {
    adjacency_[fill[e.v]++] = e.u;
  }
  for (const auto& e : edges_) {
    adjacency_[fill[e.u]++] = e.v;
  }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return false;
  if (degree(a) > degree(b)) std::swap(a, b);
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  Subgraph sub;
  sub.to_parent.assign(vertices.begin(), vertices.end());
  std::sort(sub.to_parent.begin(), sub.to_parent.end());
  std::vector<Vertex> local(g.n(), -1);
  for (int i = 0; i < static_cast<int>(sub.to_parent.size()); ++i) {
    local[sub.to_parent[i]] = i;
  }
  std::vector<Edge> edges;
  for (int i = 0; i < static_cast<int>(sub.to_parent.size()); ++i) {
    for (Vertex w : g.neighbors(sub.to_parent[i])) {
      if (local[w] > i) edges.push_back({i, local[w]});
    }
  }
  sub.graph = Graph(static_cast<int>(sub.to_parent.size()), std::move(edges));
  return sub;
}

std::vector<Vertex> universal_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) == g.n() - 1) out.push_back(v);
  }
  return out;
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  std::vector<char> adj(g.n(), 0);
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex w : g.neighbors(u)) adj[w] = 1;
    for (Vertex v = u + 1; v < g.n(); ++v) {
      if (!adj[v]) edges.push_back({u, v});
    }
    for (Vertex w : g.neighbors(u)) adj[w] = 0;
  }
  return Graph(g.n(), std::move(edges));
}

}  // namespace treespan
