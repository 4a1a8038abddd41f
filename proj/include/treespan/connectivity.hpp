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

#include <optional>
#include <utility>
#include <vector>

#include "treespan/graph.hpp"

namespace treespan {

inline constexpr int kUnreachable = -1;

/// Hop distances from `source`; unreachable vertices get kUnreachable.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Components of the complement graph in O(n + m) without building it.
std::vector<std::vector<Vertex>> complement_components(const Graph& g);

/// Biconnected blocks via an iterative low-point search.
struct BlockDecomposition {
  std::vector<Vertex> cut_vertices;         // ascending
  std::vector<Edge> bridges;                // sorted
  std::vector<std::vector<Vertex>> blocks;  // each sorted; ordered lexicographically
};

BlockDecomposition block_decomposition(const Graph& g);

std::vector<Vertex> cut_vertices(const Graph& g);

/// Summary of the low-order connectivity of a graph.
///
/// Conventions for tiny graphs: K1 and K2 are connected but never
/// biconnected (biconnectivity needs n >= 3). is_triconnected means
/// biconnected with no separating pair, so K3 counts as triconnected.
struct ConnectivityReport {
  bool connected = false;
  std::vector<Vertex> cut_vertices;
  std::vector<Edge> bridges;
  bool is_biconnected = false;
  bool is_triconnected = false;
};

ConnectivityReport connectivity(const Graph& g);

/// Some pair {a, b} (a < b, lexicographically first) whose removal leaves a
/// disconnected graph, scanning every first vertex. O(n (n + m)).
std::optional<std::pair<Vertex, Vertex>> find_separating_pair(const Graph& g);

/// All separating pairs, sorted.
std::vector<std::pair<Vertex, Vertex>> separating_pairs(const Graph& g);

/// Maximal vertex sets whose induced subgraph is connected and has no two
/// vertices whose removal disconnects it. Sets may overlap. Each set is
/// sorted; the list is sorted lexicographically.
struct TriconnectedComponents {
  std::vector<std::vector<Vertex>> components;
};

/// Requires a connected graph; throws GraphError otherwise.
TriconnectedComponents triconnected_components(const Graph& g);

/// The members of triconnected_components with at least four vertices,
/// i.e. the maximal 3-connected induced subgraphs.
std::vector<std::vector<Vertex>> maximal_triconnected_sets(const Graph& g);

}  // namespace treespan
