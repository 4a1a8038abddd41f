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

#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "treespan/graph.hpp"
#include "treespan/isomorphism.hpp"

namespace fx {

using treespan::Edge;
using treespan::Graph;

inline Graph make(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> out;
  for (auto [u, v] : edges) out.push_back(treespan::make_edge(u, v));
  return Graph(n, std::move(out));
}

// K4 without the edge 1-3: vertices 0 and 2 have degree 3.
inline Graph k4_minus_e() { return make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}}); }

// Two triangles sharing vertex 2.
inline Graph bowtie() { return make(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

// Complement of P5: square 0-1-2-3 with roof vertex 4 on 0 and 1.
inline Graph house() { return make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}}); }

// Two K4's sharing the edge 0-1.
inline Graph two_k4_sharing_edge() {
  return make(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {1, 4}, {1, 5}, {4, 5}});
}

/// Connected graphs on exactly n vertices, computed once per n.
inline const std::vector<Graph>& connected(int n) {
  static std::map<int, std::vector<Graph>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, treespan::all_graphs(n, true)).first;
  return it->second;
}

inline std::vector<Graph> connected_upto(int max_n, int min_n = 1) {
  std::vector<Graph> out;
  for (int n = min_n; n <= max_n; ++n) out.insert(out.end(), connected(n).begin(), connected(n).end());
  return out;
}

}  // namespace fx
