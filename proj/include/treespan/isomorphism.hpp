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
#include <vector>

#include "treespan/graph.hpp"

namespace treespan {

inline constexpr int kMaxCanonicalVertices = 12;

/// Upper-triangle adjacency bits of the canonically relabeled graph.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint64_t> bits;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Individualization-refinement canonical labeling; exponential in the worst
/// case, so limited to kMaxCanonicalVertices. `perm`, when given, receives
/// the canonical position of each vertex.
CanonicalForm canonical_form(const Graph& g, std::vector<Vertex>* perm = nullptr);

/// Canonically relabeled copy: isomorphic inputs give identical outputs.
Graph canonical_graph(const Graph& g);

/// Joint color refinement plus backtracking; any size.
bool are_isomorphic(const Graph& a, const Graph& b);

/// Every graph on n vertices up to isomorphism (n <= 8), canonically
/// labeled and ordered by canonical form.
std::vector<Graph> all_graphs(int n, bool connected_only);

}  // namespace treespan
