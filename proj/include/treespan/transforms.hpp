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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treespan/graph.hpp"
#include "treespan/recognition.hpp"

namespace treespan {

// Named graphs.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);
/// Triangle 0,1,2 with pendants 3,4,5 on 0,1,2.
Graph net_graph();
/// Triangle 0,1,2 with 3~{1,2}, 4~{0,2}, 5~{0,1}.
Graph sun3_graph();

/// i ~ j iff their cyclic distance is at most k. Requires n >= 3, 1 <= k < n/2.
Graph cycle_power(int n, int k);

Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);
/// Vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

// Inflation.

struct InflationSpec {
  Graph base;
  /// Clique size per base vertex; at least max(1, degree).
  std::vector<int> sizes;
  /// Optional per base edge (in sorted edge order): the clique-local index of
  /// the endpoint used on the u side and on the v side. Default: round robin.
  std::optional<std::vector<std::pair<int, int>>> representatives;
};

/// Sizes equal to the degrees (isolated vertices get 1): the plain inflation.
InflationSpec degree_inflation(const Graph& base);

struct Inflation {
  Graph graph;
  InflationWitness witness;
};

/// Clique of base vertex v occupies a contiguous id block, in v order.
Inflation inflate(const InflationSpec& spec);

/// Vertex n + i subdivides the i-th edge in sorted order.
Graph subdivide(const Graph& g);

struct LineGraph {
  Graph graph;
  std::vector<Edge> origin;  // origin[i] is the edge of g behind vertex i
};

LineGraph line_graph(const Graph& g);

// Seeded generators.

/// Class name plus key=value parameters. Recognized keys per class:
///   split:          n, clique, maxdeg
///   cograph:        n
///   thin_spider / thick_spider: k, r (none|K2|P3|cograph), r_size
///   almost_spider:  k, case (a..h), r, r_size
///   p4_sparse / p4_tidy: n
///   zero_two:       k1, k2, cross (matching|random|none), p
///   inflation:      base (cycle|complete|path|star|gnp), base_n, extra, p
///   cycle / complete / path / star: n
///   gnp:            n, p, connected (0|1)
///   cycle_power:    n, k
///   net / sun3:     no parameters
/// plus shuffle (0|1) for a seeded random relabeling.
struct GenerateSpec {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> params;

  std::optional<std::string> get(const std::string& key) const;
  int get_int(const std::string& key, int fallback) const;
  double get_double(const std::string& key, double fallback) const;
};

/// Parses "kind" followed by "key=value" tokens.
GenerateSpec parse_generate_spec(const std::string& kind, const std::vector<std::string>& kv);

/// A member of the class, built from the class's defining operations.
/// Deterministic per (spec, seed). Throws GraphError on bad parameters.
Graph generate(const GenerateSpec& spec, std::uint64_t seed);

std::vector<std::string> generator_kinds();

}  // namespace treespan
