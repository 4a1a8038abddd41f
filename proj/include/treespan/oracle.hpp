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

#include <functional>
#include <optional>
#include <vector>

#include "treespan/graph.hpp"

namespace treespan {

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when the matrix-tree count of a graph exceeds the caller's budget.
class BudgetExceeded : public OracleError {
 public:
  BudgetExceeded(double count, double budget);
  double count() const { return count_; }

 private:
  double count_;
};

inline constexpr double kDefaultTreeBudget = 1e7;

/// Largest graph the exhaustive searches accept (adjacency fits a word).
inline constexpr int kMaxOracleVertices = 64;

/// A set of n-1 edges of some graph forming a spanning tree, sorted.
class SpanningTree {
 public:
  /// Validates that `edges` are edges of g, acyclic and spanning.
  static SpanningTree from_edges(const Graph& g, std::vector<Edge> edges);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  Graph as_graph() const { return Graph(n_, edges_); }

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
  friend auto operator<=>(const SpanningTree& a, const SpanningTree& b) {
    return a.edges_ <=> b.edges_;
  }

 private:
  SpanningTree(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {}

  int n_ = 0;
  std::vector<Edge> edges_;
};

/// A spanning tree together with its stretch factor: the largest tree
/// distance between the endpoints of an edge of the graph. The witness is a
/// graph edge outside the tree attaining the stretch (absent iff stretch 1).
struct StretchCertificate {
  SpanningTree tree;
  int stretch = 1;
  std::optional<Edge> witness;
};

/// Exact stretch of `tree` in g. Ties for the witness go to the
/// lexicographically smallest edge. Throws GraphError if `tree` is not a
/// spanning tree of g.
StretchCertificate tree_stretch_factor(const Graph& g, const SpanningTree& tree);
StretchCertificate tree_stretch_factor(const Graph& g, std::vector<Edge> tree_edges);

/// Number of spanning trees by Kirchhoff's theorem (floating point; exact to
/// rounding for counts well below 2^50). Zero for disconnected graphs.
double spanning_tree_count(const Graph& g);

/// Calls `visit` once per spanning tree, in lexicographic order of the sorted
/// edge sets, until it returns false. Throws BudgetExceeded when the
/// matrix-tree count exceeds `budget` and GraphError when g is disconnected.
void for_each_spanning_tree(const Graph& g, const std::function<bool(const SpanningTree&)>& visit,
                            double budget = kDefaultTreeBudget);

std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g,
                                                   double budget = kDefaultTreeBudget);

/// Searches for a spanning tree of stretch at most t. Partial trees are cut
/// as soon as an excluded edge can no longer be closed within t. Returns the
/// lexicographically smallest qualifying tree, or nullopt.
std::optional<StretchCertificate> is_t_admissible_bruteforce(const Graph& g, int t);

/// The tree stretch index with a certificate: the minimum stretch over all
/// spanning trees, attained by the lexicographically smallest minimizing
/// tree. Throws BudgetExceeded when the tree count exceeds `budget`.
StretchCertificate exact_stretch_index(const Graph& g, double budget = kDefaultTreeBudget);

/// Tree distances with O(log n) queries (binary lifting).
class TreeDistance {
 public:
  TreeDistance(int n, const std::vector<Edge>& tree_edges);
  int distance(Vertex a, Vertex b) const;

 private:
  int levels_ = 1;
  std::vector<int> depth_;
  std::vector<std::vector<Vertex>> up_;
};

}  // namespace treespan
