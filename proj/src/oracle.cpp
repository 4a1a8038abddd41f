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

#include "treespan/oracle.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "treespan/connectivity.hpp"

namespace treespan {

namespace {

std::string format_count(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

// Union-find with union by size and an undo log, for enumeration.
class RollbackDsu {
 public:
  explicit RollbackDsu(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    log_.push_back(b);
    return true;
  }
  void undo() {
    int b = log_.back();
    log_.pop_back();
    int a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> log_;
};

void require_connected(const Graph& g, const char* who) {
  if (g.n() == 0 || !is_connected(g)) {
    throw GraphError(std::string(who) + " requires a connected graph");
  }
}

}  // namespace

BudgetExceeded::BudgetExceeded(double count, double budget)
    : OracleError("spanning tree count " + format_count(count) + " exceeds budget " +
                  format_count(budget)),
      count_(count) {}

SpanningTree SpanningTree::from_edges(const Graph& g, std::vector<Edge> edges) {
  for (auto& e : edges) e = make_edge(e.u, e.v);
  std::sort(edges.begin(), edges.end());
  if (static_cast<int>(edges.size()) != g.n() - 1) {
    throw GraphError("spanning tree of a graph on " + std::to_string(g.n()) +
                     " vertices needs " + std::to_string(g.n() - 1) + " edges, got " +
                     std::to_string(edges.size()));
  }
  RollbackDsu dsu(g.n());
  for (const auto& e : edges) {
    if (!g.has_edge(e.u, e.v)) throw GraphError("tree edge " + to_string(e) + " is not in the graph");
    if (!dsu.unite(e.u, e.v)) throw GraphError("tree edges contain a cycle through " + to_string(e));
  }
  return SpanningTree(g.n(), std::move(edges));
}

TreeDistance::TreeDistance(int n, const std::vector<Edge>& tree_edges) : depth_(n, -1) {
  std::vector<Vertex> parent(n, 0);
  if (n > 0) {
    std::vector<int> start(n + 1, 0);
    for (const auto& e : tree_edges) {
      ++start[e.u + 1];
      ++start[e.v + 1];
    }
    for (int v = 0; v < n; ++v) start[v + 1] += start[v];
    std::vector<Vertex> adj(start[n]);
    std::vector<int> fill(start.begin(), start.end() - 1);
    for (const auto& e : tree_edges) {
      adj[fill[e.u]++] = e.v;
      adj[fill[e.v]++] = e.u;
    }
    std::vector<Vertex> queue;
    queue.reserve(n);
    queue.push_back(0);
    depth_[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (int i = start[v]; i < start[v + 1]; ++i) {
        Vertex w = adj[i];
        if (depth_[w] == -1) {
          depth_[w] = depth_[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        }
      }
    }
  }
  // Jump table only as tall as the tree.
  const int height = n > 0 ? *std::max_element(depth_.begin(), depth_.end()) : 0;
  while ((1 << levels_) <= height) ++levels_;
  up_.assign(levels_, {});
  up_[0] = std::move(parent);
  for (int k = 1; k < levels_; ++k) {
    up_[k].resize(n);
    for (Vertex v = 0; v < n; ++v) up_[k][v] = up_[k - 1][up_[k - 1][v]];
  }
}

int TreeDistance::distance(Vertex a, Vertex b) const {
  int total = depth_[a] + depth_[b];
  if (depth_[a] < depth_[b]) std::swap(a, b);
  int diff = depth_[a] - depth_[b];
  for (int k = 0; diff != 0; ++k, diff >>= 1) {
    if (diff & 1) a = up_[k][a];
  }
  if (a != b) {
    for (int k = levels_ - 1; k >= 0; --k) {
      if (up_[k][a] != up_[k][b]) {
        a = up_[k][a];
        b = up_[k][b];
      }
    }
    a = up_[0][a];
  }
  return total - 2 * depth_[a];
}

StretchCertificate tree_stretch_factor(const Graph& g, const SpanningTree& tree) {
  if (tree.n() != g.n()) throw GraphError("tree and graph have different vertex counts");
  TreeDistance dist(g.n(), tree.edges());
  StretchCertificate cert{tree, 1, std::nullopt};
  for (const auto& e : g.edges()) {
    int d = dist.distance(e.u, e.v);
    if (d > cert.stretch) {
      cert.stretch = d;
      cert.witness = e;
    }
  }
  return cert;
}

StretchCertificate tree_stretch_factor(const Graph& g, std::vector<Edge> tree_edges) {
  return tree_stretch_factor(g, SpanningTree::from_edges(g, std::move(tree_edges)));
}

double spanning_tree_count(const Graph& g) {
  if (g.n() <= 1) return g.n() == 1 ? 1.0 : 0.0;
  if (!is_connected(g)) return 0.0;
  // Reduced Laplacian: drop the last vertex.
  const int k = g.n() - 1;
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(static_cast<std::size_t>(k) + 2 * g.edges().size());
  for (Vertex v = 0; v < k; ++v) entries.emplace_back(v, v, g.degree(v));
  for (const auto& e : g.edges()) {
    if (e.v < k) {
      entries.emplace_back(e.u, e.v, -1.0);
      entries.emplace_back(e.v, e.u, -1.0);
    }
  }
  Eigen::SparseMatrix<double> laplacian(k, k);
  laplacian.setFromTriplets(entries.begin(), entries.end());
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  lu.compute(laplacian);
  if (lu.info() != Eigen::Success) throw OracleError("matrix-tree factorization failed");
  return std::exp(lu.logAbsDeterminant());
}

void for_each_spanning_tree(const Graph& g, const std::function<bool(const SpanningTree&)>& visit,
                            double budget) {
  require_connected(g, "spanning tree enumeration");
  const double count = spanning_tree_count(g);
  if (count > budget) throw BudgetExceeded(count, budget);
  const int n = g.n();
  const auto& edges = g.edges();
  const int m = g.m();
  RollbackDsu dsu(n);
  std::vector<Edge> chosen;
  chosen.reserve(std::max(n - 1, 0));
  bool stop = false;

  // Whether the chosen edges plus edges[from..] still connect every vertex.
  auto can_span = [&](int from) {
    RollbackDsu probe(n);
    int merges = 0;
    for (const auto& e : chosen) merges += probe.unite(e.u, e.v);
    for (int j = from; j < m && merges < n - 1; ++j) merges += probe.unite(edges[j].u, edges[j].v);
    return merges == n - 1;
  };

  std::function<void(int)> recurse = [&](int i) {
    if (stop) return;
    if (static_cast<int>(chosen.size()) == n - 1) {
      stop = !visit(SpanningTree::from_edges(g, chosen));
      return;
    }
    if (m - i < n - 1 - static_cast<int>(chosen.size())) return;
    const Edge e = edges[i];
    if (dsu.unite(e.u, e.v)) {
      chosen.push_back(e);
      recurse(i + 1);
      chosen.pop_back();
      dsu.undo();
      if (stop) return;
    }
    if (can_span(i + 1)) recurse(i + 1);
  };
  recurse(0);
}

std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g, double budget) {
  std::vector<SpanningTree> out;
  for_each_spanning_tree(g, [&](const SpanningTree& t) {
    out.push_back(t);
    return true;
  }, budget);
  return out;
}

namespace {

// Include-first search over the sorted edge list with bitset adjacency.
// `tree_` holds the chosen forest F, `avail_` holds F plus undecided edges.
// An excluded edge uv is hopeless once its distance in avail_ exceeds t, or
// once F already joins u and v by a path longer than t.
class StretchSearch {
 public:
  StretchSearch(const Graph& g, int t) : g_(g), t_(t), n_(g.n()), edges_(g.edges()) {
    avail_.assign(n_, 0);
    tree_.assign(n_, 0);
    for (const auto& e : edges_) {
      avail_[e.u] |= bit(e.v);
      avail_[e.v] |= bit(e.u);
    }
  }

  std::optional<std::vector<Edge>> run() {
    if (n_ == 1) return std::vector<Edge>{};
    if (recurse(0)) return chosen_;
    return std::nullopt;
  }

 private:
  static std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

  // Distance from a to b using adjacency rows `adj`, capped at `limit`
  // (returns limit + 1 when farther or unreachable).
  int capped_distance(const std::vector<std::uint64_t>& adj, Vertex a, Vertex b, int limit) const {
    std::uint64_t reach = bit(a);
    std::uint64_t frontier = reach;
    for (int d = 1; d <= limit; ++d) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
      frontier = next & ~reach;
      if (frontier & bit(b)) return d;
      if (frontier == 0) break;
      reach |= frontier;
    }
    return limit + 1;
  }

  std::uint64_t component(const std::vector<std::uint64_t>& adj, Vertex a) const {
    std::uint64_t reach = bit(a);
    std::uint64_t frontier = reach;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
      frontier = next & ~reach;
      reach |= frontier;
    }
    return reach;
  }

  bool feasible() const {
    const std::uint64_t all = n_ == 64 ? ~std::uint64_t{0} : (bit(n_) - 1);
    if (component(avail_, 0) != all) return false;
    for (const auto& e : excluded_) {
      if (component(tree_, e.u) & bit(e.v)) {
        if (capped_distance(tree_, e.u, e.v, t_) > t_) return false;
      } else if (capped_distance(avail_, e.u, e.v, t_) > t_) {
        return false;
      }
    }
    return true;
  }

  bool leaf_ok() const {
    for (const auto& e : edges_) {
      if (capped_distance(tree_, e.u, e.v, t_) > t_) return false;
    }
    return true;
  }

  bool recurse(std::size_t i) {
    if (static_cast<int>(chosen_.size()) == n_ - 1) return leaf_ok();
    if (edges_.size() - i < static_cast<std::size_t>(n_ - 1) - chosen_.size()) return false;
    const Edge e = edges_[i];
    if (!(component(tree_, e.u) & bit(e.v))) {
      tree_[e.u] |= bit(e.v);
      tree_[e.v] |= bit(e.u);
      chosen_.push_back(e);
      if (feasible() && recurse(i + 1)) return true;
      chosen_.pop_back();
      tree_[e.u] &= ~bit(e.v);
      tree_[e.v] &= ~bit(e.u);
    }
    avail_[e.u] &= ~bit(e.v);
    avail_[e.v] &= ~bit(e.u);
    excluded_.push_back(e);
    if (feasible() && recurse(i + 1)) return true;
    excluded_.pop_back();
    avail_[e.u] |= bit(e.v);
    avail_[e.v] |= bit(e.u);
    return false;
  }

  const Graph& g_;
  int t_;
  int n_;
  const std::vector<Edge>& edges_;
  std::vector<std::uint64_t> avail_;
  std::vector<std::uint64_t> tree_;
  std::vector<Edge> excluded_;
  std::vector<Edge> chosen_;
};

}  // namespace

std::optional<StretchCertificate> is_t_admissible_bruteforce(const Graph& g, int t) {
  require_connected(g, "t-admissibility search");
  if (t < 1) throw GraphError("stretch bound t must be at least 1");
  if (g.n() > kMaxOracleVertices) {
    throw OracleError("exhaustive search supports at most " + std::to_string(kMaxOracleVertices) +
                      " vertices");
  }
  StretchSearch search(g, t);
  auto tree = search.run();
  if (!tree) return std::nullopt;
  return tree_stretch_factor(g, SpanningTree::from_edges(g, std::move(*tree)));
}

StretchCertificate exact_stretch_index(const Graph& g, double budget) {
  require_connected(g, "exact stretch index");
  const double count = spanning_tree_count(g);
  if (count > budget) throw BudgetExceeded(count, budget);
  for (int t = 1; t < std::max(g.n(), 2); ++t) {
    if (auto cert = is_t_admissible_bruteforce(g, t)) return *cert;
  }
  throw OracleError("no spanning tree found");  // unreachable for connected graphs
}

}  // namespace treespan
