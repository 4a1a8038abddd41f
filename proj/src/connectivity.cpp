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

#include "treespan/connectivity.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>

namespace treespan {

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  if (source < 0 || source >= g.n()) throw GraphError("bfs source out of range");
  std::vector<int> dist(g.n(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.n());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    out.emplace_back();
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

bool is_tree(const Graph& g) { return g.n() >= 1 && g.m() == g.n() - 1 && is_connected(g); }

std::vector<std::vector<Vertex>> complement_components(const Graph& g) {
  const int n = g.n();
  // Doubly linked list of unvisited vertices; scanning it from v keeps only
  // neighbors of v, so the total work is O(n + m).
  std::vector<Vertex> next(n + 1), prev(n + 1);
  const Vertex head = n;
  next[head] = head;
  prev[head] = head;
  for (Vertex v = 0; v < n; ++v) {
    prev[v] = prev[head];
    next[v] = head;
    next[prev[head]] = v;
    prev[head] = v;
  }
  auto unlink = [&](Vertex v) {
    next[prev[v]] = next[v];
    prev[next[v]] = prev[v];
  };
  std::vector<char> mark(n, 0);
  std::vector<std::vector<Vertex>> out;
  while (next[head] != head) {
    Vertex s = next[head];
    unlink(s);
    out.push_back({s});
    for (std::size_t i = 0; i < out.back().size(); ++i) {
      Vertex v = out.back()[i];
      for (Vertex w : g.neighbors(v)) mark[w] = 1;
      for (Vertex u = next[head]; u != head;) {
        Vertex after = next[u];
        if (!mark[u]) {
          unlink(u);
          out.back().push_back(u);
        }
        u = after;
      }
      for (Vertex w : g.neighbors(v)) mark[w] = 0;
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

namespace {

// Iterative low-point search over g minus the vertices flagged in `removed`.
// Reports cut vertices, bridges and the vertex sets of biconnected blocks.
struct LowPoint {
  std::vector<char> is_cut;
  std::vector<Edge> bridges;
  std::vector<std::vector<Vertex>> blocks;
};

LowPoint low_point_search(const Graph& g, const std::vector<char>* removed, bool want_blocks) {
  const int n = g.n();
  LowPoint out;
  out.is_cut.assign(n, 0);
  std::vector<int> order(n, -1), low(n, 0);
  std::vector<Vertex> parent(n, -1);
  std::vector<std::int64_t> cursor(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<Vertex> stack;
  int counter = 0;
  auto gone = [&](Vertex v) { return removed != nullptr && (*removed)[v]; };
  for (Vertex root = 0; root < n; ++root) {
    if (gone(root) || order[root] != -1) continue;
    order[root] = low[root] = counter++;
    int root_children = 0;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      auto nb = g.neighbors(v);
      if (cursor[v] < static_cast<std::int64_t>(nb.size())) {
        Vertex w = nb[cursor[v]++];
        if (gone(w) || w == parent[v]) continue;
        if (order[w] == -1) {
          parent[w] = v;
          order[w] = low[w] = counter++;
          if (want_blocks) edge_stack.push_back(make_edge(v, w));
          if (v == root) ++root_children;
          stack.push_back(w);
        } else if (order[w] < order[v]) {
          low[v] = std::min(low[v], order[w]);
          if (want_blocks) edge_stack.push_back(make_edge(v, w));
        }
        continue;
      }
      stack.pop_back();
      Vertex p = parent[v];
      if (p == -1) continue;
      low[p] = std::min(low[p], low[v]);
      if (low[v] > order[p]) out.bridges.push_back(make_edge(p, v));
      if (low[v] >= order[p]) {
        if (p != root) out.is_cut[p] = 1;
        if (want_blocks) {
          std::vector<Vertex> block;
          Edge tree_edge = make_edge(p, v);
          while (!edge_stack.empty()) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e.u);
            block.push_back(e.v);
            if (e == tree_edge) break;
          }
          std::sort(block.begin(), block.end());
          block.erase(std::unique(block.begin(), block.end()), block.end());
          out.blocks.push_back(std::move(block));
        }
      }
    }
    if (root_children >= 2) out.is_cut[root] = 1;
    if (want_blocks && root_children == 0) out.blocks.push_back({root});
  }
  return out;
}

bool connected_without(const Graph& g, const std::vector<char>& removed) {
  Vertex start = -1;
  int alive = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!removed[v]) {
      ++alive;
      if (start == -1) start = v;
    }
  }
  if (alive <= 1) return true;
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> stack = {start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!removed[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == alive;
}

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
  auto lp = low_point_search(g, nullptr, true);
  BlockDecomposition out;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (lp.is_cut[v]) out.cut_vertices.push_back(v);
  }
  out.bridges = std::move(lp.bridges);
  std::sort(out.bridges.begin(), out.bridges.end());
  out.blocks = std::move(lp.blocks);
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

std::vector<Vertex> cut_vertices(const Graph& g) {
  auto lp = low_point_search(g, nullptr, false);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (lp.is_cut[v]) out.push_back(v);
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> separating_pairs(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  std::vector<char> removed(g.n(), 0);
  for (Vertex a = 0; a < g.n(); ++a) {
    removed[a] = 1;
    auto lp = low_point_search(g, &removed, false);
    bool split = !connected_without(g, removed);
    for (Vertex b = a + 1; b < g.n(); ++b) {
      // Removing a then b disconnects iff G-a is already disconnected (and
      // b is not the only vertex of a side) or b is a cut vertex of G-a.
      if (lp.is_cut[b]) {
        out.emplace_back(a, b);
      } else if (split) {
        removed[b] = 1;
        if (!connected_without(g, removed)) out.emplace_back(a, b);
        removed[b] = 0;
      }
    }
    removed[a] = 0;
  }
  return out;
}

std::optional<std::pair<Vertex, Vertex>> find_separating_pair(const Graph& g) {
  std::vector<char> removed(g.n(), 0);
  for (Vertex a = 0; a < g.n(); ++a) {
    removed[a] = 1;
    bool split = !connected_without(g, removed);
    auto lp = low_point_search(g, &removed, false);
    for (Vertex b = a + 1; b < g.n(); ++b) {
      if (lp.is_cut[b]) return std::make_pair(a, b);
      if (split) {
        removed[b] = 1;
        bool still_split = !connected_without(g, removed);
        removed[b] = 0;
        if (still_split) return std::make_pair(a, b);
      }
    }
    removed[a] = 0;
  }
  return std::nullopt;
}

ConnectivityReport connectivity(const Graph& g) {
  ConnectivityReport r;
  r.connected = is_connected(g);
  auto lp = low_point_search(g, nullptr, false);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (lp.is_cut[v]) r.cut_vertices.push_back(v);
  }
  r.bridges = std::move(lp.bridges);
  std::sort(r.bridges.begin(), r.bridges.end());
  r.is_biconnected = r.connected && g.n() >= 3 && r.cut_vertices.empty();
  r.is_triconnected = r.is_biconnected && !find_separating_pair(g).has_value();
  return r;
}

namespace {

// Collects the maximal 3-connected induced vertex sets of size >= 4 inside
// `vertices`, which must induce a connected subgraph. Any such set lies
// inside a single piece of a split along a cut vertex or separating pair, so
// one split per level suffices.
void collect_triconnected(const Graph& g, std::vector<Vertex> vertices,
                          std::vector<std::vector<Vertex>>& out) {
  if (vertices.size() < 4) return;
  Subgraph sub = induced_subgraph(g, vertices);
  std::vector<Vertex> separator;
  if (auto cuts = cut_vertices(sub.graph); !cuts.empty()) {
    separator = {cuts.front()};
  } else if (auto pair = find_separating_pair(sub.graph)) {
    separator = {pair->first, pair->second};
  } else {
    out.push_back(std::move(sub.to_parent));
    return;
  }
  std::vector<char> removed(sub.graph.n(), 0);
  for (Vertex s : separator) removed[s] = 1;
  std::vector<char> seen(sub.graph.n(), 0);
  for (Vertex s = 0; s < sub.graph.n(); ++s) {
    if (removed[s] || seen[s]) continue;
    std::vector<Vertex> piece;
    std::vector<Vertex> stack = {s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      piece.push_back(sub.to_parent[v]);
      for (Vertex w : sub.graph.neighbors(v)) {
        if (!removed[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    for (Vertex x : separator) piece.push_back(sub.to_parent[x]);
    std::sort(piece.begin(), piece.end());
    collect_triconnected(g, std::move(piece), out);
  }
}

}  // namespace

std::vector<std::vector<Vertex>> maximal_triconnected_sets(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  for (auto& comp : connected_components(g)) collect_triconnected(g, std::move(comp), out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TriconnectedComponents triconnected_components(const Graph& g) {
  if (g.n() == 0 || !is_connected(g)) {
    throw GraphError("triconnected_components requires a connected graph");
  }
  TriconnectedComponents result;
  if (g.n() <= 3) {
    std::vector<Vertex> all(g.n());
    for (Vertex v = 0; v < g.n(); ++v) all[v] = v;
    result.components.push_back(std::move(all));
    return result;
  }
  auto large = maximal_triconnected_sets(g);
  // Membership lists for the containment test of 3-sets.
  std::vector<std::vector<int>> member_of(g.n());
  for (int i = 0; i < static_cast<int>(large.size()); ++i) {
    for (Vertex v : large[i]) member_of[v].push_back(i);
  }
  auto inside_large = [&](const std::vector<Vertex>& s) {
    for (int c : member_of[s[0]]) {
      bool all = true;
      for (std::size_t k = 1; k < s.size() && all; ++k) {
        all = std::binary_search(member_of[s[k]].begin(), member_of[s[k]].end(), c);
      }
      if (all) return true;
    }
    return false;
  };
  std::set<std::vector<Vertex>> small;
  for (Vertex mid = 0; mid < g.n(); ++mid) {
    auto nb = g.neighbors(mid);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        std::vector<Vertex> s = {mid, nb[i], nb[j]};
        std::sort(s.begin(), s.end());
        if (!inside_large(s)) small.insert(std::move(s));
      }
    }
  }
  result.components = std::move(large);
  result.components.insert(result.components.end(), small.begin(), small.end());
  std::sort(result.components.begin(), result.components.end());
  return result;
}

}  // namespace treespan
