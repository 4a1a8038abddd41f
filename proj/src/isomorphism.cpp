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

#include "treespan/isomorphism.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "treespan/connectivity.hpp"

namespace treespan {

namespace {

struct Colored {
  const Graph* g;
  std::vector<int> color;
};

int distinct(const std::vector<int>& c) {
  std::vector<int> s = c;
  std::sort(s.begin(), s.end());
  return static_cast<int>(std::unique(s.begin(), s.end()) - s.begin());
}

// Refines all colorings with shared signatures until stable. Returns false
// when the graphs disagree on some color class size.
bool refine(std::vector<Colored*> items) {
  int classes = distinct(items[0]->color);
  struct Entry {
    std::vector<int> sig;
    int which;
    Vertex v;
  };
  std::vector<Entry> entries;
  for (bool first = true;; first = false) {
    entries.clear();
    for (int w = 0; w < static_cast<int>(items.size()); ++w) {
      const Graph& g = *items[w]->g;
      const auto& color = items[w]->color;
      for (Vertex v = 0; v < g.n(); ++v) {
        Entry e{{color[v]}, w, v};
        for (Vertex x : g.neighbors(v)) e.sig.push_back(color[x]);
        std::sort(e.sig.begin() + 1, e.sig.end());
        entries.push_back(std::move(e));
      }
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.sig < b.sig; });
    int rank = -1;
    std::vector<std::vector<int>> histogram(items.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i == 0 || entries[i].sig != entries[i - 1].sig) {
        ++rank;
        for (auto& h : histogram) h.push_back(0);
      }
      items[entries[i].which]->color[entries[i].v] = rank;
      ++histogram[entries[i].which][rank];
    }
    for (const auto& h : histogram) {
      if (h != histogram[0]) return false;
    }
    if (!first && rank + 1 == classes) return true;
    classes = rank + 1;
  }
}

// First non-singleton color class (by color value), or -1.
int target_cell(const std::vector<int>& color) {
  std::vector<int> count(color.size(), 0);
  for (int c : color) ++count[c];
  for (int c = 0; c < static_cast<int>(count.size()); ++c) {
    if (count[c] > 1) return c;
  }
  return -1;
}

std::vector<int> individualize(const std::vector<int>& color, int cell, Vertex chosen) {
  std::vector<int> out(color.size());
  for (std::size_t x = 0; x < color.size(); ++x) {
    out[x] = 2 * color[x] + (color[x] == cell && static_cast<Vertex>(x) != chosen ? 1 : 0);
  }
  return out;
}

bool twins(const Graph& g, Vertex a, Vertex b) {
  std::vector<Vertex> na, nb;
  for (Vertex x : g.neighbors(a)) {
    if (x != b) na.push_back(x);
  }
  for (Vertex x : g.neighbors(b)) {
    if (x != a) nb.push_back(x);
  }
  return na == nb;
}

std::vector<std::uint64_t> code_of(const Graph& g, const std::vector<int>& position) {
  const int n = g.n();
  std::vector<std::uint64_t> bits((static_cast<std::size_t>(n) * (n - 1) / 2 + 63) / 64, 0);
  for (const auto& e : g.edges()) {
    int i = position[e.u];
    int j = position[e.v];
    if (i > j) std::swap(i, j);
    // Row-major index of (i, j), i < j, with the first row most significant.
    std::size_t index = static_cast<std::size_t>(i) * n - static_cast<std::size_t>(i) * (i + 1) / 2 + (j - i - 1);
    bits[index / 64] |= std::uint64_t{1} << (63 - index % 64);
  }
  return bits;
}

struct CanonSearch {
  const Graph& g;
  std::optional<std::vector<std::uint64_t>> best;
  std::vector<int> best_position;

  void run(std::vector<int> color) {
    Colored c{&g, std::move(color)};
    refine({&c});
    int cell = target_cell(c.color);
    if (cell == -1) {
      auto code = code_of(g, c.color);
      if (!best || code < *best) {
        best = std::move(code);
        best_position = c.color;
      }
      return;
    }
    std::vector<Vertex> members;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (c.color[v] == cell) members.push_back(v);
    }
    // A cell of mutual twins is fixed by transpositions, so one branch
    // covers all.
    bool all_twins = true;
    for (std::size_t i = 1; i < members.size() && all_twins; ++i) all_twins = twins(g, members[0], members[i]);
    if (all_twins) members.resize(1);
    for (Vertex v : members) run(individualize(c.color, cell, v));
  }
};

bool match(Colored a, Colored b) {
  if (!refine({&a, &b})) return false;
  int cell = target_cell(a.color);
  if (cell == -1) {
    std::vector<Vertex> inverse(b.g->n());
    for (Vertex v = 0; v < b.g->n(); ++v) inverse[b.color[v]] = v;
    for (const auto& e : a.g->edges()) {
      if (!b.g->has_edge(inverse[a.color[e.u]], inverse[a.color[e.v]])) return false;
    }
    return true;
  }
  Vertex chosen = 0;
  while (a.color[chosen] != cell) ++chosen;
  for (Vertex v = 0; v < b.g->n(); ++v) {
    if (b.color[v] != cell) continue;
    if (match({a.g, individualize(a.color, cell, chosen)}, {b.g, individualize(b.color, cell, v)})) return true;
  }
  return false;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g, std::vector<Vertex>* perm) {
  if (g.n() > kMaxCanonicalVertices) {
    throw GraphError("canonical form limited to " + std::to_string(kMaxCanonicalVertices) + " vertices");
  }
  CanonicalForm out{g.n(), {}};
  if (g.n() == 0) return out;
  CanonSearch search{g, std::nullopt, {}};
  search.run(std::vector<int>(g.n(), 0));
  out.bits = std::move(*search.best);
  if (perm) *perm = search.best_position;
  return out;
}

Graph canonical_graph(const Graph& g) {
  std::vector<Vertex> perm;
  canonical_form(g, &perm);
  if (g.n() == 0) return g;
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back(make_edge(perm[e.u], perm[e.v]));
  return Graph(g.n(), std::move(edges));
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  if (a.n() == 0) return true;
  return match({&a, std::vector<int>(a.n(), 0)}, {&b, std::vector<int>(b.n(), 0)});
}

std::vector<Graph> all_graphs(int n, bool connected_only) {
  if (n < 1 || n > 8) throw GraphError("all_graphs supports 1 <= n <= 8");
  std::vector<Graph> level = {Graph(1)};
  for (int k = 1; k < n; ++k) {
    std::set<CanonicalForm> seen;
    std::vector<std::pair<CanonicalForm, Graph>> next;
    for (const Graph& g : level) {
      for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        std::vector<Edge> edges = g.edges();
        for (int v = 0; v < k; ++v) {
          if (mask >> v & 1) edges.push_back({v, k});
        }
        Graph h(k + 1, std::move(edges));
        std::vector<Vertex> perm;
        CanonicalForm form = canonical_form(h, &perm);
        if (!seen.insert(form).second) continue;
        std::vector<Edge> relabeled;
        for (const auto& e : h.edges()) relabeled.push_back(make_edge(perm[e.u], perm[e.v]));
        next.emplace_back(std::move(form), Graph(k + 1, std::move(relabeled)));
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    level.clear();
    for (auto& [form, g] : next) level.push_back(std::move(g));
  }
  if (connected_only) std::erase_if(level, [](const Graph& g) { return !is_connected(g); });
  return level;
}

}  // namespace treespan
