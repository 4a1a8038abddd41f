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

#include "treespan/transforms.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>

#include "treespan/connectivity.hpp"

namespace treespan {

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
  }
  return Graph(a + b, std::move(edges));
}

Graph net_graph() { return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}}); }

Graph sun3_graph() {
  return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {2, 4}, {0, 5}, {1, 5}});
}

Graph cycle_power(int n, int k) {
  if (n < 3) throw GraphError("cycle power needs n >= 3");
  if (k < 1 || 2 * k >= n) throw GraphError("cycle power needs 1 <= k < n/2");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int d = 1; d <= k; ++d) edges.push_back(make_edge(i, (i + d) % n));
  }
  return Graph(n, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const auto& e : b.edges()) edges.push_back({e.u + a.n(), e.v + a.n()});
  return Graph(a.n() + b.n(), std::move(edges));
}

Graph join(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const auto& e : b.edges()) edges.push_back({e.u + a.n(), e.v + a.n()});
  for (Vertex u = 0; u < a.n(); ++u) {
    for (Vertex v = 0; v < b.n(); ++v) edges.push_back({u, a.n() + v});
  }
  return Graph(a.n() + b.n(), std::move(edges));
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  if (static_cast<int>(perm.size()) != g.n()) throw GraphError("relabel: permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.m());
  for (const auto& e : g.edges()) edges.push_back(make_edge(perm[e.u], perm[e.v]));
  return Graph(g.n(), std::move(edges));
}

// ---------------------------------------------------------------------------

InflationSpec degree_inflation(const Graph& base) {
  InflationSpec spec{base, std::vector<int>(base.n()), std::nullopt};
  for (Vertex v = 0; v < base.n(); ++v) spec.sizes[v] = std::max(1, base.degree(v));
  return spec;
}

Inflation inflate(const InflationSpec& spec) {
  const Graph& base = spec.base;
  if (static_cast<int>(spec.sizes.size()) != base.n()) throw GraphError("inflate: one size per base vertex");
  std::vector<int> offset(base.n() + 1, 0);
  for (Vertex v = 0; v < base.n(); ++v) {
    if (spec.sizes[v] < std::max(1, base.degree(v))) {
      throw GraphError("inflate: clique of vertex " + std::to_string(v) + " has size " +
                       std::to_string(spec.sizes[v]) + " < degree " + std::to_string(base.degree(v)));
    }
    offset[v + 1] = offset[v] + spec.sizes[v];
  }
  if (spec.representatives && static_cast<int>(spec.representatives->size()) != base.m()) {
    throw GraphError("inflate: one representative pair per base edge");
  }
  std::vector<Edge> edges;
  CliqueCover cover;
  for (Vertex v = 0; v < base.n(); ++v) {
    std::vector<Vertex> clique;
    for (int i = offset[v]; i < offset[v + 1]; ++i) {
      clique.push_back(i);
      for (int j = i + 1; j < offset[v + 1]; ++j) edges.push_back({i, j});
    }
    cover.cliques.push_back(std::move(clique));
  }
  std::vector<int> next(base.n(), 0);
  std::vector<char> used(offset[base.n()], 0);
  for (int i = 0; i < base.m(); ++i) {
    const Edge& e = base.edges()[i];
    int ru = next[e.u]++;
    int rv = next[e.v]++;
    if (spec.representatives) std::tie(ru, rv) = (*spec.representatives)[i];
    if (ru < 0 || ru >= spec.sizes[e.u] || rv < 0 || rv >= spec.sizes[e.v]) {
      throw GraphError("inflate: representative out of range for base edge " + to_string(e));
    }
    Vertex a = offset[e.u] + ru;
    Vertex b = offset[e.v] + rv;
    if (used[a]++ || used[b]++) {
      throw GraphError("inflate: representative clash at base edge " + to_string(e));
    }
    edges.push_back({a, b});
  }
  Inflation out;
  out.graph = Graph(offset[base.n()], std::move(edges));
  out.witness = witness_from_cover(out.graph, std::move(cover));
  return out;
}

Graph subdivide(const Graph& g) {
  std::vector<Edge> edges;
  edges.reserve(2 * static_cast<std::size_t>(g.m()));
  for (int i = 0; i < g.m(); ++i) {
    const Edge& e = g.edges()[i];
    edges.push_back({e.u, g.n() + i});
    edges.push_back({e.v, g.n() + i});
  }
  return Graph(g.n() + g.m(), std::move(edges));
}

LineGraph line_graph(const Graph& g) {
  // Edge ids are positions in the sorted edge list; incident edges of each
  // vertex form a clique.
  std::vector<std::vector<int>> incident(g.n());
  for (int i = 0; i < g.m(); ++i) {
    incident[g.edges()[i].u].push_back(i);
    incident[g.edges()[i].v].push_back(i);
  }
  std::vector<Edge> edges;
  for (const auto& list : incident) {
    for (std::size_t a = 0; a < list.size(); ++a) {
      for (std::size_t b = a + 1; b < list.size(); ++b) edges.push_back(make_edge(list[a], list[b]));
    }
  }
  // Two edges share at most one endpoint in a simple graph, so no duplicates.
  return {Graph(g.m(), std::move(edges)), g.edges()};
}

// ---------------------------------------------------------------------------

std::optional<std::string> GenerateSpec::get(const std::string& key) const {
  for (const auto& [k, v] : params) {
    if (k == key) return v;
  }
  return std::nullopt;
}

int GenerateSpec::get_int(const std::string& key, int fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  int out = 0;
  auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
  if (ec != std::errc() || ptr != v->data() + v->size()) {
    throw GraphError("parameter " + key + " expects an integer, got '" + *v + "'");
  }
  return out;
}

double GenerateSpec::get_double(const std::string& key, double fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  try {
    std::size_t used = 0;
    double out = std::stod(*v, &used);
    if (used != v->size()) throw std::invalid_argument(*v);
    return out;
  } catch (const std::exception&) {
    throw GraphError("parameter " + key + " expects a number, got '" + *v + "'");
  }
}

GenerateSpec parse_generate_spec(const std::string& kind, const std::vector<std::string>& kv) {
  GenerateSpec spec{kind, {}};
  for (const auto& token : kv) {
    auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0) throw GraphError("expected key=value, got '" + token + "'");
    spec.params.emplace_back(token.substr(0, eq), token.substr(eq + 1));
  }
  return spec;
}

std::vector<std::string> generator_kinds() {
  return {"split",    "cograph",   "thin_spider", "thick_spider", "almost_spider", "p4_sparse", "p4_tidy",
          "zero_two", "inflation", "cycle",       "complete",     "path",          "star",      "gnp",
          "cycle_power", "net", "sun3"};
}

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

void require(bool ok, const std::string& what) {
  if (!ok) throw GraphError("generate: " + what);
}

// Vertices 0..k-1 form K, k..2k-1 form S (s = k + i pairs with K vertex i),
// then R.
Graph spider(int k, bool thick, const Graph& r) {
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) edges.push_back({i, j});
    for (int j = 0; j < k; ++j) {
      if ((i == j) != thick) edges.push_back({j, k + i});
    }
    for (int x = 0; x < r.n(); ++x) edges.push_back({i, 2 * k + x});
  }
  for (const auto& e : r.edges()) edges.push_back({2 * k + e.u, 2 * k + e.v});
  return Graph(2 * k + r.n(), std::move(edges));
}

Graph add_twin(const Graph& g, Vertex of, bool true_twin) {
  std::vector<Edge> edges = g.edges();
  const Vertex added = g.n();
  for (Vertex w : g.neighbors(of)) edges.push_back({w, added});
  if (true_twin) edges.push_back({of, added});
  return Graph(g.n() + 1, std::move(edges));
}

Graph random_cograph(Rng& rng, int n, bool connected) {
  if (n == 1) return Graph(1);
  const int parts = uniform(rng, 2, std::min(n, 3));
  std::vector<int> sizes(parts, 1);
  for (int left = n - parts; left > 0; --left) ++sizes[uniform(rng, 0, parts - 1)];
  const bool as_join = connected || coin(rng);
  Graph out = random_cograph(rng, sizes[0], false);
  for (int i = 1; i < parts; ++i) {
    Graph child = random_cograph(rng, sizes[i], false);
    out = as_join ? join(out, child) : disjoint_union(out, child);
  }
  return out;
}

Graph small_prime(int which) {
  switch (which) {
    case 0: return path_graph(5);
    case 1: return cycle_graph(5);
    default: return complement(path_graph(5));
  }
}

// Operations 0 (union), 1 (join) and 2 (spider); tidy adds almost-spiders
// and the five-vertex bases.
Graph random_few_p4(Rng& rng, int n, bool connected, bool tidy) {
  if (n == 1) return Graph(1);
  std::vector<int> ops;
  if (!connected) ops.push_back(0);
  ops.push_back(1);
  if (n >= 4) ops.push_back(2);
  if (tidy && n >= 5) ops.push_back(3);
  if (tidy && n == 5) ops.push_back(4);
  const int op = ops[uniform(rng, 0, static_cast<int>(ops.size()) - 1)];
  if (op == 0 || op == 1) {
    int left = uniform(rng, 1, n - 1);
    Graph a = random_few_p4(rng, left, false, tidy);
    Graph b = random_few_p4(rng, n - left, false, tidy);
    return op == 0 ? disjoint_union(a, b) : join(a, b);
  }
  if (op == 4) return small_prime(uniform(rng, 0, 2));
  const int spare = op == 3 ? n - 1 : n;
  const int k = uniform(rng, 2, spare / 2);
  const bool thick = k >= 3 && coin(rng);
  const int r = spare - 2 * k;
  Graph base = spider(k, thick, r > 0 ? random_few_p4(rng, r, false, tidy) : Graph(0));
  if (op == 2) return base;
  const Vertex of = coin(rng) ? uniform(rng, 0, k - 1) : uniform(rng, k, 2 * k - 1);
  return add_twin(base, of, coin(rng));
}

Graph spider_r(Rng& rng, const GenerateSpec& spec) {
  const std::string r = spec.get("r").value_or("none");
  const int r_size = spec.get_int("r_size", 0);
  if (r == "none") return Graph(r_size);
  if (r == "K2") return complete_graph(2);
  if (r == "P3") return path_graph(3);
  if (r == "cograph") {
    require(r_size >= 1, "r=cograph needs r_size >= 1");
    return random_cograph(rng, r_size, false);
  }
  throw GraphError("generate: unknown r '" + r + "' (none|K2|P3|cograph)");
}

Graph connect_components(const Graph& g) {
  auto comps = connected_components(g);
  if (comps.size() <= 1) return g;
  std::vector<Edge> edges = g.edges();
  for (std::size_t i = 1; i < comps.size(); ++i) edges.push_back(make_edge(comps[i - 1][0], comps[i][0]));
  return Graph(g.n(), std::move(edges));
}

Graph gnp(Rng& rng, int n, double p) {
  std::vector<Edge> edges;
  std::bernoulli_distribution bit(p);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (bit(rng)) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

Graph build(const GenerateSpec& spec, Rng& rng) {
  const std::string& kind = spec.kind;
  const int n = spec.get_int("n", 8);
  if (kind == "cycle") return cycle_graph(n);
  if (kind == "cycle_power") return cycle_power(n, spec.get_int("k", 2));
  if (kind == "net") return net_graph();
  if (kind == "sun3") return sun3_graph();
  if (kind == "complete") return complete_graph(n);
  if (kind == "path") {
    require(n >= 1, "n >= 1");
    return path_graph(n);
  }
  if (kind == "star") {
    require(n >= 1, "n >= 1");
    return star_graph(n - 1);
  }
  if (kind == "gnp") {
    require(n >= 1, "n >= 1");
    Graph g = gnp(rng, n, spec.get_double("p", 0.5));
    return spec.get_int("connected", 1) ? connect_components(g) : g;
  }
  if (kind == "split") {
    require(n >= 2, "split needs n >= 2");
    const int clique = spec.get_int("clique", std::max(1, n / 3));
    require(clique >= 1 && clique < n, "split needs 1 <= clique < n");
    const int max_degree = std::min(clique, spec.get_int("maxdeg", clique));
    require(max_degree >= 1, "maxdeg >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < clique; ++i) {
      for (int j = i + 1; j < clique; ++j) edges.push_back({i, j});
    }
    std::vector<int> pool(clique);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> pick;
    for (int y = clique; y < n; ++y) {
      const int d = uniform(rng, 1, max_degree);
      pick.clear();
      std::sample(pool.begin(), pool.end(), std::back_inserter(pick), d, rng);
      for (int x : pick) edges.push_back({x, y});
    }
    return Graph(n, std::move(edges));
  }
  if (kind == "cograph") {
    require(n >= 1, "n >= 1");
    return random_cograph(rng, n, spec.get_int("connected", 1) != 0);
  }
  if (kind == "p4_sparse" || kind == "p4_tidy") {
    require(n >= 1, "n >= 1");
    return random_few_p4(rng, n, spec.get_int("connected", 1) != 0, kind == "p4_tidy");
  }
  if (kind == "thin_spider" || kind == "thick_spider") {
    const int k = spec.get_int("k", 3);
    const bool thick = kind == "thick_spider";
    require(k >= (thick ? 3 : 2), thick ? "thick spiders need k >= 3" : "spiders need k >= 2");
    return spider(k, thick, spider_r(rng, spec));
  }
  if (kind == "almost_spider") {
    const std::string which = spec.get("case").value_or("a");
    require(which.size() == 1 && which[0] >= 'a' && which[0] <= 'h', "case must be a..h");
    const int index = which[0] - 'a';
    const bool on_k = index & 1;
    const bool true_twin = index & 2;
    const bool thick = index & 4;
    const int k = spec.get_int("k", 3);
    require(k >= (thick ? 3 : 2), "k too small for the case");
    Graph base = spider(k, thick, spider_r(rng, spec));
    return add_twin(base, on_k ? 0 : k, true_twin);
  }
  if (kind == "zero_two") {
    const int k1 = spec.get_int("k1", 3);
    const int k2 = spec.get_int("k2", 3);
    require(k1 >= 1 && k2 >= 1, "k1, k2 >= 1");
    const std::string cross = spec.get("cross").value_or("random");
    std::vector<Edge> edges;
    for (int i = 0; i < k1; ++i) {
      for (int j = i + 1; j < k1; ++j) edges.push_back({i, j});
    }
    for (int i = 0; i < k2; ++i) {
      for (int j = i + 1; j < k2; ++j) edges.push_back({k1 + i, k1 + j});
    }
    bool any = false;
    if (cross == "matching") {
      for (int i = 0; i < std::min(k1, k2); ++i) edges.push_back({i, k1 + i});
      any = true;
    } else if (cross == "random") {
      std::bernoulli_distribution bit(spec.get_double("p", 0.3));
      for (int i = 0; i < k1; ++i) {
        for (int j = 0; j < k2; ++j) {
          if (bit(rng)) {
            edges.push_back({i, k1 + j});
            any = true;
          }
        }
      }
    } else {
      require(cross == "none", "cross must be matching|random|none");
    }
    if (!any) edges.push_back({0, k1});
    return Graph(k1 + k2, std::move(edges));
  }
  if (kind == "inflation") {
    GenerateSpec base_spec{spec.get("base").value_or("cycle"), {{"n", std::to_string(spec.get_int("base_n", 4))}}};
    if (auto p = spec.get("p")) base_spec.params.emplace_back("p", *p);
    Graph base = build(base_spec, rng);
    require(is_connected(base), "inflation base must be connected");
    InflationSpec is = degree_inflation(base);
    const int extra = spec.get_int("extra", 0);
    require(extra >= 0, "extra >= 0");
    for (int& s : is.sizes) s += uniform(rng, 0, extra);
    return inflate(is).graph;
  }
  throw GraphError("generate: unknown class '" + kind + "'");
}

}  // namespace

Graph generate(const GenerateSpec& spec, std::uint64_t seed) {
  Rng rng(seed);
  Graph g = build(spec, rng);
  if (spec.get_int("shuffle", 0) != 0) {
    std::vector<Vertex> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    g = relabel(g, perm);
  }
  return g;
}

}  // namespace treespan
