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

#include "treespan/recognition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>

#include "treespan/connectivity.hpp"

namespace treespan {

namespace {

std::vector<Vertex> map_to_parent(const Subgraph& sub, const std::vector<Vertex>& local) {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(sub.to_parent[v]);
  std::sort(out.begin(), out.end());
  return out;
}

SpiderPartition map_to_parent(const Subgraph& sub, const SpiderPartition& p) {
  SpiderPartition out;
  out.s = map_to_parent(sub, p.s);
  out.k = map_to_parent(sub, p.k);
  out.r = map_to_parent(sub, p.r);
  out.kind = p.kind;
  for (auto [s, k] : p.f) out.f.emplace_back(sub.to_parent[s], sub.to_parent[k]);
  std::sort(out.f.begin(), out.f.end());
  return out;
}

// Members of `set` adjacent to v, counted with a marker array.
int count_in(const Graph& g, Vertex v, const std::vector<char>& in_set) {
  int c = 0;
  for (Vertex w : g.neighbors(v)) c += in_set[w];
  return c;
}

std::vector<char> membership(int n, const std::vector<Vertex>& set) {
  std::vector<char> in(n, 0);
  for (Vertex v : set) in[v] = 1;
  return in;
}

std::string partition_problem(const Graph& g, const std::vector<std::vector<Vertex>>& parts) {
  std::vector<int> seen(g.n(), 0);
  for (const auto& part : parts) {
    for (Vertex v : part) {
      if (v < 0 || v >= g.n()) return "vertex " + std::to_string(v) + " out of range";
      if (seen[v]++) return "vertex " + std::to_string(v) + " appears twice";
    }
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!seen[v]) return "vertex " + std::to_string(v) + " is not covered";
  }
  return {};
}

}  // namespace

std::string to_string(DecompositionCase c) {
  switch (c) {
    case DecompositionCase::kSingleton: return "singleton";
    case DecompositionCase::kUnion: return "union";
    case DecompositionCase::kJoin: return "join";
    case DecompositionCase::kSpider: return "spider";
    case DecompositionCase::kAlmostSpider: return "almost-spider";
    case DecompositionCase::kP5: return "P5";
    case DecompositionCase::kC5: return "C5";
    case DecompositionCase::kCoP5: return "co-P5";
    case DecompositionCase::kRejected: return "rejected";
  }
  return "?";
}

std::string AlmostSpiderPartition::label() const {
  std::string out = side == SpiderSide::kS ? "S" : "K";
  out += twin_kind == TwinKind::kFalse ? "-false" : "-true";
  out += base.kind == SpiderKind::kThin ? "-thin" : "-thick";
  return out;
}

char AlmostSpiderPartition::case_letter() const {
  int index = (side == SpiderSide::kK ? 1 : 0) + (twin_kind == TwinKind::kTrue ? 2 : 0) +
              (base.kind == SpiderKind::kThick ? 4 : 0);
  return static_cast<char>('a' + index);
}

bool is_clique(const Graph& g, const std::vector<Vertex>& vertices) {
  auto in = membership(g.n(), vertices);
  for (Vertex v : vertices) {
    if (count_in(g, v, in) != static_cast<int>(vertices.size()) - 1) return false;
  }
  return true;
}

bool is_independent(const Graph& g, const std::vector<Vertex>& vertices) {
  auto in = membership(g.n(), vertices);
  for (Vertex v : vertices) {
    if (count_in(g, v, in) != 0) return false;
  }
  return true;
}

std::string check_split_partition(const Graph& g, const SplitPartition& p) {
  if (auto e = partition_problem(g, {p.clique, p.stable}); !e.empty()) return e;
  if (!is_clique(g, p.clique)) return "X is not a clique";
  if (!is_independent(g, p.stable)) return "Y is not independent";
  return {};
}

std::string check_spider_partition(const Graph& g, const SpiderPartition& p) {
  if (auto e = partition_problem(g, {p.s, p.k, p.r}); !e.empty()) return e;
  const int k = static_cast<int>(p.k.size());
  if (static_cast<int>(p.s.size()) != k || k < 2) return "need |S| = |K| >= 2";
  if (!is_clique(g, p.k)) return "K is not a clique";
  if (!is_independent(g, p.s)) return "S is not independent";
  auto in_k = membership(g.n(), p.k);
  auto in_s = membership(g.n(), p.s);
  for (Vertex r : p.r) {
    if (count_in(g, r, in_k) != k) return "R vertex " + std::to_string(r) + " misses part of K";
    if (count_in(g, r, in_s) != 0) return "R vertex " + std::to_string(r) + " sees S";
  }
  if (static_cast<int>(p.f.size()) != k) return "f must have |S| pairs";
  std::vector<char> image(g.n(), 0);
  for (auto [s, fk] : p.f) {
    if (!in_s[s] || !in_k[fk]) return "f must map S to K";
    if (image[fk]++) return "f is not injective";
    auto nb = g.neighbors(s);
    if (p.kind == SpiderKind::kThin) {
      if (nb.size() != 1 || nb[0] != fk) return "thin leg " + std::to_string(s) + " must see only f(s)";
    } else {
      if (static_cast<int>(nb.size()) != k - 1 || count_in(g, s, in_k) != k - 1 || g.has_edge(s, fk)) {
        return "thick leg " + std::to_string(s) + " must see exactly K - f(s)";
      }
    }
  }
  return {};
}

std::string check_almost_spider_partition(const Graph& g, const AlmostSpiderPartition& p) {
  if (p.added < 0 || p.added >= g.n() || p.twin_of < 0 || p.twin_of >= g.n()) return "bad twin ids";
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (v != p.added) rest.push_back(v);
  }
  Subgraph sub = induced_subgraph(g, rest);
  // Express the base partition in local ids and validate it there.
  std::vector<Vertex> local(g.n(), -1);
  for (int i = 0; i < static_cast<int>(sub.to_parent.size()); ++i) local[sub.to_parent[i]] = i;
  SpiderPartition base;
  base.kind = p.base.kind;
  for (Vertex v : p.base.s) base.s.push_back(local[v]);
  for (Vertex v : p.base.k) base.k.push_back(local[v]);
  for (Vertex v : p.base.r) base.r.push_back(local[v]);
  for (auto [s, k] : p.base.f) base.f.emplace_back(local[s], local[k]);
  for (const auto& set : {base.s, base.k, base.r}) {
    if (std::find(set.begin(), set.end(), -1) != set.end()) return "base uses the added vertex";
  }
  if (auto e = check_spider_partition(sub.graph, base); !e.empty()) return "base: " + e;
  const auto& side_set = p.side == SpiderSide::kS ? p.base.s : p.base.k;
  if (!std::binary_search(side_set.begin(), side_set.end(), p.twin_of)) return "twin_of not on its side";
  std::vector<Vertex> na(g.neighbors(p.added).begin(), g.neighbors(p.added).end());
  std::vector<Vertex> nt(g.neighbors(p.twin_of).begin(), g.neighbors(p.twin_of).end());
  if (p.twin_kind == TwinKind::kTrue) {
    na.push_back(p.added);
    nt.push_back(p.twin_of);
    std::sort(na.begin(), na.end());
    std::sort(nt.begin(), nt.end());
  }
  if (na != nt) return "added vertex is not the stated twin";
  return {};
}

std::string check_zero_two_partition(const Graph& g, const ZeroTwoPartition& p) {
  if (auto e = partition_problem(g, {p.k1, p.k2}); !e.empty()) return e;
  if (!is_clique(g, p.k1)) return "K1 is not a clique";
  if (!is_clique(g, p.k2)) return "K2 is not a clique";
  return {};
}

std::string check_clique_cover(const Graph& g, const CliqueCover& c) {
  if (auto e = partition_problem(g, c.cliques); !e.empty()) return e;
  for (const auto& q : c.cliques) {
    if (q.empty()) return "empty clique in cover";
    if (!is_clique(g, q)) return "cover member is not a clique";
  }
  return {};
}

void canonicalize(CliqueCover& c) {
  std::erase_if(c.cliques, [](const auto& q) { return q.empty(); });
  for (auto& q : c.cliques) std::sort(q.begin(), q.end());
  std::sort(c.cliques.begin(), c.cliques.end());
}

InflationWitness witness_from_cover(const Graph& g, CliqueCover cover) {
  std::vector<int> owner(g.n(), -1);
  for (int i = 0; i < cover.size(); ++i) {
    for (Vertex v : cover.cliques[i]) owner[v] = i;
  }
  std::map<Edge, Edge> first_crossing;
  for (const auto& e : g.edges()) {
    if (owner[e.u] != owner[e.v]) first_crossing.try_emplace(make_edge(owner[e.u], owner[e.v]), e);
  }
  InflationWitness w;
  std::vector<Edge> base_edges;
  for (const auto& [b, h] : first_crossing) {
    base_edges.push_back(b);
    w.cross_edges.emplace_back(b, h);
  }
  w.base = Graph(cover.size(), std::move(base_edges));
  w.cover = std::move(cover);
  return w;
}

std::string check_inflation_witness(const Graph& g, const InflationWitness& w) {
  if (auto e = check_clique_cover(g, w.cover); !e.empty()) return e;
  std::vector<int> owner(g.n(), -1);
  for (int i = 0; i < w.cover.size(); ++i) {
    for (Vertex v : w.cover.cliques[i]) owner[v] = i;
  }
  std::vector<int> cross_degree(g.n(), 0);
  std::map<Edge, int> per_pair;
  for (const auto& e : g.edges()) {
    if (owner[e.u] == owner[e.v]) continue;
    if (++cross_degree[e.u] > 1 || ++cross_degree[e.v] > 1) return "crossing edges are not a matching";
    if (++per_pair[make_edge(owner[e.u], owner[e.v])] > 1) return "two crossing edges join the same cliques";
  }
  InflationWitness derived = witness_from_cover(g, w.cover);
  if (!(derived.base == w.base)) return "base graph does not match the cover";
  if (derived.cross_edges != w.cross_edges) return "cross edge map does not match the cover";
  for (int i = 0; i < w.cover.size(); ++i) {
    if (static_cast<int>(w.cover.cliques[i].size()) < w.base.degree(i)) return "clique smaller than base degree";
  }
  return {};
}

// ---------------------------------------------------------------------------

std::optional<SplitPartition> recognize_split(const Graph& g) {
  const int n = g.n();
  if (n == 0) return SplitPartition{};
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  int top = 0;
  for (int i = 0; i < n; ++i) {
    if (g.degree(order[i]) >= i) top = i + 1;
  }
  std::int64_t head_sum = 0;
  std::int64_t tail_sum = 0;
  for (int i = 0; i < n; ++i) (i < top ? head_sum : tail_sum) += g.degree(order[i]);
  if (head_sum != static_cast<std::int64_t>(top) * (top - 1) + tail_sum) return std::nullopt;

  std::vector<Vertex> x(order.begin(), order.begin() + top);
  std::sort(x.begin(), x.end());
  auto in_x = membership(n, x);
  // Other maximum partitions swap one y for the single x it misses, provided
  // that x has no other stable neighbor.
  std::vector<Vertex> best = x;
  for (Vertex y = 0; y < n; ++y) {
    if (in_x[y] || g.degree(y) != top - 1 || top == 0) continue;
    auto ny = membership(n, {g.neighbors(y).begin(), g.neighbors(y).end()});
    Vertex missing = -1;
    for (Vertex v : x) {
      if (!ny[v]) missing = v;
    }
    if (missing == -1 || g.degree(missing) != top - 1) continue;
    std::vector<Vertex> candidate;
    for (Vertex v : x) {
      if (v != missing) candidate.push_back(v);
    }
    candidate.push_back(y);
    std::sort(candidate.begin(), candidate.end());
    if (candidate < best) best = candidate;
  }
  SplitPartition p;
  p.clique = best;
  auto in_best = membership(n, best);
  for (Vertex v = 0; v < n; ++v) {
    if (!in_best[v]) p.stable.push_back(v);
  }
  return p;
}

namespace {

std::optional<std::array<Vertex, 4>> find_induced_p4(const Graph& g) {
  std::vector<char> mark_b(g.n(), 0), mark_c(g.n(), 0);
  for (const auto& e : g.edges()) {
    for (int flip = 0; flip < 2; ++flip) {
      Vertex b = flip ? e.v : e.u;
      Vertex c = flip ? e.u : e.v;
      for (Vertex w : g.neighbors(b)) mark_b[w] = 1;
      for (Vertex w : g.neighbors(c)) mark_c[w] = 1;
      std::optional<std::array<Vertex, 4>> found;
      for (Vertex a : g.neighbors(b)) {
        if (a == c || mark_c[a]) continue;
        for (Vertex d : g.neighbors(c)) {
          if (d == b || mark_b[d] || d == a) continue;
          if (!g.has_edge(a, d)) {
            found = std::array<Vertex, 4>{a, b, c, d};
            break;
          }
        }
        if (found) break;
      }
      for (Vertex w : g.neighbors(b)) mark_b[w] = 0;
      for (Vertex w : g.neighbors(c)) mark_c[w] = 0;
      if (found) return found;
    }
  }
  return std::nullopt;
}

bool build_cotree(const Graph& g, const std::vector<Vertex>& set, Cotree& node,
                  std::optional<std::array<Vertex, 4>>& p4) {
  if (set.size() == 1) {
    node.kind = Cotree::Kind::kLeaf;
    node.vertex = set[0];
    return true;
  }
  Subgraph sub = induced_subgraph(g, set);
  auto parts = connected_components(sub.graph);
  node.kind = Cotree::Kind::kUnion;
  if (parts.size() == 1) {
    parts = complement_components(sub.graph);
    node.kind = Cotree::Kind::kJoin;
  }
  if (parts.size() == 1) {
    auto local = find_induced_p4(sub.graph);
    if (!local) throw GraphError("internal: prime graph without an induced P4");
    p4 = std::array<Vertex, 4>{sub.to_parent[(*local)[0]], sub.to_parent[(*local)[1]],
                               sub.to_parent[(*local)[2]], sub.to_parent[(*local)[3]]};
    return false;
  }
  for (const auto& part : parts) {
    node.children.emplace_back();
    if (!build_cotree(g, map_to_parent(sub, part), node.children.back(), p4)) return false;
  }
  return true;
}

}  // namespace

CographResult recognize_cograph(const Graph& g) {
  CographResult out;
  if (g.n() == 0) {
    out.cotree = Cotree{Cotree::Kind::kUnion, -1, {}};
    return out;
  }
  std::vector<Vertex> all(g.n());
  std::iota(all.begin(), all.end(), 0);
  Cotree root;
  std::optional<std::array<Vertex, 4>> p4;
  if (build_cotree(g, all, root, p4)) {
    out.cotree = std::move(root);
  } else {
    out.induced_p4 = p4;
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::optional<SpiderPartition> finish_spider(const Graph& g, std::vector<Vertex> s, SpiderKind kind) {
  const int n = g.n();
  auto in_s = membership(n, s);
  SpiderPartition p;
  p.kind = kind;
  const int k = static_cast<int>(s.size());
  std::vector<char> in_k(n, 0);
  if (kind == SpiderKind::kThin) {
    for (Vertex x : s) {
      Vertex head = g.neighbors(x)[0];
      if (in_k[head] || in_s[head]) return std::nullopt;
      in_k[head] = 1;
      p.f.emplace_back(x, head);
    }
  } else {
    for (Vertex x : s) {
      for (Vertex w : g.neighbors(x)) {
        if (in_s[w]) return std::nullopt;
        in_k[w] = 1;
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (in_k[v]) p.k.push_back(v);
  }
  if (static_cast<int>(p.k.size()) != k) return std::nullopt;
  if (kind == SpiderKind::kThick) {
    std::vector<char> image(n, 0);
    for (Vertex x : s) {
      // Exactly one member of K is missing from N(x).
      std::vector<char> nx = membership(n, {g.neighbors(x).begin(), g.neighbors(x).end()});
      Vertex missing = -1;
      for (Vertex kv : p.k) {
        if (!nx[kv]) {
          if (missing != -1) return std::nullopt;
          missing = kv;
        }
      }
      if (missing == -1 || image[missing]++) return std::nullopt;
      p.f.emplace_back(x, missing);
    }
  }
  p.s = std::move(s);
  for (Vertex v = 0; v < n; ++v) {
    if (!in_k[v] && !in_s[v]) p.r.push_back(v);
  }
  std::sort(p.f.begin(), p.f.end());
  if (!check_spider_partition(g, p).empty()) return std::nullopt;
  return p;
}

}  // namespace

std::optional<SpiderPartition> spider_partition(const Graph& g) {
  const int n = g.n();
  if (n < 4) return std::nullopt;
  // Thin: S is exactly the set of pendant vertices (R and K vertices see at
  // least the two-vertex clique K).
  std::vector<Vertex> pendants;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 1) pendants.push_back(v);
  }
  if (pendants.size() >= 2) {
    if (auto p = finish_spider(g, pendants, SpiderKind::kThin)) return p;
  }
  // Thick (|K| >= 3): legs have degree |K| - 1, strictly below every vertex
  // of K (2|K| - 2 + |R|) and of R (>= |K|).
  int min_degree = n;
  for (Vertex v = 0; v < n; ++v) min_degree = std::min(min_degree, g.degree(v));
  std::vector<Vertex> low;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == min_degree) low.push_back(v);
  }
  if (min_degree >= 2 && static_cast<int>(low.size()) == min_degree + 1) {
    if (auto p = finish_spider(g, low, SpiderKind::kThick)) return p;
  }
  return std::nullopt;
}

std::optional<AlmostSpiderPartition> almost_spider_partition(const Graph& g) {
  const int n = g.n();
  if (n < 5) return std::nullopt;
  std::vector<Vertex> rest;
  rest.reserve(n - 1);
  for (Vertex added = 0; added < n; ++added) {
    rest.clear();
    for (Vertex v = 0; v < n; ++v) {
      if (v != added) rest.push_back(v);
    }
    Subgraph sub = induced_subgraph(g, rest);
    if (!is_connected(sub.graph)) continue;
    auto local = spider_partition(sub.graph);
    if (!local) continue;
    SpiderPartition base = map_to_parent(sub, *local);
    std::vector<Vertex> open(g.neighbors(added).begin(), g.neighbors(added).end());
    std::vector<Vertex> candidates = base.s;
    candidates.insert(candidates.end(), base.k.begin(), base.k.end());
    std::sort(candidates.begin(), candidates.end());
    for (Vertex v : candidates) {
      std::vector<Vertex> nv(g.neighbors(v).begin(), g.neighbors(v).end());
      std::optional<TwinKind> kind;
      if (nv == open) {
        kind = TwinKind::kFalse;
      } else if (g.has_edge(v, added)) {
        std::vector<Vertex> a = open, b = nv;
        std::erase(a, v);
        std::erase(b, added);
        if (a == b) kind = TwinKind::kTrue;
      }
      if (!kind) continue;
      AlmostSpiderPartition p;
      p.base = std::move(base);
      p.twin_kind = *kind;
      p.side = std::binary_search(p.base.s.begin(), p.base.s.end(), v) ? SpiderSide::kS : SpiderSide::kK;
      p.twin_of = v;
      p.added = added;
      return p;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

std::optional<DecompositionCase> small_prime_case(const Graph& g) {
  if (g.n() != 5) return std::nullopt;
  auto max_degree = [](const Graph& h) {
    int d = 0;
    for (Vertex v = 0; v < h.n(); ++v) d = std::max(d, h.degree(v));
    return d;
  };
  // Callers only pass connected, co-connected graphs.
  if (g.m() == 4 && max_degree(g) == 2) return DecompositionCase::kP5;
  if (g.m() == 5 && max_degree(g) == 2) return DecompositionCase::kC5;
  if (g.m() == 6) {
    Graph co = complement(g);
    if (max_degree(co) == 2) return DecompositionCase::kCoP5;
  }
  return std::nullopt;
}

bool decompose(const Graph& g, const std::vector<Vertex>& set, int depth, bool tidy,
               std::vector<DecompositionStep>& trace) {
  if (set.size() == 1) {
    trace.push_back({DecompositionCase::kSingleton, set, depth});
    return true;
  }
  Subgraph sub = induced_subgraph(g, set);
  auto recurse_all = [&](DecompositionCase kind, const std::vector<std::vector<Vertex>>& parts) {
    trace.push_back({kind, set, depth});
    bool ok = true;
    for (const auto& part : parts) ok = decompose(g, map_to_parent(sub, part), depth + 1, tidy, trace) && ok;
    return ok;
  };
  auto parts = connected_components(sub.graph);
  if (parts.size() > 1) return recurse_all(DecompositionCase::kUnion, parts);
  parts = complement_components(sub.graph);
  if (parts.size() > 1) return recurse_all(DecompositionCase::kJoin, parts);
  if (auto spider = spider_partition(sub.graph)) {
    trace.push_back({DecompositionCase::kSpider, set, depth});
    if (spider->r.empty()) return true;
    return decompose(g, map_to_parent(sub, spider->r), depth + 1, tidy, trace);
  }
  if (tidy) {
    if (auto base = small_prime_case(sub.graph)) {
      trace.push_back({*base, set, depth});
      return true;
    }
    if (auto almost = almost_spider_partition(sub.graph)) {
      trace.push_back({DecompositionCase::kAlmostSpider, set, depth});
      if (almost->base.r.empty()) return true;
      return decompose(g, map_to_parent(sub, almost->base.r), depth + 1, tidy, trace);
    }
  }
  trace.push_back({DecompositionCase::kRejected, set, depth});
  return false;
}

ClassDecomposition decompose_root(const Graph& g, bool tidy) {
  ClassDecomposition out;
  if (g.n() == 0) {
    out.member = true;
    return out;
  }
  std::vector<Vertex> all(g.n());
  std::iota(all.begin(), all.end(), 0);
  out.member = decompose(g, all, 0, tidy, out.trace);
  return out;
}

}  // namespace

ClassDecomposition recognize_p4_sparse(const Graph& g) { return decompose_root(g, false); }

ClassDecomposition recognize_p4_tidy(const Graph& g) { return decompose_root(g, true); }

// ---------------------------------------------------------------------------

std::optional<ZeroTwoPartition> zero_two_partition(const Graph& g) {
  const int n = g.n();
  std::vector<int> color(n, -1);
  // BFS over the complement with an unvisited list, as in
  // complement_components, two-coloring as we go.
  std::vector<Vertex> next(n + 1), prev(n + 1);
  const Vertex head = n;
  next[head] = prev[head] = head;
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
  std::vector<Vertex> queue;
  queue.reserve(n);
  while (next[head] != head) {
    Vertex s = next[head];
    unlink(s);
    color[s] = 0;
    queue.clear();
    queue.push_back(s);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Vertex v = queue[i];
      for (Vertex w : g.neighbors(v)) mark[w] = 1;
      for (Vertex u = next[head]; u != head;) {
        Vertex after = next[u];
        if (!mark[u]) {
          unlink(u);
          color[u] = 1 - color[v];
          queue.push_back(u);
        }
        u = after;
      }
      for (Vertex w : g.neighbors(v)) mark[w] = 0;
    }
  }
  ZeroTwoPartition p;
  for (Vertex v = 0; v < n; ++v) (color[v] == 0 ? p.k1 : p.k2).push_back(v);
  // The coloring is forced within each complement component, so it is
  // proper iff both sides are cliques of g.
  if (!is_clique(g, p.k1) || !is_clique(g, p.k2)) return std::nullopt;
  return p;
}

std::optional<CliqueCover> clique_cover(const Graph& g, int ell, int max_vertices) {
  if (ell < 1) throw GraphError("clique cover needs ell >= 1");
  const int n = g.n();
  if (n > max_vertices || n > 64) {
    throw GraphError("clique cover search limited to " + std::to_string(std::min(max_vertices, 64)) +
                     " vertices");
  }
  if (n == 0) return CliqueCover{};
  if (ell == 2) {
    auto p = zero_two_partition(g);
    if (!p) return std::nullopt;
    CliqueCover c{{p->k1, p->k2}};
    canonicalize(c);
    return c;
  }
  std::vector<std::uint64_t> adj(n, 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= std::uint64_t{1} << e.v;
    adj[e.v] |= std::uint64_t{1} << e.u;
  }
  std::vector<std::uint64_t> members;
  // Vertices in index order; a vertex joins an existing clique it is fully
  // adjacent to, or opens the next one.
  std::function<bool(int)> place = [&](int v) -> bool {
    if (v == n) return true;
    // By index: the recursion may grow `members`.
    for (std::size_t i = 0; i < members.size(); ++i) {
      if ((members[i] & ~adj[v]) == 0) {
        members[i] |= std::uint64_t{1} << v;
        if (place(v + 1)) return true;
        members[i] &= ~(std::uint64_t{1} << v);
      }
    }
    if (static_cast<int>(members.size()) < ell) {
      members.push_back(std::uint64_t{1} << v);
      if (place(v + 1)) return true;
      members.pop_back();
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  CliqueCover c;
  for (auto q : members) {
    std::vector<Vertex> clique;
    for (; q != 0; q &= q - 1) clique.push_back(std::countr_zero(q));
    c.cliques.push_back(std::move(clique));
  }
  canonicalize(c);
  return c;
}

std::optional<InflationWitness> inflation_witness(const Graph& g, int max_vertices) {
  const int n = g.n();
  if (n > max_vertices) {
    throw GraphError("inflation search limited to " + std::to_string(max_vertices) + " vertices");
  }
  if (n == 0 || !is_connected(g)) return std::nullopt;
  std::vector<int> owner(n, -1);
  std::vector<std::vector<Vertex>> cliques;

  // Each vertex has at most one neighbor outside its clique, so the clique of
  // the lowest unassigned vertex v is N[v] or N[v] minus one neighbor.
  std::function<bool()> search = [&]() -> bool {
    Vertex v = 0;
    while (v < n && owner[v] != -1) ++v;
    if (v == n) {
      CliqueCover cover{cliques};
      canonicalize(cover);
      return check_inflation_witness(g, witness_from_cover(g, cover)).empty();
    }
    std::vector<Vertex> closed(g.neighbors(v).begin(), g.neighbors(v).end());
    closed.push_back(v);
    std::sort(closed.begin(), closed.end());
    std::vector<Vertex> drops = {-1};
    drops.insert(drops.end(), g.neighbors(v).begin(), g.neighbors(v).end());
    for (Vertex drop : drops) {
      std::vector<Vertex> q;
      for (Vertex x : closed) {
        if (x != drop) q.push_back(x);
      }
      bool ok = true;
      for (Vertex x : q) ok = ok && owner[x] == -1;
      if (!ok || !is_clique(g, q)) continue;
      auto in_q = membership(n, q);
      for (Vertex x : q) {
        ok = ok && g.degree(x) - count_in(g, x, in_q) <= 1;
      }
      if (!ok) continue;
      const int id = static_cast<int>(cliques.size());
      for (Vertex x : q) owner[x] = id;
      cliques.push_back(q);
      if (search()) return true;
      cliques.pop_back();
      for (Vertex x : q) owner[x] = -1;
    }
    return false;
  };
  if (!search()) return std::nullopt;
  CliqueCover cover{cliques};
  canonicalize(cover);
  return witness_from_cover(g, std::move(cover));
}

}  // namespace treespan
