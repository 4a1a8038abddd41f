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

#include "treespan/spanners.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "treespan/connectivity.hpp"

namespace treespan {

namespace {

// Small union-find for assembling candidate forests.
class Dsu {
 public:
  explicit Dsu(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::vector<char> membership(int n, const std::vector<Vertex>& set) {
  std::vector<char> in(n, 0);
  for (Vertex v : set) in[v] = 1;
  return in;
}

void require_connected(const Graph& g) {
  if (g.n() == 0 || !is_connected(g)) throw GraphError("stretch index needs a connected graph");
}

ClassStretchResult exact(std::string cls, int sigma, StretchCertificate cert, Rule rule) {
  ClassStretchResult r;
  r.class_name = std::move(cls);
  r.lo = r.hi = sigma;
  r.certificate = std::move(cert);
  r.rule = rule;
  return r;
}

ClassStretchResult tree_result(const Graph& g, std::string cls) {
  return exact(std::move(cls), 1, tree_stretch_factor(g, g.edges()), Rule::kTree);
}

std::optional<Vertex> first_universal(const Graph& g) {
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) == g.n() - 1) return v;
  }
  return std::nullopt;
}

}  // namespace

std::string rule_tag(Rule r) {
  switch (r) {
    case Rule::kTree: return "TREE";
    case Rule::kUniversalStar: return "UNIVERSAL_STAR";
    case Rule::kJoinBistar: return "JOIN_BISTAR";
    case Rule::kSpiderThin: return "SPIDER_THIN";
    case Rule::kSpiderThick: return "SPIDER_THICK";
    case Rule::kAlmostSpiderTwo: return "ALMOST_SPIDER_2";
    case Rule::kAlmostSpiderThree: return "ALMOST_SPIDER_3";
    case Rule::kCycleC5: return "CYCLE_C5";
    case Rule::kTidyBase: return "TIDY_BASE";
    case Rule::kSplitPendantStable: return "SPLIT_PENDANT_STABLE";
    case Rule::kSplitCommonNeighbor: return "SPLIT_COMMON_NEIGHBOR";
    case Rule::kSplitStarUpper: return "SPLIT_STAR_UPPER";
    case Rule::kZeroTwoUniversal: return "ZERO_TWO_UNIVERSAL";
    case Rule::kZeroTwoCutVertex: return "ZERO_TWO_CUT_VERTEX";
    case Rule::kZeroTwoCoveringEdge: return "ZERO_TWO_COVERING_EDGE";
    case Rule::kZeroTwoUpper: return "ZERO_TWO_UPPER";
    case Rule::kCliqueCoverBounds: return "CLIQUE_COVER_BOUNDS";
    case Rule::kCycleInflationUpper: return "CYCLE_INFLATION_UPPER";
    case Rule::kInflationFormula: return "INFLATION_FORMULA";
    case Rule::kTriconnectedStars: return "TRICONNECTED_STARS";
    case Rule::kBruteForce: return "BRUTE_FORCE";
    case Rule::kOracle: return "ORACLE";
  }
  return "?";
}

std::vector<Rule> all_rules() {
  std::vector<Rule> out;
  for (int i = 0; i <= static_cast<int>(Rule::kOracle); ++i) out.push_back(static_cast<Rule>(i));
  return out;
}

std::string to_string(AdmissibilityPath p) {
  switch (p) {
    case AdmissibilityPath::kTree: return "tree";
    case AdmissibilityPath::kUniversal: return "universal";
    case AdmissibilityPath::kAssembly: return "assembly";
    case AdmissibilityPath::kBruteForce: return "brute-force";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Builders.

StretchCertificate build_star_spanner(const Graph& g, Vertex center) {
  if (g.degree(center) != g.n() - 1) throw GraphError("star center must be universal");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (v != center) edges.push_back(make_edge(center, v));
  }
  return tree_stretch_factor(g, std::move(edges));
}

StretchCertificate build_join_3_spanner(const Graph& g, const std::vector<Vertex>& v1,
                                        const std::vector<Vertex>& v2) {
  if (v1.empty() || v2.empty()) throw ClassMismatch("join sides must be nonempty");
  auto in1 = membership(g.n(), v1);
  auto in2 = membership(g.n(), v2);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (in1[v] == in2[v]) throw ClassMismatch("join sides must partition the vertices");
  }
  for (Vertex a : v1) {
    int cross = 0;
    for (Vertex w : g.neighbors(a)) cross += in2[w];
    if (cross != static_cast<int>(v2.size())) throw ClassMismatch("not a join of the given sides");
  }
  if (auto u = first_universal(g)) return build_star_spanner(g, *u);
  const Vertex a = *std::min_element(v1.begin(), v1.end());
  const Vertex b = *std::min_element(v2.begin(), v2.end());
  std::vector<Edge> edges;
  for (Vertex w : v2) edges.push_back(make_edge(a, w));
  for (Vertex x : v1) {
    if (x != a) edges.push_back(make_edge(b, x));
  }
  return tree_stretch_factor(g, std::move(edges));
}

namespace {

// The lowest x in X seeing every stable vertex of degree >= 2, if any.
std::optional<Vertex> split_common_neighbor(const Graph& g, const SplitPartition& p) {
  std::vector<int> hits(g.n(), 0);
  int needed = 0;
  for (Vertex y : p.stable) {
    if (g.degree(y) < 2) continue;
    ++needed;
    for (Vertex x : g.neighbors(y)) ++hits[x];
  }
  for (Vertex x : p.clique) {
    if (hits[x] == needed) return x;
  }
  return std::nullopt;
}

}  // namespace

StretchCertificate build_split_spanner(const Graph& g, const SplitPartition& p) {
  if (auto e = check_split_partition(g, p); !e.empty()) throw ClassMismatch("split partition: " + e);
  if (p.clique.empty()) throw ClassMismatch("split spanner needs a nonempty clique");
  const Vertex center = split_common_neighbor(g, p).value_or(p.clique.front());
  std::vector<Edge> edges;
  for (Vertex x : p.clique) {
    if (x != center) edges.push_back(make_edge(center, x));
  }
  for (Vertex y : p.stable) {
    if (g.degree(y) == 0) throw GraphError("split spanner needs a connected graph");
    Vertex to = g.has_edge(y, center) ? center : g.neighbors(y)[0];
    edges.push_back(make_edge(y, to));
  }
  return tree_stretch_factor(g, std::move(edges));
}

namespace {

// Star at `center` over K and R, then every leg on `center` when adjacent,
// else on its lowest neighbor in `heads`.
std::vector<Edge> spider_skeleton(const Graph& g, Vertex center, const std::vector<Vertex>& hub,
                                  const std::vector<Vertex>& legs, const std::vector<char>& heads) {
  std::vector<Edge> edges;
  for (Vertex x : hub) {
    if (x != center) edges.push_back(make_edge(center, x));
  }
  for (Vertex s : legs) {
    if (g.has_edge(s, center)) {
      edges.push_back(make_edge(s, center));
      continue;
    }
    Vertex to = -1;
    for (Vertex w : g.neighbors(s)) {
      if (heads[w]) {
        to = w;
        break;
      }
    }
    if (to == -1) throw GraphError("spider leg without a clique neighbor");
    edges.push_back(make_edge(s, to));
  }
  return edges;
}

}  // namespace

StretchCertificate build_spider_spanner(const Graph& g, const SpiderPartition& p) {
  if (auto e = check_spider_partition(g, p); !e.empty()) throw ClassMismatch("spider partition: " + e);
  std::vector<Vertex> hub = p.k;
  hub.insert(hub.end(), p.r.begin(), p.r.end());
  auto edges = spider_skeleton(g, p.k.front(), hub, p.s, membership(g.n(), p.k));
  return tree_stretch_factor(g, std::move(edges));
}

StretchCertificate build_almost_spider_spanner(const Graph& g, const AlmostSpiderPartition& p) {
  if (auto e = check_almost_spider_partition(g, p); !e.empty()) {
    throw ClassMismatch("almost-spider partition: " + e);
  }
  const auto& base = p.base;
  const bool on_k = p.side == SpiderSide::kK;
  Vertex center = base.k.front();
  if (on_k && !(base.kind == SpiderKind::kThin && p.twin_kind == TwinKind::kTrue)) {
    // Keep the twin pair off the center so both are reached through it.
    for (Vertex k : base.k) {
      if (k != p.twin_of) {
        center = k;
        break;
      }
    }
  } else if (on_k) {
    center = p.twin_of;
  } else if (base.kind == SpiderKind::kThin) {
    for (auto [s, k] : base.f) {
      if (s == p.twin_of) center = k;
    }
  }
  std::vector<Vertex> hub = base.k;
  hub.insert(hub.end(), base.r.begin(), base.r.end());
  std::vector<Vertex> legs = base.s;
  auto heads = membership(g.n(), base.k);
  if (on_k) {
    hub.push_back(p.added);
    heads[p.added] = 1;
  } else {
    legs.push_back(p.added);
  }
  auto edges = spider_skeleton(g, center, hub, legs, heads);
  return tree_stretch_factor(g, std::move(edges));
}

// ---------------------------------------------------------------------------
// Few P4's.

ClassStretchResult stretch_cograph(const Graph& g) {
  require_connected(g);
  auto cg = recognize_cograph(g);
  if (!cg.is_cograph()) throw ClassMismatch("not a cograph (has an induced P4)");
  if (is_tree(g)) return tree_result(g, "cograph");
  if (auto u = first_universal(g)) return exact("cograph", 2, build_star_spanner(g, *u), Rule::kUniversalStar);
  // Connected cograph on >= 2 vertices: the root is a join.
  auto parts = complement_components(g);
  std::vector<Vertex> rest;
  for (std::size_t i = 1; i < parts.size(); ++i) rest.insert(rest.end(), parts[i].begin(), parts[i].end());
  std::sort(rest.begin(), rest.end());
  return exact("cograph", 3, build_join_3_spanner(g, parts[0], rest), Rule::kJoinBistar);
}

namespace {

ClassStretchResult join_result(const Graph& g, std::string cls) {
  auto parts = complement_components(g);
  if (parts.size() < 2) throw ClassMismatch("expected a join");
  std::vector<Vertex> rest;
  for (std::size_t i = 1; i < parts.size(); ++i) rest.insert(rest.end(), parts[i].begin(), parts[i].end());
  std::sort(rest.begin(), rest.end());
  return exact(std::move(cls), 3, build_join_3_spanner(g, parts[0], rest), Rule::kJoinBistar);
}

ClassStretchResult spider_result(const Graph& g, const SpiderPartition& p, std::string cls) {
  const bool thin = p.kind == SpiderKind::kThin;
  return exact(std::move(cls), thin ? 2 : 3, build_spider_spanner(g, p),
               thin ? Rule::kSpiderThin : Rule::kSpiderThick);
}

}  // namespace

ClassStretchResult stretch_p4_sparse(const Graph& g) {
  require_connected(g);
  if (!recognize_p4_sparse(g).member) throw ClassMismatch("not P4-sparse");
  if (is_tree(g)) return tree_result(g, "p4_sparse");
  if (auto u = first_universal(g)) return exact("p4_sparse", 2, build_star_spanner(g, *u), Rule::kUniversalStar);
  if (auto p = spider_partition(g)) return spider_result(g, *p, "p4_sparse");
  return join_result(g, "p4_sparse");
}

ClassStretchResult stretch_p4_tidy(const Graph& g) {
  require_connected(g);
  if (!recognize_p4_tidy(g).member) throw ClassMismatch("not P4-tidy");
  if (is_tree(g)) return tree_result(g, "p4_tidy");
  if (g.n() == 5 && g.m() == 5 && std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
        return g.degree(e.u) == 2 && g.degree(e.v) == 2;
      })) {
    std::vector<Edge> path(g.edges().begin(), g.edges().end() - 1);
    return exact("p4_tidy", 4, tree_stretch_factor(g, std::move(path)), Rule::kCycleC5);
  }
  if (auto u = first_universal(g)) return exact("p4_tidy", 2, build_star_spanner(g, *u), Rule::kUniversalStar);
  if (auto p = spider_partition(g)) return spider_result(g, *p, "p4_tidy");
  if (complement_components(g).size() > 1) return join_result(g, "p4_tidy");
  if (auto p = almost_spider_partition(g)) {
    const bool two = p->base.kind == SpiderKind::kThin &&
                     (p->side == SpiderSide::kS || p->twin_kind == TwinKind::kTrue);
    auto r = exact("p4_tidy", two ? 2 : 3, build_almost_spider_spanner(g, *p),
                   two ? Rule::kAlmostSpiderTwo : Rule::kAlmostSpiderThree);
    r.notes.push_back(std::string("almost-spider case ") + p->case_letter() + " (" + p->label() + ")");
    return r;
  }
  // Remaining prime base: the house (P5 is a tree, C5 handled above).
  auto cert = is_t_admissible_bruteforce(g, 3);
  if (!cert) throw GraphError("internal: five-vertex base without a 3-spanner");
  auto r = exact("p4_tidy", 3, *cert, Rule::kTidyBase);
  r.notes.push_back("co-P5 base");
  return r;
}

// ---------------------------------------------------------------------------
// (k, l)-graphs.

ClassStretchResult stretch_split(const Graph& g, const SplitPartition& p) {
  require_connected(g);
  if (auto e = check_split_partition(g, p); !e.empty()) throw ClassMismatch("split partition: " + e);
  if (is_tree(g)) return tree_result(g, "split");
  auto cert = build_split_spanner(g, p);
  bool all_pendant = std::all_of(p.stable.begin(), p.stable.end(), [&](Vertex y) { return g.degree(y) == 1; });
  if (all_pendant) return exact("split", 2, std::move(cert), Rule::kSplitPendantStable);
  if (split_common_neighbor(g, p)) return exact("split", 2, std::move(cert), Rule::kSplitCommonNeighbor);
  return exact("split", 3, std::move(cert), Rule::kSplitStarUpper);
}

TransversalSubgraph transversal_subgraph(const Graph& g, const ZeroTwoPartition& p) {
  if (auto e = check_zero_two_partition(g, p); !e.empty()) throw ClassMismatch("(0,2) partition: " + e);
  TransversalSubgraph out;
  out.partition = p;
  auto in1 = membership(g.n(), p.k1);
  std::vector<char> touched(g.n(), 0);
  for (const auto& e : g.edges()) {
    if (in1[e.u] != in1[e.v]) {
      out.crossing.push_back(e);
      touched[e.u] = touched[e.v] = 1;
    }
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (touched[v]) out.vertices.push_back(v);
  }
  for (const auto& e : g.edges()) {
    if (touched[e.u] && touched[e.v]) out.edges.push_back(e);
  }
  return out;
}

bool has_induced_c4_02(const Graph& g, const ZeroTwoPartition& p) {
  // Crossing edges alone: a 2K2 among them exists iff the K1-side
  // neighborhoods are not a chain under inclusion.
  auto in1 = membership(g.n(), p.k1);
  std::vector<std::vector<Vertex>> cross(g.n());
  for (const auto& e : g.edges()) {
    if (in1[e.u] != in1[e.v]) {
      Vertex a = in1[e.u] ? e.u : e.v;
      cross[a].push_back(in1[e.u] ? e.v : e.u);
    }
  }
  std::vector<Vertex> order = p.k1;
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return cross[a].size() != cross[b].size() ? cross[a].size() > cross[b].size() : a < b;
  });
  std::vector<char> mark(g.n(), 0);
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    for (Vertex w : cross[order[i]]) mark[w] = 1;
    bool nested = true;
    for (Vertex w : cross[order[i + 1]]) nested = nested && mark[w];
    for (Vertex w : cross[order[i]]) mark[w] = 0;
    if (!nested) return true;
  }
  return false;
}

namespace {

constexpr int kTriconnectivityNoteLimit = 400;

// A crossing edge xy (x in K1) meeting every crossing edge.
std::optional<Edge> covering_cross_edge(const Graph& g, const std::vector<char>& in1,
                                        const std::vector<Edge>& crossing) {
  if (crossing.empty()) return std::nullopt;
  auto oriented = [&](const Edge& e) { return in1[e.u] ? e : Edge{e.v, e.u}; };
  const Edge first = oriented(crossing.front());
  for (int side = 0; side < 2; ++side) {
    // side 0: x = first.u, find the common K2 end of the rest.
    const Vertex fixed = side == 0 ? first.u : first.v;
    std::optional<Vertex> other;
    bool ok = true;
    for (const auto& raw : crossing) {
      Edge e = oriented(raw);
      Vertex mine = side == 0 ? e.u : e.v;
      Vertex theirs = side == 0 ? e.v : e.u;
      if (mine == fixed) continue;
      if (other && *other != theirs) {
        ok = false;
        break;
      }
      other = theirs;
    }
    if (!ok) continue;
    if (!other) {
      // Every crossing edge meets `fixed`; pair it with its lowest partner.
      for (const auto& raw : crossing) {
        Edge e = oriented(raw);
        if ((side == 0 ? e.u : e.v) == fixed) return e;
      }
    }
    Edge candidate = side == 0 ? Edge{fixed, *other} : Edge{*other, fixed};
    if (g.has_edge(candidate.u, candidate.v)) return candidate;
  }
  return std::nullopt;
}

StretchCertificate bistar(const Graph& g, const ZeroTwoPartition& p, Vertex x, Vertex y) {
  std::vector<Edge> edges = {make_edge(x, y)};
  for (Vertex a : p.k1) {
    if (a != x) edges.push_back(make_edge(x, a));
  }
  for (Vertex b : p.k2) {
    if (b != y) edges.push_back(make_edge(y, b));
  }
  return tree_stretch_factor(g, std::move(edges));
}

}  // namespace

ClassStretchResult two_admissible_02(const Graph& g, const ZeroTwoPartition& p) {
  require_connected(g);
  if (auto e = check_zero_two_partition(g, p); !e.empty()) throw ClassMismatch("(0,2) partition: " + e);
  if (is_tree(g)) return tree_result(g, "zero_two");
  if (auto u = first_universal(g)) return exact("zero_two", 2, build_star_spanner(g, *u), Rule::kZeroTwoUniversal);
  auto in1 = membership(g.n(), p.k1);
  std::vector<Edge> crossing;
  for (const auto& e : g.edges()) {
    if (in1[e.u] != in1[e.v]) crossing.push_back(e);
  }
  // No universal vertex implies both cliques are nonempty.
  auto cover = covering_cross_edge(g, in1, crossing);
  const bool has_cut = !cut_vertices(g).empty();
  if (cover) {
    auto r = exact("zero_two", 2, bistar(g, p, cover->u, cover->v),
                   has_cut ? Rule::kZeroTwoCutVertex : Rule::kZeroTwoCoveringEdge);
    r.notes.push_back("covering crossing edge " + to_string(make_edge(cover->u, cover->v)));
    if (!has_cut && g.n() <= kTriconnectivityNoteLimit) {
      auto h = transversal_subgraph(g, p);
      auto sub = induced_subgraph(g, h.vertices);
      auto report = connectivity(sub.graph);
      bool strict = report.is_biconnected && !report.is_triconnected;
      r.notes.push_back(std::string("transversal subgraph ") + (strict ? "strict 2-connected" : "not strict 2-connected") +
                        (has_induced_c4_02(g, p) ? ", has induced C4" : ", no induced C4"));
    }
    return r;
  }
  if (has_cut) throw GraphError("internal: cut vertex without a covering crossing edge");
  const Edge e = crossing.front();
  const Vertex x = in1[e.u] ? e.u : e.v;
  const Vertex y = in1[e.u] ? e.v : e.u;
  auto r = exact("zero_two", 3, bistar(g, p, x, y), Rule::kZeroTwoUpper);
  if (has_induced_c4_02(g, p)) r.notes.push_back("induced C4 present");
  return r;
}

Graph subjacent_graph(const Graph& h, const CliqueCover& c) {
  if (auto e = check_clique_cover(h, c); !e.empty()) throw ClassMismatch("clique cover: " + e);
  CliqueCover canon = c;
  canonicalize(canon);
  return witness_from_cover(h, std::move(canon)).base;
}

bool charact_upper_test(const Graph& g, const CliqueCover& c) {
  if (auto e = check_clique_cover(g, c); !e.empty()) throw ClassMismatch("clique cover: " + e);
  std::vector<int> owner(g.n(), -1);
  for (int i = 0; i < c.size(); ++i) {
    for (Vertex v : c.cliques[i]) owner[v] = i;
  }
  Graph base = witness_from_cover(g, c).base;
  if (base.n() < 3 || base.m() != base.n() || !is_connected(base)) return false;
  for (Vertex v = 0; v < base.n(); ++v) {
    if (base.degree(v) != 2) return false;
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    int first = -1;
    for (Vertex w : g.neighbors(v)) {
      if (owner[w] == owner[v]) continue;
      if (first == -1) {
        first = owner[w];
      } else if (owner[w] != first) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Lift a base spanning tree through the cover: one crossing edge per base
// tree edge, then a star in each clique at the vertex carrying the most
// lifted edges.
StretchCertificate lift_tree(const Graph& h, const InflationWitness& w, const std::vector<Edge>& base_tree) {
  std::map<Edge, Edge> realize(w.cross_edges.begin(), w.cross_edges.end());
  std::vector<Edge> edges;
  std::vector<int> load(h.n(), 0);
  std::vector<char> crosses(h.n(), 0);
  for (const auto& [b, e] : w.cross_edges) crosses[e.u] = crosses[e.v] = 1;
  for (const auto& b : base_tree) {
    Edge e = realize.at(b);
    edges.push_back(e);
    ++load[e.u];
    ++load[e.v];
  }
  for (const auto& q : w.cover.cliques) {
    Vertex center = q.front();
    for (Vertex v : q) {
      auto key = [&](Vertex x) { return std::make_pair(load[x], static_cast<int>(crosses[x])); };
      if (key(v) > key(center)) center = v;
    }
    for (Vertex v : q) {
      if (v != center) edges.push_back(make_edge(center, v));
    }
  }
  return tree_stretch_factor(h, std::move(edges));
}

std::vector<Edge> bfs_tree(const Graph& g) {
  std::vector<Edge> edges;
  std::vector<char> seen(g.n(), 0);
  std::queue<Vertex> queue;
  if (g.n() == 0) return edges;
  seen[0] = 1;
  queue.push(0);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    for (Vertex x : g.neighbors(v)) {
      if (!seen[x]) {
        seen[x] = 1;
        edges.push_back(make_edge(v, x));
        queue.push(x);
      }
    }
  }
  return edges;
}

}  // namespace

ClassStretchResult bounds_0l(const Graph& g, const CliqueCover& c) {
  require_connected(g);
  if (auto e = check_clique_cover(g, c); !e.empty()) throw ClassMismatch("clique cover: " + e);
  ClassStretchResult r;
  r.class_name = "zero_l";
  if (is_tree(g)) return tree_result(g, "zero_l");
  const int ell = c.size();
  CliqueCover canon = c;
  canonicalize(canon);
  InflationWitness w = witness_from_cover(g, canon);
  r.lo = 2;
  r.hi = std::max(2, 2 * ell - 1);
  r.rule = Rule::kCliqueCoverBounds;
  if (2 * ell - 1 < 2) r.notes.push_back("single clique: upper bound raised to the lower bound 2");
  r.certificate = lift_tree(g, w, bfs_tree(w.base));
  r.notes.push_back("lifted tree stretch " + std::to_string(r.certificate->stretch));
  if (r.certificate->stretch < r.hi) r.hi = std::max(r.lo, r.certificate->stretch);
  const bool passes = charact_upper_test(g, canon);
  r.notes.push_back(std::string("cycle-subjacent test ") + (passes ? "passes" : "fails"));
  if (passes) {
    r.lo = r.hi = 2 * ell - 1;
    r.rule = Rule::kCycleInflationUpper;
  }
  return r;
}

ClassStretchResult inflation_stretch(const Graph& h, const InflationWitness& w, double budget) {
  require_connected(h);
  if (auto e = check_inflation_witness(h, w); !e.empty()) throw ClassMismatch("inflation witness: " + e);
  if (!is_connected(w.base)) throw ClassMismatch("inflation base must be connected");
  ClassStretchResult base = stretch_auto(w.base, budget);
  if (!base.exact() || !base.certificate) {
    StretchCertificate c = exact_stretch_index(w.base, budget);
    base = exact("oracle", c.stretch, c, Rule::kOracle);
  }
  const int sigma = base.lo;
  const int formula = 2 * sigma + 1;
  ClassStretchResult r;
  r.class_name = "inflation";
  r.rule = Rule::kInflationFormula;
  r.certificate = lift_tree(h, w, base.certificate->tree.edges());
  r.hi = r.certificate->stretch;
  if (is_tree(h)) {
    r.lo = 1;
  } else if (is_tree(w.base)) {
    r.lo = 2;
    r.notes.push_back("base is a tree: the formula is only an upper estimate");
  } else {
    r.lo = std::min(formula, r.hi);
  }
  if (r.lo < r.hi && h.n() <= kMaxOracleVertices) {
    try {
      auto c = exact_stretch_index(h, budget);
      r.lo = r.hi = c.stretch;
      r.certificate = c;
      r.rule = Rule::kOracle;
      r.notes.push_back("lifted tree stretch above the lower bound; oracle closed the gap");
    } catch (const BudgetExceeded& e) {
      r.notes.push_back(std::string("oracle skipped: ") + e.what());
    }
  }
  r.notes.push_back("base stretch " + std::to_string(sigma) + " (" + rule_tag(base.rule) + ")");
  r.notes.push_back("formula 2*sigma+1 = " + std::to_string(formula));
  const char* verdict = r.lo == r.hi && r.hi == formula ? "attained"
                        : formula < r.lo || formula > r.hi ? "does not hold"
                                                           : "not established";
  r.notes.push_back(std::string("formula ") + verdict);
  return r;
}

// ---------------------------------------------------------------------------
// General 2-admissibility.

namespace {

// Candidate stretch-2 tree of a biconnected block (local ids), or nullopt.
std::optional<std::vector<Edge>> assemble_block(const Graph& b) {
  Dsu dsu(b.n());
  std::vector<Edge> chosen;
  auto take = [&](Edge e) {
    if (!dsu.unite(e.u, e.v)) return false;
    chosen.push_back(e);
    return true;
  };
  // Adjacent separating pairs keep their edge.
  std::vector<Edge> forced;
  for (auto [u, v] : separating_pairs(b)) {
    if (b.has_edge(u, v)) forced.push_back(make_edge(u, v));
  }
  std::vector<int> forced_degree(b.n(), 0);
  for (const auto& e : forced) {
    if (!take(e)) return std::nullopt;
    ++forced_degree[e.u];
    ++forced_degree[e.v];
  }
  // Each 3-connected piece spanned by a star at one of its universal vertices.
  for (const auto& piece : maximal_triconnected_sets(b)) {
    auto in = membership(b.n(), piece);
    Vertex center = -1;
    for (Vertex v : piece) {
      int inside = 0;
      for (Vertex w : b.neighbors(v)) inside += in[w];
      if (inside != static_cast<int>(piece.size()) - 1) continue;
      if (center == -1 || forced_degree[v] > forced_degree[center]) center = v;
    }
    if (center == -1) return std::nullopt;
    for (Vertex v : piece) {
      if (v != center && !b.has_edge(v, center)) return std::nullopt;
      if (v != center && dsu.find(v) != dsu.find(center)) take(make_edge(v, center));
    }
  }
  for (const auto& e : b.edges()) take(e);
  if (static_cast<int>(chosen.size()) != b.n() - 1) return std::nullopt;
  if (tree_stretch_factor(b, chosen).stretch > 2) return std::nullopt;
  return chosen;
}

}  // namespace

TwoAdmissibility two_admissible_general(const Graph& g) {
  require_connected(g);
  TwoAdmissibility out;
  if (is_tree(g)) {
    out.certificate = tree_stretch_factor(g, g.edges());
    out.path = AdmissibilityPath::kTree;
    return out;
  }
  if (auto u = first_universal(g)) {
    out.certificate = build_star_spanner(g, *u);
    out.path = AdmissibilityPath::kUniversal;
    return out;
  }
  // Trees of the blocks glue into a tree of g with the same stretch.
  std::vector<Edge> edges;
  out.path = AdmissibilityPath::kUniversal;
  for (const auto& block : block_decomposition(g).blocks) {
    if (block.size() == 1) continue;
    Subgraph sub = induced_subgraph(g, block);
    std::optional<std::vector<Edge>> local;
    if (sub.graph.n() == 2 || is_tree(sub.graph)) {
      local = sub.graph.edges();
    } else if (auto u = first_universal(sub.graph)) {
      local = build_star_spanner(sub.graph, *u).tree.edges();
    } else if ((local = assemble_block(sub.graph))) {
      out.path = std::max(out.path, AdmissibilityPath::kAssembly);
    } else {
      out.path = AdmissibilityPath::kBruteForce;
      if (sub.graph.n() > kMaxOracleVertices) return out;
      auto cert = is_t_admissible_bruteforce(sub.graph, 2);
      if (!cert) return out;
      local = cert->tree.edges();
    }
    for (const auto& e : *local) edges.push_back(make_edge(sub.to_parent[e.u], sub.to_parent[e.v]));
  }
  auto cert = tree_stretch_factor(g, std::move(edges));
  if (cert.stretch > 2) throw GraphError("internal: block trees exceed stretch 2");
  out.certificate = std::move(cert);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

ClassStretchResult with_class(ClassStretchResult r, const std::string& cls) {
  r.class_name = cls;
  return r;
}

ClassStretchResult general(const Graph& g, double budget) {
  auto two = two_admissible_general(g);
  if (two.certificate) {
    auto r = exact("general", two.certificate->stretch, *two.certificate,
                   two.path == AdmissibilityPath::kBruteForce ? Rule::kBruteForce : Rule::kTriconnectedStars);
    r.notes.push_back("2-admissibility path: " + to_string(two.path));
    return r;
  }
  ClassStretchResult r;
  r.class_name = "general";
  r.lo = 3;
  r.hi = std::max(3, g.n() - 1);
  r.rule = Rule::kTriconnectedStars;
  if (g.n() <= kMaxOracleVertices) {
    try {
      auto c = exact_stretch_index(g, budget);
      r.lo = r.hi = c.stretch;
      r.certificate = c;
      r.rule = Rule::kOracle;
    } catch (const BudgetExceeded& e) {
      r.notes.push_back(std::string("oracle skipped: ") + e.what());
    }
  }
  if (!r.certificate) {
    r.certificate = tree_stretch_factor(g, bfs_tree(g));
    r.hi = std::min(r.hi, r.certificate->stretch);
  }
  return r;
}

}  // namespace

ClassStretchResult stretch_auto(const Graph& g, double budget) {
  require_connected(g);
  if (is_tree(g)) return tree_result(g, "tree");
  if (recognize_cograph(g).is_cograph()) return stretch_cograph(g);
  if (auto p = recognize_split(g)) return stretch_split(g, *p);
  if (recognize_p4_sparse(g).member) return stretch_p4_sparse(g);
  if (recognize_p4_tidy(g).member) return stretch_p4_tidy(g);
  if (auto p = zero_two_partition(g)) return two_admissible_02(g, *p);
  return general(g, budget);
}

ClassStretchResult stretch_by_class(const Graph& g, const std::string& cls, double budget) {
  require_connected(g);
  if (cls == "auto") return stretch_auto(g, budget);
  if (cls == "cograph") return stretch_cograph(g);
  if (cls == "p4_sparse") return stretch_p4_sparse(g);
  if (cls == "p4_tidy") return stretch_p4_tidy(g);
  if (cls == "split") {
    auto p = recognize_split(g);
    if (!p) throw ClassMismatch("not a split graph");
    return stretch_split(g, *p);
  }
  if (cls == "zero_two") {
    auto p = zero_two_partition(g);
    if (!p) throw ClassMismatch("not a (0,2)-graph");
    return two_admissible_02(g, *p);
  }
  if (cls == "inflation") {
    auto w = inflation_witness(g);
    if (!w) throw ClassMismatch("not a generalized inflation");
    return inflation_stretch(g, *w, budget);
  }
  if (cls == "zero_l") {
    if (g.n() > kDefaultCoverLimit) throw GraphError("clique cover search limited to 64 vertices");
    for (int ell = 1; ell <= g.n(); ++ell) {
      if (auto c = clique_cover(g, ell)) return bounds_0l(g, *c);
    }
  }
  if (cls == "general") return with_class(general(g, budget), "general");
  if (cls == "oracle") {
    auto c = exact_stretch_index(g, budget);
    return exact("oracle", c.stretch, c, Rule::kOracle);
  }
  throw GraphError("unknown class '" + cls + "'");
}

}  // namespace treespan
