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

#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "fixtures.hpp"
#include "treespan/connectivity.hpp"
#include "treespan/io.hpp"
#include "treespan/isomorphism.hpp"
#include "treespan/recognition.hpp"
#include "treespan/spanners.hpp"
#include "treespan/transforms.hpp"

using namespace treespan;

namespace {

Graph gen(const std::string& kind, std::vector<std::string> kv, std::uint64_t seed) {
  return generate(parse_generate_spec(kind, kv), seed);
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

TEST(Inflate, Examples) {
  EXPECT_TRUE(are_isomorphic(inflate({complete_graph(3), {2, 2, 2}, std::nullopt}).graph, cycle_graph(6)));
  EXPECT_TRUE(are_isomorphic(inflate({star_graph(3), {3, 1, 1, 1}, std::nullopt}).graph, net_graph()));
  EXPECT_TRUE(are_isomorphic(inflate({cycle_graph(4), {2, 2, 2, 2}, std::nullopt}).graph, cycle_graph(8)));
}

TEST(Inflate, Errors) {
  EXPECT_THROW(inflate({complete_graph(3), {2, 1, 2}, std::nullopt}), GraphError);
  EXPECT_THROW(inflate({complete_graph(3), {2, 2}, std::nullopt}), GraphError);
  // Both edges at vertex 0 of the path 1-0-2 use clique member 0.
  EXPECT_THROW(inflate({star_graph(2), {2, 1, 1}, std::vector<std::pair<int, int>>{{0, 0}, {0, 0}}}), GraphError);
}

TEST(Inflate, WitnessRoundTrips) {
  for (const auto& base : fx::connected_upto(6, 2)) {
    auto spec = degree_inflation(base);
    for (int& s : spec.sizes) s += 1;
    auto inf = inflate(spec);
    ASSERT_EQ(check_inflation_witness(inf.graph, inf.witness), "");
    ASSERT_EQ(inf.witness.base, base);
    ASSERT_EQ(subjacent_graph(inf.graph, inf.witness.cover), base);
  }
}

TEST(Subdivide, Examples) {
  EXPECT_TRUE(are_isomorphic(subdivide(complete_graph(3)), cycle_graph(6)));
  EXPECT_TRUE(are_isomorphic(subdivide(complete_graph(2)), path_graph(3)));
  Graph s = subdivide(star_graph(3));
  EXPECT_EQ(s.n(), 7);
  EXPECT_TRUE(is_tree(s));
  for (const auto& g : fx::connected_upto(6)) {
    Graph d = subdivide(g);
    ASSERT_EQ(d.n(), g.n() + g.m());
    ASSERT_EQ(d.m(), 2 * g.m());
    ASSERT_TRUE(is_bipartite(d));
  }
}

TEST(LineGraph, Examples) {
  EXPECT_TRUE(are_isomorphic(line_graph(cycle_graph(5)).graph, cycle_graph(5)));
  EXPECT_TRUE(are_isomorphic(line_graph(star_graph(3)).graph, complete_graph(3)));
  auto l = line_graph(path_graph(3));
  EXPECT_EQ(l.origin, (std::vector<Edge>{{0, 1}, {1, 2}}));
  for (const auto& g : fx::connected_upto(6, 2)) {
    auto lg = line_graph(g);
    for (const auto& e : lg.graph.edges()) {
      Edge a = lg.origin[e.u], b = lg.origin[e.v];
      ASSERT_TRUE(a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v);
    }
  }
}

TEST(LineGraph, OfSubdivisionIsDegreeInflation) {
  EXPECT_TRUE(are_isomorphic(line_graph(subdivide(complete_graph(3))).graph, cycle_graph(6)));
  for (const auto& g : fx::connected_upto(7, 2)) {
    ASSERT_TRUE(are_isomorphic(line_graph(subdivide(g)).graph, inflate(degree_inflation(g)).graph))
        << write_graph6(g);
  }
}

TEST(CyclePower, Examples) {
  Graph c62 = cycle_power(6, 2);
  EXPECT_EQ(c62.n(), 6);
  EXPECT_EQ(c62.m(), 12);
  EXPECT_EQ(cycle_power(5, 1), cycle_graph(5));
  EXPECT_EQ(cycle_power(6, 1), cycle_graph(6));
  EXPECT_EQ(exact_stretch_index(c62).stretch, 3);
  EXPECT_THROW(cycle_power(2, 1), GraphError);
  EXPECT_THROW(cycle_power(6, 3), GraphError);
  EXPECT_THROW(cycle_power(6, 0), GraphError);
}

TEST(Generate, Examples) {
  EXPECT_TRUE(are_isomorphic(gen("thin_spider", {"k=3", "r=none"}, 1), net_graph()));
  Graph prism = gen("zero_two", {"k1=3", "k2=3", "cross=matching"}, 7);
  EXPECT_EQ(prism.n(), 6);
  EXPECT_EQ(prism.m(), 9);
  EXPECT_TRUE(are_isomorphic(prism, line_graph(complete_bipartite(2, 3)).graph));
  EXPECT_TRUE(recognize_cograph(gen("cograph", {"n=8"}, 42)).is_cograph());
}

TEST(Generate, Deterministic) {
  for (const auto& kind : generator_kinds()) {
    EXPECT_EQ(gen(kind, {}, 5), gen(kind, {}, 5)) << kind;
  }
  EXPECT_NE(gen("gnp", {"n=20"}, 1), gen("gnp", {"n=20"}, 2));
  Graph a = gen("split", {"n=30", "shuffle=1"}, 3);
  EXPECT_EQ(a, gen("split", {"n=30", "shuffle=1"}, 3));
  EXPECT_THROW(gen("nonsense", {}, 1), GraphError);
  EXPECT_THROW(parse_generate_spec("split", {"n"}), GraphError);
}

TEST(Generate, ClassMembersPassRecognition) {
  constexpr int kDraws = 1000;
  for (std::uint64_t seed = 0; seed < kDraws; ++seed) {
    const std::string sn = "n=" + std::to_string(4 + seed % 9);
    const std::string sk = "k=" + std::to_string(3 + seed % 3);
    const char* r = seed % 4 == 0 ? "r=none" : seed % 4 == 1 ? "r=K2" : seed % 4 == 2 ? "r=P3" : "r=cograph";

    Graph split = gen("split", {sn, "shuffle=1"}, seed);
    ASSERT_TRUE(recognize_split(split)) << seed;
    ASSERT_TRUE(bf::is_split(split));

    Graph co = gen("cograph", {sn, "shuffle=1"}, seed);
    ASSERT_TRUE(recognize_cograph(co).is_cograph()) << seed;
    ASSERT_TRUE(is_connected(co));

    Graph sparse = gen("p4_sparse", {sn, "shuffle=1"}, seed);
    ASSERT_TRUE(recognize_p4_sparse(sparse).member) << seed;
    ASSERT_TRUE(bf::is_p4_sparse(sparse));

    Graph tidy = gen("p4_tidy", {sn, "shuffle=1"}, seed);
    ASSERT_TRUE(recognize_p4_tidy(tidy).member) << seed;
    ASSERT_TRUE(bf::is_p4_tidy(tidy));

    Graph thin = gen("thin_spider", {sk, r, "r_size=3", "shuffle=1"}, seed);
    auto pt = spider_partition(thin);
    ASSERT_TRUE(pt && pt->kind == SpiderKind::kThin) << seed;

    Graph thick = gen("thick_spider", {sk, r, "r_size=3", "shuffle=1"}, seed);
    auto pk = spider_partition(thick);
    ASSERT_TRUE(pk && pk->kind == SpiderKind::kThick) << seed;

    const std::string sc = std::string("case=") + static_cast<char>('a' + seed % 8);
    Graph almost = gen("almost_spider", {sc, sk, r, "r_size=3", "shuffle=1"}, seed);
    ASSERT_TRUE(almost_spider_partition(almost)) << seed << " " << sc;

    Graph z = gen("zero_two", {"k1=" + std::to_string(1 + seed % 5), "k2=" + std::to_string(1 + seed % 4),
                               "shuffle=1"},
                  seed);
    ASSERT_TRUE(zero_two_partition(z)) << seed;
    ASSERT_TRUE(is_connected(z));

    Graph inf = gen("inflation", {"base=gnp", "base_n=5", "extra=1", "p=0.5", "shuffle=1"}, seed);
    ASSERT_TRUE(inflation_witness(inf)) << seed;
  }
}

TEST(Join, AndUnion) {
  EXPECT_EQ(join(Graph(2), Graph(2)), fx::make(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  EXPECT_EQ(disjoint_union(complete_graph(2), complete_graph(2)), fx::make(4, {{0, 1}, {2, 3}}));
  EXPECT_TRUE(are_isomorphic(join(Graph(2), Graph(2)), cycle_graph(4)));
}
