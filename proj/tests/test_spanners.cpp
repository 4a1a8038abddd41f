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

#include <algorithm>

#include "brute_force.hpp"
#include "fixtures.hpp"
#include "treespan/connectivity.hpp"
#include "treespan/io.hpp"
#include "treespan/isomorphism.hpp"
#include "treespan/spanners.hpp"
#include "treespan/transforms.hpp"

using namespace treespan;

namespace {

using VS = std::vector<Vertex>;

void expect_verified(const Graph& g, const StretchCertificate& c) {
  EXPECT_EQ(bf::stretch_of(g, c.tree.edges()), c.stretch) << write_graph6(g);
  EXPECT_EQ(static_cast<int>(c.tree.edges().size()), g.n() - 1);
}

void expect_exact(const Graph& g, const ClassStretchResult& r, int sigma) {
  EXPECT_TRUE(r.exact()) << r.lo << ".." << r.hi;
  EXPECT_EQ(r.lo, sigma);
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ(r.certificate->stretch, sigma);
  expect_verified(g, *r.certificate);
}

bool has_note(const ClassStretchResult& r, const std::string& text) {
  return std::any_of(r.notes.begin(), r.notes.end(),
                     [&](const std::string& s) { return s.find(text) != std::string::npos; });
}

Graph almost_spider_case(char c, int k = 3, const char* r = "none") {
  return generate(parse_generate_spec("almost_spider", {std::string("case=") + c, "k=" + std::to_string(k),
                                                        std::string("r=") + r, "r_size=2"}),
                  1);
}

}  // namespace

TEST(Cograph, Examples) {
  auto star = stretch_cograph(star_graph(4));
  expect_exact(star_graph(4), star, 1);
  EXPECT_EQ(star.rule, Rule::kTree);

  auto c4 = stretch_cograph(cycle_graph(4));
  expect_exact(cycle_graph(4), c4, 3);
  EXPECT_EQ(c4.rule, Rule::kJoinBistar);
  EXPECT_EQ(bf::min_stretch(cycle_graph(4)), 3);

  auto k4 = stretch_cograph(complete_graph(4));
  expect_exact(complete_graph(4), k4, 2);
  EXPECT_EQ(k4.rule, Rule::kUniversalStar);

  EXPECT_THROW(stretch_cograph(path_graph(4)), ClassMismatch);
}

TEST(P4Sparse, Examples) {
  auto net = stretch_p4_sparse(net_graph());
  expect_exact(net_graph(), net, 2);
  EXPECT_EQ(net.rule, Rule::kSpiderThin);

  auto sun = stretch_p4_sparse(sun3_graph());
  expect_exact(sun3_graph(), sun, 3);
  EXPECT_EQ(sun.rule, Rule::kSpiderThick);

  // The thin spider with |K| = 2 and empty R is P4, a tree.
  Graph p4 = generate(parse_generate_spec("thin_spider", {"k=2", "r=none"}), 1);
  ASSERT_TRUE(are_isomorphic(p4, path_graph(4)));
  auto r = stretch_p4_sparse(p4);
  expect_exact(p4, r, 1);
  EXPECT_EQ(r.rule, Rule::kTree);

  EXPECT_THROW(stretch_p4_sparse(cycle_graph(5)), ClassMismatch);
}

TEST(P4Tidy, Examples) {
  Graph b = almost_spider_case('b');
  expect_exact(b, stretch_p4_tidy(b), 3);
  Graph c = almost_spider_case('c');
  expect_exact(c, stretch_p4_tidy(c), 2);
  auto c5 = stretch_p4_tidy(cycle_graph(5));
  expect_exact(cycle_graph(5), c5, 4);
  EXPECT_EQ(c5.rule, Rule::kCycleC5);
  EXPECT_THROW(stretch_p4_tidy(cycle_graph(6)), ClassMismatch);
}

TEST(Split, Examples) {
  // clique {0,1,2}; 3 ~ {0,1}; 4 ~ {0,2}: 0 is a common neighbor.
  Graph a = fx::make(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {2, 4}});
  auto ra = stretch_split(a, *recognize_split(a));
  expect_exact(a, ra, 2);
  EXPECT_EQ(ra.rule, Rule::kSplitCommonNeighbor);
  EXPECT_EQ(bf::min_stretch(a), 2);

  // 3 ~ {0,1}; 4 ~ {1,2}: common neighbor 1.
  Graph b = fx::make(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}});
  expect_exact(b, stretch_split(b, *recognize_split(b)), 2);
  EXPECT_EQ(bf::min_stretch(b), 2);

  // clique {0..3}; 4 ~ {0,1}; 5 ~ {2,3}: no common neighbor.
  Graph c = fx::make(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 5}, {3, 5}});
  auto rc = stretch_split(c, *recognize_split(c));
  expect_exact(c, rc, 3);
  EXPECT_EQ(rc.rule, Rule::kSplitStarUpper);
  EXPECT_EQ(bf::min_stretch(c), 3);
  expect_verified(c, build_split_spanner(c, *recognize_split(c)));
  EXPECT_EQ(build_split_spanner(c, *recognize_split(c)).stretch, 3);

  auto net = stretch_split(net_graph(), *recognize_split(net_graph()));
  expect_exact(net_graph(), net, 2);
  EXPECT_EQ(net.rule, Rule::kSplitPendantStable);
  EXPECT_EQ(build_split_spanner(net_graph(), *recognize_split(net_graph())).stretch, 2);

  Graph with_universal = fx::make(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {1, 4}});
  EXPECT_EQ(build_split_spanner(with_universal, *recognize_split(with_universal)).stretch, 2);

  EXPECT_THROW(stretch_split(a, SplitPartition{{0, 1}, {2, 3, 4}}), GraphError);
}

TEST(ZeroTwo, TransversalExamples) {
  auto c4 = transversal_subgraph(cycle_graph(4), ZeroTwoPartition{{0, 1}, {2, 3}});
  EXPECT_EQ(c4.vertices, (VS{0, 1, 2, 3}));
  EXPECT_EQ(c4.edges, cycle_graph(4).edges());

  Graph bridge = fx::make(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3}});
  auto tb = transversal_subgraph(bridge, ZeroTwoPartition{{0, 1, 2}, {3, 4, 5}});
  EXPECT_EQ(tb.vertices, (VS{2, 3}));
  EXPECT_EQ(tb.edges, (std::vector<Edge>{{2, 3}}));

  Graph c62 = cycle_power(6, 2);
  auto tc = transversal_subgraph(c62, *zero_two_partition(c62));
  EXPECT_EQ(tc.vertices, (VS{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(tc.edges, c62.edges());
  EXPECT_EQ(tc.crossing.size(), 6u);
}

TEST(ZeroTwo, DeciderExamples) {
  auto c4 = two_admissible_02(cycle_graph(4), *zero_two_partition(cycle_graph(4)));
  expect_exact(cycle_graph(4), c4, 3);

  Graph bow = fx::bowtie();
  auto rb = two_admissible_02(bow, *zero_two_partition(bow));
  expect_exact(bow, rb, 2);
  EXPECT_EQ(bf::min_stretch(bow), 2);

  Graph prism = generate(parse_generate_spec("zero_two", {"k1=3", "k2=3", "cross=matching"}), 7);
  auto rp = two_admissible_02(prism, *zero_two_partition(prism));
  expect_exact(prism, rp, 3);
  EXPECT_EQ(bf::min_stretch(prism), 3);
}

TEST(ZeroTwo, InducedC4MatchesBruteForce) {
  for (const auto& g : fx::connected_upto(8, 2)) {
    if (!bf::is_zero_two(g)) continue;
    for (const auto& [k1, k2] : bf::zero_two_partitions(g)) {
      ASSERT_EQ(has_induced_c4_02(g, ZeroTwoPartition{k1, k2}), bf::has_induced_c4(g)) << write_graph6(g);
    }
  }
}

TEST(CliqueCoverBounds, Examples) {
  CliqueCover three{{{0, 1}, {2, 3}, {4, 5}}};
  ASSERT_TRUE(charact_upper_test(cycle_graph(6), three));
  auto c6 = bounds_0l(cycle_graph(6), three);
  expect_exact(cycle_graph(6), c6, 5);
  EXPECT_EQ(c6.rule, Rule::kCycleInflationUpper);

  auto k4 = bounds_0l(complete_graph(4), CliqueCover{{{0, 1, 2, 3}}});
  EXPECT_EQ(k4.lo, 2);
  EXPECT_EQ(k4.hi, 2);
  EXPECT_EQ(bf::min_stretch(complete_graph(4)), 2);

  Graph c62 = cycle_power(6, 2);
  CliqueCover two{{{0, 1, 2}, {3, 4, 5}}};
  EXPECT_FALSE(charact_upper_test(c62, two));
  auto rc = bounds_0l(c62, two);
  EXPECT_EQ(rc.lo, 2);
  EXPECT_EQ(rc.hi, 3);
  EXPECT_EQ(exact_stretch_index(c62).stretch, 3);

  EXPECT_THROW(bounds_0l(cycle_graph(6), CliqueCover{{{0, 2}, {1, 3}, {4, 5}}}), GraphError);
}

TEST(CliqueCoverBounds, ChainHoldsOnSmallGraphs) {
  for (const auto& g : fx::connected_upto(7, 3)) {
    if (is_tree(g)) continue;
    auto cover = clique_cover(g, bf::min_clique_cover(g));
    ASSERT_TRUE(cover);
    auto r = bounds_0l(g, *cover);
    const int sigma = bf::min_stretch(g);
    ASSERT_LE(r.lo, sigma) << write_graph6(g);
    // The single-clique case is the complete graph, where 2l-1 = 1 < 2.
    ASSERT_GE(r.hi, sigma) << write_graph6(g);
    ASSERT_TRUE(r.certificate);
    ASSERT_EQ(bf::stretch_of(g, r.certificate->tree.edges()), r.certificate->stretch);
  }
}

TEST(Subjacent, Examples) {
  EXPECT_TRUE(are_isomorphic(subjacent_graph(cycle_graph(6), CliqueCover{{{0, 1}, {2, 3}, {4, 5}}}), cycle_graph(3)));
  EXPECT_EQ(subjacent_graph(cycle_power(6, 2), CliqueCover{{{0, 1, 2}, {3, 4, 5}}}), complete_graph(2));
  for (const auto& base : fx::connected_upto(6, 2)) {
    auto inf = inflate(degree_inflation(base));
    ASSERT_EQ(subjacent_graph(inf.graph, inf.witness.cover), base) << write_graph6(base);
  }
}

TEST(Inflation, CycleExamples) {
  for (int l = 3; l <= 6; ++l) {
    auto inf = inflate(degree_inflation(cycle_graph(l)));
    ASSERT_TRUE(are_isomorphic(inf.graph, cycle_graph(2 * l)));
    auto r = inflation_stretch(inf.graph, inf.witness);
    expect_exact(inf.graph, r, 2 * l - 1);
    EXPECT_TRUE(has_note(r, "formula attained"));
  }
}

TEST(Inflation, TreeBaseNet) {
  InflationSpec spec{star_graph(3), {3, 1, 1, 1}, std::nullopt};
  auto inf = inflate(spec);
  ASSERT_TRUE(are_isomorphic(inf.graph, net_graph()));

  // The lifted star already has stretch 2, so no oracle is needed.
  auto lifted = inflation_stretch(inf.graph, inf.witness, 0);
  expect_exact(inf.graph, lifted, 2);
  EXPECT_TRUE(has_note(lifted, "formula does not hold"));

  // With it, sigma(net) = 2 and the formula value 3 is refuted.
  auto tight = inflation_stretch(inf.graph, inf.witness);
  expect_exact(inf.graph, tight, 2);
  EXPECT_EQ(bf::min_stretch(net_graph()), 2);
  EXPECT_TRUE(has_note(tight, "formula does not hold"));
}

TEST(Inflation, KFourIsNotTwoSigmaPlusOne) {
  // sigma(K4) = 2, yet its degree inflation has stretch 6, not 5.
  auto inf = inflate(degree_inflation(complete_graph(4)));
  auto r = inflation_stretch(inf.graph, inf.witness);
  expect_exact(inf.graph, r, exact_stretch_index(inf.graph).stretch);
  EXPECT_EQ(r.lo, 6);
  EXPECT_TRUE(has_note(r, "formula does not hold"));
}

TEST(Builders, JoinExamples) {
  auto c4 = build_join_3_spanner(cycle_graph(4), {0, 2}, {1, 3});
  expect_verified(cycle_graph(4), c4);
  EXPECT_EQ(c4.stretch, 3);

  auto k4 = build_join_3_spanner(complete_graph(4), {0}, {1, 2, 3});
  expect_verified(complete_graph(4), k4);
  EXPECT_EQ(k4.stretch, 2);

  Graph k33 = complete_bipartite(3, 3);
  auto b = build_join_3_spanner(k33, {0, 1, 2}, {3, 4, 5});
  expect_verified(k33, b);
  EXPECT_EQ(b.stretch, 3);

  EXPECT_THROW(build_join_3_spanner(path_graph(4), {0, 1}, {2, 3}), GraphError);
}

TEST(Builders, SpiderExamples) {
  auto net = build_spider_spanner(net_graph(), *spider_partition(net_graph()));
  expect_verified(net_graph(), net);
  EXPECT_EQ(net.stretch, 2);

  auto sun = build_spider_spanner(sun3_graph(), *spider_partition(sun3_graph()));
  expect_verified(sun3_graph(), sun);
  EXPECT_EQ(sun.stretch, 3);

  Graph thin = generate(parse_generate_spec("thin_spider", {"k=4", "r=K2"}), 1);
  auto t = build_spider_spanner(thin, *spider_partition(thin));
  expect_verified(thin, t);
  EXPECT_EQ(t.stretch, 2);
}

TEST(Builders, AlmostSpiderCaseValues) {
  const std::string expected = "23223333";
  for (char c = 'a'; c <= 'h'; ++c) {
    for (int k = 3; k <= 4; ++k) {
      for (const char* r : {"none", "K2", "P3"}) {
        Graph g = almost_spider_case(c, k, r);
        auto p = almost_spider_partition(g);
        ASSERT_TRUE(p);
        auto cert = build_almost_spider_spanner(g, *p);
        expect_verified(g, cert);
        const int want = expected[p->case_letter() - 'a'] - '0';
        EXPECT_EQ(cert.stretch, want) << c << " k=" << k << " r=" << r << " recognized " << p->label();
        EXPECT_EQ(exact_stretch_index(g, 1e9).stretch, want);
      }
    }
  }
}

TEST(TwoAdmissible, Examples) {
  auto k4 = two_admissible_general(complete_graph(4));
  ASSERT_TRUE(k4.certificate);
  EXPECT_EQ(k4.certificate->tree.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}));

  EXPECT_FALSE(two_admissible_general(cycle_graph(4)).certificate);

  Graph two = fx::two_k4_sharing_edge();
  auto r = two_admissible_general(two);
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ(r.certificate->stretch, 2);
  const auto& es = r.certificate->tree.edges();
  EXPECT_TRUE(std::find(es.begin(), es.end(), Edge{0, 1}) != es.end());
  EXPECT_EQ(bf::min_stretch(two), 2);
}

TEST(TwoAdmissible, MatchesBruteForce) {
  for (const auto& g : fx::connected_upto(7)) {
    auto r = two_admissible_general(g);
    ASSERT_EQ(r.certificate.has_value(), bf::min_stretch(g) <= 2) << write_graph6(g);
    if (r.certificate) {
      ASSERT_LE(bf::stretch_of(g, r.certificate->tree.edges()), 2);
    }
  }
}

TEST(Auto, ClassPathsMatchOracleOnSmallGraphs) {
  for (const auto& g : fx::connected_upto(7)) {
    auto r = stretch_auto(g);
    const int sigma = bf::min_stretch(g);
    ASSERT_TRUE(r.exact()) << write_graph6(g);
    ASSERT_EQ(r.lo, sigma) << write_graph6(g) << " rule " << rule_tag(r.rule);
    ASSERT_TRUE(r.certificate);
    ASSERT_EQ(bf::stretch_of(g, r.certificate->tree.edges()), sigma);
  }
}

TEST(Auto, RuleTagsAreDistinct) {
  std::vector<std::string> tags;
  for (Rule r : all_rules()) tags.push_back(rule_tag(r));
  std::sort(tags.begin(), tags.end());
  EXPECT_EQ(std::adjacent_find(tags.begin(), tags.end()), tags.end());
  EXPECT_EQ(tags.size(), all_rules().size());
}

TEST(Auto, ByClassRefusesNonMembers) {
  EXPECT_THROW(stretch_by_class(cycle_graph(5), "split"), ClassMismatch);
  EXPECT_THROW(stretch_by_class(cycle_graph(5), "zero_two"), ClassMismatch);
  EXPECT_THROW(stretch_by_class(cycle_graph(5), "nonsense"), GraphError);
  auto ok = stretch_by_class(cycle_graph(6), "inflation");
  EXPECT_EQ(ok.lo, 5);
}
