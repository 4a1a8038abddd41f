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

#include <cmath>
#include <random>
#include <set>

#include "brute_force.hpp"
#include "fixtures.hpp"
#include "treespan/connectivity.hpp"
#include "treespan/io.hpp"
#include "treespan/oracle.hpp"
#include "treespan/transforms.hpp"

using namespace treespan;

TEST(TreeStretch, CycleMinusEdge) {
  auto c = tree_stretch_factor(cycle_graph(4), {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(c.stretch, 3);
  EXPECT_EQ(c.witness, (Edge{0, 3}));
}

TEST(TreeStretch, StarInComplete) {
  auto c = tree_stretch_factor(complete_graph(4), {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(c.stretch, 2);
  EXPECT_EQ(c.witness, (Edge{1, 2}));
}

TEST(TreeStretch, TreeIsItsOwnSpanner) {
  auto c = tree_stretch_factor(path_graph(5), path_graph(5).edges());
  EXPECT_EQ(c.stretch, 1);
  EXPECT_FALSE(c.witness.has_value());
}

TEST(TreeStretch, RejectsNonTrees) {
  EXPECT_THROW(tree_stretch_factor(cycle_graph(4), {{0, 1}, {1, 2}}), GraphError);
  EXPECT_THROW(tree_stretch_factor(cycle_graph(4), {{0, 1}, {1, 2}, {0, 2}}), GraphError);
  EXPECT_THROW(tree_stretch_factor(cycle_graph(4), {{0, 1}, {1, 2}, {1, 3}}), GraphError);
}

TEST(TreeStretch, MatchesBruteForce) {
  for (const auto& g : fx::connected_upto(6, 2)) {
    bf::for_each_tree(g, [&](const std::vector<Edge>& t) {
      ASSERT_EQ(tree_stretch_factor(g, t).stretch, bf::stretch_of(g, t)) << write_graph6(g);
    });
  }
}

TEST(TreeDistance, MatchesBruteForceOnLongTrees) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int v = 1; v < 30; ++v) edges.push_back(make_edge(static_cast<int>(rng() % v), v));
    Graph t(30, edges);
    ASSERT_TRUE(is_tree(t));
    TreeDistance d(t.n(), t.edges());
    for (int a = 0; a < t.n(); ++a) {
      for (int b = 0; b < t.n(); ++b) ASSERT_EQ(d.distance(a, b), bf::tree_distance(t.n(), t.edges(), a, b));
    }
  }
  // A long path exercises every lifting level.
  Graph p = path_graph(300);
  TreeDistance d(p.n(), p.edges());
  for (int a = 0; a < 300; a += 7) {
    for (int b = 0; b < 300; b += 11) ASSERT_EQ(d.distance(a, b), std::abs(a - b));
  }
}

TEST(SpanningTrees, CountExamples) {
  EXPECT_DOUBLE_EQ(spanning_tree_count(complete_graph(4)), 16);
  EXPECT_DOUBLE_EQ(spanning_tree_count(cycle_graph(5)), 5);
  EXPECT_DOUBLE_EQ(spanning_tree_count(path_graph(5)), 1);
  EXPECT_DOUBLE_EQ(spanning_tree_count(Graph(3)), 0);
  EXPECT_NEAR(spanning_tree_count(complete_graph(10)), 1e8, 1e-3);
}

TEST(SpanningTrees, EnumerationMatchesCountAndIsDistinct) {
  for (const auto& g : fx::connected_upto(6)) {
    auto trees = enumerate_spanning_trees(g);
    ASSERT_EQ(static_cast<double>(trees.size()), std::round(spanning_tree_count(g))) << write_graph6(g);
    ASSERT_EQ(static_cast<long long>(trees.size()), bf::tree_count(g));
    ASSERT_TRUE(std::is_sorted(trees.begin(), trees.end()));
    ASSERT_EQ(std::set<SpanningTree>(trees.begin(), trees.end()).size(), trees.size());
  }
}

TEST(SpanningTrees, EarlyStopAndErrors) {
  int seen = 0;
  for_each_spanning_tree(complete_graph(5), [&](const SpanningTree&) { return ++seen < 3; });
  EXPECT_EQ(seen, 3);
  EXPECT_THROW(enumerate_spanning_trees(Graph(3)), GraphError);
  try {
    enumerate_spanning_trees(complete_graph(6), 100);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_NEAR(e.count(), 1296, 1e-6);
  }
  EXPECT_THROW(exact_stretch_index(complete_graph(12), 1e6), BudgetExceeded);
}

TEST(ExactStretch, Examples) {
  EXPECT_EQ(exact_stretch_index(complete_graph(4)).stretch, 2);
  EXPECT_EQ(exact_stretch_index(path_graph(6)).stretch, 1);
  EXPECT_EQ(exact_stretch_index(Graph(1)).stretch, 1);
  EXPECT_EQ(exact_stretch_index(cycle_power(6, 2)).stretch, 3);
  EXPECT_EQ(exact_stretch_index(complete_bipartite(3, 3)).stretch, 3);
}

TEST(ExactStretch, CyclesHaveStretchNMinusOne) {
  for (int n = 3; n <= 9; ++n) EXPECT_EQ(exact_stretch_index(cycle_graph(n)).stretch, n - 1);
}

TEST(ExactStretch, OneIffTree) {
  for (const auto& g : fx::connected_upto(7)) {
    ASSERT_EQ(exact_stretch_index(g).stretch == 1, is_tree(g)) << write_graph6(g);
  }
}

TEST(ExactStretch, MatchesMinimumOverAllTrees) {
  for (const auto& g : fx::connected_upto(6)) {
    auto c = exact_stretch_index(g);
    ASSERT_EQ(c.stretch, bf::min_stretch(g)) << write_graph6(g);
    ASSERT_EQ(bf::stretch_of(g, c.tree.edges()), c.stretch);
  }
}

TEST(ExactStretch, CertificateIsLexicographicallySmallestMinimizer) {
  for (const auto& g : fx::connected_upto(5)) {
    auto c = exact_stretch_index(g);
    auto trees = enumerate_spanning_trees(g);
    for (const auto& t : trees) {
      if (bf::stretch_of(g, t.edges()) == c.stretch) {
        ASSERT_EQ(t, c.tree) << write_graph6(g);
        break;
      }
    }
  }
}

TEST(TAdmissible, MonotoneAndConsistent) {
  for (const auto& g : fx::connected_upto(6)) {
    const int sigma = bf::min_stretch(g);
    for (int t = 1; t <= g.n(); ++t) {
      auto c = is_t_admissible_bruteforce(g, t);
      ASSERT_EQ(c.has_value(), t >= sigma) << write_graph6(g) << " t=" << t;
      if (c) {
        ASSERT_LE(bf::stretch_of(g, c->tree.edges()), t);
      }
    }
  }
}

TEST(TAdmissible, SpannerExamples) {
  EXPECT_FALSE(is_t_admissible_bruteforce(cycle_graph(5), 3).has_value());
  EXPECT_TRUE(is_t_admissible_bruteforce(cycle_graph(5), 4).has_value());
  EXPECT_TRUE(is_t_admissible_bruteforce(fx::house(), 3).has_value());
  EXPECT_FALSE(is_t_admissible_bruteforce(fx::house(), 2).has_value());
}
