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

// Acceptance run: one PASS/FAIL line per criterion, details indented.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "fixtures.hpp"
#include "treespan/bench.hpp"
#include "treespan/connectivity.hpp"
#include "treespan/io.hpp"
#include "treespan/isomorphism.hpp"
#include "treespan/recognition.hpp"
#include "treespan/spanners.hpp"
#include "treespan/transforms.hpp"

using namespace treespan;

namespace {

constexpr double kBudget = 1e15;

struct Criterion {
  int id;
  std::string title;
  bool pass = true;
  std::vector<std::string> lines;

  Criterion(int i, std::string t) : id(i), title(std::move(t)) {}

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void note(const std::string& what) { lines.push_back("note " + what); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int sigma(const Graph& g) { return exact_stretch_index(g, kBudget).stretch; }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Graph gen(const std::string& kind, std::vector<std::string> kv, std::uint64_t seed = 1) {
  return generate(parse_generate_spec(kind, kv), seed);
}

void known_values(Criterion& c) {
  auto t0 = std::chrono::steady_clock::now();
  c.check(sigma(cycle_power(6, 2)) == 3, fmt("sigma(C6^2) = %d, want 3", sigma(cycle_power(6, 2))));
  for (int n = 3; n <= 9; ++n) {
    int s = sigma(cycle_graph(n));
    c.check(s == n - 1, fmt("sigma(C%d) = %d, want %d", n, s, n - 1));
  }
  for (int n = 3; n <= 8; ++n) {
    int s = sigma(complete_graph(n));
    c.check(s == 2, fmt("sigma(K%d) = %d, want 2", n, s));
  }
  for (const char* kind : {"thin_spider", "thick_spider"}) {
    const int want = std::string(kind) == "thin_spider" ? 2 : 3;
    for (int k = 3; k <= 5; ++k) {
      for (const char* r : {"none", "K2", "P3"}) {
        Graph g = gen(kind, {"k=" + std::to_string(k), std::string("r=") + r});
        int s = sigma(g);
        c.check(s == want, fmt("%s |K|=%d R=%s: sigma = %d, want %d", kind, k, r, s, want));
      }
    }
  }
  const std::string caption = "23223333";
  for (char letter = 'a'; letter <= 'h'; ++letter) {
    Graph g = gen("almost_spider", {std::string("case=") + letter, "k=3"});
    auto p = almost_spider_partition(g);
    const int want = caption[letter - 'a'] - '0';
    int s = sigma(g);
    c.check(p && p->case_letter() == letter && s == want,
            fmt("almost-spider (%c) %s: sigma = %d, want %d", letter, p ? p->label().c_str() : "unrecognized", s,
                want));
  }
  double secs = seconds_since(t0);
  c.check(secs < 60, fmt("runtime %.1f s (limit 60 s)", secs));
}

void oracle_suites(Criterion& c) {
  auto t0 = std::chrono::steady_clock::now();
  for (const char* path : {"split", "cograph", "p4_sparse", "p4_tidy", "zero_two"}) {
    AgreementRow row = exhaustive_agreement(8, path);
    c.check(row.all_agree(), fmt("%-9s connected n<=8: %d in class, %d agree, %d disagree (%.1f s)", path,
                                 row.agree + row.disagree, row.agree, row.disagree, row.seconds));
  }
  int graphs = 0, agree = 0;
  for (const auto& g : fx::connected_upto(8)) {
    ++graphs;
    agree += two_admissible_general(g).certificate.has_value() == is_t_admissible_bruteforce(g, 2).has_value();
  }
  c.check(agree == graphs, fmt("two_admissible_general vs brute force t=2: %d / %d agree", agree, graphs));
  double secs = seconds_since(t0);
  c.check(secs < 1800, fmt("runtime %.1f s (limit 1800 s)", secs));
}

void inflation_law(Criterion& c) {
  struct Base {
    std::string name;
    Graph g;
  };
  std::vector<Base> bases;
  for (int n = 3; n <= 6; ++n) bases.push_back({"C" + std::to_string(n), cycle_graph(n)});
  bases.push_back({"K4", complete_graph(4)});
  bases.push_back({"K4-e", fx::k4_minus_e()});
  bases.push_back({"bowtie", fx::bowtie()});
  for (const auto& b : bases) {
    const int sb = sigma(b.g);
    Graph h = inflate(degree_inflation(b.g)).graph;
    const int sh = sigma(h);
    c.check(sh == 2 * sb + 1, fmt("%-6s sigma(G) = %d, sigma(inflate) = %d, 2 sigma(G)+1 = %d", b.name.c_str(), sb,
                                  sh, 2 * sb + 1));
  }
  Graph net = inflate({star_graph(3), {3, 1, 1, 1}, std::nullopt}).graph;
  const int sn = sigma(net);
  c.check(are_isomorphic(net, net_graph()) && sn == 2,
          fmt("K1,3    sigma(net) = %d vs formula 3: DISAGREE-EXPECTED (tree base)", sn));
}

void bounds(Criterion& c) {
  int corpus = 0, in_bounds = 0, passing = 0, attaining = 0, flagged = 0, complete = 0;
  std::vector<std::string> unexpected;
  for (const auto& g : fx::connected_upto(8, 3)) {
    if (is_tree(g)) continue;
    const int ell = bf::min_clique_cover(g);
    const int s = sigma(g);
    if (ell == 1) {
      // Complete graphs: sigma = 2 exceeds 2l - 1 = 1.
      ++complete;
      continue;
    }
    ++corpus;
    if (2 <= s && s <= 2 * ell - 1) ++in_bounds;
    else unexpected.push_back(write_graph6(g));
    auto cover = clique_cover(g, ell);
    if (charact_upper_test(g, *cover)) {
      ++passing;
      if (s == 2 * ell - 1) ++attaining;
      else unexpected.push_back(write_graph6(g));
    } else if (s == 2 * ell - 1) {
      ++flagged;
    }
  }
  for (int l = 3; l <= 8; ++l) {
    Graph h = inflate(degree_inflation(cycle_graph(l))).graph;
    CliqueCover cover = inflate(degree_inflation(cycle_graph(l))).witness.cover;
    ++corpus;
    ++passing;
    const int s = sigma(h);
    if (s >= 2 && s <= 2 * l - 1) ++in_bounds;
    if (charact_upper_test(h, cover) && s == 2 * l - 1) ++attaining;
  }
  c.check(in_bounds == corpus, fmt("2 <= sigma <= 2l-1 on %d / %d graphs (n<=8 non-trees, l>=2; inflated C3..C8)",
                                   in_bounds, corpus));
  c.check(attaining == passing, fmt("cycle-subjacent test passes on %d graphs, sigma = 2l-1 on %d", passing,
                                    attaining));
  Graph c62 = cycle_power(6, 2);
  CliqueCover two{{{0, 1, 2}, {3, 4, 5}}};
  const bool c62_flag = !charact_upper_test(c62, two) && sigma(c62) == 3;
  c.check(c62_flag, "C6^2: test fails, sigma = 3 = 2l-1 (flagged only-if discrepancy)");
  c.note(fmt("%d graphs attain 2l-1 without passing the test (flagged, C6^2 among them)", flagged));
  c.note(fmt("%d complete graphs (l = 1) excluded: sigma = 2 > 2l-1 = 1", complete));
  for (const auto& u : unexpected) c.note("unexpected: " + u.substr(0, u.size() - 1));
}

void structure(Criterion& c) {
  int cases = 0, ok = 0;
  for (const auto& g : fx::connected_upto(8, 2)) {
    if (!bf::universal_vertices(g).empty()) continue;
    auto parts = bf::zero_two_partitions(g);
    if (parts.size() < 2) continue;
    ++cases;
    bool all = true;
    for (const auto& [k1, k2] : parts) {
      auto h = transversal_subgraph(g, ZeroTwoPartition{k1, k2});
      all = all && are_isomorphic(induced_subgraph(g, h.vertices).graph, g);
    }
    ok += all;
  }
  c.check(cases > 0 && ok == cases,
          fmt("transversal subgraphs isomorphic to G on %d / %d multi-partition (0,2)-graphs", ok, cases));
  int bases = 0, iso = 0, round = 0;
  for (const auto& g : fx::connected_upto(7, 2)) {
    ++bases;
    auto inf = inflate(degree_inflation(g));
    iso += are_isomorphic(line_graph(subdivide(g)).graph, inf.graph);
    round += subjacent_graph(inf.graph, inf.witness.cover) == g;
  }
  c.check(iso == bases, fmt("line(subdivide(G)) = inflate(G, degrees) on %d / %d bases", iso, bases));
  c.check(round == bases, fmt("subjacent(inflate(G)) = G on %d / %d bases", round, bases));
}

void performance(Criterion& c) {
  const std::vector<int> sizes = {10000, 20000, 50000, 100000};
  for (const auto& family : scaling_families()) {
    if (family == "zero_two") {
      // Two cliques on n vertices carry at least n^2/4 - n/2 edges.
      ScalingRow row = scaling_run(family, {2500, 5000, 10000}, 1, 3);
      std::string pts;
      for (const auto& p : row.points) pts += fmt(" n=%d m=%lld %.3fs;", p.n, p.m, p.seconds);
      c.note("zero_two measured:" + pts + fmt(" slope %.2f", row.slope));
      c.check(row.slope <= 1.25, fmt("zero_two slope %.2f <= 1.25 on n <= 10^4", row.slope));
      const double edges = 2.0 * (50000.0 * 49999.0 / 2.0);
      c.check(false, fmt("zero_two at n=10^5 needs %.2e edges (~%.0f GB as edge pairs); not run", edges,
                         edges * 8 / 1e9));
      continue;
    }
    ScalingRow row = scaling_run(family, sizes, 1, 3);
    std::string pts;
    bool fast = true;
    for (const auto& p : row.points) {
      pts += fmt(" n=%d m=%lld %.3fs;", p.n, p.m, p.seconds);
      fast = fast && p.seconds < 10;
    }
    c.note(family + ":" + pts);
    c.check(fast, family + " every point under 10 s");
    c.check(row.slope <= 1.25, fmt("%s log-log slope %.2f <= 1.25", family.c_str(), row.slope));
  }
}

}  // namespace

int main() {
  std::vector<Criterion> all = {
      {1, "known-value regression"}, {2, "oracle-equivalence suites"}, {3, "inflation law"},
      {4, "(0,l) bounds and characterization"}, {5, "structural invariants"}, {6, "performance scaling"}};
  const std::vector<std::function<void(Criterion&)>> runs = {known_values, oracle_suites, inflation_law,
                                                             bounds,       structure,     performance};
  bool every = true;
  for (std::size_t i = 0; i < all.size(); ++i) {
    Criterion& c = all[i];
    auto t0 = std::chrono::steady_clock::now();
    try {
      runs[i](c);
    } catch (const std::exception& e) {
      c.check(false, std::string("exception: ") + e.what());
    }
    for (const auto& l : c.lines) std::printf("    %s\n", l.c_str());
    std::printf("%s criterion %d: %s (%.1f s)\n", c.pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                seconds_since(t0));
    std::fflush(stdout);
    every = every && c.pass;
  }
  return every ? 0 : 1;
}
