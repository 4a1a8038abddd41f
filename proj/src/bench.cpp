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

#include "treespan/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "treespan/connectivity.hpp"
#include "treespan/io.hpp"
#include "treespan/isomorphism.hpp"
#include "treespan/spanners.hpp"

namespace treespan {

void parallel_for(int count, int jobs, const std::function<void(int)>& body) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) {
    pool.emplace_back([&] {
      for (int i = next++; i < count && !failed; i = next++) {
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

bool in_class(const Graph& g, const std::string& path) {
  if (path == "auto" || path == "general" || path == "oracle") return true;
  if (path == "zero_l") return g.n() <= kDefaultCoverLimit;
  if (path == "cograph") return recognize_cograph(g).is_cograph();
  if (path == "split") return recognize_split(g).has_value();
  if (path == "p4_sparse") return recognize_p4_sparse(g).member;
  if (path == "p4_tidy") return recognize_p4_tidy(g).member;
  if (path == "zero_two") return zero_two_partition(g).has_value();
  if (path == "inflation") return inflation_witness(g).has_value();
  throw GraphError("unknown class path '" + path + "'");
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

enum class Verdict { kAgree, kDisagree, kSkipped };

Verdict compare(const Graph& g, const std::string& path, double budget) {
  if (!is_connected(g) || !in_class(g, path)) return Verdict::kSkipped;
  int oracle = 0;
  try {
    oracle = exact_stretch_index(g, budget).stretch;
  } catch (const BudgetExceeded&) {
    return Verdict::kSkipped;
  }
  if (path == "general") {
    auto two = two_admissible_general(g);
    return two.certificate.has_value() == (oracle <= 2) ? Verdict::kAgree : Verdict::kDisagree;
  }
  auto r = stretch_by_class(g, path, budget);
  bool ok = r.exact() && r.lo == oracle && r.certificate && r.certificate->stretch == oracle;
  return ok ? Verdict::kAgree : Verdict::kDisagree;
}

AgreementRow tally(std::string corpus, const std::string& path, const std::vector<Graph>& graphs,
                   int jobs, double budget) {
  auto start = std::chrono::steady_clock::now();
  std::vector<Verdict> verdicts(graphs.size(), Verdict::kSkipped);
  parallel_for(static_cast<int>(graphs.size()), jobs,
               [&](int i) { verdicts[i] = compare(graphs[i], path, budget); });
  AgreementRow row;
  row.corpus = std::move(corpus);
  row.path = path;
  row.graphs = static_cast<int>(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    switch (verdicts[i]) {
      case Verdict::kAgree: ++row.agree; break;
      case Verdict::kSkipped: ++row.skipped; break;
      case Verdict::kDisagree:
        ++row.disagree;
        std::string g6 = write_graph6(graphs[i]);
        if (!g6.empty() && g6.back() == '\n') g6.pop_back();
        row.disagreements.push_back(g6);
        break;
    }
  }
  row.seconds = seconds_since(start);
  return row;
}

}  // namespace

AgreementRow exhaustive_agreement(int max_n, const std::string& path, int jobs, double budget) {
  std::vector<Graph> corpus;
  for (int n = 1; n <= max_n; ++n) {
    auto batch = all_graphs(n, true);
    corpus.insert(corpus.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
  }
  return tally("exhaustive connected n<=" + std::to_string(max_n), path, corpus, jobs, budget);
}

AgreementRow seeded_agreement(const GenerateSpec& spec, int draws, std::uint64_t seed,
                              const std::string& path, int jobs, double budget) {
  std::vector<Graph> corpus(draws);
  parallel_for(draws, jobs, [&](int i) { corpus[i] = generate(spec, seed + i); });
  return tally("seeded " + spec.kind + " x" + std::to_string(draws), path, corpus, jobs, budget);
}

std::vector<std::string> scaling_families() { return {"split", "thin_spider", "zero_two"}; }

Graph scaling_instance(const std::string& family, int n, std::uint64_t seed) {
  auto num = [](long long x) { return std::to_string(x); };
  if (family == "split") {
    return generate(parse_generate_spec("split", {"n=" + num(n), "clique=100", "maxdeg=4"}), seed);
  }
  if (family == "thin_spider") {
    return generate(parse_generate_spec("thin_spider", {"k=50", "r=none", "r_size=" + num(std::max(0, n - 100))}),
                    seed);
  }
  if (family == "zero_two") {
    return generate(parse_generate_spec("zero_two", {"k1=" + num(n / 2), "k2=" + num(n - n / 2), "cross=matching"}),
                    seed);
  }
  throw GraphError("unknown scaling family '" + family + "'");
}

namespace {

int decide(const std::string& family, const Graph& g) {
  if (family == "split") {
    auto p = recognize_split(g);
    if (!p) throw GraphError("scaling instance is not split");
    return stretch_split(g, *p).lo;
  }
  if (family == "thin_spider") return stretch_p4_sparse(g).lo;
  auto p = zero_two_partition(g);
  if (!p) throw GraphError("scaling instance is not a (0,2)-graph");
  return two_admissible_02(g, *p).lo;
}

}  // namespace

double loglog_slope(const std::vector<ScalingPoint>& points) {
  if (points.size() < 2) return 0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(points.size());
  for (const auto& p : points) {
    double x = std::log(static_cast<double>(p.n + p.m));
    double y = std::log(std::max(p.seconds, 1e-9));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

ScalingRow scaling_run(const std::string& family, const std::vector<int>& sizes, std::uint64_t seed, int reps) {
  ScalingRow row;
  row.family = family;
  for (int n : sizes) {
    Graph g = scaling_instance(family, n, seed);
    ScalingPoint p;
    p.n = g.n();
    p.m = g.m();
    p.seconds = 1e300;
    for (int r = 0; r < std::max(1, reps); ++r) {
      auto start = std::chrono::steady_clock::now();
      p.sigma = decide(family, g);
      p.seconds = std::min(p.seconds, seconds_since(start));
    }
    row.points.push_back(p);
  }
  row.slope = loglog_slope(row.points);
  return row;
}

std::vector<CycleInflationRow> cycle_inflation_rows(int lo, int hi, double budget) {
  std::vector<CycleInflationRow> rows;
  for (int ell = lo; ell <= hi; ++ell) {
    auto inf = inflate(degree_inflation(cycle_graph(ell)));
    CycleInflationRow row;
    row.ell = ell;
    row.n = inf.graph.n();
    row.sigma = bounds_0l(inf.graph, inf.witness.cover).lo;
    row.expected = 2 * ell - 1;
    try {
      row.oracle = exact_stretch_index(inf.graph, budget).stretch;
    } catch (const BudgetExceeded&) {
      row.oracle = -1;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace treespan
