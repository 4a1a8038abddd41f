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

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "treespan/graph.hpp"
#include "treespan/oracle.hpp"
#include "treespan/transforms.hpp"

namespace treespan {

/// Runs body(i) for i in [0, count) on up to `jobs` threads. Callers write
/// results by index, so output order never depends on the schedule.
void parallel_for(int count, int jobs, const std::function<void(int)>& body);

/// Fast path versus oracle on a corpus.
struct AgreementRow {
  std::string corpus;
  std::string path;
  int graphs = 0;
  int agree = 0;
  int disagree = 0;
  int skipped = 0;  // not in the class, or oracle over budget
  double seconds = 0;
  std::vector<std::string> disagreements;  // graph6

  bool all_agree() const { return disagree == 0 && agree > 0; }
};

/// True iff the class path `path` accepts g (auto and general accept all).
bool in_class(const Graph& g, const std::string& path);

/// Every connected graph on at most max_n vertices that is in the class.
AgreementRow exhaustive_agreement(int max_n, const std::string& path, int jobs = 1,
                                  double budget = 1e12);

/// `draws` generated graphs (seeds seed, seed+1, ...), compared on `path`.
AgreementRow seeded_agreement(const GenerateSpec& spec, int draws, std::uint64_t seed,
                              const std::string& path, int jobs = 1, double budget = 1e12);

struct ScalingPoint {
  int n = 0;
  long long m = 0;
  double seconds = 0;  // best of the repetitions
  int sigma = 0;
};

struct ScalingRow {
  std::string family;
  std::vector<ScalingPoint> points;
  double slope = 0;  // least squares of log(seconds) on log(n + m)
};

/// Scaling families: split, thin_spider, zero_two. Each point is generated,
/// then recognition plus the class decision is timed.
std::vector<std::string> scaling_families();
Graph scaling_instance(const std::string& family, int n, std::uint64_t seed);
ScalingRow scaling_run(const std::string& family, const std::vector<int>& sizes, std::uint64_t seed,
                       int reps = 3);

double loglog_slope(const std::vector<ScalingPoint>& points);

struct CycleInflationRow {
  int ell = 0;
  int n = 0;
  int sigma = 0;   // from the clique-cover bounds
  int oracle = 0;  // -1 when skipped
  int expected = 0;  // 2 ell - 1
};

std::vector<CycleInflationRow> cycle_inflation_rows(int lo, int hi, double budget = 1e12);

}  // namespace treespan
