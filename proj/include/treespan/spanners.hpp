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

#include <optional>
#include <string>
#include <vector>

#include "treespan/graph.hpp"
#include "treespan/oracle.hpp"
#include "treespan/recognition.hpp"

namespace treespan {

/// Which characterization produced a result. Stable; serialized by tag.
enum class Rule {
  kTree,
  kUniversalStar,
  kJoinBistar,
  kSpiderThin,
  kSpiderThick,
  kAlmostSpiderTwo,
  kAlmostSpiderThree,
  kCycleC5,
  kTidyBase,
  kSplitPendantStable,
  kSplitCommonNeighbor,
  kSplitStarUpper,
  kZeroTwoUniversal,
  kZeroTwoCutVertex,
  kZeroTwoCoveringEdge,
  kZeroTwoUpper,
  kCliqueCoverBounds,
  kCycleInflationUpper,
  kInflationFormula,
  kTriconnectedStars,
  kBruteForce,
  kOracle,
};

std::string rule_tag(Rule r);
std::vector<Rule> all_rules();

/// Stretch index of a graph in a class: exact when lo == hi.
struct ClassStretchResult {
  std::string class_name;
  int lo = 1;
  int hi = 1;
  std::optional<StretchCertificate> certificate;
  Rule rule = Rule::kTree;
  std::vector<std::string> notes;

  bool exact() const { return lo == hi; }
};

class ClassMismatch : public GraphError {
 public:
  using GraphError::GraphError;
};

// Tree builders. Each validates its input and returns a verified certificate.

/// Star from a vertex of V1 over V2 plus V1 hung off one vertex of V2; a
/// universal vertex, if any, just gets a spanning star.
StretchCertificate build_join_3_spanner(const Graph& g, const std::vector<Vertex>& v1,
                                        const std::vector<Vertex>& v2);
StretchCertificate build_split_spanner(const Graph& g, const SplitPartition& p);
StretchCertificate build_spider_spanner(const Graph& g, const SpiderPartition& p);
StretchCertificate build_almost_spider_spanner(const Graph& g, const AlmostSpiderPartition& p);
/// Spanning star at v (which must be universal).
StretchCertificate build_star_spanner(const Graph& g, Vertex center);

// Class fast paths. Inputs must be connected; class membership is checked
// and ClassMismatch thrown otherwise.

ClassStretchResult stretch_cograph(const Graph& g);
ClassStretchResult stretch_p4_sparse(const Graph& g);
ClassStretchResult stretch_p4_tidy(const Graph& g);
ClassStretchResult stretch_split(const Graph& g, const SplitPartition& p);

struct TransversalSubgraph {
  ZeroTwoPartition partition;
  std::vector<Vertex> vertices;  // endpoints of crossing edges, ascending
  std::vector<Edge> edges;       // edges of g induced on `vertices`
  std::vector<Edge> crossing;    // the crossing edges themselves
};

TransversalSubgraph transversal_subgraph(const Graph& g, const ZeroTwoPartition& p);

/// Crossing-edge graph has an induced 2K2 (equivalently g has an induced C4).
bool has_induced_c4_02(const Graph& g, const ZeroTwoPartition& p);

ClassStretchResult two_admissible_02(const Graph& g, const ZeroTwoPartition& p);

/// Interval from an l-clique cover plus the cycle-subjacent test.
ClassStretchResult bounds_0l(const Graph& g, const CliqueCover& c);

/// Passes iff the subjacent graph is a cycle and no vertex sees two other
/// cliques.
bool charact_upper_test(const Graph& g, const CliqueCover& c);

Graph subjacent_graph(const Graph& h, const CliqueCover& c);

/// 2 sigma(base) + 1 with the lifted tree as certificate; exact only when
/// the bounds meet.
ClassStretchResult inflation_stretch(const Graph& h, const InflationWitness& w,
                                     double budget = kDefaultTreeBudget);

enum class AdmissibilityPath { kTree, kUniversal, kAssembly, kBruteForce };
std::string to_string(AdmissibilityPath p);

struct TwoAdmissibility {
  std::optional<StretchCertificate> certificate;
  AdmissibilityPath path = AdmissibilityPath::kTree;
};

/// Stretch <= 2 tree if one exists. Per block: universal star, else stars on
/// the 3-connected pieces glued by adjacent separating pairs, verified; a
/// block the assembly cannot settle goes to the exhaustive search.
TwoAdmissibility two_admissible_general(const Graph& g);

/// Recognizes the first matching class (cograph, split, P4-sparse, P4-tidy,
/// (0,2)) and applies its rule; otherwise decides 2-admissibility and, within
/// the budget, asks the oracle.
ClassStretchResult stretch_auto(const Graph& g, double budget = kDefaultTreeBudget);

/// Runs the named class path: auto, cograph, split, p4_sparse, p4_tidy,
/// zero_two, zero_l (minimum clique cover bounds), inflation, general, oracle.
ClassStretchResult stretch_by_class(const Graph& g, const std::string& cls,
                                    double budget = kDefaultTreeBudget);

}  // namespace treespan
