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

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treespan/graph.hpp"

namespace treespan {

// ---------------------------------------------------------------------------
// Partitions and witnesses. Vertex sets are always sorted ascending.

/// Clique X plus stable set Y covering V.
struct SplitPartition {
  std::vector<Vertex> clique;
  std::vector<Vertex> stable;
};

/// Cotree node: a leaf vertex, or the disjoint union / join of its children.
struct Cotree {
  enum class Kind { kLeaf, kUnion, kJoin };
  Kind kind = Kind::kLeaf;
  Vertex vertex = -1;
  std::vector<Cotree> children;
};

struct CographResult {
  std::optional<Cotree> cotree;
  /// Set iff not a cograph: an induced path a-b-c-d.
  std::optional<std::array<Vertex, 4>> induced_p4;

  bool is_cograph() const { return cotree.has_value(); }
};

enum class SpiderKind { kThin, kThick };

/// Spider (S, K, R): K clique, S independent with |S| = |K| >= 2, R joined
/// to K and anticomplete to S. `f` lists the pairs (s, f(s)) by s. Thin: N(s)
/// = {f(s)}. Thick: N(s) = K - {f(s)}. With |K| = 2 both readings describe
/// the same graph; it is reported as thin.
struct SpiderPartition {
  std::vector<Vertex> s;
  std::vector<Vertex> k;
  std::vector<Vertex> r;
  SpiderKind kind = SpiderKind::kThin;
  std::vector<std::pair<Vertex, Vertex>> f;
};

enum class TwinKind { kFalse, kTrue };
enum class SpiderSide { kS, kK };

/// A spider plus one vertex `added` that is a twin of `twin_of` in S or K.
/// `base` describes the spider G - added using the original vertex ids.
struct AlmostSpiderPartition {
  SpiderPartition base;
  TwinKind twin_kind = TwinKind::kFalse;
  SpiderSide side = SpiderSide::kS;
  Vertex twin_of = -1;
  Vertex added = -1;

  /// One of the eight cases, e.g. "S-false-thin" or "K-true-thick".
  std::string label() const;
  /// Figure letter a..h for the case (S/K x false/true x thin/thick).
  char case_letter() const;
};

/// Two cliques partitioning V (either may be empty).
struct ZeroTwoPartition {
  std::vector<Vertex> k1;
  std::vector<Vertex> k2;
};

/// Disjoint cliques covering V.
struct CliqueCover {
  std::vector<std::vector<Vertex>> cliques;
  int size() const { return static_cast<int>(cliques.size()); }
};

/// A clique cover of H whose crossing edges form a matching with at most one
/// edge per pair of cliques. `base` has one vertex per clique (in cover
/// order) and `cross_edges` maps each base edge to the H edge realizing it.
struct InflationWitness {
  CliqueCover cover;
  Graph base;
  std::vector<std::pair<Edge, Edge>> cross_edges;
};

// ---------------------------------------------------------------------------
// Structural decompositions for P4-sparse / P4-tidy recognition.

enum class DecompositionCase {
  kSingleton,
  kUnion,
  kJoin,
  kSpider,
  kAlmostSpider,
  kP5,
  kC5,
  kCoP5,
  kRejected,
};

std::string to_string(DecompositionCase c);

struct DecompositionStep {
  DecompositionCase kind = DecompositionCase::kSingleton;
  std::vector<Vertex> vertices;
  int depth = 0;
};

struct ClassDecomposition {
  bool member = false;
  std::vector<DecompositionStep> trace;
};

// ---------------------------------------------------------------------------
// Validation. Each returns an empty string when valid, else the reason.

std::string check_split_partition(const Graph& g, const SplitPartition& p);
std::string check_spider_partition(const Graph& g, const SpiderPartition& p);
std::string check_almost_spider_partition(const Graph& g, const AlmostSpiderPartition& p);
std::string check_zero_two_partition(const Graph& g, const ZeroTwoPartition& p);
std::string check_clique_cover(const Graph& g, const CliqueCover& c);
std::string check_inflation_witness(const Graph& g, const InflationWitness& w);

bool is_clique(const Graph& g, const std::vector<Vertex>& vertices);
bool is_independent(const Graph& g, const std::vector<Vertex>& vertices);

// ---------------------------------------------------------------------------
// Recognizers.

/// Split partition maximizing |X|, ties broken by the lexicographically
/// smallest X. Degree-sequence test, O(n log n + m).
std::optional<SplitPartition> recognize_split(const Graph& g);

/// Cotree by recursive (co-)connectivity, or an induced P4 witness.
CographResult recognize_cograph(const Graph& g);

/// Spider partition of a connected graph, O(n + m).
std::optional<SpiderPartition> spider_partition(const Graph& g);

/// Almost-spider partition of a connected graph; the smallest added vertex
/// (then the smallest twin) wins.
std::optional<AlmostSpiderPartition> almost_spider_partition(const Graph& g);

/// Union / join / spider decomposition with the R part recursed on.
ClassDecomposition recognize_p4_sparse(const Graph& g);

/// As recognize_p4_sparse plus almost-spiders and the P5, C5, co-P5 bases.
ClassDecomposition recognize_p4_tidy(const Graph& g);

/// Two-clique partition from a 2-coloring of the complement: K1 holds vertex
/// 0 and the smallest vertex of every further complement component.
std::optional<ZeroTwoPartition> zero_two_partition(const Graph& g);

inline constexpr int kDefaultCoverLimit = 64;

/// Cover by at most `ell` cliques via exact coloring of the complement.
/// Throws GraphError when g has more than `max_vertices` vertices.
std::optional<CliqueCover> clique_cover(const Graph& g, int ell,
                                        int max_vertices = kDefaultCoverLimit);

/// Generalized-inflation structure of a connected graph, if any. Exact
/// search; throws GraphError beyond `max_vertices`.
std::optional<InflationWitness> inflation_witness(const Graph& g,
                                                  int max_vertices = kDefaultCoverLimit);

/// Cover-derived base graph plus the edge map; used by inflation_witness and
/// by the spanners' subjacent graph. Does not check the matching property.
InflationWitness witness_from_cover(const Graph& g, CliqueCover cover);

/// Sorts each clique and orders cliques by smallest vertex.
void canonicalize(CliqueCover& c);

}  // namespace treespan
