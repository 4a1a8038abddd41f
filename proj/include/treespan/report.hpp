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

#include <string>

#include <json.hpp>

#include "treespan/graph.hpp"
#include "treespan/oracle.hpp"
#include "treespan/recognition.hpp"
#include "treespan/spanners.hpp"

namespace treespan {

using Json = nlohmann::ordered_json;

/// Bumped on any incompatible change to the documents below.
inline constexpr int kSchemaVersion = 1;

Json to_json(const Edge& e);  // [u, v]
Json to_json(const Graph& g);  // {n, m, edges}
Json to_json(const StretchCertificate& c);  // {stretch, tree, witness}
Json to_json(const SplitPartition& p);
Json to_json(const SpiderPartition& p);
Json to_json(const AlmostSpiderPartition& p);
Json to_json(const ZeroTwoPartition& p);
Json to_json(const CliqueCover& c);
Json to_json(const InflationWitness& w);
Json to_json(const Cotree& t);
Json to_json(const ClassDecomposition& d);
Json to_json(const ClassStretchResult& r);

/// Reads a certificate document back and re-verifies it against g.
StretchCertificate certificate_from_json(const Graph& g, const Json& doc);

/// Every class membership with its partition or witness. Exponential
/// searches (clique covers, inflation) are skipped above their size guard.
Json recognition_report(const Graph& g);

/// Oracle value for g (size and budget guarded) with a verdict on `r`
/// (AGREE, WITHIN-BOUNDS, DISAGREE) and, for the inflation and clique-cover
/// paths, verdicts on the class formulas (AGREE, DISAGREE, or
/// DISAGREE-EXPECTED for the known exceptions: tree bases under the
/// inflation formula, the only-if direction of the cycle-subjacent test,
/// and a single clique under the 2l-1 upper bound).
Json oracle_check(const Graph& g, const ClassStretchResult& r, double budget);

/// {schema_version, command, status, payload, timing}.
Json envelope(const std::string& command, const std::string& status, Json payload,
              Json timing = Json::object());

/// Indented key: value rendering of a document, for humans.
std::string render_text(const Json& doc);

}  // namespace treespan
