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

#include "treespan/report.hpp"

#include <sstream>

#include "treespan/connectivity.hpp"

namespace treespan {

namespace {

Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const auto& e : edges) out.push_back(to_json(e));
  return out;
}

Json bool_member(bool member) { return Json{{"member", member}}; }

}  // namespace

Json to_json(const Edge& e) { return Json::array({e.u, e.v}); }

Json to_json(const Graph& g) {
  return Json{{"n", g.n()}, {"m", g.m()}, {"edges", edges_json(g.edges())}};
}

Json to_json(const StretchCertificate& c) {
  Json out{{"stretch", c.stretch}, {"tree", edges_json(c.tree.edges())}};
  out["witness"] = c.witness ? to_json(*c.witness) : Json(nullptr);
  return out;
}

Json to_json(const SplitPartition& p) { return Json{{"clique", p.clique}, {"stable", p.stable}}; }

Json to_json(const SpiderPartition& p) {
  Json f = Json::array();
  for (auto [s, k] : p.f) f.push_back(Json::array({s, k}));
  return Json{{"kind", p.kind == SpiderKind::kThin ? "thin" : "thick"},
              {"S", p.s},
              {"K", p.k},
              {"R", p.r},
              {"f", f}};
}

Json to_json(const AlmostSpiderPartition& p) {
  return Json{{"case", std::string(1, p.case_letter())},
              {"label", p.label()},
              {"twin", p.twin_kind == TwinKind::kTrue ? "true" : "false"},
              {"side", p.side == SpiderSide::kK ? "K" : "S"},
              {"twin_of", p.twin_of},
              {"added", p.added},
              {"base", to_json(p.base)}};
}

Json to_json(const ZeroTwoPartition& p) { return Json{{"K1", p.k1}, {"K2", p.k2}}; }

Json to_json(const CliqueCover& c) { return Json{{"size", c.size()}, {"cliques", c.cliques}}; }

Json to_json(const InflationWitness& w) {
  Json cross = Json::array();
  for (const auto& [b, e] : w.cross_edges) cross.push_back(Json{{"base", to_json(b)}, {"edge", to_json(e)}});
  return Json{{"cover", to_json(w.cover)}, {"base", to_json(w.base)}, {"cross_edges", cross}};
}

Json to_json(const Cotree& t) {
  if (t.kind == Cotree::Kind::kLeaf) return Json(t.vertex);
  Json kids = Json::array();
  for (const auto& c : t.children) kids.push_back(to_json(c));
  return Json{{t.kind == Cotree::Kind::kJoin ? "join" : "union", kids}};
}

Json to_json(const ClassDecomposition& d) {
  Json trace = Json::array();
  for (const auto& s : d.trace) {
    trace.push_back(Json{{"case", to_string(s.kind)}, {"depth", s.depth}, {"vertices", s.vertices}});
  }
  return Json{{"member", d.member}, {"trace", trace}};
}

Json to_json(const ClassStretchResult& r) {
  Json out{{"class", r.class_name},
           {"sigma", r.exact() ? Json(r.lo) : Json(nullptr)},
           {"lower", r.lo},
           {"upper", r.hi},
           {"exact", r.exact()},
           {"rule", rule_tag(r.rule)}};
  out["certificate"] = r.certificate ? to_json(*r.certificate) : Json(nullptr);
  out["notes"] = r.notes;
  return out;
}

StretchCertificate certificate_from_json(const Graph& g, const Json& doc) {
  std::vector<Edge> edges;
  for (const auto& e : doc.at("tree")) edges.push_back(make_edge(e.at(0).get<int>(), e.at(1).get<int>()));
  for (const auto& e : edges) {
    if (e.u < 0 || e.v >= g.n()) throw GraphError("certificate vertex out of range");
  }
  auto cert = tree_stretch_factor(g, std::move(edges));
  if (doc.contains("stretch") && doc.at("stretch").get<int>() != cert.stretch) {
    throw GraphError("certificate claims stretch " + std::to_string(doc.at("stretch").get<int>()) +
                     ", tree has " + std::to_string(cert.stretch));
  }
  return cert;
}

Json recognition_report(const Graph& g) {
  Json out;
  out["n"] = g.n();
  out["m"] = g.m();
  const bool connected = g.n() > 0 && is_connected(g);
  out["connected"] = connected;
  out["tree"] = is_tree(g);

  auto cg = recognize_cograph(g);
  Json cograph = bool_member(cg.is_cograph());
  if (cg.cotree) cograph["cotree"] = to_json(*cg.cotree);
  if (cg.induced_p4) cograph["induced_p4"] = *cg.induced_p4;
  out["cograph"] = cograph;

  auto split = recognize_split(g);
  Json sj = bool_member(split.has_value());
  if (split) sj["partition"] = to_json(*split);
  out["split"] = sj;

  auto spider = spider_partition(g);
  Json spj = bool_member(spider.has_value());
  if (spider) spj["partition"] = to_json(*spider);
  out["spider"] = spj;

  auto almost = almost_spider_partition(g);
  Json aj = bool_member(almost.has_value());
  if (almost) aj["partition"] = to_json(*almost);
  out["almost_spider"] = aj;

  out["p4_sparse"] = to_json(recognize_p4_sparse(g));
  out["p4_tidy"] = to_json(recognize_p4_tidy(g));

  auto zt = zero_two_partition(g);
  Json zj = bool_member(zt.has_value());
  if (zt) zj["partition"] = to_json(*zt);
  out["zero_two"] = zj;

  if (g.n() <= kDefaultCoverLimit) {
    // Full search on small graphs; a few cliques otherwise.
    const int limit = g.n() <= 24 ? std::max(1, g.n()) : 4;
    Json cover = Json{{"min_cliques", nullptr}, {"searched_up_to", limit}};
    for (int ell = 1; ell <= limit; ++ell) {
      if (auto c = clique_cover(g, ell)) {
        cover["min_cliques"] = ell;
        cover["cover"] = to_json(*c);
        break;
      }
    }
    out["clique_cover"] = cover;
    if (connected) {
      auto w = inflation_witness(g);
      Json ij = bool_member(w.has_value());
      if (w) ij["witness"] = to_json(*w);
      out["inflation"] = ij;
    }
  } else {
    out["clique_cover"] = Json{{"skipped", "more than " + std::to_string(kDefaultCoverLimit) + " vertices"}};
    out["inflation"] = Json{{"skipped", "more than " + std::to_string(kDefaultCoverLimit) + " vertices"}};
  }
  return out;
}

Json oracle_check(const Graph& g, const ClassStretchResult& r, double budget) {
  Json out;
  if (g.n() > kMaxOracleVertices) {
    out["skipped"] = "more than " + std::to_string(kMaxOracleVertices) + " vertices";
    return out;
  }
  StretchCertificate oracle = [&] {
    try {
      return exact_stretch_index(g, budget);
    } catch (const BudgetExceeded& e) {
      throw OracleError(std::string("oracle: ") + e.what());
    }
  }();
  const int sigma = oracle.stretch;
  out["oracle"] = sigma;
  out["verdict"] = r.exact() ? (r.lo == sigma ? "AGREE" : "DISAGREE")
                   : (r.lo <= sigma && sigma <= r.hi) ? "WITHIN-BOUNDS"
                                                      : "DISAGREE";
  Json claims = Json::array();
  if (r.class_name == "inflation") {
    if (auto w = inflation_witness(g)) {
      const int base = exact_stretch_index(w->base, budget).stretch;
      const int formula = 2 * base + 1;
      const char* verdict = formula == sigma ? "AGREE" : is_tree(w->base) ? "DISAGREE-EXPECTED" : "DISAGREE";
      claims.push_back(Json{{"claim", "sigma = 2 sigma(base) + 1"}, {"value", formula}, {"verdict", verdict}});
    }
  }
  if (r.class_name == "zero_l" && g.n() >= 3) {
    for (int ell = 1; ell <= g.n(); ++ell) {
      auto c = clique_cover(g, ell);
      if (!c) continue;
      const int upper = 2 * ell - 1;
      const char* bound = (2 <= sigma && sigma <= upper) ? "AGREE" : ell == 1 ? "DISAGREE-EXPECTED" : "DISAGREE";
      claims.push_back(Json{{"claim", "2 <= sigma <= 2l - 1"}, {"l", ell}, {"value", upper}, {"verdict", bound}});
      const bool passes = charact_upper_test(g, *c);
      const bool attains = sigma == upper;
      const char* test = passes == attains ? "AGREE" : passes ? "DISAGREE" : "DISAGREE-EXPECTED";
      claims.push_back(Json{{"claim", "sigma = 2l - 1 iff cycle-subjacent test passes"},
                            {"test", passes},
                            {"attains", attains},
                            {"verdict", test}});
      break;
    }
  }
  out["claims"] = claims;
  out["certificate"] = to_json(oracle);
  return out;
}

Json envelope(const std::string& command, const std::string& status, Json payload, Json timing) {
  return Json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"status", status},
              {"payload", std::move(payload)},
              {"timing", std::move(timing)}};
}

namespace {

bool is_flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& x : j) {
    if (x.is_object()) return false;
    if (x.is_array() && !is_flat(x)) return false;
  }
  return true;
}

void render(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(indent, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = j.is_object() ? it.key() : "-";
    if (is_flat(*it)) {
      os << pad << key << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    } else {
      os << pad << key << ":\n";
      render(os, *it, indent + 2);
    }
  }
}

}  // namespace

std::string render_text(const Json& doc) {
  std::ostringstream os;
  if (is_flat(doc)) {
    os << (doc.is_string() ? doc.get<std::string>() : doc.dump()) << "\n";
  } else {
    render(os, doc, 0);
  }
  return os.str();
}

}  // namespace treespan
