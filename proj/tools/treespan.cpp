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

// treespan: tree spanners and stretch indexes from the command line.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "treespan/bench.hpp"
#include "treespan/connectivity.hpp"
#include "treespan/io.hpp"
#include "treespan/report.hpp"
#include "treespan/spanners.hpp"
#include "treespan/transforms.hpp"

namespace {

using namespace treespan;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitRefused = 2;

struct Globals {
  std::string format = "edge-list";
  bool json = false;
  std::optional<std::uint64_t> seed;
  double budget = kDefaultTreeBudget;
  int jobs = 1;
};

// A refused precondition, reported with status "refused".
class Refused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Timer {
 public:
  void lap(const std::string& phase) {
    auto now = std::chrono::steady_clock::now();
    timing_[phase] = std::chrono::duration<double>(now - last_).count();
    last_ = now;
  }
  const Json& json() const { return timing_; }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
  Json timing_ = Json::object();
};

GraphFormat format_of(const Globals& g) {
  auto f = parse_format_name(g.format);
  if (!f) throw GraphError("unknown format '" + g.format + "' (edge-list or graph6)");
  return *f;
}

Graph load(const Globals& globals, const std::string& path) {
  const GraphFormat f = format_of(globals);
  if (path.empty() || path == "-") return read_graph(std::cin, f);
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open '" + path + "'");
  return read_graph(in, f);
}

void require_connected_input(const Graph& g) {
  if (g.n() == 0) throw Refused("empty graph");
  if (!is_connected(g)) {
    throw Refused("graph is disconnected (" + std::to_string(connected_components(g).size()) +
                  " components); the stretch index is defined for connected graphs, see --per-component");
  }
}

// Structured output, or a graph in the chosen format for graph-valued
// commands when --json is off.
void emit(const Globals& globals, const std::string& command, const Json& payload, const Timer& timer,
          const Graph* graph = nullptr) {
  if (globals.json) {
    std::cout << envelope(command, "ok", payload, timer.json()).dump(2) << "\n";
  } else if (graph != nullptr) {
    std::cout << write_graph(*graph, format_of(globals));
  } else {
    std::cout << render_text(payload);
  }
}

std::uint64_t require_seed(const Globals& globals, const char* what) {
  if (!globals.seed) throw GraphError(std::string(what) + " needs --seed");
  return *globals.seed;
}

// ---------------------------------------------------------------------------

struct StretchArgs {
  std::string input;
  std::string cls = "auto";
  bool verify = false;
  std::optional<int> t;
  bool per_component = false;
};

Json stretch_one(const Globals& globals, const Graph& g, const StretchArgs& a, Timer& timer) {
  ClassStretchResult r = stretch_by_class(g, a.cls, globals.budget);
  timer.lap("stretch");
  Json out = to_json(r);
  if (a.t) {
    Json adm{{"t", *a.t}};
    if (r.hi <= *a.t) {
      adm["admissible"] = true;
    } else if (r.lo > *a.t) {
      adm["admissible"] = false;
    } else if (g.n() <= kMaxOracleVertices) {
      auto cert = is_t_admissible_bruteforce(g, *a.t);
      adm["admissible"] = cert.has_value();
      if (cert) adm["certificate"] = to_json(*cert);
      timer.lap("admissibility");
    } else {
      adm["admissible"] = nullptr;
    }
    out["t_admissible"] = adm;
  }
  if (a.verify) {
    out["oracle_check"] = oracle_check(g, r, globals.budget);
    timer.lap("oracle");
  }
  return out;
}

int cmd_stretch(const Globals& globals, const StretchArgs& a) {
  Timer timer;
  Graph g = load(globals, a.input);
  timer.lap("parse");
  if (g.n() > 0 && !is_connected(g) && a.per_component) {
    Json parts = Json::array();
    int worst = 1;
    bool exact = true;
    for (const auto& comp : connected_components(g)) {
      Subgraph sub = induced_subgraph(g, comp);
      Json one = stretch_one(globals, sub.graph, a, timer);
      one["vertices"] = sub.to_parent;
      worst = std::max(worst, one["upper"].get<int>());
      exact = exact && one["exact"].get<bool>();
      parts.push_back(one);
    }
    emit(globals, "stretch", Json{{"components", parts}, {"max_upper", worst}, {"exact", exact}}, timer);
    return kExitOk;
  }
  require_connected_input(g);
  emit(globals, "stretch", stretch_one(globals, g, a, timer), timer);
  return kExitOk;
}

int cmd_recognize(const Globals& globals, const std::string& input) {
  Timer timer;
  Graph g = load(globals, input);
  timer.lap("parse");
  Json report = recognition_report(g);
  timer.lap("recognize");
  emit(globals, "recognize", report, timer);
  return kExitOk;
}

int cmd_spanner(const Globals& globals, const std::string& input, const std::string& cls) {
  Timer timer;
  Graph g = load(globals, input);
  timer.lap("parse");
  require_connected_input(g);
  auto r = stretch_by_class(g, cls, globals.budget);
  timer.lap("spanner");
  if (!r.certificate) throw GraphError("no certificate produced");
  if (globals.json) {
    Json payload = to_json(*r.certificate);
    payload["rule"] = rule_tag(r.rule);
    emit(globals, "spanner", payload, timer);
  } else {
    Graph tree = r.certificate->tree.as_graph();
    emit(globals, "spanner", Json(), timer, &tree);
  }
  return kExitOk;
}

int cmd_oracle(const Globals& globals, const std::string& input, std::optional<int> t) {
  Timer timer;
  Graph g = load(globals, input);
  timer.lap("parse");
  require_connected_input(g);
  Json payload{{"spanning_trees", spanning_tree_count(g)}};
  if (t) {
    auto cert = is_t_admissible_bruteforce(g, *t);
    payload["t"] = *t;
    payload["admissible"] = cert.has_value();
    payload["certificate"] = cert ? to_json(*cert) : Json(nullptr);
  } else {
    auto cert = exact_stretch_index(g, globals.budget);
    payload["sigma"] = cert.stretch;
    payload["certificate"] = to_json(cert);
  }
  timer.lap("oracle");
  emit(globals, "oracle", payload, timer);
  return kExitOk;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw GraphError("bad integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

int cmd_inflate(const Globals& globals, const std::string& input, const std::string& sizes) {
  Timer timer;
  Graph g = load(globals, input);
  timer.lap("parse");
  InflationSpec spec = degree_inflation(g);
  if (!sizes.empty()) {
    spec.sizes = parse_int_list(sizes);
    if (static_cast<int>(spec.sizes.size()) != g.n()) throw GraphError("--sizes needs one entry per vertex");
  }
  Inflation inf = inflate(spec);
  timer.lap("inflate");
  emit(globals, "inflate", Json{{"graph", to_json(inf.graph)}, {"witness", to_json(inf.witness)}}, timer,
       &inf.graph);
  return kExitOk;
}

int cmd_subjacent(const Globals& globals, const std::string& input, int cliques) {
  Timer timer;
  Graph g = load(globals, input);
  timer.lap("parse");
  std::optional<CliqueCover> cover;
  if (cliques > 0) {
    cover = clique_cover(g, cliques);
  } else {
    for (int ell = 1; ell <= g.n() && !cover; ++ell) cover = clique_cover(g, ell);
  }
  if (!cover) throw Refused("no cover by " + std::to_string(cliques) + " cliques");
  canonicalize(*cover);
  Graph base = subjacent_graph(g, *cover);
  timer.lap("subjacent");
  emit(globals, "subjacent", Json{{"cover", to_json(*cover)}, {"graph", to_json(base)}}, timer, &base);
  return kExitOk;
}

int cmd_linegraph(const Globals& globals, const std::string& input) {
  Timer timer;
  Graph g = load(globals, input);
  timer.lap("parse");
  LineGraph lg = line_graph(g);
  timer.lap("linegraph");
  Json origin = Json::array();
  for (const auto& e : lg.origin) origin.push_back(to_json(e));
  emit(globals, "linegraph", Json{{"graph", to_json(lg.graph)}, {"origin", origin}}, timer, &lg.graph);
  return kExitOk;
}

int cmd_subdivide(const Globals& globals, const std::string& input) {
  Timer timer;
  Graph g = load(globals, input);
  timer.lap("parse");
  Graph s = subdivide(g);
  timer.lap("subdivide");
  emit(globals, "subdivide", Json{{"graph", to_json(s)}}, timer, &s);
  return kExitOk;
}

int cmd_gen(const Globals& globals, const std::string& kind, const std::vector<std::string>& kv, int count) {
  Timer timer;
  if (count > 1) require_seed(globals, "batch generation");
  const std::uint64_t seed = globals.seed.value_or(0);
  GenerateSpec spec = parse_generate_spec(kind, kv);
  std::vector<Graph> graphs;
  for (int i = 0; i < count; ++i) graphs.push_back(generate(spec, seed + i));
  timer.lap("generate");
  if (globals.json) {
    Json list = Json::array();
    for (const auto& g : graphs) list.push_back(to_json(g));
    emit(globals, "gen", Json{{"kind", kind}, {"seed", seed}, {"graphs", list}}, timer);
  } else {
    for (const auto& g : graphs) std::cout << write_graph(g, format_of(globals));
  }
  return kExitOk;
}

struct BenchArgs {
  int exhaustive = 0;
  std::string cls = "split";
  std::string seeded;
  std::vector<std::string> params;
  int draws = 500;
  std::string scaling;
  std::string sizes = "10000,20000,50000,100000";
  int reps = 3;
  std::string cycles;
};

Json row_json(const AgreementRow& r) {
  return Json{{"corpus", r.corpus},
              {"path", r.path},
              {"graphs", r.graphs},
              {"agree", r.agree},
              {"disagree", r.disagree},
              {"skipped", r.skipped},
              {"agreement", r.agree + r.disagree > 0 ? double(r.agree) / (r.agree + r.disagree) : 1.0},
              {"seconds", r.seconds},
              {"disagreements", r.disagreements}};
}

int cmd_bench(const Globals& globals, const BenchArgs& a) {
  Timer timer;
  Json payload = Json::object();
  bool any = false;
  if (a.exhaustive > 0) {
    payload["agreement"].push_back(row_json(exhaustive_agreement(a.exhaustive, a.cls, globals.jobs, 1e12)));
    any = true;
  }
  if (!a.seeded.empty()) {
    const auto seed = require_seed(globals, "seeded bench");
    auto spec = parse_generate_spec(a.seeded, a.params);
    payload["agreement"].push_back(row_json(seeded_agreement(spec, a.draws, seed, a.cls, globals.jobs, 1e12)));
    any = true;
  }
  if (!a.scaling.empty()) {
    const auto seed = require_seed(globals, "scaling bench");
    auto row = scaling_run(a.scaling, parse_int_list(a.sizes), seed, a.reps);
    Json points = Json::array();
    for (const auto& p : row.points) {
      points.push_back(Json{{"n", p.n}, {"m", p.m}, {"seconds", p.seconds}, {"sigma", p.sigma}});
    }
    payload["scaling"].push_back(Json{{"family", row.family}, {"points", points}, {"loglog_slope", row.slope}});
    any = true;
  }
  if (!a.cycles.empty()) {
    auto range = parse_int_list(a.cycles);
    if (range.size() != 2) throw GraphError("--cycles needs lo,hi");
    Json rows = Json::array();
    for (const auto& r : cycle_inflation_rows(range[0], range[1])) {
      rows.push_back(Json{{"l", r.ell}, {"n", r.n}, {"sigma", r.sigma}, {"oracle", r.oracle},
                          {"expected", r.expected}, {"match", r.sigma == r.expected && r.oracle == r.expected}});
    }
    payload["cycle_inflation"] = rows;
    any = true;
  }
  if (!any) throw GraphError("bench needs --exhaustive, --seeded, --scaling or --cycles");
  timer.lap("bench");
  emit(globals, "bench", payload, timer);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tree spanners and stretch indexes of graphs"};
  app.require_subcommand(1);
  Globals globals;
  std::uint64_t seed_value = 0;
  auto add_globals = [&](CLI::App* sub) {
    sub->add_option("--format", globals.format, "Graph format: edge-list or graph6");
    sub->add_flag("--json", globals.json, "Structured JSON output");
    sub->add_option("--seed", seed_value, "Random seed");
    sub->add_option("--budget", globals.budget, "Spanning-tree budget for the exhaustive oracle");
    sub->add_option("--jobs", globals.jobs, "Worker threads for bench")->check(CLI::PositiveNumber);
  };
  add_globals(&app);

  std::string input;
  auto input_opt = [&](CLI::App* sub) { sub->add_option("input", input, "Graph file (default: stdin)"); };

  auto* recognize = app.add_subcommand("recognize", "Class memberships with partitions and witnesses");
  input_opt(recognize);

  StretchArgs stretch_args;
  auto* stretch = app.add_subcommand("stretch", "Stretch index through a class path");
  input_opt(stretch);
  stretch->add_option("--class", stretch_args.cls,
                      "auto|cograph|split|p4_sparse|p4_tidy|zero_two|zero_l|inflation|general|oracle");
  stretch->add_flag("--verify-oracle", stretch_args.verify, "Cross-check with the exhaustive oracle");
  int t_value = 0;
  auto* t_opt = stretch->add_option("--t", t_value, "Also decide t-admissibility");
  stretch->add_flag("--per-component", stretch_args.per_component, "Treat each component separately");

  std::string spanner_class = "auto";
  auto* spanner = app.add_subcommand("spanner", "Emit the certificate tree");
  input_opt(spanner);
  spanner->add_option("--class", spanner_class, "Class path as for stretch");

  std::string sizes;
  auto* inflate_cmd = app.add_subcommand("inflate", "Generalized inflation");
  input_opt(inflate_cmd);
  inflate_cmd->add_option("--sizes", sizes, "Comma-separated clique sizes (default: degrees)");

  int cliques = 0;
  auto* subjacent = app.add_subcommand("subjacent", "Subjacent graph of a minimum clique cover");
  input_opt(subjacent);
  subjacent->add_option("--cliques", cliques, "Use a cover by exactly this many cliques");

  auto* linegraph = app.add_subcommand("linegraph", "Line graph");
  input_opt(linegraph);
  auto* subdivide_cmd = app.add_subcommand("subdivide", "Subdivide every edge once");
  input_opt(subdivide_cmd);

  std::string gen_kind;
  std::vector<std::string> gen_kv;
  int gen_count = 1;
  auto* gen = app.add_subcommand("gen", "Seeded class generator");
  gen->add_option("kind", gen_kind, "Generator kind")->required();
  gen->add_option("params", gen_kv, "key=value parameters");
  gen->add_option("--count", gen_count, "Number of graphs (needs --seed when > 1)")->check(CLI::PositiveNumber);

  int oracle_t = 0;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive stretch index");
  input_opt(oracle);
  auto* oracle_t_opt = oracle->add_option("--t", oracle_t, "Only decide t-admissibility");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Fast path versus oracle, scaling, cycle inflations");
  bench->add_option("--exhaustive", bench_args.exhaustive, "All connected graphs up to this order");
  bench->add_option("--class", bench_args.cls, "Class path to check");
  bench->add_option("--seeded", bench_args.seeded, "Generator kind for seeded draws");
  bench->add_option("--param", bench_args.params, "Generator key=value (repeatable)");
  bench->add_option("--draws", bench_args.draws, "Seeded draws");
  bench->add_option("--scaling", bench_args.scaling, "Scaling family: split|thin_spider|zero_two");
  bench->add_option("--sizes", bench_args.sizes, "Comma-separated orders for --scaling");
  bench->add_option("--reps", bench_args.reps, "Timing repetitions (best kept)");
  bench->add_option("--cycles", bench_args.cycles, "lo,hi: inflated cycles C_lo..C_hi");

  for (auto* sub : {recognize, stretch, spanner, inflate_cmd, subjacent, linegraph, subdivide_cmd, gen, oracle, bench}) {
    add_globals(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }
  if (app.get_option("--seed")->count() > 0) globals.seed = seed_value;
  for (auto* sub : app.get_subcommands()) {
    if (sub->get_option("--seed")->count() > 0) globals.seed = seed_value;
  }
  if (t_opt->count() > 0) stretch_args.t = t_value;
  stretch_args.input = input;

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "recognize") return cmd_recognize(globals, input);
    if (command == "stretch") return cmd_stretch(globals, stretch_args);
    if (command == "spanner") return cmd_spanner(globals, input, spanner_class);
    if (command == "inflate") return cmd_inflate(globals, input, sizes);
    if (command == "subjacent") return cmd_subjacent(globals, input, cliques);
    if (command == "linegraph") return cmd_linegraph(globals, input);
    if (command == "subdivide") return cmd_subdivide(globals, input);
    if (command == "gen") return cmd_gen(globals, gen_kind, gen_kv, gen_count);
    if (command == "oracle") {
      return cmd_oracle(globals, input, oracle_t_opt->count() > 0 ? std::optional<int>(oracle_t) : std::nullopt);
    }
    if (command == "bench") return cmd_bench(globals, bench_args);
  } catch (const Refused& e) {
    if (globals.json) {
      std::cout << envelope(command, "refused", Json{{"reason", e.what()}}).dump(2) << "\n";
    }
    std::cerr << "treespan " << command << ": refused: " << e.what() << "\n";
    return kExitRefused;
  } catch (const std::exception& e) {
    if (globals.json) {
      std::cout << envelope(command, "error", Json{{"reason", e.what()}}).dump(2) << "\n";
    }
    std::cerr << "treespan " << command << ": error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
