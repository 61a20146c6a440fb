// Copyright 2026 The ggt Authors
//
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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <ostream>
#include <sstream>

#ifdef GGT_CLI11_PACKAGE
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <nlohmann/json.hpp>

#include "ggt/cayley.hpp"
#include "ggt/element_json.hpp"
#include "ggt/errors.hpp"
#include "ggt/groups.hpp"
#include "ggt/regmap.hpp"
#include "ggt/separation.hpp"
#include "ggt/tla.hpp"

namespace ggt::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string command;
  std::string group;
  int radius = -1;
  int h_radius = 8;
  int g_radius = 12;
  std::string action;
  std::string basepoint;
  std::string kappa = "auto";
  std::string ball_convention = "open";
  std::size_t exact_limit = 48;
  std::uint64_t node_budget = 10'000'000;
  std::size_t vertex_cap = kDefaultVertexCap;
  std::string out;
  std::string format;
  std::uint64_t seed = 0x5eed;
  std::string input;
  std::string emit_csv;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Outcome {
  std::string artifact;
  std::string summary;
  int code = kPass;
};

MarkedGroup require_group(const RunConfig& cfg) {
  if (cfg.group.empty()) throw UsageError("--group is required for '" + cfg.command + "'");
  return MarkedGroup::parse(cfg.group);
}

int require_radius(const RunConfig& cfg) {
  if (cfg.radius < 0) throw UsageError("--radius is required for '" + cfg.command + "'");
  return cfg.radius;
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  throw UsageError("--format " + cfg.format + " is not supported by '" + cfg.command + "'");
}

// Closed-form groups get an unbounded metric; the rest a ball of radius `budget`.
WordMetric metric_for(const MarkedGroup& group, int budget, std::size_t cap) {
  const bool closed = group.closed_form_length(group.identity()).has_value();
  return WordMetric(group, closed ? std::numeric_limits<int>::max() : budget, cap);
}

ActionPtr make_action(const RunConfig& cfg) {
  const std::string& spec = cfg.action;
  if (spec == "snake") return std::make_shared<const TranslationAction>(grid_snake_action());
  if (spec.rfind("subgroup:", 0) == 0) {
    const MarkedGroup base = require_group(cfg);
    json images;
    try {
      images = json::parse(spec.substr(9));
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("bad subgroup image JSON: ") + e.what());
    }
    return std::make_shared<const TranslationAction>(subgroup_action_from_json(base, images));
  }
  if (spec.rfind("table:", 0) == 0) {
    const std::string path = spec.substr(6);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open action table " + path);
    auto action = std::make_shared<const TranslationAction>(action_from_table(in, "table:" + path));
    if (!cfg.group.empty() && !(MarkedGroup::parse(cfg.group) == action->base())) {
      throw UsageError("action table acts on " + action->base().spec() + ", not " + cfg.group);
    }
    return action;
  }
  if (spec.empty()) throw UsageError("--action is required for '" + cfg.command + "'");
  throw UsageError("unknown --action '" + spec + "'");
}

Outcome group_audit(const RunConfig& cfg) {
  require_format(cfg, {"json"});
  const MarkedGroup g = require_group(cfg);
  constexpr std::size_t kSamples = 10'000;
  constexpr std::size_t kMaxLen = 12;
  const auto report = audit_relations(g, kSamples, kMaxLen, cfg.seed);
  const json j = {{"group", g.spec()},      {"samples", kSamples},
                  {"max_len", kMaxLen},     {"seed", cfg.seed},
                  {"checked", report.checked}, {"violations", report.violations},
                  {"passed", report.passed()}};
  return {j.dump(2) + "\n",
          "group audit " + g.spec() + ": " + std::to_string(report.checked) + " checks, " +
              std::to_string(report.violations.size()) + " violations: " + (report.passed() ? "PASS" : "FAIL"),
          report.passed() ? kPass : kAuditFailure};
}

Outcome ball(const RunConfig& cfg) {
  require_format(cfg, {"json", "dot", "edgelist"});
  const MarkedGroup g = require_group(cfg);
  const CayleyBall b = build_ball(g, require_radius(cfg), cfg.vertex_cap);
  std::ostringstream os;
  export_graph(b, parse_graph_format(cfg.format), os);
  std::size_t edges = 0;
  for (Vertex v = 0; v < b.size(); ++v) {
    for (const auto& e : b.neighbors(v)) edges += v < e.target ? 1 : 0;
  }
  return {os.str(),
          "ball " + g.spec() + " R=" + std::to_string(b.radius()) + ": " + std::to_string(b.size()) + " vertices, " +
              std::to_string(edges) + " edges"};
}

Outcome growth_cmd(const RunConfig& cfg) {
  require_format(cfg, {"csv", "json"});
  const MarkedGroup g = require_group(cfg);
  const auto sizes = growth(g, require_radius(cfg), cfg.vertex_cap);
  std::ostringstream os;
  if (cfg.format == "csv") {
    os << "radius,size\n";
    for (std::size_t r = 0; r < sizes.size(); ++r) os << r << ',' << sizes[r] << '\n';
  } else {
    os << json{{"group", g.spec()}, {"sizes", sizes}}.dump() << '\n';
  }
  return {os.str(), "growth " + g.spec() + ": |B_" + std::to_string(sizes.size() - 1) + "| = " +
                        std::to_string(sizes.back())};
}

Outcome action_audit(const RunConfig& cfg) {
  require_format(cfg, {"json"});
  const ActionPtr action = make_action(cfg);
  const CayleyBall h_ball = build_ball(action->acting(), cfg.h_radius, cfg.vertex_cap);
  const CayleyBall g_ball = build_ball(action->base(), cfg.g_radius, cfg.vertex_cap);
  const WordMetric metric = metric_for(action->base(), cfg.g_radius, cfg.vertex_cap);
  ActionAuditReport report;
  report.cocycle = audit_cocycle_law(*action, h_ball, g_ball);
  report.freeness = audit_freeness(*action, h_ball, g_ball);
  report.displacement = measure_generator_displacements(*action, g_ball, metric);
  json j = to_json(*action, report);
  j["h_radius"] = cfg.h_radius;
  j["g_radius"] = cfg.g_radius;
  const bool ok = report.passed();
  return {j.dump(2) + "\n",
          "action audit " + action->name() + ": " + std::to_string(j["checked"].get<std::size_t>()) +
              " checks, cocycle " + std::to_string(report.cocycle.violation_count) + " / freeness " +
              std::to_string(report.freeness.witness_count) + " violations" +
              (report.cocycle.vacuous() ? " (vacuous)" : "") + ": " + (ok ? "PASS" : "FAIL"),
          ok ? kPass : kAuditFailure};
}

struct MapSetup {
  ActionPtr action;
  RegularMapSample map;
  std::int64_t kappa = 0;
  bool certified = false;
  json kappa_json;
};

MapSetup build_map(const RunConfig& cfg) {
  MapSetup s;
  s.action = make_action(cfg);
  const MarkedGroup& base = s.action->base();
  const Element x = cfg.basepoint.empty() ? base.identity() : parse_element(base, cfg.basepoint);
  if (cfg.kappa == "auto") {
    const CayleyBall g_ball = build_ball(base, cfg.g_radius, cfg.vertex_cap);
    const auto cert = kappa_certificate(*s.action, g_ball, metric_for(base, cfg.g_radius, cfg.vertex_cap));
    s.kappa = cert.kappa;
    s.certified = cert.certified();
    s.kappa_json = to_json(cert);
  } else {
    try {
      std::size_t used = 0;
      s.kappa = std::stoll(cfg.kappa, &used);
      if (used != cfg.kappa.size() || s.kappa < 0) throw std::invalid_argument("kappa");
    } catch (const std::exception&) {
      throw UsageError("--kappa must be 'auto' or a nonnegative integer");
    }
    s.kappa_json = {{"kappa", s.kappa}, {"certified", false}, {"source", "user"}};
  }
  s.map = build_regular_map(s.action, x, cfg.h_radius);
  return s;
}

void emit_csv(const RunConfig& cfg, const RegularMapSample& map) {
  if (cfg.emit_csv.empty()) return;
  std::ofstream f(cfg.emit_csv, std::ios::binary);
  if (!f) throw ParseError("cannot write " + cfg.emit_csv);
  write_length_csv(map, metric_for(map.target(), cfg.g_radius, cfg.vertex_cap), f);
}

Outcome regmap_build(const RunConfig& cfg) {
  require_format(cfg, {"json", "csv"});
  const MapSetup s = build_map(cfg);
  emit_csv(cfg, s.map);
  std::ostringstream os;
  if (cfg.format == "csv") {
    write_length_csv(s.map, metric_for(s.map.target(), cfg.g_radius, cfg.vertex_cap), os);
  } else {
    os << to_json(s.map, s.kappa, json{{"kappa_certificate", s.kappa_json}}).dump(2) << '\n';
  }
  return {os.str(), "regmap build " + s.action->name() + ": " + std::to_string(s.map.domain->size()) +
                        " points, kappa=" + std::to_string(s.kappa)};
}

Outcome regmap_audit(const RunConfig& cfg) {
  require_format(cfg, {"json"});
  const MapSetup s = build_map(cfg);
  emit_csv(cfg, s.map);
  LipschitzOptions lopt;
  lopt.seed = cfg.seed;
  lopt.g_budget = cfg.g_radius;
  lopt.vertex_cap = cfg.vertex_cap;
  lopt.certified = s.certified;
  const auto lip = audit_lipschitz(s.map, s.kappa, lopt);
  const auto convention = parse_ball_convention(cfg.ball_convention);
  const auto mult = audit_multiplicity(s.map, s.kappa, convention, s.certified);
  const json audits = {{"kappa_certificate", s.kappa_json},
                       {"lipschitz", to_json(lip, s.map.source())},
                       {"multiplicity", to_json(mult, s.map.target())}};
  const bool ok = lip.passed() && mult.passed();
  std::ostringstream summary;
  summary << "regmap audit " << s.action->name() << ": kappa=" << s.kappa
          << (s.certified ? " (certified)" : " (heuristic)") << ", lipschitz " << (lip.passed() ? "PASS" : "FAIL")
          << " (max adjacent " << lip.max_adjacent_distance << "), multiplicity[" << to_string(convention) << "] "
          << (mult.passed() ? "PASS" : "FAIL") << " (max fiber " << mult.max_fiber << ")";
  return {to_json(s.map, s.kappa, audits).dump(2) + "\n", summary.str(), ok ? kPass : kAuditFailure};
}

Outcome sep_profile(const RunConfig& cfg) {
  require_format(cfg, {"csv", "json"});
  const MarkedGroup g = require_group(cfg);
  std::vector<int> radii(static_cast<std::size_t>(require_radius(cfg)));
  std::iota(radii.begin(), radii.end(), 1);
  const auto report = sep_lower_profile(g, radii, {cfg.exact_limit, cfg.node_budget}, cfg.vertex_cap);
  std::ostringstream os;
  if (cfg.format == "csv") {
    write_csv(report, os);
  } else {
    os << to_json(report).dump(2) << '\n';
  }
  std::string cuts;
  for (const auto& row : report.rows) cuts += (cuts.empty() ? "" : ",") + std::to_string(row.cut);
  return {os.str(), "sep profile " + g.spec() + ": cut lower bounds [" + cuts + "]"};
}

Outcome sep_cut(const RunConfig& cfg) {
  require_format(cfg, {"json"});
  FiniteGraph graph;
  std::string source;
  if (!cfg.input.empty()) {
    std::ifstream in(cfg.input);
    if (!in) throw ParseError("cannot open graph file " + cfg.input);
    graph = FiniteGraph::from_file(read_graph(in));
    source = cfg.input;
  } else {
    const MarkedGroup g = require_group(cfg);
    graph = to_finite_graph(build_ball(g, require_radius(cfg), cfg.vertex_cap));
    source = g.spec() + " B_" + std::to_string(cfg.radius);
  }
  const CutResult cut = graph.size() <= cfg.exact_limit ? exact_cut(graph, {cfg.exact_limit, cfg.node_budget})
                                                        : greedy_cut_upper(graph);
  json j = to_json(cut);
  j["n"] = graph.size();
  j["source"] = source;
  j["certificate_valid"] = verify_certificate(graph, cut.separator).valid;
  return {j.dump(2) + "\n", "sep cut " + source + ": n=" + std::to_string(graph.size()) + " cut=" +
                                std::to_string(cut.cut_size) + " (" + to_string(cut.method) + ")"};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ggt: Cayley balls, translation-like actions, regular maps and separation bounds", "ggt"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_group = [&](CLI::App* c) {
    c->add_option("--group", cfg.group, "zd:<d> | free:<k> | lamplighter | bs1n:<n>");
  };
  std::map<const CLI::App*, std::string> default_formats;
  auto add_output = [&](CLI::App* c, const std::string& default_format) {
    c->add_option("--out", cfg.out, "artifact path (default: stdout)");
    c->add_option("--format", cfg.format, "json | csv | dot | edgelist (default: " + default_format + ")")
        ->check(CLI::IsMember({"json", "csv", "dot", "edgelist"}));
    default_formats[c] = default_format;
  };
  auto add_cap = [&](CLI::App* c) {
    c->add_option("--vertex-cap", cfg.vertex_cap, "maximum ball size")->check(CLI::PositiveNumber);
  };
  auto add_seed = [&](CLI::App* c) { c->add_option("--seed", cfg.seed, "seed for randomized corpora"); };
  auto add_action = [&](CLI::App* c) {
    c->add_option("--action", cfg.action, "subgroup:<gen-image-json> | snake | table:<path>");
    c->add_option("--h-radius", cfg.h_radius, "acting-group ball radius")->check(CLI::NonNegativeNumber);
    c->add_option("--g-radius", cfg.g_radius, "base-group ball radius")->check(CLI::NonNegativeNumber);
  };
  auto add_cut = [&](CLI::App* c) {
    c->add_option("--exact-limit", cfg.exact_limit, "largest graph solved exactly")->check(CLI::PositiveNumber);
    c->add_option("--node-budget", cfg.node_budget, "branch-and-bound node budget")->check(CLI::PositiveNumber);
  };
  auto add_radius = [&](CLI::App* c) {
    c->add_option("--radius", cfg.radius, "ball radius")->check(CLI::NonNegativeNumber);
  };

  std::vector<std::pair<CLI::App*, std::function<Outcome(const RunConfig&)>>> leaves;

  auto* group_cmd = app.add_subcommand("group", "group kernel checks")->require_subcommand(1);
  auto* group_audit_cmd = group_cmd->add_subcommand("audit", "randomized axiom and relator audit");
  add_group(group_audit_cmd);
  add_seed(group_audit_cmd);
  add_output(group_audit_cmd, "json");
  leaves.emplace_back(group_audit_cmd, group_audit);

  auto* ball_cmd = app.add_subcommand("ball", "export a Cayley ball");
  add_group(ball_cmd);
  add_radius(ball_cmd);
  add_cap(ball_cmd);
  add_output(ball_cmd, "json");
  leaves.emplace_back(ball_cmd, ball);

  auto* growth_cmd_app = app.add_subcommand("growth", "ball sizes |B_r| for r = 0..R");
  add_group(growth_cmd_app);
  add_radius(growth_cmd_app);
  add_cap(growth_cmd_app);
  add_output(growth_cmd_app, "csv");
  leaves.emplace_back(growth_cmd_app, growth_cmd);

  auto* action_cmd = app.add_subcommand("action", "translation-like actions")->require_subcommand(1);
  auto* action_audit_cmd = action_cmd->add_subcommand("audit", "cocycle law, freeness and displacement");
  add_group(action_audit_cmd);
  add_action(action_audit_cmd);
  add_cap(action_audit_cmd);
  add_seed(action_audit_cmd);
  add_output(action_audit_cmd, "json");
  leaves.emplace_back(action_audit_cmd, action_audit);

  auto* regmap_cmd = app.add_subcommand("regmap", "regular maps from actions")->require_subcommand(1);
  for (const char* name : {"build", "audit"}) {
    const bool is_audit = std::string(name) == "audit";
    auto* c = regmap_cmd->add_subcommand(name, is_audit ? "build and audit f(h) = c(h^-1, x)^-1"
                                                        : "build f(h) = c(h^-1, x)^-1");
    add_group(c);
    add_action(c);
    add_cap(c);
    add_seed(c);
    c->add_option("--basepoint", cfg.basepoint, "base point as element JSON");
    c->add_option("--kappa", cfg.kappa, "auto | <int>");
    c->add_option("--emit-csv", cfg.emit_csv, "also write (l_H, l_G) rows to this path");
    if (is_audit) {
      c->add_option("--ball-convention", cfg.ball_convention, "open | closed")
          ->check(CLI::IsMember({"open", "closed"}));
    }
    add_output(c, "json");
    leaves.emplace_back(c, is_audit ? regmap_audit : regmap_build);
  }

  auto* sep_cmd = app.add_subcommand("sep", "half-size vertex cuts")->require_subcommand(1);
  auto* sep_profile_cmd = sep_cmd->add_subcommand("profile", "cut lower bounds on balls B_1..B_R");
  add_group(sep_profile_cmd);
  add_radius(sep_profile_cmd);
  add_cap(sep_profile_cmd);
  add_cut(sep_profile_cmd);
  add_output(sep_profile_cmd, "csv");
  leaves.emplace_back(sep_profile_cmd, sep_profile);
  auto* sep_cut_cmd = sep_cmd->add_subcommand("cut", "cut of a graph file or a Cayley ball");
  sep_cut_cmd->add_option("graph", cfg.input, "edge-list or JSON graph file");
  add_group(sep_cut_cmd);
  add_radius(sep_cut_cmd);
  add_cap(sep_cut_cmd);
  add_cut(sep_cut_cmd);
  add_output(sep_cut_cmd, "json");
  leaves.emplace_back(sep_cut_cmd, sep_cut);

  std::vector<std::string> argv_storage{"ggt"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsageError;
  }

  for (const auto& [leaf, handler] : leaves) {
    if (!leaf->parsed()) continue;
    cfg.command = leaf->get_parent() == &app ? leaf->get_name()
                                             : leaf->get_parent()->get_name() + " " + leaf->get_name();
    if (cfg.format.empty()) cfg.format = default_formats.at(leaf);
    try {
      const Outcome result = handler(cfg);
      if (cfg.out.empty()) {
        out << result.artifact;
        err << result.summary << '\n';
      } else {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) throw ParseError("cannot write " + cfg.out);
        f << result.artifact;
        if (!f) throw ParseError("failed writing " + cfg.out);
        out << result.summary << '\n';
      }
      return result.code;
    } catch (const CapacityError& e) {
      err << "capacity error: " << e.what() << '\n';
      return kUsageError;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kUsageError;
    }
  }
  err << app.help();
  return kUsageError;
}

}  // namespace ggt::cli
