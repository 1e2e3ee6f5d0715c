#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "stirling/counting.hpp"
#include "stirling/enumerate.hpp"
#include "stirling/planner.hpp"
#include "stirling/skeleton.hpp"

namespace stirling::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string graph_name;
  std::string graph_file;
  std::string colors;
  bool no_cover = false;
  std::string format;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ComplexSpec load_spec(const RunConfig& cfg) {
  if (cfg.graph_name.empty() == cfg.graph_file.empty()) {
    throw UsageError("give exactly one of --graph or --graph-file");
  }
  SimpleGraph g = cfg.graph_name.empty() ? parse_edge_list(read_file(cfg.graph_file))
                                         : parse_named_graph(cfg.graph_name);
  ComplexSpec spec{std::move(g), parse_color_vector(cfg.colors), !cfg.no_cover};
  spec.check_supported();
  return spec;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--graph", cfg.graph_name, "named graph such as K5, P3, T4, C4");
  sub->add_option("--graph-file", cfg.graph_file, "edge-list file: header \"n m\" then m lines \"u v\"");
  sub->add_option("--colors", cfg.colors, "color vector, e.g. 2,1,1,1")->required();
  sub->add_flag("--no-cover", cfg.no_cover, "drop the every-vertex-occupied condition");
  sub->add_option("--format", cfg.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
}

std::string decimal(std::int64_t v) { return std::to_string(v); }

Json decimal_list(const FVector& f) {
  Json out = Json::array();
  for (auto v : f.counts) out.push_back(decimal(v));
  return out;
}

std::string tab_joined(const FVector& f) {
  std::string out;
  for (auto v : f.counts) out += '\t' + decimal(v);
  return out;
}

bool is_two_one_family(const ComplexSpec& spec) {
  const int n = spec.graph.vertex_count();
  return n >= 2 && spec.require_cover && spec.colors == two_one_vector(n);
}

bool is_uniform_family(const ComplexSpec& spec) {
  const int n = spec.graph.vertex_count();
  const int r = spec.colors.color_count();
  return n >= 2 && r >= 2 && spec.require_cover && spec.colors == uniform_vector(n, r);
}

void emit(const Json& report, const std::vector<std::pair<std::string, std::string>>& rows,
          const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << report.dump(2) << '\n';
  } else {
    for (const auto& [key, value] : rows) out << key << '\t' << value << '\n';
  }
}

int cmd_count(const RunConfig& cfg, std::ostream& out) {
  const auto spec = load_spec(cfg);
  const FVector f = f_vector(spec, default_worker_count());
  const bool empty = f.counts.size() == 1 && f.counts[0] == 0;
  Json report;
  std::vector<std::pair<std::string, std::string>> rows;
  report["n"] = spec.graph.vertex_count();
  report["m"] = spec.graph.edge_count();
  report["colors"] = to_string(spec.colors);
  report["require_cover"] = spec.require_cover;
  report["empty"] = empty;
  report["f_vector"] = decimal_list(f);
  report["euler_characteristic"] = decimal(euler_characteristic(f));
  rows.emplace_back("n", std::to_string(spec.graph.vertex_count()));
  rows.emplace_back("m", std::to_string(spec.graph.edge_count()));
  rows.emplace_back("colors", to_string(spec.colors));
  rows.emplace_back("require_cover", spec.require_cover ? "true" : "false");
  rows.emplace_back("empty", empty ? "true" : "false");
  rows.emplace_back("f_vector", tab_joined(f).substr(1));
  rows.emplace_back("euler_characteristic", decimal(euler_characteristic(f)));

  std::optional<FVector> closed;
  std::string family;
  if (is_two_one_family(spec)) {
    auto [f0, f1] = count_formula_two_one(spec.graph);
    closed = FVector{{f0, f1}};
    family = "two_one";
  } else if (is_uniform_family(spec)) {
    closed = count_formula_uniform(spec.graph, spec.colors.color_count());
    family = "uniform";
  }
  if (closed) {
    const bool agree = closed->same_counts(f);
    report["formula"] = {{"family", family}, {"f_vector", decimal_list(*closed)}, {"agree", agree}};
    rows.emplace_back("formula_family", family);
    rows.emplace_back("formula_f_vector", tab_joined(*closed).substr(1));
    rows.emplace_back("formula_agree", agree ? "true" : "false");
    if (family == "two_one" && is_connected(spec.graph)) {
      const auto L = wedge_count(spec.graph);
      report["wedge_count"] = decimal(L);
      rows.emplace_back("wedge_count", decimal(L));
    }
  }
  emit(report, rows, cfg.format, out);
  return empty ? kEmptyOrUnreachable : kOk;
}

int cmd_enumerate(const RunConfig& cfg, std::optional<int> dim, std::ostream& out) {
  const auto spec = load_spec(cfg);
  const auto cells = enumerate_cells(spec, dim, default_worker_count());
  if (cfg.format == "json") {
    Json list = Json::array();
    for (const auto& c : cells) list.push_back(to_string(c));
    out << Json{{"count", decimal(static_cast<std::int64_t>(cells.size()))}, {"cells", list}}.dump(2) << '\n';
  } else {
    for (const auto& c : cells) out << to_string(c) << '\n';
  }
  return kOk;
}

int cmd_components(const RunConfig& cfg, std::ostream& out) {
  const auto spec = load_spec(cfg);
  const auto comps = connected_components(spec, default_worker_count());
  Json sizes = Json::array();
  std::string joined;
  for (auto s : comps.sizes) {
    sizes.push_back(decimal(static_cast<std::int64_t>(s)));
    joined += (joined.empty() ? "" : "\t") + std::to_string(s);
  }
  Json report{{"components", decimal(comps.count)}, {"sizes", sizes}};
  emit(report, {{"components", std::to_string(comps.count)}, {"sizes", joined}}, cfg.format, out);
  return kOk;
}

Cell parse_zero_cell(const ComplexSpec& spec, const std::string& text, const char* flag) {
  Cell c = parse_cell(text);
  if (!c.is_zero_cell() || !is_valid_cell(spec, c)) {
    throw UsageError(std::string(flag) + " is not a valid 0-cell: " + text);
  }
  return c;
}

Json plan_json(const MovePlan& p) {
  Json moves = Json::array();
  for (const auto& mv : p.moves) moves.push_back({mv.color, mv.from, mv.to});
  return {{"start", to_string(p.start)}, {"end", to_string(p.end)}, {"length", p.moves.size()}, {"moves", moves}};
}

int cmd_plan(const RunConfig& cfg, const std::string& from, const std::string& to, const std::string& mode,
             std::ostream& out, std::ostream& err) {
  const auto spec = load_spec(cfg);
  const Cell a = parse_zero_cell(spec, from, "--from");
  const Cell b = parse_zero_cell(spec, to, "--to");
  std::optional<MovePlan> p;
  if (mode == "bfs") {
    p = plan_bfs(spec, a, b);
  } else {
    try {
      p = plan(spec, a, b);
    } catch (const PlannerError& e) {
      if (e.kind() != PlannerError::Kind::HypothesisNotMet) throw;
      err << "hypothesis not met: " << e.what() << '\n';
      return kHypothesisNotMet;
    }
  }
  if (!p) {
    err << "unreachable: no sequence of moves joins the two cells\n";
    return kEmptyOrUnreachable;
  }
  if (cfg.format == "json") out << plan_json(*p).dump(2) << '\n';
  else out << serialize_plan(*p);
  return kOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& plan_file, std::ostream& out) {
  const auto spec = load_spec(cfg);
  const MovePlan p = parse_plan(read_file(plan_file));
  const VerifyResult result = verify_plan(spec, p);
  Json report{{"ok", result.ok}};
  std::vector<std::pair<std::string, std::string>> rows{{"ok", result.ok ? "true" : "false"}};
  if (!result.ok) {
    report["failing_index"] = result.failing_index;
    report["reason"] = result.reason;
    rows.emplace_back("failing_index", std::to_string(result.failing_index));
    rows.emplace_back("reason", result.reason);
  }
  emit(report, rows, cfg.format, out);
  return result.ok ? kOk : kVerifyFailed;
}

int cmd_skeleton(const RunConfig& cfg, bool nodes, std::ostream& out) {
  const auto spec = load_spec(cfg);
  const auto sk = build_one_skeleton(spec, default_worker_count());
  if (cfg.format == "json") {
    Json list = Json::array();
    for (const auto& c : sk.nodes) list.push_back(to_string(c));
    Json arcs = Json::array();
    for (const auto& [a, b] : sk.arcs) arcs.push_back({a, b});
    out << Json{{"nodes", list}, {"arcs", arcs}}.dump(2) << '\n';
  } else {
    out << (nodes ? skeleton_node_listing(sk) : skeleton_edge_list(sk));
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grouped Stirling complexes of graphs: counting, enumeration, connectivity and motion plans"};
  app.name(args.empty() ? "stirling" : args.front());
  app.require_subcommand(1);

  RunConfig cfg;
  std::optional<int> dim;
  std::string from, to, mode = "constructive", plan_file;
  bool nodes = false;

  auto* count = app.add_subcommand("count", "f-vector, closed-form cross-check and wedge count");
  add_common(count, cfg);
  auto* enumerate = app.add_subcommand("enumerate", "list cells in canonical order");
  add_common(enumerate, cfg);
  enumerate->add_option("--dim", dim, "only cells of this dimension")->check(CLI::NonNegativeNumber);
  auto* components = app.add_subcommand("components", "connected components of the 1-skeleton");
  add_common(components, cfg);
  auto* plan_cmd = app.add_subcommand("plan", "motion plan between two 0-cells");
  add_common(plan_cmd, cfg);
  plan_cmd->add_option("--from", from, "start 0-cell, e.g. \"{0,1}|{1,2}|{0}\"")->required();
  plan_cmd->add_option("--to", to, "end 0-cell")->required();
  plan_cmd->add_option("--mode", mode, "planner")
      ->check(CLI::IsMember({"constructive", "bfs"}))
      ->capture_default_str();
  auto* verify = app.add_subcommand("verify", "replay a serialized plan");
  add_common(verify, cfg);
  verify->add_option("--plan-file", plan_file, "plan produced by the plan subcommand")->required();
  auto* skeleton = app.add_subcommand("skeleton", "export the 1-skeleton");
  add_common(skeleton, cfg);
  skeleton->add_flag("--nodes", nodes, "print the node listing instead of the edge list");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (cfg.format.empty()) cfg.format = (*count || *components || *verify) ? "json" : "tsv";

  try {
    if (*count) return cmd_count(cfg, out);
    if (*enumerate) return cmd_enumerate(cfg, dim, out);
    if (*components) return cmd_components(cfg, out);
    if (*plan_cmd) return cmd_plan(cfg, from, to, mode, out, err);
    if (*verify) return cmd_verify(cfg, plan_file, out);
    if (*skeleton) return cmd_skeleton(cfg, nodes, out);
  } catch (const EmptyComplexError& e) {
    err << "empty complex: " << e.what() << '\n';
    return kEmptyOrUnreachable;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PlannerError& e) {
    err << "planner error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kUsage;
}

}  // namespace stirling::cli
