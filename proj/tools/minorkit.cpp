// minorkit command-line front end. Reports are JSON on stdout (or --report).
// Exit codes: 0 success, 1 domain verdict failure, 2 input error.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "minorkit/io.hpp"
#include "minorkit/minorkit.hpp"

using namespace minorkit;
using io::json;

namespace {

struct Failure {
  json report;
};

struct Context {
  std::string command;
  json inputs = json::object();
  std::uint64_t seed = 1;
  std::optional<double> float_tolerance;
  std::string report_path;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  std::uint64_t h = 1469598103934665603ull;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

void add_input(Context& ctx, const std::string& name, const std::string& path) {
  if (!path.empty()) ctx.inputs[name] = {{"path", path}, {"fnv1a64", file_digest(path)}};
}

// Display-only decimal approximation, rounded to the tolerance.
json shown(const Context& ctx, const Rational& r) {
  if (!ctx.float_tolerance) return io::to_json(r);
  const double t = *ctx.float_tolerance;
  return {{"exact", format_rational(r)}, {"approx", std::round(to_double(r) / t) * t}};
}

json shown(const Context& ctx, const RationalVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(shown(ctx, x));
  return out;
}

int emit(const Context& ctx, json results, json verification, bool ok) {
  json report{{"command", ctx.command},
              {"inputs", ctx.inputs},
              {"seed", ctx.seed},
              {"ok", ok},
              {"results", std::move(results)},
              {"verification", std::move(verification)},
              {"timing_ms", std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - ctx.start).count()}};
  if (ctx.report_path.empty()) std::cout << report.dump(2) << "\n";
  else io::write_json_file(ctx.report_path, report);
  return ok ? 0 : 1;
}

json c1_json(const C1Result& r) {
  json pairs = json::array();
  for (auto [a, b] : r.violations) pairs.push_back({a, b});
  return {{"ok", r.ok}, {"violating_pairs", pairs}};
}

json c2_json(const C2Result& r) {
  return {{"ok", r.ok}, {"covered_vertices", r.covered}, {"rejected_witnesses", r.rejected_witnesses}};
}

json verification_json(const Verification& v) { return {{"c1", c1_json(v.c1)}, {"c2", c2_json(v.c2)}, {"ok", v.ok()}}; }

Representation with_found_witnesses(Representation rep, const C2Result& c2) {
  for (std::size_t i = 0; i < c2.witnesses.size(); ++i)
    if (c2.witnesses[i]) rep.witnesses[i] = c2.witnesses[i];
  return rep;
}

// Edge list "1-2,3-4" mapped to positions in g.
EdgeSet parse_targets(const Graph& g, const std::string& text) {
  EdgeSet out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dash = item.find('-');
    if (dash == std::string::npos) fail(ErrorCode::ParseError, "target '" + item + "' is not of the form u-v");
    int u = 0, v = 0;
    try {
      u = std::stoi(item.substr(0, dash));
      v = std::stoi(item.substr(dash + 1));
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "target '" + item + "' is not of the form u-v");
    }
    const auto pos = g.find_edge(u, v);
    if (!pos) fail(ErrorCode::ParseError, "target (" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
    out.push_back(*pos);
  }
  return out;
}

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      sizes.push_back(std::stoi(item));
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad size '" + item + "'");
    }
  }
  return sizes;
}

json edges_json(const Graph& g, const EdgeSet& edges) {
  json out = json::array();
  for (EdgePos p : edges) out.push_back({g.edge(p).u, g.edge(p).v});
  return out;
}

// --- box ---------------------------------------------------------------------

struct BoxVerifyArgs {
  std::string rep, graph;
  bool full_sweep = false;
};

int box_verify(Context& ctx, const BoxVerifyArgs& a) {
  add_input(ctx, "representation", a.rep);
  add_input(ctx, "graph", a.graph);
  const Graph g = io::graph_from_json(io::read_json_file(a.graph));
  const Representation rep = io::representation_from_json(io::read_json_file(a.rep));
  const Verification v = verify(g, rep, {!a.full_sweep, {}});
  json witnesses = json::object();
  for (std::size_t i = 0; i < v.c2.witnesses.size(); ++i)
    if (v.c2.witnesses[i]) witnesses[std::to_string(i + 1)] = io::to_json(*v.c2.witnesses[i]);
  return emit(ctx, {{"dim", rep.dim}, {"vertices", rep.vertex_count()}, {"witnesses", witnesses}}, verification_json(v), v.ok());
}

struct BoxBuildArgs {
  std::string graph, strategy = "tree", edits, base, out, trace, rep;
  int clique = 0;
  std::string sizes;
  bool verify_only = false;
};

int box_build(Context& ctx, const BoxBuildArgs& a) {
  if (a.verify_only) {
    if (a.rep.empty()) fail(ErrorCode::ParseError, "--verify-only needs --rep");
    return box_verify(ctx, {a.rep, a.graph, true});
  }
  add_input(ctx, "graph", a.graph);
  Graph g;
  Representation rep;
  json extra = json::object();
  if (a.strategy == "tree") {
    g = io::graph_from_json(io::read_json_file(a.graph));
    rep = build_tree_rep(g);
  } else if (a.strategy == "threshold") {
    const auto sizes = parse_sizes(a.sizes);
    rep = build_threshold_rep(a.clique, sizes);
    const Graph t = threshold_graph(a.clique, sizes);
    if (!a.graph.empty()) {
      g = io::graph_from_json(io::read_json_file(a.graph));
      if (!g.same_topology(t)) fail(ErrorCode::InvalidInput, "graph is not the threshold graph with these parameters");
    } else {
      g = t;
      extra["graph"] = io::to_json(t);
    }
    extra["parameters"] = {{"clique", a.clique}, {"sizes", sizes}};
  } else if (a.strategy == "edits") {
    g = io::graph_from_json(io::read_json_file(a.graph));
    EditSequence seq;
    if (a.edits.empty()) {
      seq = reduce_to_spanning_tree(g);
    } else {
      add_input(ctx, "edits", a.edits);
      seq = io::edits_from_json(g, io::read_json_file(a.edits));
    }
    Representation base;
    if (!a.base.empty()) {
      add_input(ctx, "base", a.base);
      base = io::representation_from_json(io::read_json_file(a.base));
    } else {
      base = build_tree_rep(seq.base);
    }
    const ConstructionTrace trace = build_from_edit_sequence(g, seq, base);
    rep = trace.final;
    extra["counts"] = {{"vertex_deletions", seq.counts.vertex_deletions},
                       {"edge_deletions", seq.counts.edge_deletions},
                       {"contractions", seq.counts.contractions}};
    extra["base_dim"] = trace.base_dim;
    extra["dim_bound"] = trace.base_dim + static_cast<std::size_t>(seq.counts.vertex_deletions + seq.counts.edge_deletions) +
                         2 * static_cast<std::size_t>(seq.counts.contractions);
    if (!a.trace.empty()) io::write_json_file(a.trace, io::to_json(trace));
  } else {
    fail(ErrorCode::ParseError, "unknown strategy '" + a.strategy + "'");
  }
  const Verification v = verify(g, rep);
  rep = with_found_witnesses(std::move(rep), v.c2);
  if (!a.out.empty() && v.ok()) io::write_json_file(a.out, io::to_json(rep));
  extra["strategy"] = a.strategy;
  extra["dim"] = rep.dim;
  if (a.out.empty()) extra["representation"] = io::to_json(rep);
  else extra["representation_file"] = a.out;
  return emit(ctx, extra, verification_json(v), v.ok());
}

struct BoxOracleArgs {
  std::string graph;
  std::size_t max_dim = 2;
};

int box_oracle(Context& ctx, const BoxOracleArgs& a) {
  add_input(ctx, "graph", a.graph);
  const Graph g = io::graph_from_json(io::read_json_file(a.graph));
  const OracleResult r = brute_force_strong_boxicity(g, a.max_dim);
  json results{{"nodes", r.nodes}, {"max_dim", a.max_dim}};
  if (r.dim) {
    results["strong_boxicity"] = *r.dim;
    results["representation"] = io::to_json(*r.rep);
    const Verification v = verify(g, *r.rep, {false, {}});
    return emit(ctx, results, verification_json(v), v.ok());
  }
  results["strong_boxicity"] = nullptr;
  results["note"] = "no representation with dimension <= max_dim on the search grid";
  return emit(ctx, results, json::object(), false);
}

// --- flow --------------------------------------------------------------------

int flow_matrix(Context& ctx, const std::string& graph) {
  add_input(ctx, "graph", graph);
  const Graph g = io::graph_from_json(io::read_json_file(graph));
  const GainMatrix h = assemble_gain_matrix(g);
  json sums = json::array();
  bool zero = true;
  for (const auto& row : h.rows) {
    Rational s = 0;
    for (const auto& x : row) s += x;
    zero = zero && s == 0;
    sums.push_back(io::to_json(s));
  }
  return emit(ctx, {{"matrix", io::to_json(h)}}, {{"row_sums", sums}, {"row_sums_zero", zero}}, zero);
}

struct AttackArgs {
  std::string graph, target, mode = "basic", lambda = "1/2", eps1 = "1", eps2 = "2", schedule_gap, out, attack;
  std::size_t samples = 100;
  bool verify_only = false;
};

json spec_json(const Graph& g, const AttackSpec& spec, const Coloring* coloring) {
  json out = io::to_json(spec, g);
  const Graph comp = component_graph(spec);
  const Coloring c = coloring ? *coloring : color_assignment(comp);
  out["component_graph"] = io::to_json(comp);
  out["chromatic_estimate"] = {{"colors", c.count}, {"exact", c.exact}};
  out["theta_upper_bounds"] = {{"k_minus_1", static_cast<long long>(spec.k) - 1}, {"chi_minus_1", c.count - 1}};
  return out;
}

json support_json(const std::vector<std::size_t>& s) { return json(s); }

int flow_attack_verify(Context& ctx, const AttackArgs& a, const Graph& g, const AttackSpec& spec) {
  add_input(ctx, "attack", a.attack);
  const json saved = io::read_json_file(a.attack);
  const RationalVector s = io::vector_from_json(saved.at("results").at("s"));
  if (s.size() != static_cast<std::size_t>(g.n())) fail(ErrorCode::ParseError, "stealth vector length differs from vertex count");
  const auto required = required_support(g, spec);
  json verification{{"required_support", support_json(required)}};
  bool ok = true;
  if (g.has_all_gains()) {
    const RationalVector av = flows(assemble_gain_matrix(g), s);
    const auto support = support_of(av);
    verification["support"] = support_json(support);
    verification["support_matches"] = support == required;
    ok = support == required;
  } else {
    const Rational eps1 = parse_rational(a.eps1), eps2 = parse_rational(a.eps2);
    const auto audit = audit_robust(g, spec, s, eps1, eps2, a.samples, ctx.seed);
    verification["audit"] = {{"samples", audit.samples},
                             {"boundary_failures", audit.boundary_failures},
                             {"support_failures", audit.support_failures},
                             {"min_boundary", io::to_json(audit.min_boundary)}};
    ok = audit.boundary_failures == 0 && audit.support_failures == 0;
  }
  if (!spec.targets.empty()) verification["ratio"] = io::to_json(variation_ratio(g, s, spec.targets));
  return emit(ctx, {{"s", io::to_json(s)}}, verification, ok);
}

int flow_attack(Context& ctx, const AttackArgs& a) {
  add_input(ctx, "graph", a.graph);
  const Graph g = io::graph_from_json(io::read_json_file(a.graph));
  const EdgeSet targets = parse_targets(g, a.target);
  const Feasibility feas = feasibility(g, targets);
  if (!feas.feasible) {
    json witness{{"violating_edge", {g.edge(*feas.violating_edge).u, g.edge(*feas.violating_edge).v}},
                 {"cycle", feas.witness_cycle},
                 {"cycle_edges", edges_json(g, feas.witness_edges)}};
    return emit(ctx, {{"feasible", false}, {"targets", edges_json(g, feas.spec.targets)}, {"k", feas.spec.k}},
                {{"witness", witness}}, false);
  }
  const AttackSpec& spec = feas.spec;
  if (a.verify_only) return flow_attack_verify(ctx, a, g, spec);
  if (spec.targets.empty()) fail(ErrorCode::EmptyF, "no target edges given");

  json results{{"feasible", true}};
  json verification = json::object();
  bool ok = true;
  const auto required = required_support(g, spec);
  verification["required_support"] = support_json(required);

  if (a.mode == "robust") {
    const Rational eps1 = parse_rational(a.eps1), eps2 = parse_rational(a.eps2);
    const RobustAttack r = build_robust_stealth(g, spec, eps1, eps2);
    results["spec"] = spec_json(g, spec, nullptr);
    results["s"] = io::to_json(r.s);
    results["lambda"] = io::to_json(r.lambda);
    results["lambda_threshold"] = io::to_json(r.lambda_threshold);
    results["lambda_raised"] = r.raised;
    results["worst_case_boundary"] = shown(ctx, r.worst_case);
    results["eps"] = {io::to_json(eps1), io::to_json(eps2)};
    const auto audit = audit_robust(g, spec, r.s, eps1, eps2, a.samples, ctx.seed);
    verification["audit"] = {{"samples", audit.samples},
                             {"boundary_failures", audit.boundary_failures},
                             {"support_failures", audit.support_failures},
                             {"min_boundary", shown(ctx, audit.min_boundary)}};
    verification["worst_case_at_least_eps1_half"] = r.worst_case >= eps1 / 2;
    ok = audit.boundary_failures == 0 && audit.support_failures == 0 && r.worst_case >= eps1 / 2;
  } else if (a.mode == "basic" || a.mode == "colored") {
    const GainMatrix h = assemble_gain_matrix(g);
    std::optional<Coloring> coloring;
    std::vector<int> exps = identity_exponents(spec);
    if (a.mode == "colored") {
      coloring = color_assignment(component_graph(spec));
      exps = color_exponents(spec, *coloring);
      results["colors"] = coloring->colors;
    }
    results["spec"] = spec_json(g, spec, coloring ? &*coloring : nullptr);
    results["exponents"] = exps;
    StealthAttack attack;
    if (!a.schedule_gap.empty()) {
      const ScheduleResult sched = variation_limit_schedule(g, spec, h, exps, parse_rational(a.schedule_gap));
      attack = sched.attack;
      results["schedule"] = {{"gap", a.schedule_gap}, {"steps", sched.history.size()}, {"limit", shown(ctx, sched.limit)},
                             {"levels", sched.levels}};
    } else {
      attack = build_stealth_with_exponents(g, spec, h, exps, parse_rational(a.lambda));
    }
    const Rational ratio = variation_ratio(g, attack.s, spec.targets);
    const int levels = distinct_levels(exps);
    results["lambda"] = io::to_json(attack.lambda);
    json rejected = json::array();
    for (const auto& r : attack.rejected) rejected.push_back(io::to_json(r));
    results["rejected_lambdas"] = rejected;
    results["s"] = io::to_json(attack.s);
    results["a"] = io::to_json(attack.a);
    results["ratio"] = shown(ctx, ratio);
    results["ratio_bound_at_lambda"] = shown(ctx, power_ratio_bound(std::max(levels, 2), attack.lambda));
    results["ratio_limit"] = shown(ctx, limit_ratio(spec, exps));
    // Recompute the attack vector independently of the builder.
    const RationalVector check = flows(h, attack.s);
    verification["support"] = support_json(support_of(check));
    verification["support_matches"] = support_of(check) == required;
    verification["ratio_within_bound"] = ratio <= power_ratio_bound(std::max(levels, 2), attack.lambda);
    ok = support_of(check) == required && ratio <= power_ratio_bound(std::max(levels, 2), attack.lambda);
  } else {
    fail(ErrorCode::ParseError, "unknown mode '" + a.mode + "'");
  }
  results["mode"] = a.mode;
  const int code = emit(ctx, results, verification, ok);
  if (!a.out.empty()) {
    json artifact{{"command", ctx.command}, {"results", results}};
    io::write_json_file(a.out, artifact);
  }
  return code;
}

struct RecoverArgs {
  std::string graph, flows, ref, attack;
};

RationalVector read_vector(const json& j, const char* key) {
  if (j.is_array()) return io::vector_from_json(j);
  if (j.contains(key)) return io::vector_from_json(j.at(key));
  if (j.contains("results") && j.at("results").contains(key)) return io::vector_from_json(j.at("results").at(key));
  fail(ErrorCode::ParseError, std::string("no '") + key + "' vector found");
}

int flow_recover(Context& ctx, const RecoverArgs& a) {
  add_input(ctx, "graph", a.graph);
  add_input(ctx, "flows", a.flows);
  const Graph g = io::graph_from_json(io::read_json_file(a.graph));
  const GainMatrix h = assemble_gain_matrix(g);
  const FlowVector z = read_vector(io::read_json_file(a.flows), "z");
  const Rational ref = parse_rational(a.ref);
  if (z.size() != h.t) fail(ErrorCode::ParseError, "flow vector has " + std::to_string(z.size()) + " entries, expected " + std::to_string(h.t));
  const StateVector x = recover_states(h, z, g, ref);
  json results{{"states", shown(ctx, x)}, {"edge_differences", shown(ctx, edge_differences(h, z))}};
  json verification{{"consistent", true}};
  bool ok = true;
  if (!a.attack.empty()) {
    add_input(ctx, "attack", a.attack);
    const RationalVector av = read_vector(io::read_json_file(a.attack), "a");
    if (av.size() != h.t) fail(ErrorCode::ParseError, "attack vector length differs from flow vector length");
    FlowVector corrupted = z;
    for (std::size_t i = 0; i < z.size(); ++i) corrupted[i] += av[i];
    const StateVector y = recover_states(h, corrupted, g, ref);
    json deltas = json::array();
    EdgeSet changed;
    for (EdgePos p = 0; p < g.edge_count(); ++p) {
      const int u = g.edge(p).u - 1, v = g.edge(p).v - 1;
      const Rational delta = (y[u] - y[v]) - (x[u] - x[v]);
      deltas.push_back({{"u", u + 1}, {"v", v + 1}, {"delta", shown(ctx, delta)}});
      if (delta != 0) changed.push_back(p);
    }
    results["corrupted_states"] = shown(ctx, y);
    results["edge_deltas"] = deltas;
    results["changed_edges"] = edges_json(g, changed);
    // Deltas must be exactly the attack's own edge-row differences.
    bool matches = true;
    for (EdgePos p = 0; p < g.edge_count(); ++p) {
      const int u = g.edge(p).u - 1, v = g.edge(p).v - 1;
      matches = matches && (y[u] - y[v]) - (x[u] - x[v]) == av[h.n + p] / h.gain(p);
    }
    verification["deltas_match_attack"] = matches;
    ok = matches;
  }
  return emit(ctx, results, verification, ok);
}

struct ThetaArgs {
  std::string graph, target;
  int grid = 40;
};

int flow_theta(Context& ctx, const ThetaArgs& a) {
  add_input(ctx, "graph", a.graph);
  const Graph g = io::graph_from_json(io::read_json_file(a.graph));
  const Feasibility feas = feasibility(g, parse_targets(g, a.target));
  if (!feas.feasible) return emit(ctx, {{"feasible", false}}, json::object(), false);
  const ThetaEstimate est = theta_oracle(g, feas.spec, assemble_gain_matrix(g), a.grid);
  const Coloring c = color_assignment(component_graph(feas.spec));
  const Rational bound = Rational(std::min(static_cast<long long>(feas.spec.k), static_cast<long long>(c.count)) - 1);
  return emit(ctx,
              {{"feasible", true}, {"k", feas.spec.k}, {"grid", a.grid}, {"theta_estimate", shown(ctx, est.best)},
               {"component_values", est.values}, {"bound", io::to_json(bound)}},
              {{"at_least_one", est.best >= 1}}, est.best >= 1);
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError:
    case ErrorCode::VertexMismatch:
    case ErrorCode::DimensionMismatch: return 2;
    default: return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minorkit: strong box representations and stealthy flow attacks"};
  app.require_subcommand(1);
  Context ctx;
  if (const char* env = std::getenv("MINORKIT_SEED")) ctx.seed = std::strtoull(env, nullptr, 10);
  double tolerance = 0;
  app.add_option("--float-tolerance", tolerance, "add rounded decimal approximations to reports (display only)");
  app.add_option("--report", ctx.report_path, "write the report here instead of stdout");
  app.add_option("--seed", ctx.seed, "sampling seed (MINORKIT_SEED overrides the default)");

  app.fallthrough();
  auto* box = app.add_subcommand("box", "strong box representations");
  box->require_subcommand(1);
  box->fallthrough();
  auto* flow = app.add_subcommand("flow", "flow networks and stealth attacks");
  flow->require_subcommand(1);
  flow->fallthrough();

  BoxVerifyArgs verify_args;
  auto* verify_cmd = box->add_subcommand("verify", "check (c1) and (c2)");
  verify_cmd->add_option("--rep", verify_args.rep, "representation JSON")->required();
  verify_cmd->add_option("--graph", verify_args.graph, "graph JSON")->required();
  verify_cmd->add_flag("--full-sweep", verify_args.full_sweep, "ignore stored witnesses");

  BoxBuildArgs build_args;
  auto* build_cmd = box->add_subcommand("build", "construct a representation");
  build_cmd->add_option("--graph", build_args.graph, "graph JSON");
  build_cmd->add_option("--strategy", build_args.strategy, "tree | threshold | edits")->check(CLI::IsMember({"tree", "threshold", "edits"}));
  build_cmd->add_option("--edits", build_args.edits, "edit list JSON (default: spanning-tree reduction)");
  build_cmd->add_option("--base", build_args.base, "base representation JSON for the edited graph");
  build_cmd->add_option("--clique", build_args.clique, "threshold: clique size");
  build_cmd->add_option("--sizes", build_args.sizes, "threshold: neighbourhood sizes, e.g. 3,2");
  build_cmd->add_option("--out", build_args.out, "write the representation here");
  build_cmd->add_option("--trace", build_args.trace, "write the construction trace here");
  build_cmd->add_flag("--verify-only", build_args.verify_only, "verify --rep against --graph instead of building");
  build_cmd->add_option("--rep", build_args.rep, "representation to verify with --verify-only");

  BoxOracleArgs oracle_args;
  auto* oracle_cmd = box->add_subcommand("oracle", "exhaustive strong boxicity for tiny graphs");
  oracle_cmd->add_option("--graph", oracle_args.graph, "graph JSON")->required();
  oracle_cmd->add_option("--max-dim", oracle_args.max_dim, "largest dimension tried (1 or 2)");

  std::string matrix_graph;
  auto* matrix_cmd = flow->add_subcommand("matrix", "assemble the gain matrix");
  matrix_cmd->add_option("--graph", matrix_graph, "graph JSON with gains")->required();

  AttackArgs attack_args;
  auto* attack_cmd = flow->add_subcommand("attack", "stealth attack on a target edge set");
  attack_cmd->add_option("--graph", attack_args.graph, "graph JSON")->required();
  attack_cmd->add_option("--target", attack_args.target, "edges u-v separated by commas")->required();
  attack_cmd->add_option("--mode", attack_args.mode, "basic | colored | robust")->check(CLI::IsMember({"basic", "colored", "robust"}));
  attack_cmd->add_option("--lambda", attack_args.lambda, "lambda hint p/q in (0, 1]");
  attack_cmd->add_option("--eps1", attack_args.eps1, "robust: lower gain bound");
  attack_cmd->add_option("--eps2", attack_args.eps2, "robust: upper gain bound");
  attack_cmd->add_option("--schedule-gap", attack_args.schedule_gap, "walk lambda towards 1 until the ratio is this close to its limit");
  attack_cmd->add_option("--samples", attack_args.samples, "robust: sampled gain matrices");
  attack_cmd->add_option("--out", attack_args.out, "write the attack artifact here");
  attack_cmd->add_flag("--verify-only", attack_args.verify_only, "re-check a saved attack (--attack)");
  attack_cmd->add_option("--attack", attack_args.attack, "saved attack artifact for --verify-only");

  RecoverArgs recover_args;
  auto* recover_cmd = flow->add_subcommand("recover", "recover states from flows");
  recover_cmd->add_option("--graph", recover_args.graph, "graph JSON with gains")->required();
  recover_cmd->add_option("--flows", recover_args.flows, "flow vector JSON")->required();
  recover_cmd->add_option("--ref", recover_args.ref, "reference state of vertex 1")->required();
  recover_cmd->add_option("--attack", recover_args.attack, "attack artifact; replays the corrupted recovery");

  ThetaArgs theta_args;
  auto* theta_cmd = flow->add_subcommand("theta", "grid estimate of the edge variation factor");
  theta_cmd->add_option("--graph", theta_args.graph, "graph JSON with gains")->required();
  theta_cmd->add_option("--target", theta_args.target, "edges u-v separated by commas")->required();
  theta_cmd->add_option("--grid", theta_args.grid, "largest component value tried");

  for (auto* leaf : {verify_cmd, build_cmd, oracle_cmd, matrix_cmd, attack_cmd, recover_cmd, theta_cmd}) leaf->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (tolerance > 0) ctx.float_tolerance = tolerance;

  try {
    if (verify_cmd->parsed()) { ctx.command = "box verify"; return box_verify(ctx, verify_args); }
    if (build_cmd->parsed()) { ctx.command = "box build"; return box_build(ctx, build_args); }
    if (oracle_cmd->parsed()) { ctx.command = "box oracle"; return box_oracle(ctx, oracle_args); }
    if (matrix_cmd->parsed()) { ctx.command = "flow matrix"; return flow_matrix(ctx, matrix_graph); }
    if (attack_cmd->parsed()) { ctx.command = "flow attack"; return flow_attack(ctx, attack_args); }
    if (recover_cmd->parsed()) { ctx.command = "flow recover"; return flow_recover(ctx, recover_args); }
    if (theta_cmd->parsed()) { ctx.command = "flow theta"; return flow_theta(ctx, theta_args); }
  } catch (const Error& e) {
    const int code = exit_code_for(e);
    json report{{"command", ctx.command}, {"inputs", ctx.inputs}, {"ok", false}, {"error", {{"code", to_string(e.code())}, {"message", e.what()}}}};
    std::cout << report.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
