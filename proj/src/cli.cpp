#include "graphoid/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <memory>
#include <sstream>

#include "graphoid/errors.hpp"
#include "graphoid/experiments.hpp"
#include "graphoid/generators.hpp"
#include "graphoid/instantiated.hpp"
#include "graphoid/json_io.hpp"
#include "graphoid/network.hpp"
#include "graphoid/oracle.hpp"
#include "graphoid/simnet.hpp"
#include "graphoid/unrelatedness.hpp"

namespace graphoid {

using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kUsage = 2;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int parse_int(const std::string& text) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw InputError("not an integer: " + text);
    return v;
  } catch (const std::logic_error&) {
    throw InputError("not an integer: " + text);
  }
}

double parse_double(const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw InputError("not a number: " + text);
    return v;
  } catch (const std::logic_error&) {
    throw InputError("not a number: " + text);
  }
}

VarSet parse_set(const Universe& u, const std::string& text) {
  return u.set_of(split_list(text));
}

std::vector<VariableId> parse_order(const Universe& u,
                                    const std::string& text) {
  std::vector<VariableId> out;
  for (const auto& name : split_list(text)) out.push_back(u.id(name));
  return out;
}

// "c=0,d=1" against a tabular distribution's domains.
Assignment parse_assignment(const TabularDistribution& p,
                            const std::string& text) {
  Assignment a;
  for (const auto& item : split_list(text)) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw InputError("expected name=value, got: " + item);
    const VariableId v = p.universe().id(item.substr(0, eq));
    a.set(v, p.value_index(v, item.substr(eq + 1)));
  }
  return a;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

struct LoadedOracle {
  std::unique_ptr<IndependenceOracle> oracle;
  std::shared_ptr<const TabularDistribution> tabular;  // set when applicable
  std::shared_ptr<const GaussianModel> gaussian;
};

// --model inputs are closed before analysis so the oracle is a graphoid.
LoadedOracle load_oracle(const std::string& model_path,
                         const std::string& dist_path, int close_cap) {
  if (model_path.empty() == dist_path.empty())
    throw InputError("exactly one of --model / --dist is required");
  LoadedOracle out;
  if (!model_path.empty()) {
    DependencyModel m = model_from_json(load_json_file(model_path));
    out.oracle =
        std::make_unique<ModelOracle>(m.closed_flag() ? m : close(m, close_cap));
    return out;
  }
  const LoadedDistribution d =
      distribution_from_json(load_json_file(dist_path));
  if (d.tabular) {
    out.tabular = d.tabular;
    out.oracle = std::make_unique<TabularOracle>(d.tabular);
  } else {
    out.gaussian = d.gaussian;
    out.oracle = std::make_unique<GaussianOracle>(d.gaussian);
  }
  return out;
}

struct CommonFlags {
  std::string model_path, dist_path, net_path, simgraph_path, out_path;
  std::string x, y, z, at, a, b, order, grid;
  bool dot = false;
  bool json_out = true;
  bool audit_parents = false;
  bool allow_zeros = false;
  int cap = -1;
};

int cmd_model_close(const CommonFlags& f, std::ostream& out, std::ostream& err) {
  const int cap = f.cap > 0 ? f.cap : kDefaultCloseCap;
  const DependencyModel m = model_from_json(load_json_file(f.model_path));
  const DependencyModel closed = close(m, cap);
  const json j = model_to_json(closed);
  if (!f.out_path.empty()) save_json_file(f.out_path, j);
  emit(out, j);
  err << "closure: " << m.statement_count() << " -> "
      << closed.statement_count() << " statements\n";
  return kOk;
}

int cmd_model_check(const CommonFlags& f, std::ostream& out, std::ostream& err) {
  const DependencyModel m = model_from_json(load_json_file(f.model_path));
  const ClosednessReport r = is_closed(m);
  json j{{"closed", r.closed}};
  if (!r.closed) j["violation"] = violation_to_json(m.universe(), *r.violation);
  emit(out, j);
  err << (r.closed ? "model is closed\n" : "model is not closed\n");
  return r.closed ? kOk : kViolated;
}

int cmd_dist_gen(const CommonFlags& f, const std::string& kind_name, int n,
                 std::uint64_t seed, int weight_max, const std::string& blocks,
                 const std::string& name, double tolerance, std::ostream& out,
                 std::ostream& err) {
  GeneratorParams params;
  params.weight_max = weight_max;
  params.name = name;
  params.tolerance = tolerance;
  for (const auto& b : split_list(blocks)) params.blocks.push_back(parse_int(b));

  const GeneratedModel g = generate(parse_generator_kind(kind_name), n, seed,
                                    params);
  const json j = std::holds_alternative<TabularDistribution>(g)
                     ? tabular_to_json(std::get<TabularDistribution>(g))
                     : gaussian_to_json(std::get<GaussianModel>(g));
  if (!f.out_path.empty()) save_json_file(f.out_path, j);
  emit(out, j);
  err << "generated " << kind_name << " (n=" << n << ", seed=" << seed
      << ", scheme=" << kRngScheme << ")\n";
  return kOk;
}

int cmd_dist_indep(const CommonFlags& f, std::ostream& out, std::ostream& err) {
  const LoadedOracle lo = load_oracle(f.model_path, f.dist_path,
                                      f.cap > 0 ? f.cap : kDefaultCloseCap);
  const Universe& u = lo.oracle->universe();
  const VarSet X = parse_set(u, f.x), Y = parse_set(u, f.y),
               Z = parse_set(u, f.z);
  bool independent;
  json j{{"X", json(u.names_of(X))},
         {"Y", json(u.names_of(Y))},
         {"Z", json(u.names_of(Z))}};
  if (!f.at.empty()) {
    if (!lo.tabular)
      throw InputError("--at requires a tabular distribution");
    const Assignment z = parse_assignment(*lo.tabular, f.at);
    if (z.vars() != Z)
      throw InputError("--at must assign exactly the variables of --z");
    independent = tabular_independent_at(*lo.tabular, X, Y, Z, z);
    j["at"] = f.at;
  } else {
    independent = lo.oracle->contains(X, Y, Z);
  }
  j["independent"] = independent;
  emit(out, j);
  err << (independent ? "independent\n" : "dependent\n");
  return independent ? kOk : kViolated;
}

int cmd_bn_build(const CommonFlags& f, std::ostream& out, std::ostream& err) {
  const LoadedOracle lo = load_oracle(f.model_path, f.dist_path,
                                      f.cap > 0 ? f.cap : kDefaultCloseCap);
  const Universe& u = lo.oracle->universe();
  if (f.order.empty()) throw InputError("--order is required");
  const BeliefNetwork net = build(*lo.oracle, parse_order(u, f.order));
  if (f.dot) {
    out << export_dot(net);
  } else {
    json j = network_to_json(net);
    if (f.audit_parents) {
      json audit = json::object();
      VarSet predecessors;
      for (VariableId v : net.ordering) {
        json alts = json::array();
        for (const VarSet& s : minimal_parents_all(*lo.oracle, v, predecessors))
          alts.push_back(json(u.names_of(s)));
        audit[u.name(v)] = alts;
        predecessors.insert(v);
      }
      j["parent_alternatives"] = audit;
    }
    if (!f.out_path.empty()) save_json_file(f.out_path, j);
    emit(out, j);
  }
  err << "built network with " << net.edge_count() << " edges\n";
  return kOk;
}

int cmd_bn_dsep(const CommonFlags& f, std::ostream& out, std::ostream& err) {
  const BeliefNetwork net = network_from_json(load_json_file(f.net_path));
  const Universe& u = net.universe;
  const VarSet X = parse_set(u, f.x), Y = parse_set(u, f.y),
               Z = parse_set(u, f.z);
  const bool dsep = d_separated(net, X, Y, Z);
  emit(out, json{{"X", json(u.names_of(X))},
                 {"Y", json(u.names_of(Y))},
                 {"Z", json(u.names_of(Z))},
                 {"d_separated", dsep}});
  err << (dsep ? "d-separated\n" : "d-connected\n");
  return dsep ? kOk : kViolated;
}

int cmd_bn_components(const CommonFlags& f, std::ostream& out,
                      std::ostream& err) {
  const BeliefNetwork net = network_from_json(load_json_file(f.net_path));
  json comps = json::array();
  for (const VarSet& c : connected_components(net))
    comps.push_back(json(net.universe.names_of(c)));
  emit(out, json{{"components", comps}});
  err << comps.size() << " component(s)\n";
  return kOk;
}

int cmd_bn_dot(const CommonFlags& f, std::ostream& out, std::ostream&) {
  const BeliefNetwork net = network_from_json(load_json_file(f.net_path));
  out << export_dot(net);
  return kOk;
}

int cmd_analyze_pair(const CommonFlags& f, std::ostream& out,
                     std::ostream& err) {
  const LoadedOracle lo = load_oracle(f.model_path, f.dist_path,
                                      f.cap > 0 ? f.cap : kDefaultCloseCap);
  const Universe& u = lo.oracle->universe();
  const PairVerdict v = analyze_pair(*lo.oracle, u.id(f.a), u.id(f.b),
                                     f.cap > 0 ? f.cap : kDefaultUncoupledCap);
  emit(out, pair_verdict_to_json(u, v));
  err << "pair (" << f.a << ", " << f.b << "): "
      << (v.totally_independent ? "totally independent" : "interacting")
      << ", " << (v.totally_uncoupled ? "uncoupled" : "coupled") << ", "
      << (v.totally_disconnected ? "disconnected" : "connected") << "\n";
  return kOk;
}

int cmd_analyze_separability(const CommonFlags& f, std::ostream& out,
                             std::ostream& err) {
  const LoadedOracle lo = load_oracle(f.model_path, f.dist_path,
                                      f.cap > 0 ? f.cap : kDefaultCloseCap);
  const Universe& u = lo.oracle->universe();
  const SeparabilityReport r =
      is_separable(*lo.oracle, f.cap > 0 ? f.cap : kDefaultUncoupledCap);
  json j{{"separable", r.separable}};
  if (r.counterexample)
    j["counterexample"] = json{{"a", u.name(r.counterexample->first)},
                               {"b", u.name(r.counterexample->second)}};
  emit(out, j);
  err << (r.separable ? "separable\n" : "not separable\n");
  return r.separable ? kOk : kViolated;
}

int cmd_analyze_transitivity(const CommonFlags& f, std::ostream& out,
                             std::ostream& err) {
  const LoadedOracle lo = load_oracle(f.model_path, f.dist_path,
                                      f.cap > 0 ? f.cap : kDefaultCloseCap);
  const Universe& u = lo.oracle->universe();
  const TransitivityReport r = is_transitive(*lo.oracle);
  json j{{"transitive", r.transitive}};
  if (r.counterexample) {
    json triple = json::array();
    for (VariableId v : *r.counterexample) triple.push_back(u.name(v));
    j["counterexample"] = triple;
  }
  emit(out, j);
  err << (r.transitive ? "transitive\n" : "not transitive\n");
  return r.transitive ? kOk : kViolated;
}

json proptrans_report_json(const Universe& u, const PropTransReport& r) {
  json j{{"pass", r.pass},
         {"checked_instances", r.checked_instances},
         {"antecedent_hits", r.antecedent_hits},
         {"skipped_zero_evidence", r.skipped_zero_evidence}};
  if (r.violation) {
    const PropTransViolation& v = *r.violation;
    json cells = json::object();
    for (int i = 0; i < 4; ++i) {
      cells["A" + std::to_string(i + 1)] = json(u.names_of(v.cells_a[i]));
      cells["B" + std::to_string(i + 1)] = json(u.names_of(v.cells_b[i]));
    }
    j["violation"] = json{{"cells", cells},
                          {"e", u.name(v.e)},
                          {"e_prime", v.e_prime},
                          {"e_dprime", v.e_dprime},
                          {"first_disjunct", v.first_disjunct},
                          {"second_disjunct", v.second_disjunct}};
  }
  return j;
}

int cmd_axiom_proptrans(const CommonFlags& f, std::ostream& out,
                        std::ostream& err) {
  const LoadedDistribution d =
      distribution_from_json(load_json_file(f.dist_path));
  std::unique_ptr<InstantiatedModel> m;
  if (d.tabular) {
    if (!d.tabular->strictly_positive() && !f.allow_zeros)
      throw InputError(
          "distribution has zero cells; pass --allow-zeros to run the "
          "exploratory scan anyway");
    m = std::make_unique<InstantiatedModel>(d.tabular);
  } else {
    m = std::make_unique<InstantiatedModel>(d.gaussian);
  }
  const Universe& u = m->universe();
  const int cap = f.cap > 0 ? f.cap : kDefaultPropTransCap;

  std::vector<std::pair<VariableId, VariableId>> pairs;
  if (!f.a.empty() || !f.b.empty()) {
    if (f.a.empty() || f.b.empty())
      throw InputError("--a and --b must be given together");
    pairs.emplace_back(u.id(f.a), u.id(f.b));
  } else {
    for (int a = 0; a < u.size(); ++a)
      for (int b = a + 1; b < u.size(); ++b) pairs.emplace_back(a, b);
  }

  bool pass = true;
  json per_pair = json::array();
  long long hits = 0, checked = 0, skipped = 0;
  for (const auto& [a, b] : pairs) {
    const PropTransReport r = check_propositional_transitivity(*m, a, b, cap);
    json entry = proptrans_report_json(u, r);
    entry["a"] = u.name(a);
    entry["b"] = u.name(b);
    per_pair.push_back(entry);
    hits += r.antecedent_hits;
    checked += r.checked_instances;
    skipped += r.skipped_zero_evidence;
    if (!r.pass) pass = false;
  }
  emit(out, json{{"pass", pass},
                 {"pairs", per_pair},
                 {"checked_instances", checked},
                 {"antecedent_hits", hits},
                 {"skipped_zero_evidence", skipped}});
  err << (pass ? "axiom holds" : "axiom violated") << " ("
      << checked << " instances, " << hits << " antecedent hits, " << skipped
      << " skipped)\n";
  return pass ? kOk : kViolated;
}

int cmd_axiom_unification(const CommonFlags& f, double tolerance,
                          std::ostream& out, std::ostream& err) {
  const LoadedDistribution d =
      distribution_from_json(load_json_file(f.dist_path));
  if (!d.gaussian)
    throw InputError("unification check requires a gaussian distribution");
  const Universe& u = d.gaussian->universe();

  std::vector<VarSet> zsets;
  if (!f.z.empty()) zsets.push_back(parse_set(u, f.z));
  std::vector<double> grid{-1.0, 0.0, 5.0};
  if (!f.grid.empty()) {
    grid.clear();
    for (const auto& g : split_list(f.grid)) grid.push_back(parse_double(g));
  }
  const UnificationReport r =
      check_unification(*d.gaussian, zsets, grid, tolerance);
  json j{{"pass", r.pass}, {"max_deviation", r.max_deviation}};
  if (!r.pass) j["worst_z"] = json(u.names_of(r.worst_z));
  emit(out, j);
  err << (r.pass ? "conditional covariance is value-invariant\n"
                 : "conditional covariance varies with the value\n");
  return r.pass ? kOk : kViolated;
}

struct SimnetSetup {
  std::shared_ptr<const TabularDistribution> p;
  SimilarityGraph graph;
  VariableId h = 0;
  std::vector<VariableId> ordering;
  std::vector<LocalNetwork> locals;
};

SimnetSetup simnet_setup(const CommonFlags& f) {
  SimnetSetup s;
  const LoadedDistribution d =
      distribution_from_json(load_json_file(f.dist_path));
  if (!d.tabular)
    throw InputError("similarity networks require a tabular distribution");
  s.p = d.tabular;
  s.graph = simgraph_from_json(load_json_file(f.simgraph_path));
  s.h = s.p->universe().id(s.graph.hypothesis);
  if (s.graph.values != s.p->variables()[s.h].domain)
    throw InputError(
        "similarity-graph values do not match the hypothesis domain");

  if (!f.order.empty()) {
    s.ordering = parse_order(s.p->universe(), f.order);
    if (s.ordering.empty() || s.ordering.front() != s.h)
      throw InputError("--order must place the hypothesis first");
  } else {
    s.ordering.push_back(s.h);
    for (int v = 0; v < s.p->var_count(); ++v)
      if (v != s.h) s.ordering.push_back(v);
  }
  for (const auto& edge : s.graph.edges)
    s.locals.push_back(build_local(*s.p, s.h, edge, s.ordering));
  return s;
}

int cmd_simnet_compose(const CommonFlags& f, std::ostream& out,
                       std::ostream& err) {
  const SimnetSetup s = simnet_setup(f);
  const GlobalNetwork g = compose_global(s.locals);
  if (f.dot) {
    out << export_dot(g);
  } else {
    json locals = json::array();
    for (const LocalNetwork& ln : s.locals)
      locals.push_back(
          json{{"edge", json::array({s.graph.values[ln.edge.first],
                                     s.graph.values[ln.edge.second]})},
               {"network", network_to_json(ln.net)},
               {"relevant_symptoms",
                json(g.universe.names_of(relevant_symptoms(ln)))}});
    emit(out, json{{"global", global_network_to_json(g)}, {"locals", locals}});
  }
  err << "composed " << s.locals.size() << " local network(s); global has "
      << g.nodes.size() << " node(s)\n";
  return kOk;
}

int cmd_simnet_validate(const CommonFlags& f, std::ostream& out,
                        std::ostream& err) {
  const SimnetSetup s = simnet_setup(f);
  const Universe& u = s.p->universe();
  const bool positive = s.p->strictly_positive();
  if (!positive)
    err << "warning: distribution is not strictly positive; the "
           "connectivity/discrimination equivalence is not guaranteed\n";

  bool equivalence = true, routes_agree = true;
  json checks = json::array();
  for (const LocalNetwork& ln : s.locals) {
    const VarSet relevant = relevant_symptoms(ln);
    for (int v = 0; v < s.p->var_count(); ++v) {
      if (v == s.h) continue;
      const DiscriminationResult r =
          discriminates(*s.p, v, s.h, ln.edge.first, ln.edge.second);
      const bool connected = relevant.contains(v);
      checks.push_back(
          json{{"edge", json::array({s.graph.values[ln.edge.first],
                                     s.graph.values[ln.edge.second]})},
               {"symptom", u.name(v)},
               {"discriminates", r.by_probability},
               {"discriminates_by_independence", r.by_independence},
               {"connected_to_hypothesis", connected}});
      if (!r.agree()) routes_agree = false;
      if (r.by_probability != connected) equivalence = false;
    }
  }

  const GlobalNetwork g = compose_global(s.locals);  // throws if cyclic
  const bool pass = routes_agree && (!positive || equivalence);
  emit(out, json{{"pass", pass},
                 {"strictly_positive", positive},
                 {"equivalence_holds", equivalence},
                 {"dual_routes_agree", routes_agree},
                 {"global", global_network_to_json(g)},
                 {"checks", checks}});
  err << (pass ? "validation passed\n" : "validation failed\n");
  return pass ? kOk : kViolated;
}

int cmd_experiment_run(const ExperimentConfig& cfg, std::ostream& out,
                       std::ostream& err) {
  const ExperimentReport report = run_experiment(cfg);
  emit(out, report.to_json());
  int failed = 0;
  for (const TrialResult& t : report.trials)
    if (!t.pass) ++failed;
  err << "suite " << cfg.suite << ": " << report.trials.size() - failed << "/"
      << report.trials.size() << " trials passed, "
      << report.checked_instances << " instances checked, "
      << report.antecedent_hits << " antecedent hits, "
      << report.wall_seconds << " s\n";
  return report.aggregate_pass ? kOk : kViolated;
}

}  // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"graphoid: dependency models, belief networks, and "
               "unrelatedness analysis"};
  app.require_subcommand(1);

  CommonFlags f;
  // dist gen parameters
  std::string gen_kind = "spb-random", gen_name, gen_blocks;
  int gen_n = 4, gen_w = 16;
  std::uint64_t gen_seed = 1;
  double tolerance = kDefaultGaussianTolerance;

  ExperimentConfig ecfg;
  bool ecfg_json_flag = true;

  auto* model = app.add_subcommand("model", "dependency-model operations");
  model->require_subcommand(1);
  auto* model_close = model->add_subcommand("close", "graphoid closure");
  model_close->add_option("--model", f.model_path)->required();
  model_close->add_option("--cap", f.cap);
  model_close->add_option("--out", f.out_path);
  model_close->add_flag("--json", f.json_out);
  auto* model_check = model->add_subcommand("check", "closedness check");
  model_check->add_option("--model", f.model_path)->required();
  model_check->add_flag("--json", f.json_out);

  auto* dist = app.add_subcommand("dist", "distribution operations");
  dist->require_subcommand(1);
  auto* dist_gen = dist->add_subcommand("gen", "seeded generators");
  dist_gen->add_option("--kind", gen_kind);
  dist_gen->add_option("--n", gen_n);
  dist_gen->add_option("--seed", gen_seed);
  dist_gen->add_option("--w", gen_w);
  dist_gen->add_option("--blocks", gen_blocks);
  dist_gen->add_option("--name", gen_name);
  dist_gen->add_option("--tolerance", tolerance);
  dist_gen->add_option("--out", f.out_path);
  dist_gen->add_flag("--json", f.json_out);
  auto* dist_indep = dist->add_subcommand("indep", "independence query");
  dist_indep->add_option("--dist", f.dist_path);
  dist_indep->add_option("--model", f.model_path);
  dist_indep->add_option("--x", f.x)->required();
  dist_indep->add_option("--y", f.y)->required();
  dist_indep->add_option("--z", f.z);
  dist_indep->add_option("--at", f.at);
  dist_indep->add_option("--cap", f.cap);
  dist_indep->add_flag("--json", f.json_out);

  auto* bn = app.add_subcommand("bn", "belief-network operations");
  bn->require_subcommand(1);
  auto* bn_build = bn->add_subcommand("build", "build from an ordering");
  bn_build->add_option("--dist", f.dist_path);
  bn_build->add_option("--model", f.model_path);
  bn_build->add_option("--order", f.order);
  bn_build->add_flag("--dot", f.dot);
  bn_build->add_flag("--audit-parents", f.audit_parents);
  bn_build->add_option("--cap", f.cap);
  bn_build->add_option("--out", f.out_path);
  bn_build->add_flag("--json", f.json_out);
  auto* bn_dsep = bn->add_subcommand("dsep", "d-separation query");
  bn_dsep->add_option("--net", f.net_path)->required();
  bn_dsep->add_option("--x", f.x)->required();
  bn_dsep->add_option("--y", f.y)->required();
  bn_dsep->add_option("--z", f.z);
  bn_dsep->add_flag("--json", f.json_out);
  auto* bn_components = bn->add_subcommand("components", "connected components");
  bn_components->add_option("--net", f.net_path)->required();
  bn_components->add_flag("--json", f.json_out);
  auto* bn_dot = bn->add_subcommand("dot", "DOT export");
  bn_dot->add_option("--net", f.net_path)->required();

  auto* analyze = app.add_subcommand("analyze", "unrelatedness analysis");
  analyze->require_subcommand(1);
  auto* analyze_pair_cmd = analyze->add_subcommand("pair", "pair verdicts");
  analyze_pair_cmd->add_option("--dist", f.dist_path);
  analyze_pair_cmd->add_option("--model", f.model_path);
  analyze_pair_cmd->add_option("--a", f.a)->required();
  analyze_pair_cmd->add_option("--b", f.b)->required();
  analyze_pair_cmd->add_option("--cap", f.cap);
  analyze_pair_cmd->add_flag("--json", f.json_out);
  auto* analyze_sep = analyze->add_subcommand("separability", "model-level");
  analyze_sep->add_option("--dist", f.dist_path);
  analyze_sep->add_option("--model", f.model_path);
  analyze_sep->add_option("--cap", f.cap);
  analyze_sep->add_flag("--json", f.json_out);
  auto* analyze_trans = analyze->add_subcommand("transitivity", "model-level");
  analyze_trans->add_option("--dist", f.dist_path);
  analyze_trans->add_option("--model", f.model_path);
  analyze_trans->add_option("--cap", f.cap);
  analyze_trans->add_flag("--json", f.json_out);

  auto* axiom = app.add_subcommand("axiom", "value-level axiom checks");
  axiom->require_subcommand(1);
  auto* axiom_pt = axiom->add_subcommand("proptrans",
                                         "propositional transitivity");
  axiom_pt->add_option("--dist", f.dist_path)->required();
  axiom_pt->add_option("--a", f.a);
  axiom_pt->add_option("--b", f.b);
  axiom_pt->add_option("--cap", f.cap);
  axiom_pt->add_flag("--allow-zeros", f.allow_zeros);
  axiom_pt->add_flag("--json", f.json_out);
  auto* axiom_uni = axiom->add_subcommand("unification",
                                          "conditional-covariance invariance");
  axiom_uni->add_option("--dist", f.dist_path)->required();
  axiom_uni->add_option("--z", f.z);
  axiom_uni->add_option("--grid", f.grid);
  axiom_uni->add_option("--tolerance", tolerance);
  axiom_uni->add_flag("--json", f.json_out);

  auto* simnet = app.add_subcommand("simnet", "similarity networks");
  simnet->require_subcommand(1);
  auto* simnet_compose = simnet->add_subcommand("compose", "global network");
  simnet_compose->add_option("--dist", f.dist_path)->required();
  simnet_compose->add_option("--simgraph", f.simgraph_path)->required();
  simnet_compose->add_option("--order", f.order);
  simnet_compose->add_flag("--dot", f.dot);
  simnet_compose->add_flag("--json", f.json_out);
  auto* simnet_validate = simnet->add_subcommand(
      "validate", "connectivity vs discrimination");
  simnet_validate->add_option("--dist", f.dist_path)->required();
  simnet_validate->add_option("--simgraph", f.simgraph_path)->required();
  simnet_validate->add_option("--order", f.order);
  simnet_validate->add_flag("--json", f.json_out);

  auto* experiment = app.add_subcommand("experiment", "verification suites");
  experiment->require_subcommand(1);
  auto* experiment_run = experiment->add_subcommand("run", "run a suite");
  experiment_run
      ->add_option("--suite", ecfg.suite)
      ->required()
      ->check(CLI::IsMember(experiment_suites()));
  experiment_run->add_option("--n", ecfg.n);
  experiment_run->add_option("--trials", ecfg.trials);
  experiment_run->add_option("--seed", ecfg.seed);
  experiment_run->add_option("--tolerance", ecfg.tolerance);
  experiment_run->add_option("--cap", ecfg.proptrans_cap);
  experiment_run->add_option("--orderings", ecfg.ordering_samples);
  experiment_run->add_flag("--allow-zeros", ecfg.allow_zero_cells);
  experiment_run->add_flag("--json", ecfg_json_flag);

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (model_close->parsed()) return cmd_model_close(f, out, err);
    if (model_check->parsed()) return cmd_model_check(f, out, err);
    if (dist_gen->parsed())
      return cmd_dist_gen(f, gen_kind, gen_n, gen_seed, gen_w, gen_blocks,
                          gen_name, tolerance, out, err);
    if (dist_indep->parsed()) return cmd_dist_indep(f, out, err);
    if (bn_build->parsed()) return cmd_bn_build(f, out, err);
    if (bn_dsep->parsed()) return cmd_bn_dsep(f, out, err);
    if (bn_components->parsed()) return cmd_bn_components(f, out, err);
    if (bn_dot->parsed()) return cmd_bn_dot(f, out, err);
    if (analyze_pair_cmd->parsed()) return cmd_analyze_pair(f, out, err);
    if (analyze_sep->parsed()) return cmd_analyze_separability(f, out, err);
    if (analyze_trans->parsed()) return cmd_analyze_transitivity(f, out, err);
    if (axiom_pt->parsed()) return cmd_axiom_proptrans(f, out, err);
    if (axiom_uni->parsed()) return cmd_axiom_unification(f, tolerance, out, err);
    if (simnet_compose->parsed()) return cmd_simnet_compose(f, out, err);
    if (simnet_validate->parsed()) return cmd_simnet_validate(f, out, err);
    if (experiment_run->parsed()) {
      (void)ecfg_json_flag;  // JSON is the only stdout format
      return cmd_experiment_run(ecfg, out, err);
    }
    err << "error: no subcommand given\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace graphoid
