#include "graphoid/json_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>

#include "graphoid/errors.hpp"
#include "graphoid/rational.hpp"

namespace graphoid {

using nlohmann::json;

namespace {

json names_array(const Universe& u, VarSet s) {
  json arr = json::array();
  for (const auto& name : u.names_of(s)) arr.push_back(name);
  return arr;
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string())
      throw InputError(std::string(what) + " must contain strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

const json& require(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end())
    throw InputError(std::string("missing required key \"") + key + "\"");
  return *it;
}

}  // namespace

json model_to_json(const DependencyModel& m) {
  json statements = json::array();
  for (const Triplet& t : m.statements())
    statements.push_back(triplet_to_json(m.universe(), t));
  return json{{"variables", m.universe().names()}, {"statements", statements}};
}

DependencyModel model_from_json(const json& j) {
  if (!j.is_object()) throw InputError("model JSON must be an object");
  DependencyModel m{Universe(string_list(require(j, "variables"), "variables"))};
  for (const auto& s : require(j, "statements")) {
    const VarSet X = m.universe().set_of(string_list(require(s, "X"), "X"));
    const VarSet Y = m.universe().set_of(string_list(require(s, "Y"), "Y"));
    const VarSet Z = m.universe().set_of(string_list(require(s, "Z"), "Z"));
    m.add(X, Y, Z);
  }
  return m;
}

json triplet_to_json(const Universe& u, const Triplet& t) {
  return json{{"X", names_array(u, t.X)},
              {"Y", names_array(u, t.Y)},
              {"Z", names_array(u, t.Z)}};
}

json tabular_to_json(const TabularDistribution& p) {
  json vars = json::array();
  for (const auto& v : p.variables())
    vars.push_back(json{{"name", v.name}, {"domain", v.domain}});
  json cells = json::array();
  for (std::size_t idx = 0; idx < p.cell_count(); ++idx) {
    const std::vector<int> values = p.values_at(idx);
    json assign = json::object();
    for (int v = 0; v < p.var_count(); ++v)
      assign[p.variables()[v].name] = p.variables()[v].domain[values[v]];
    cells.push_back(
        json{{"assign", assign}, {"p", format_rational(p.cells()[idx])}});
  }
  return json{{"type", "tabular"}, {"variables", vars}, {"cells", cells}};
}

TabularDistribution tabular_from_json(const json& j) {
  if (require(j, "type") != "tabular")
    throw InputError("expected \"type\":\"tabular\"");
  std::vector<TabularVariable> vars;
  for (const auto& v : require(j, "variables"))
    vars.push_back(TabularVariable{
        require(v, "name").get<std::string>(),
        string_list(require(v, "domain"), "domain")});

  // Shape probe to reuse the index computation; replaced by the real cells.
  std::size_t count = 1;
  for (const auto& v : vars) {
    if (v.domain.empty())
      throw InputError("variable " + v.name + " has an empty domain");
    count *= v.domain.size();
  }
  std::vector<Rational> unit(count, Rational(0));
  if (count > 0) unit[0] = 1;
  const TabularDistribution shape(vars, std::move(unit));

  std::vector<Rational> cells(count, Rational(0));
  std::vector<bool> seen(count, false);
  const json& jcells = require(j, "cells");
  for (const auto& c : jcells) {
    const json& assign = require(c, "assign");
    std::vector<int> values(vars.size(), -1);
    for (const auto& [name, value] : assign.items()) {
      const VariableId v = shape.universe().id(name);
      values[v] = shape.value_index(v, value.get<std::string>());
    }
    for (std::size_t v = 0; v < vars.size(); ++v)
      if (values[v] < 0)
        throw InputError("cell assignment does not cover " + vars[v].name);
    const std::size_t idx = shape.index_of(values);
    if (seen[idx]) throw InputError("duplicate cell in tabular JSON");
    seen[idx] = true;
    cells[idx] = parse_rational(require(c, "p").get<std::string>());
  }
  if (jcells.size() != count)
    throw InputError("cells must cover the full product space exactly once");
  return TabularDistribution(std::move(vars), std::move(cells));
}

json gaussian_to_json(const GaussianModel& g) {
  const int n = g.var_count();
  json mean = json::array();
  for (int i = 0; i < n; ++i) mean.push_back(g.mean()(i));
  json cov = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int k = 0; k < n; ++k) row.push_back(g.covariance()(i, k));
    cov.push_back(row);
  }
  return json{{"type", "gaussian"},
              {"variables", g.universe().names()},
              {"mean", mean},
              {"covariance", cov},
              {"tolerance", g.tolerance()}};
}

GaussianModel gaussian_from_json(const json& j) {
  if (require(j, "type") != "gaussian")
    throw InputError("expected \"type\":\"gaussian\"");
  const Universe u(string_list(require(j, "variables"), "variables"));
  const int n = u.size();
  const json& jmean = require(j, "mean");
  const json& jcov = require(j, "covariance");
  if (static_cast<int>(jmean.size()) != n)
    throw InputError("mean length does not match the variables");
  if (static_cast<int>(jcov.size()) != n)
    throw InputError("covariance shape does not match the variables");
  Eigen::VectorXd mean(n);
  for (int i = 0; i < n; ++i) mean(i) = jmean[i].get<double>();
  Eigen::MatrixXd cov(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(jcov[i].size()) != n)
      throw InputError("covariance row has the wrong length");
    for (int k = 0; k < n; ++k) cov(i, k) = jcov[i][k].get<double>();
  }
  const double tol = j.value("tolerance", kDefaultGaussianTolerance);
  return GaussianModel(u, mean, cov, tol);
}

LoadedDistribution distribution_from_json(const json& j) {
  const std::string type = require(j, "type").get<std::string>();
  LoadedDistribution out;
  if (type == "tabular")
    out.tabular = std::make_shared<const TabularDistribution>(
        tabular_from_json(j));
  else if (type == "gaussian")
    out.gaussian = std::make_shared<const GaussianModel>(gaussian_from_json(j));
  else
    throw InputError("unknown distribution type: " + type);
  return out;
}

json network_to_json(const BeliefNetwork& net) {
  json ordering = json::array();
  for (VariableId v : net.ordering) ordering.push_back(net.universe.name(v));
  json parents = json::object();
  for (int v = 0; v < net.universe.size(); ++v)
    parents[net.universe.name(v)] = names_array(net.universe, net.parents[v]);
  return json{{"variables", net.universe.names()},
              {"ordering", ordering},
              {"parents", parents}};
}

BeliefNetwork network_from_json(const json& j) {
  BeliefNetwork net;
  net.universe = Universe(string_list(require(j, "variables"), "variables"));
  for (const auto& name : string_list(require(j, "ordering"), "ordering"))
    net.ordering.push_back(net.universe.id(name));
  if (static_cast<int>(net.ordering.size()) != net.universe.size())
    throw InputError("ordering does not cover the variables");
  net.parents.assign(net.universe.size(), VarSet{});
  for (const auto& [name, list] : require(j, "parents").items())
    net.parents[net.universe.id(name)] =
        net.universe.set_of(string_list(list, "parents"));

  // Parents must precede children in the ordering.
  std::vector<int> position(net.universe.size(), -1);
  VarSet seen;
  for (std::size_t i = 0; i < net.ordering.size(); ++i) {
    if (seen.contains(net.ordering[i]))
      throw InputError("ordering repeats a variable");
    seen.insert(net.ordering[i]);
    position[net.ordering[i]] = static_cast<int>(i);
  }
  for (int c = 0; c < net.universe.size(); ++c)
    for (VariableId p : net.parents[c].members())
      if (position[p] >= position[c])
        throw InputError("parent " + net.universe.name(p) +
                         " does not precede child " + net.universe.name(c));
  return net;
}

json simgraph_to_json(const SimilarityGraph& g) {
  json edges = json::array();
  for (const auto& [i, j2] : g.edges)
    edges.push_back(json::array({g.values[i], g.values[j2]}));
  return json{{"hypothesis", g.hypothesis},
              {"values", g.values},
              {"edges", edges}};
}

SimilarityGraph simgraph_from_json(const json& j) {
  SimilarityGraph g;
  g.hypothesis = require(j, "hypothesis").get<std::string>();
  g.values = string_list(require(j, "values"), "values");
  auto index_of = [&](const std::string& v) {
    for (std::size_t i = 0; i < g.values.size(); ++i)
      if (g.values[i] == v) return static_cast<int>(i);
    throw InputError("edge mentions unknown hypothesis value: " + v);
  };
  for (const auto& e : require(j, "edges")) {
    if (!e.is_array() || e.size() != 2)
      throw InputError("edges must be two-element arrays");
    int a = index_of(e[0].get<std::string>());
    int b = index_of(e[1].get<std::string>());
    if (a > b) std::swap(a, b);
    g.edges.emplace_back(a, b);
  }
  g.validate();
  return g;
}

json global_network_to_json(const GlobalNetwork& g) {
  json edges = json::array();
  for (const auto& [p, c] : g.edges)
    edges.push_back(json::array({g.universe.name(p), g.universe.name(c)}));
  return json{{"hypothesis", g.universe.name(g.hypothesis)},
              {"nodes", names_array(g.universe, g.nodes)},
              {"edges", edges}};
}

json pair_verdict_to_json(const Universe& u, const PairVerdict& v) {
  json out{{"a", u.name(v.a)},
           {"b", u.name(v.b)},
           {"totally_independent", v.totally_independent},
           {"interact", v.interact},
           {"totally_uncoupled", v.totally_uncoupled},
           {"totally_disconnected", v.totally_disconnected}};
  if (v.totally_uncoupled)
    out["witness"] = json{{"U1", names_array(u, v.witness_U1)},
                          {"U2", names_array(u, v.witness_U2)}};
  out["network"] = network_to_json(v.network);
  return out;
}

json violation_to_json(const Universe& u, const AxiomViolation& v) {
  json out{{"axiom", axiom_name(v.axiom)},
           {"premise", triplet_to_json(u, v.premise1)},
           {"missing", triplet_to_json(u, v.missing)}};
  if (v.premise2) out["premise2"] = triplet_to_json(u, *v.premise2);
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InputError("bad JSON in " + path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open file for writing: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace graphoid
