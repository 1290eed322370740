#include "graphoid/simnet.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "graphoid/errors.hpp"
#include "graphoid/unrelatedness.hpp"

namespace graphoid {

void SimilarityGraph::validate() const {
  const int n = static_cast<int>(values.size());
  if (hypothesis.empty()) throw InputError("similarity graph: no hypothesis");
  if (n == 0) throw InputError("similarity graph: no hypothesis values");
  std::set<std::string> seen(values.begin(), values.end());
  if (static_cast<int>(seen.size()) != n)
    throw InputError("similarity graph: duplicate hypothesis values");

  std::vector<std::vector<int>> adj(n);
  for (const auto& [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n || j >= n || i == j)
      throw InputError("similarity graph: bad edge");
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::vector<bool> visited(n, false);
  std::vector<int> stack{0};
  visited[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!visited[w]) {
        visited[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  if (count != n)
    throw InputError("similarity graph is not connected over the values");
}

LocalNetwork build_local(const TabularDistribution& p, VariableId h,
                         std::pair<int, int> edge,
                         const std::vector<VariableId>& ordering) {
  if (h < 0 || h >= p.var_count())
    throw DomainError("hypothesis variable outside the universe");
  if (edge.first == edge.second)
    throw InputError("similarity edge must join two distinct values");
  if (ordering.empty() || ordering.front() != h)
    throw InputError("local-network ordering must place the hypothesis first");

  const TabularDistribution q =
      restrict_domain(p, h, {edge.first, edge.second});
  LocalNetwork ln;
  ln.edge = edge;
  ln.hypothesis = h;
  ln.net = build(TabularOracle(q), ordering);
  return ln;
}

VarSet relevant_symptoms(const LocalNetwork& ln) {
  for (const VarSet& comp : connected_components(ln.net))
    if (comp.contains(ln.hypothesis))
      return comp - VarSet::single(ln.hypothesis);
  return VarSet{};
}

DiscriminationResult discriminates(const TabularDistribution& p, VariableId s,
                                   VariableId h, int h_i, int h_j,
                                   int max_vars) {
  if (s == h) throw DomainError("symptom and hypothesis must differ");
  if (h_i == h_j || h_i < 0 || h_j < 0 || h_i >= p.domain_size(h) ||
      h_j >= p.domain_size(h))
    throw InputError("bad hypothesis value pair");
  const int n = p.var_count();
  if (n > max_vars)
    throw CapacityError("discrimination scan: universe size " +
                        std::to_string(n) + " exceeds cap " +
                        std::to_string(max_vars));

  DiscriminationResult result;

  // Direct route: some symptom set Z and values z with both conditioning
  // events positive make the conditionals of s differ. Cross-multiplied to
  // stay division-free.
  MarginalCache cache(p);
  const VarSet rest = p.universe().all() - VarSet::single(s) - VarSet::single(h);
  for (VarSet Z : subsets_by_cardinality(rest)) {
    if (result.by_probability) break;
    const std::vector<VariableId> zvars = Z.members();
    std::vector<int> zvals(zvars.size(), 0);
    while (true) {
      Assignment zi, zj;
      for (std::size_t i = 0; i < zvars.size(); ++i) {
        zi.set(zvars[i], zvals[i]);
        zj.set(zvars[i], zvals[i]);
      }
      zi.set(h, h_i);
      zj.set(h, h_j);
      const Rational mass_i = cache.prob(zi);
      const Rational mass_j = cache.prob(zj);
      if (mass_i > 0 && mass_j > 0) {
        for (int sv = 0; sv < p.domain_size(s); ++sv) {
          Assignment si = zi, sj = zj;
          si.set(s, sv);
          sj.set(s, sv);
          // P(s|h_i,z) != P(s|h_j,z)
          if (cache.prob(si) * mass_j != cache.prob(sj) * mass_i) {
            result.by_probability = true;
            break;
          }
        }
      }
      if (result.by_probability) break;
      int i = static_cast<int>(zvars.size()) - 1;
      while (i >= 0 && zvals[i] == p.domain_size(zvars[i]) - 1) zvals[i--] = 0;
      if (i < 0) break;
      ++zvals[i];
    }
  }

  // Independence route: s and h interact in the conditioned model.
  const TabularOracle conditioned(restrict_domain(p, h, {h_i, h_j}));
  result.by_independence = !totally_independent_pair(conditioned, s, h);
  return result;
}

GlobalNetwork compose_global(const std::vector<LocalNetwork>& locals) {
  if (locals.empty()) throw InputError("no local networks to compose");
  const LocalNetwork& first = locals.front();
  for (const LocalNetwork& ln : locals) {
    if (!(ln.net.universe == first.net.universe) ||
        ln.hypothesis != first.hypothesis)
      throw InputError("local networks disagree on the universe");
    if (ln.net.ordering != first.net.ordering)
      throw InputError("local networks do not share the symptom ordering");
  }

  GlobalNetwork g;
  g.universe = first.net.universe;
  g.hypothesis = first.hypothesis;
  g.nodes.insert(g.hypothesis);

  std::set<std::pair<VariableId, VariableId>> edges;
  for (const LocalNetwork& ln : locals) {
    VarSet comp;
    for (const VarSet& c : connected_components(ln.net))
      if (c.contains(ln.hypothesis)) {
        comp = c;
        break;
      }
    g.nodes = g.nodes | comp;
    for (const auto& [par, child] : ln.net.edges())
      if (comp.contains(par) && comp.contains(child))
        edges.insert({par, child});
  }

  // The shared ordering orients every edge forward, so the union is acyclic.
  std::vector<int> position(g.universe.size(), 0);
  for (std::size_t i = 0; i < first.net.ordering.size(); ++i)
    position[first.net.ordering[i]] = static_cast<int>(i);
  for (const auto& [par, child] : edges)
    if (position[par] >= position[child])
      throw Error("composed network violates the shared ordering");

  g.edges.assign(edges.begin(), edges.end());
  std::sort(g.edges.begin(), g.edges.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second < b.second : a.first < b.first;
  });
  return g;
}

namespace {

std::string dot_quote(const std::string& s) {
  bool plain = !s.empty() && !std::isdigit(static_cast<unsigned char>(s[0]));
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') plain = false;
  if (plain) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') quoted += '\\';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::string export_dot(const GlobalNetwork& g, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph " << dot_quote(graph_name) << " {\n";
  for (VariableId v : g.nodes.members())
    os << "  " << dot_quote(g.universe.name(v)) << ";\n";
  for (const auto& [par, child] : g.edges)
    os << "  " << dot_quote(g.universe.name(par)) << " -> "
       << dot_quote(g.universe.name(child)) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace graphoid
