#include "graphoid/network.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>
#include <utility>

#include "graphoid/errors.hpp"
#include "graphoid/triplet.hpp"

namespace graphoid {

VarSet BeliefNetwork::children_of(VariableId v) const {
  VarSet out;
  for (int c = 0; c < universe.size(); ++c)
    if (parents[c].contains(v)) out.insert(c);
  return out;
}

int BeliefNetwork::edge_count() const {
  int count = 0;
  for (const VarSet& p : parents) count += p.size();
  return count;
}

std::vector<std::pair<VariableId, VariableId>> BeliefNetwork::edges() const {
  std::vector<std::pair<VariableId, VariableId>> out;
  for (int c = 0; c < universe.size(); ++c)
    for (VariableId p : parents[c].members()) out.emplace_back(p, c);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second < b.second : a.first < b.first;
  });
  return out;
}

VarSet minimal_parents(const IndependenceOracle& oracle, VariableId u,
                       VarSet predecessors) {
  if (predecessors.contains(u))
    throw DomainError("variable cannot precede itself");
  // First hit in cardinality-then-lex order has minimum cardinality, hence
  // is inclusion-minimal; pi = predecessors always satisfies the condition.
  for (VarSet pi : subsets_by_cardinality(predecessors))
    if (oracle.contains(VarSet::single(u), predecessors - pi, pi)) return pi;
  return predecessors;
}

std::vector<VarSet> minimal_parents_all(const IndependenceOracle& oracle,
                                        VariableId u, VarSet predecessors) {
  if (predecessors.contains(u))
    throw DomainError("variable cannot precede itself");
  std::vector<VarSet> out;
  int found_size = -1;
  for (VarSet pi : subsets_by_cardinality(predecessors)) {
    if (found_size >= 0 && pi.size() > found_size) break;
    if (oracle.contains(VarSet::single(u), predecessors - pi, pi)) {
      out.push_back(pi);
      found_size = pi.size();
    }
  }
  return out;
}

BeliefNetwork build(const IndependenceOracle& oracle,
                    const std::vector<VariableId>& ordering) {
  const Universe& u = oracle.universe();
  const int n = u.size();
  if (static_cast<int>(ordering.size()) != n)
    throw InputError("ordering does not cover the universe");
  VarSet seen;
  for (VariableId v : ordering) {
    if (v < 0 || v >= n || seen.contains(v))
      throw InputError("ordering is not a permutation of the universe");
    seen.insert(v);
  }

  BeliefNetwork net{u, ordering, std::vector<VarSet>(n)};
  VarSet predecessors;
  for (VariableId v : ordering) {
    net.parents[v] = minimal_parents(oracle, v, predecessors);
    predecessors.insert(v);
  }
  return net;
}

namespace {

// Nodes that are in Z or have a descendant in Z: Z plus its ancestors.
VarSet z_or_ancestors_of_z(const BeliefNetwork& net, VarSet Z) {
  VarSet out = Z;
  const std::vector<VariableId> zs = Z.members();
  std::deque<VariableId> work(zs.begin(), zs.end());
  while (!work.empty()) {
    const VariableId v = work.front();
    work.pop_front();
    for (VariableId p : net.parents[v].members())
      if (!out.contains(p)) {
        out.insert(p);
        work.push_back(p);
      }
  }
  return out;
}

}  // namespace

bool d_separated(const BeliefNetwork& net, VarSet X, VarSet Y, VarSet Z) {
  require_disjoint(X, Y, Z);
  if (!(X | Y | Z).subset_of(net.universe.all()))
    throw InvalidTripletError("query outside the network's universe");
  if (X.empty() || Y.empty()) return true;

  const int n = net.universe.size();
  std::vector<VarSet> children(n);
  for (int c = 0; c < n; ++c)
    for (VariableId p : net.parents[c].members()) children[p].insert(c);
  const VarSet collider_ok = z_or_ancestors_of_z(net, Z);

  // State (node, entered-from): FROM_PARENT means the trail reached the
  // node along an incoming edge, FROM_CHILD along an outgoing one.
  enum { FROM_PARENT = 0, FROM_CHILD = 1 };
  std::vector<std::array<bool, 2>> visited(n, {false, false});
  std::deque<std::pair<VariableId, int>> work;
  auto push = [&](VariableId v, int dir) {
    if (!visited[v][dir]) {
      visited[v][dir] = true;
      work.emplace_back(v, dir);
    }
  };

  for (VariableId x : X.members()) {
    for (VariableId c : children[x].members()) push(c, FROM_PARENT);
    for (VariableId p : net.parents[x].members()) push(p, FROM_CHILD);
  }

  while (!work.empty()) {
    const auto [v, dir] = work.front();
    work.pop_front();
    if (Y.contains(v)) return false;  // an active trail reaches Y

    if (dir == FROM_PARENT) {
      if (!Z.contains(v))  // chain: continue to children
        for (VariableId c : children[v].members()) push(c, FROM_PARENT);
      if (collider_ok.contains(v))  // head-to-head: bounce to parents
        for (VariableId p : net.parents[v].members()) push(p, FROM_CHILD);
    } else {
      if (!Z.contains(v)) {  // fork or chain
        for (VariableId c : children[v].members()) push(c, FROM_PARENT);
        for (VariableId p : net.parents[v].members()) push(p, FROM_CHILD);
      }
    }
  }
  return true;
}

std::string Trail::to_string(const Universe& u) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) os << (forward[i - 1] ? " -> " : " <- ");
    os << u.name(nodes[i]);
  }
  return os.str();
}

namespace {

struct TrailSearch {
  const BeliefNetwork& net;
  VarSet Y, Z;
  VarSet collider_ok;
  std::vector<VarSet> children;
  long long cap;
  long long max_trails;
  long long explored = 0;
  std::vector<Trail> found;

  // Edges identified as (parent, child); at most one traversal each.
  std::set<std::pair<VariableId, VariableId>> used;
  Trail current;

  bool is_active(const Trail& t) const {
    for (std::size_t i = 1; i + 1 < t.nodes.size(); ++i) {
      const bool head_to_head = t.forward[i - 1] && !t.forward[i];
      if (head_to_head) {
        if (!collider_ok.contains(t.nodes[i])) return false;
      } else {
        if (Z.contains(t.nodes[i])) return false;
      }
    }
    return true;
  }

  // Extends the trail from node v; records active trails ending in Y.
  bool dfs(VariableId v) {
    if (++explored > cap)
      throw CapacityError("trail enumeration exceeded cap of " +
                          std::to_string(cap));
    if (!current.nodes.empty() && Y.contains(v) && is_active(current)) {
      found.push_back(current);
      if (max_trails >= 0 &&
          static_cast<long long>(found.size()) >= max_trails)
        return false;  // stop the whole search
    }
    auto step = [&](VariableId next, bool forward) {
      const auto key = forward ? std::pair{v, next} : std::pair{next, v};
      if (used.count(key)) return true;
      used.insert(key);
      current.nodes.push_back(next);
      current.forward.push_back(forward);
      const bool keep_going = dfs(next);
      current.nodes.pop_back();
      current.forward.pop_back();
      used.erase(key);
      return keep_going;
    };
    for (VariableId c : children[v].members())
      if (!step(c, true)) return false;
    for (VariableId p : net.parents[v].members())
      if (!step(p, false)) return false;
    return true;
  }
};

}  // namespace

std::vector<Trail> enumerate_active_trails(const BeliefNetwork& net, VarSet X,
                                           VarSet Y, VarSet Z, long long cap,
                                           long long max_trails) {
  require_disjoint(X, Y, Z);
  if (!(X | Y | Z).subset_of(net.universe.all()))
    throw InvalidTripletError("query outside the network's universe");

  const int n = net.universe.size();
  TrailSearch search{net, Y, Z, z_or_ancestors_of_z(net, Z),
                     std::vector<VarSet>(n), cap, max_trails, 0, {}, {}, {}};
  for (int c = 0; c < n; ++c)
    for (VariableId p : net.parents[c].members()) search.children[p].insert(c);

  for (VariableId x : X.members()) {
    search.current.nodes = {x};
    search.current.forward.clear();
    if (!search.dfs(x)) break;
  }
  return std::move(search.found);
}

std::vector<VarSet> connected_components(const BeliefNetwork& net) {
  const int n = net.universe.size();
  std::vector<VarSet> adjacency(n);
  for (int c = 0; c < n; ++c)
    for (VariableId p : net.parents[c].members()) {
      adjacency[c].insert(p);
      adjacency[p].insert(c);
    }

  std::vector<VarSet> components;
  VarSet visited;
  for (int v = 0; v < n; ++v) {
    if (visited.contains(v)) continue;
    VarSet comp;
    std::deque<VariableId> work{v};
    visited.insert(v);
    while (!work.empty()) {
      const VariableId w = work.front();
      work.pop_front();
      comp.insert(w);
      for (VariableId nb : adjacency[w].members())
        if (!visited.contains(nb)) {
          visited.insert(nb);
          work.push_back(nb);
        }
    }
    components.push_back(comp);  // ordered by least member, since v ascends
  }
  return components;
}

namespace {

bool plain_identifier(const std::string& s) {
  if (s.empty() || (std::isdigit(static_cast<unsigned char>(s[0]))))
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::string dot_name(const std::string& s) {
  if (plain_identifier(s)) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') quoted += '\\';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::string export_dot(const BeliefNetwork& net, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph " << dot_name(graph_name) << " {\n";
  for (int v = 0; v < net.universe.size(); ++v)
    os << "  " << dot_name(net.universe.name(v)) << ";\n";
  for (const auto& [p, c] : net.edges())
    os << "  " << dot_name(net.universe.name(p)) << " -> "
       << dot_name(net.universe.name(c)) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace graphoid
