#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "graphoid/generators.hpp"
#include "graphoid/json_io.hpp"
#include "graphoid/rational.hpp"
#include "graphoid/simnet.hpp"
#include "graphoid/tabular.hpp"

using namespace graphoid;

namespace {

// Build a joint P(h, s1..sk) from P(h) uniform and per-symptom conditional
// weights: cond[s][h_value] = numerator of P(s=1 | h) over `den`.
TabularDistribution hypothesis_fixture(int h_values,
                                       const std::vector<std::vector<int>>& cond,
                                       int den) {
  std::vector<TabularVariable> vars;
  std::vector<std::string> hdom;
  for (int i = 1; i <= h_values; ++i) hdom.push_back("h" + std::to_string(i));
  vars.push_back({"h", hdom});
  for (std::size_t s = 0; s < cond.size(); ++s)
    vars.push_back({"s" + std::to_string(s + 1), {"0", "1"}});

  const int k = static_cast<int>(cond.size());
  std::size_t count = static_cast<std::size_t>(h_values) << k;
  std::vector<Rational> cells;
  cells.reserve(count);
  // Mixed radix: h slowest, then s1..sk; binary symptoms.
  for (int hv = 0; hv < h_values; ++hv) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << k); ++bits) {
      Rational p(1, h_values);
      for (int s = 0; s < k; ++s) {
        const bool on = (bits >> (k - 1 - s)) & 1;
        const Rational one(cond[s][hv], den);
        p *= on ? one : Rational(1) - one;
      }
      cells.push_back(p);
    }
  }
  return TabularDistribution(std::move(vars), std::move(cells));
}

std::vector<VariableId> default_ordering(const TabularDistribution& p,
                                         VariableId h) {
  std::vector<VariableId> ordering{h};
  for (int v = 0; v < p.var_count(); ++v)
    if (v != h) ordering.push_back(v);
  return ordering;
}

}  // namespace

TEST_CASE("similarity graphs must be connected") {
  SimilarityGraph g;
  g.hypothesis = "h";
  g.values = {"h1", "h2", "h3"};
  g.edges = {{0, 1}};
  CHECK_THROWS_AS(g.validate(), InputError);
  g.edges.push_back({1, 2});
  CHECK_NOTHROW(g.validate());

  const SimilarityGraph back = simgraph_from_json(simgraph_to_json(g));
  CHECK(back.values == g.values);
  CHECK(back.edges == g.edges);
}

TEST_CASE("local networks for the documented example shapes") {
  // Symptom s1 distinguishes only h3; s2 tracks h everywhere.
  const TabularDistribution p =
      hypothesis_fixture(3, {{1, 1, 3}, {1, 2, 3}}, 4);
  const Universe& u = p.universe();
  const VariableId h = u.id("h"), s1 = u.id("s1"), s2 = u.id("s2");
  const auto ordering = default_ordering(p, h);

  // Edge {h1,h2}: s1 has identical conditionals, so it detaches from h.
  const LocalNetwork l12 = build_local(p, h, {0, 1}, ordering);
  const VarSet rel12 = relevant_symptoms(l12);
  CHECK_FALSE(rel12.contains(s1));
  CHECK(rel12.contains(s2));

  // Edge {h2,h3}: both symptoms discriminate.
  const LocalNetwork l23 = build_local(p, h, {1, 2}, ordering);
  CHECK(relevant_symptoms(l23) == VarSet::of({s1, s2}));
}

TEST_CASE("an indicator symptom hangs off the hypothesis") {
  // s1 = 1 exactly when h = h1 (deterministic, not strictly positive).
  const TabularDistribution p = hypothesis_fixture(2, {{1, 0}}, 1);
  const Universe& u = p.universe();
  const LocalNetwork ln =
      build_local(p, u.id("h"), {0, 1}, default_ordering(p, u.id("h")));
  CHECK(relevant_symptoms(ln) == VarSet::single(u.id("s1")));
  CHECK(ln.net.parents[u.id("s1")] == VarSet::single(u.id("h")));
}

TEST_CASE("an unrelated symptom is isolated in every local network") {
  // s1 independent of h (same conditional for every value).
  const TabularDistribution p = hypothesis_fixture(3, {{1, 1, 1}}, 2);
  const Universe& u = p.universe();
  for (int i = 0; i < 2; ++i) {
    const LocalNetwork ln =
        build_local(p, u.id("h"), {i, i + 1}, default_ordering(p, u.id("h")));
    CHECK(relevant_symptoms(ln).empty());
  }
}

TEST_CASE("build_local validates its inputs") {
  const TabularDistribution p = hypothesis_fixture(3, {{1, 2, 3}}, 4);
  const VariableId h = p.universe().id("h");
  CHECK_THROWS_AS(build_local(p, h, {0, 0}, default_ordering(p, h)),
                  InputError);
  CHECK_THROWS_AS(build_local(p, h, {0, 1}, {1, 0}), InputError);
}

TEST_CASE("discrimination and its dual routes") {
  const TabularDistribution p =
      hypothesis_fixture(3, {{1, 1, 3}, {1, 2, 3}}, 4);
  const Universe& u = p.universe();
  const VariableId h = u.id("h"), s1 = u.id("s1"), s2 = u.id("s2");

  const DiscriminationResult r11 = discriminates(p, s1, h, 0, 1);
  CHECK_FALSE(r11.by_probability);
  CHECK(r11.agree());

  const DiscriminationResult r13 = discriminates(p, s1, h, 1, 2);
  CHECK(r13.by_probability);
  CHECK(r13.agree());

  CHECK(discriminates(p, s2, h, 0, 1).by_probability);

  CHECK_THROWS_AS(discriminates(p, h, h, 0, 1), DomainError);
  CHECK_THROWS_AS(discriminates(p, s1, h, 0, 9), InputError);
}

TEST_CASE("a chain symptom still discriminates") {
  // h -> s1 -> s2: s2 depends on h only through s1, but it interacts with h
  // (dependent given the empty set), so it must discriminate.
  std::vector<TabularVariable> vars{
      {"h", {"h1", "h2"}}, {"s1", {"0", "1"}}, {"s2", {"0", "1"}}};
  std::vector<Rational> cells;
  for (int hv = 0; hv < 2; ++hv)
    for (int v1 = 0; v1 < 2; ++v1)
      for (int v2 = 0; v2 < 2; ++v2) {
        const Rational ph(1, 2);
        const Rational p1 =
            hv == 0 ? Rational(v1 ? 1 : 3, 4) : Rational(v1 ? 3 : 1, 4);
        const Rational p2 =
            v1 == 0 ? Rational(v2 ? 1 : 4, 5) : Rational(v2 ? 4 : 1, 5);
        cells.push_back(ph * p1 * p2);
      }
  const TabularDistribution p(std::move(vars), std::move(cells));
  const Universe& u = p.universe();

  const DiscriminationResult r = discriminates(p, u.id("s2"), u.id("h"), 0, 1);
  CHECK(r.by_probability);
  CHECK(r.agree());

  // And it appears among the relevant symptoms of the local network.
  const LocalNetwork ln =
      build_local(p, u.id("h"), {0, 1}, default_ordering(p, u.id("h")));
  CHECK(relevant_symptoms(ln).contains(u.id("s2")));
}

TEST_CASE("dual routes agree on random strictly positive fixtures") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    std::vector<TabularVariable> vars{{"h", {"h1", "h2", "h3"}},
                                      {"s1", {"0", "1"}},
                                      {"s2", {"0", "1"}}};
    const TabularDistribution p = random_positive_table(vars, seed);
    const Universe& u = p.universe();
    for (VariableId s : {u.id("s1"), u.id("s2")})
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          CHECK(discriminates(p, s, u.id("h"), i, j).agree());
  }
}

TEST_CASE("global composition takes the union of hypothesis components") {
  const TabularDistribution p =
      hypothesis_fixture(3, {{1, 1, 3}, {1, 2, 3}}, 4);
  const Universe& u = p.universe();
  const VariableId h = u.id("h");
  const auto ordering = default_ordering(p, h);

  std::vector<LocalNetwork> locals{build_local(p, h, {0, 1}, ordering),
                                   build_local(p, h, {1, 2}, ordering)};
  const GlobalNetwork g = compose_global(locals);
  CHECK(g.nodes == VarSet::of({h, u.id("s1"), u.id("s2")}));

  // Every edge respects the shared ordering, so the union is acyclic.
  std::vector<int> position(g.universe.size());
  for (std::size_t i = 0; i < ordering.size(); ++i) position[ordering[i]] = i;
  for (const auto& [par, child] : g.edges) CHECK(position[par] < position[child]);

  const std::string dot = export_dot(g);
  CHECK(dot.find("digraph") == 0);

  // A single local composes to its own hypothesis component.
  const GlobalNetwork solo = compose_global({locals[1]});
  CHECK(solo.nodes == VarSet::of({h, u.id("s1"), u.id("s2")}));
}

TEST_CASE("composition of isolated locals is the hypothesis alone") {
  const TabularDistribution p = hypothesis_fixture(3, {{1, 1, 1}}, 2);
  const Universe& u = p.universe();
  const VariableId h = u.id("h");
  const auto ordering = default_ordering(p, h);
  std::vector<LocalNetwork> locals{build_local(p, h, {0, 1}, ordering),
                                   build_local(p, h, {1, 2}, ordering)};
  const GlobalNetwork g = compose_global(locals);
  CHECK(g.nodes == VarSet::single(h));
  CHECK(g.edges.empty());
}

TEST_CASE("composition rejects inconsistent orderings") {
  const TabularDistribution p =
      hypothesis_fixture(3, {{1, 1, 3}, {1, 2, 3}}, 4);
  const Universe& u = p.universe();
  const VariableId h = u.id("h");
  std::vector<LocalNetwork> locals{
      build_local(p, h, {0, 1}, {h, u.id("s1"), u.id("s2")}),
      build_local(p, h, {1, 2}, {h, u.id("s2"), u.id("s1")})};
  CHECK_THROWS_AS(compose_global(locals), InputError);
  CHECK_THROWS_AS(compose_global({}), InputError);
}

TEST_CASE("connectivity equals discrimination on strictly positive fixtures") {
  // All variables binary after the edge restriction, strictly positive, so
  // the conditioned models are transitive and the two queries coincide.
  std::vector<TabularDistribution> fixtures;
  fixtures.push_back(hypothesis_fixture(3, {{1, 1, 3}, {1, 2, 3}}, 4));
  fixtures.push_back(hypothesis_fixture(4, {{1, 1, 2, 3}, {2, 2, 2, 2}}, 4));
  std::vector<TabularVariable> vars{{"h", {"h1", "h2", "h3"}},
                                    {"s1", {"0", "1"}},
                                    {"s2", {"0", "1"}}};
  fixtures.push_back(random_positive_table(vars, 77));

  for (const TabularDistribution& p : fixtures) {
    const Universe& u = p.universe();
    const VariableId h = u.id("h");
    const auto ordering = default_ordering(p, h);
    const int hv = p.domain_size(h);
    for (int i = 0; i < hv; ++i)
      for (int j = i + 1; j < hv; ++j) {
        const LocalNetwork ln = build_local(p, h, {i, j}, ordering);
        const VarSet relevant = relevant_symptoms(ln);
        for (int s = 0; s < p.var_count(); ++s) {
          if (s == h) continue;
          const DiscriminationResult r = discriminates(p, s, h, i, j);
          CHECK(r.agree());
          CHECK(r.by_probability == relevant.contains(s));
        }
      }
  }
}
