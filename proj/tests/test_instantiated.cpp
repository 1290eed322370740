#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphoid/generators.hpp"
#include "graphoid/instantiated.hpp"
#include "graphoid/oracle.hpp"
#include "graphoid/unrelatedness.hpp"
#include "helpers.hpp"

using namespace graphoid;

namespace {

Assignment assign(std::initializer_list<std::pair<VariableId, int>> items) {
  Assignment a;
  for (const auto& [v, val] : items) a.set(v, val);
  return a;
}

InstantiatedTriplet it(VarSet X, Assignment x, VarSet Y, Assignment y, VarSet Z,
                       Assignment z) {
  return InstantiatedTriplet{X, Y, Z, std::move(x), std::move(y), std::move(z)};
}

template <typename Fn>
void for_each_triplet(int n, Fn&& fn) {
  std::vector<int> slot(n, 0);
  while (true) {
    Triplet t;
    for (int v = 0; v < n; ++v) {
      if (slot[v] == 1) t.X.insert(v);
      else if (slot[v] == 2) t.Y.insert(v);
      else if (slot[v] == 3) t.Z.insert(v);
    }
    if (!t.trivial() && normalize(t) == t) fn(t);
    int i = 0;
    while (i < n && slot[i] == 3) slot[i++] = 0;
    if (i == n) break;
    ++slot[i];
  }
}

// Every value tuple of `set`, as an Assignment.
template <typename Fn>
void for_each_value(const TabularDistribution& p, VarSet set, Fn&& fn) {
  const std::vector<VariableId> vars = set.members();
  std::vector<int> vals(vars.size(), 0);
  while (true) {
    Assignment a;
    for (std::size_t i = 0; i < vars.size(); ++i) a.set(vars[i], vals[i]);
    fn(a);
    int i = static_cast<int>(vars.size()) - 1;
    while (i >= 0 && vals[i] == p.domain_size(vars[i]) - 1) vals[i--] = 0;
    if (i < 0) break;
    ++vals[i];
  }
}

// A three-variable distribution whose e-like variable has an impossible
// value; exercises the zero-evidence skip path of the axiom scan.
TabularDistribution degenerate_third_bit() {
  std::vector<TabularVariable> vars{
      {"a", {"0", "1"}}, {"b", {"0", "1"}}, {"c", {"0", "1"}}};
  std::vector<Rational> cells(8, Rational(0));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) cells[a * 4 + b * 2] = Rational(1, 4);
  return TabularDistribution(std::move(vars), std::move(cells));
}

}  // namespace

TEST_CASE("value-level queries on the fixed fixtures") {
  const InstantiatedModel pc(pair_copy_distribution());
  const Universe& u = pc.universe();
  const VariableId a = u.id("a"), b = u.id("b"), c = u.id("c");
  const int c01 = pc.tabular().value_index(c, "01");

  CHECK(pc.query(it(VarSet::single(a), assign({{a, 0}}), VarSet::single(b),
                    assign({{b, 1}}), VarSet::single(c), assign({{c, c01}}))));

  const InstantiatedModel parity(parity_distribution());
  CHECK_FALSE(parity.query(it(VarSet::single(0), assign({{0, 0}}),
                              VarSet::single(1), assign({{1, 0}}),
                              VarSet::single(2), assign({{2, 0}}))));

  // Gaussian queries ignore values entirely.
  const InstantiatedModel g(markov_chain_gaussian());
  const InstantiatedTriplet t1 =
      it(VarSet::single(0), {}, VarSet::single(2), {}, VarSet::single(1), {});
  CHECK(g.query(t1));
}

TEST_CASE("value-level queries demand positive conditioning mass") {
  const InstantiatedModel pc(pair_copy_distribution());
  const Universe& u = pc.universe();
  const VariableId a = u.id("a"), b = u.id("b"), c = u.id("c");
  // a = 0 forbids c = "10", so conditioning on both has zero mass.
  const int c10 = pc.tabular().value_index(c, "10");
  CHECK_THROWS_AS(pc.query(it(VarSet::single(b), assign({{b, 0}}), VarSet{}, {},
                              VarSet::of({a, c}), assign({{a, 0}, {c, c10}}))),
                  ZeroEvidenceError);
}

TEST_CASE("conditional models agree with extended conditioning sets") {
  // Exhaustive coherence at n <= 4: the conditional's query equals the
  // original query with the conditioned variable moved into Z.
  std::vector<TabularDistribution> fixtures{
      parity_distribution(), pair_copy_distribution(), spb_random(4, 7),
      spb_block_product(4, 8, {2, 2})};
  for (const TabularDistribution& p : fixtures) {
    const InstantiatedModel m(p);
    const int n = p.var_count();
    const VariableId u_last = n - 1;
    for (int val = 0; val < p.domain_size(u_last); ++val) {
      Assignment ev;
      ev.set(u_last, val);
      if (p.prob(ev) == 0) continue;
      const InstantiatedModel cond = conditional_model(m, u_last, val);
      const VarSet rest = p.universe().all() - VarSet::single(u_last);
      for_each_triplet(n, [&](const Triplet& t) {
        if (!(t.X | t.Y | t.Z).subset_of(rest)) return;
        for_each_value(p, t.X, [&](const Assignment& x) {
          for_each_value(p, t.Y, [&](const Assignment& y) {
            for_each_value(p, t.Z, [&](const Assignment& z) {
              Assignment zu = z;
              zu.set(u_last, val);
              if (p.prob(zu) == 0) return;
              const bool orig =
                  m.query(it(t.X, x, t.Y, y, t.Z | VarSet::single(u_last), zu));
              const bool conditioned = cond.query(it(t.X, x, t.Y, y, t.Z, z));
              CHECK(orig == conditioned);
            });
          });
        });
      });
    }
  }
}

TEST_CASE("conditioning the parity distribution couples the bits") {
  const InstantiatedModel parity(parity_distribution());
  const InstantiatedModel cond = conditional_model(parity, 2, 0);
  // Both surviving cells are perfectly correlated.
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      Assignment ax, ay;
      ax.set(0, x);
      ay.set(1, y);
      if (cond.tabular().prob(ax) == 0 || cond.tabular().prob(ay) == 0)
        continue;
      CHECK_FALSE(cond.query(it(VarSet::single(0), ax, VarSet::single(1), ay,
                                VarSet{}, {})));
    }
}

TEST_CASE("conditioning a product keeps the factors independent") {
  const TabularDistribution p = spb_block_product(3, 9, {1, 1, 1});
  const InstantiatedModel m(p);
  for (int val = 0; val < 2; ++val) {
    const InstantiatedModel cond = conditional_model(m, 2, val);
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        CHECK(cond.query(it(VarSet::single(0), assign({{0, x}}),
                            VarSet::single(1), assign({{1, y}}), VarSet{}, {})));
  }
}

TEST_CASE("induced set-level model matches the distribution oracle") {
  const TabularDistribution parity = parity_distribution();
  const DependencyModel from_values =
      induced_uninstantiated(InstantiatedModel(parity));
  const DependencyModel from_sets = induced_model(TabularOracle(parity));
  CHECK(graphoid::testing::same_statements(from_values, from_sets));
  CHECK(from_values.closed_flag());

  const DependencyModel pc =
      induced_uninstantiated(InstantiatedModel(pair_copy_distribution()));
  CHECK(pc.contains(VarSet::single(0), VarSet::single(1), VarSet{}));
  CHECK(pc.contains(VarSet::single(0), VarSet::single(1), VarSet::single(2)));
  CHECK(pc.statement_count() == 2);
  CHECK(pc.closed_flag());

  const GaussianModel g = markov_chain_gaussian();
  CHECK(graphoid::testing::same_statements(
      induced_uninstantiated(InstantiatedModel(g)),
      induced_model(GaussianOracle(g))));
}

TEST_CASE("propositional transitivity holds on strictly positive binaries") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const int n = 3 + static_cast<int>(seed % 3);
    const TabularDistribution p =
        seed % 2 ? spb_random(n, seed) : spb_block_product(n, seed, {2, n - 2});
    const InstantiatedModel m(p);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        const PropTransReport r = check_propositional_transitivity(m, a, b);
        CHECK(r.pass);
        CHECK(r.skipped_zero_evidence == 0);
      }
  }
}

TEST_CASE("block products produce non-vacuous antecedent hits") {
  const InstantiatedModel m(spb_block_product(4, 11, {2, 2}));
  long long hits = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      const PropTransReport r = check_propositional_transitivity(m, a, b);
      CHECK(r.pass);
      hits += r.antecedent_hits;
    }
  CHECK(hits > 0);
}

TEST_CASE("a full product satisfies the axiom through the first disjunct") {
  // P(a) * P(rest): every antecedent hit with A1 = {a} is discharged by
  // I(a, everything-else; 0).
  const InstantiatedModel m(spb_block_product(4, 12, {1, 3}));
  const PropTransReport r = check_propositional_transitivity(m, 0, 1);
  CHECK(r.pass);
  CHECK(r.antecedent_hits > 0);
}

TEST_CASE("pair-copy violates propositional transitivity") {
  const InstantiatedModel m(pair_copy_distribution());
  const Universe& u = m.universe();
  const PropTransReport r =
      check_propositional_transitivity(m, u.id("a"), u.id("b"));
  REQUIRE_FALSE(r.pass);
  REQUIRE(r.violation.has_value());
  CHECK(r.violation->e == u.id("c"));
  CHECK(r.violation->cells_a[0] == VarSet::single(u.id("a")));
  CHECK(r.violation->cells_b[0] == VarSet::single(u.id("b")));
  CHECK_FALSE(r.violation->first_disjunct);
  CHECK_FALSE(r.violation->second_disjunct);
  CHECK(r.antecedent_hits >= 1);
}

TEST_CASE("zero-evidence instances are skipped and counted") {
  const InstantiatedModel m(degenerate_third_bit());
  const PropTransReport r = check_propositional_transitivity(m, 0, 1);
  CHECK(r.pass);
  // Both ordered value pairs of c touch the impossible value c = 1.
  CHECK(r.skipped_zero_evidence == 2);
  CHECK(r.antecedent_hits == 0);
}

TEST_CASE("gaussian models satisfy the axiom with one value pair per instance") {
  for (std::uint64_t seed = 21; seed <= 24; ++seed) {
    const int n = 3 + static_cast<int>(seed % 4);
    const GaussianModel g = seed % 2 ? gaussian_random(n, seed)
                                     : gaussian_block(n, seed, {2, n - 2});
    const InstantiatedModel m(g);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        CHECK(check_propositional_transitivity(m, a, b).pass);
  }
}

TEST_CASE("axiom scan capacity") {
  const InstantiatedModel m(spb_random(7, 5));
  CHECK_THROWS_AS(check_propositional_transitivity(m, 0, 1), CapacityError);
}

TEST_CASE("the axiom implies separability on positive fixtures") {
  for (std::uint64_t seed = 31; seed <= 34; ++seed) {
    const int n = 4;
    const TabularDistribution p =
        seed % 2 ? spb_random(n, seed) : spb_block_product(n, seed, {2, 2});
    const InstantiatedModel m(p);
    bool all_pairs = true;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        all_pairs =
            all_pairs && check_propositional_transitivity(m, a, b).pass;
    REQUIRE(all_pairs);
    CHECK(is_separable(TabularOracle(p)).separable);
  }
}

TEST_CASE("unification: conditional covariance is value-free") {
  const GaussianModel g = markov_chain_gaussian();
  const UnificationReport r =
      check_unification(g, {g.universe().set_of({"x2"})});
  CHECK(r.pass);
  CHECK(r.max_deviation == 0.0);

  const GaussianModel id(Universe({"x1", "x2", "x3"}), Eigen::VectorXd::Zero(3),
                         Eigen::MatrixXd::Identity(3, 3));
  CHECK(check_unification(id).pass);

  for (std::uint64_t seed = 41; seed <= 45; ++seed)
    CHECK(check_unification(gaussian_random(5, seed)).pass);

  CHECK_THROWS_AS(check_unification(g, {}, {0.0}), InputError);
}

TEST_CASE("instantiated graphoid condition on the fixtures") {
  std::vector<InstantiatedModel> fixtures;
  fixtures.emplace_back(parity_distribution());
  fixtures.emplace_back(pair_copy_distribution());
  fixtures.emplace_back(spb_random(4, 51));
  fixtures.emplace_back(markov_chain_gaussian());
  for (const InstantiatedModel& m : fixtures)
    CHECK(is_closed(induced_uninstantiated(m)).closed);
}
