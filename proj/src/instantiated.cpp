#include "graphoid/instantiated.hpp"

#include <map>
#include <string>
#include <tuple>

#include "graphoid/errors.hpp"

namespace graphoid {

InstantiatedModel::InstantiatedModel(
    std::shared_ptr<const TabularDistribution> p)
    : tabular_(std::move(p)) {
  cache_ = std::make_unique<MarginalCache>(*tabular_);
}

InstantiatedModel::InstantiatedModel(std::shared_ptr<const GaussianModel> g)
    : gaussian_(std::move(g)) {}

const Universe& InstantiatedModel::universe() const {
  return tabular_ ? tabular_->universe() : gaussian_->universe();
}

namespace {

void require_covers(const Assignment& a, VarSet s, const char* which) {
  if (a.vars() != s)
    throw DomainError(std::string("assignment does not cover exactly ") +
                      which);
}

Assignment merge(const Assignment& a, const Assignment& b) {
  Assignment out = a;
  for (const auto& [var, val] : b.items()) out.set(var, val);
  return out;
}

}  // namespace

bool InstantiatedModel::query(const InstantiatedTriplet& t) const {
  require_disjoint(t.X, t.Y, t.Z);
  if (!(t.X | t.Y | t.Z).subset_of(universe().all()))
    throw InvalidTripletError("query outside the universe");

  if (!tabular_) {
    // Values are irrelevant for Gaussian backings: value-level independence
    // at one instantiation coincides with set-level independence
    // (unification semantics).
    return gaussian_independent(*gaussian_, t.X, t.Y, t.Z);
  }

  require_covers(t.x, t.X, "X");
  require_covers(t.y, t.Y, "Y");
  require_covers(t.z, t.Z, "Z");
  const Rational pz = cache_->prob(t.z);
  if (pz == 0)
    throw ZeroEvidenceError("P(Z=z) is zero; the query is undefined");
  // Eq.-1 equality at the specific values, cross-multiplied.
  const Rational pxyz = cache_->prob(merge(merge(t.x, t.y), t.z));
  const Rational pxz = cache_->prob(merge(t.x, t.z));
  const Rational pyz = cache_->prob(merge(t.y, t.z));
  return pxyz * pz == pxz * pyz;
}

bool InstantiatedModel::query_all_values(VarSet X, VarSet Y, VarSet Z,
                                         const Assignment& z) const {
  if (!tabular_) return gaussian_independent(*gaussian_, X, Y, Z);
  return tabular_independent_at(*cache_, X, Y, Z, z);
}

InstantiatedModel conditional_model(const InstantiatedModel& m, VariableId u,
                                    int val, double gaussian_value) {
  if (u < 0 || u >= m.universe().size())
    throw DomainError("conditioning variable outside the universe");
  if (m.tabular_backed()) {
    Assignment e;
    e.set(u, val);
    return InstantiatedModel(condition_on(m.tabular(), e));
  }
  Eigen::VectorXd z(1);
  z(0) = gaussian_value;
  return InstantiatedModel(
      gaussian_conditional(m.gaussian(), VarSet::single(u), z));
}

DependencyModel induced_uninstantiated(const InstantiatedModel& m,
                                       int max_vars) {
  const Universe& u = m.universe();
  const int n = u.size();
  if (n > max_vars)
    throw CapacityError("induced_uninstantiated: universe size " +
                        std::to_string(n) + " exceeds cap " +
                        std::to_string(max_vars));

  DependencyModel out(u);
  std::vector<int> slot(n, 0);
  while (true) {
    Triplet t;
    for (int v = 0; v < n; ++v) {
      if (slot[v] == 1) t.X.insert(v);
      else if (slot[v] == 2) t.Y.insert(v);
      else if (slot[v] == 3) t.Z.insert(v);
    }
    if (!t.trivial() && normalize(t) == t) {
      bool member = true;
      if (!m.tabular_backed()) {
        member = m.query(InstantiatedTriplet{t.X, t.Y, t.Z, {}, {}, {}});
      } else {
        // In iff the value-level query holds for every value combination
        // with positive conditioning mass.
        const TabularDistribution& p = m.tabular();
        const std::vector<VariableId> zvars = t.Z.members();
        std::vector<int> zvals(zvars.size(), 0);
        while (member) {
          Assignment az;
          for (std::size_t i = 0; i < zvars.size(); ++i)
            az.set(zvars[i], zvals[i]);
          if (p.prob(az) > 0 && !m.query_all_values(t.X, t.Y, t.Z, az))
            member = false;
          int i = static_cast<int>(zvars.size()) - 1;
          while (i >= 0 && zvals[i] == p.domain_size(zvars[i]) - 1)
            zvals[i--] = 0;
          if (i < 0) break;
          ++zvals[i];
        }
      }
      if (member) out.add(t);
    }
    int i = 0;
    while (i < n && slot[i] == 3) slot[i++] = 0;
    if (i == n) break;
    ++slot[i];
  }
  out.set_closed_flag(is_closed(out).closed);
  return out;
}

namespace {

// Memoized set- and value-level queries for the Eq.-8 scan.
struct ScanOracle {
  const InstantiatedModel& m;
  std::map<std::uint64_t, bool> set_memo;
  std::map<std::tuple<std::uint32_t, std::uint32_t, VariableId, int>, bool>
      value_memo;

  bool set_level(VarSet X, VarSet Y) {
    const Triplet c = normalize(Triplet{X, Y, VarSet{}});
    if (c.trivial()) return true;
    const auto [it, fresh] = set_memo.try_emplace(c.pack(), false);
    if (fresh)
      it->second =
          m.tabular_backed()
              ? tabular_independent(m.tabular(), c.X, c.Y, VarSet{})
              : gaussian_independent(m.gaussian(), c.X, c.Y, VarSet{});
    return it->second;
  }

  // Throws ZeroEvidenceError for tabular backings when P(e=val) = 0.
  bool value_level(VarSet X, VarSet Y, VariableId e, int val) {
    const Triplet c = normalize(Triplet{X, Y, VarSet::single(e)});
    const auto key = std::make_tuple(c.X.bits, c.Y.bits, e,
                                     m.tabular_backed() ? val : 0);
    const auto it = value_memo.find(key);
    if (it != value_memo.end()) return it->second;
    Assignment z;
    z.set(e, val);
    const bool ans = m.query_all_values(c.X, c.Y, VarSet::single(e), z);
    value_memo.emplace(key, ans);
    return ans;
  }
};

void audit_cells(const Universe& u, VariableId a, VariableId b, VariableId e,
                 const VarSet cells[8]) {
  VarSet all;
  int total = 0;
  for (int i = 0; i < 8; ++i) {
    all = all | cells[i];
    total += cells[i].size();
  }
  const VarSet a_union = cells[0] | cells[1] | cells[2] | cells[3];
  const VarSet b_union = cells[4] | cells[5] | cells[6] | cells[7];
  // The two per-value partitions must reconstruct the cells exactly.
  const VarSet a_p = cells[0] | cells[2], a_hp = cells[1] | cells[3];
  const VarSet a_pp = cells[0] | cells[1], a_hpp = cells[2] | cells[3];
  const VarSet b_p = cells[4] | cells[6], b_hp = cells[5] | cells[7];
  const VarSet b_pp = cells[4] | cells[5], b_hpp = cells[6] | cells[7];
  const bool ok =
      total == all.size() && all == (u.all() - VarSet::single(e)) &&
      cells[0].contains(a) && cells[4].contains(b) && !all.contains(e) &&
      (a_p | a_hp) == a_union && a_p.disjoint(a_hp) &&
      (a_pp | a_hpp) == a_union && a_pp.disjoint(a_hpp) &&
      (b_p | b_hp) == b_union && b_p.disjoint(b_hp) &&
      (b_pp | b_hpp) == b_union && b_pp.disjoint(b_hpp) &&
      cells[0] == (a_p & a_pp) && cells[1] == (a_hp & a_pp) &&
      cells[2] == (a_p & a_hpp) && cells[3] == (a_hp & a_hpp) &&
      cells[4] == (b_p & b_pp) && cells[5] == (b_hp & b_pp) &&
      cells[6] == (b_p & b_hpp) && cells[7] == (b_hp & b_hpp);
  if (!ok) throw Error("cell reconstruction identities violated");
}

}  // namespace

PropTransReport check_propositional_transitivity(const InstantiatedModel& m,
                                                 VariableId a, VariableId b,
                                                 int max_vars) {
  const Universe& u = m.universe();
  const int n = u.size();
  if (n > max_vars)
    throw CapacityError("propositional-transitivity scan: universe size " +
                        std::to_string(n) + " exceeds cap " +
                        std::to_string(max_vars));
  if (a == b || a < 0 || b < 0 || a >= n || b >= n)
    throw DomainError("scan requires two distinct variables");

  PropTransReport report;
  report.pass = true;
  ScanOracle oracle{m, {}, {}};

  for (VariableId e : (u.all() - VarSet::single(a) - VarSet::single(b))
                          .members()) {
    // Ordered pairs of distinct values of e. Gaussian value-level queries
    // are value-free, so one representative pair stands for them all.
    std::vector<std::pair<int, int>> value_pairs;
    if (m.tabular_backed()) {
      const int d = m.tabular().domain_size(e);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (i != j) value_pairs.emplace_back(i, j);
    } else {
      value_pairs.emplace_back(0, 1);
    }

    const std::vector<VariableId> rest =
        (u.all() - VarSet::of({a, b, e})).members();
    std::vector<int> assign(rest.size(), 0);  // cell index 0..7 per variable

    while (true) {
      VarSet cells[8];
      cells[0].insert(a);
      cells[4].insert(b);
      for (std::size_t i = 0; i < rest.size(); ++i)
        cells[assign[i]].insert(rest[i]);
      audit_cells(u, a, b, e, cells);

      const VarSet A = cells[0] | cells[1] | cells[2] | cells[3];
      const VarSet B = cells[4] | cells[5] | cells[6] | cells[7];
      const bool ant1 = oracle.set_level(A, B);

      for (const auto& [e1, e2] : value_pairs) {
        ++report.checked_instances;
        if (!ant1) continue;
        bool ant2 = false, ant3 = false;
        try {
          // I(A1 A2 B3 B4, B1 B2 A3 A4; e = e')
          ant2 = oracle.value_level(cells[0] | cells[1] | cells[6] | cells[7],
                                    cells[4] | cells[5] | cells[2] | cells[3],
                                    e, e1);
          if (ant2)
            // I(A1 A3 B2 B4, B1 B3 A2 A4; e = e'')
            ant3 = oracle.value_level(
                cells[0] | cells[2] | cells[5] | cells[7],
                cells[4] | cells[6] | cells[1] | cells[3], e, e2);
        } catch (const ZeroEvidenceError&) {
          ++report.skipped_zero_evidence;
          continue;
        }
        if (!(ant2 && ant3)) continue;
        ++report.antecedent_hits;

        const bool c1 = oracle.set_level(cells[0], u.all() - cells[0]);
        const bool c2 = c1 || oracle.set_level(cells[4], u.all() - cells[4]);
        if (!c1 && !c2) {
          report.pass = false;
          PropTransViolation v;
          for (int i = 0; i < 4; ++i) {
            v.cells_a[i] = cells[i];
            v.cells_b[i] = cells[4 + i];
          }
          v.e = e;
          v.e_prime = e1;
          v.e_dprime = e2;
          v.first_disjunct = c1;
          v.second_disjunct = false;
          report.violation = v;
          return report;
        }
      }

      int i = static_cast<int>(rest.size()) - 1;
      while (i >= 0 && assign[i] == 7) assign[i--] = 0;
      if (i < 0) break;
      ++assign[i];
    }
  }
  return report;
}

UnificationReport check_unification(const GaussianModel& g,
                                    const std::vector<VarSet>& zsets,
                                    const std::vector<double>& grid_values,
                                    double tolerance) {
  if (grid_values.size() < 2)
    throw InputError("unification grid needs at least two values");

  std::vector<VarSet> sets = zsets;
  if (sets.empty())
    for (int v = 0; v < g.universe().size(); ++v)
      sets.push_back(VarSet::single(v));

  UnificationReport report;
  report.pass = true;
  for (VarSet Z : sets) {
    if (Z.empty() || !Z.subset_of(g.universe().all()))
      throw DomainError("bad conditioning set in unification check");
    const int k = Z.size();
    std::vector<int> pick(k, 0);
    bool have_ref = false;
    Eigen::MatrixXd ref;
    while (true) {
      Eigen::VectorXd z(k);
      for (int i = 0; i < k; ++i) z(i) = grid_values[pick[i]];
      const Eigen::MatrixXd cov = gaussian_conditional(g, Z, z).covariance();
      if (!have_ref) {
        ref = cov;
        have_ref = true;
      } else {
        const double dev = (cov - ref).cwiseAbs().maxCoeff();
        if (dev > report.max_deviation) {
          report.max_deviation = dev;
          report.worst_z = Z;
        }
      }
      int i = k - 1;
      while (i >= 0 && pick[i] == static_cast<int>(grid_values.size()) - 1)
        pick[i--] = 0;
      if (i < 0) break;
      ++pick[i];
    }
  }
  report.pass = report.max_deviation <= tolerance;
  return report;
}

}  // namespace graphoid
