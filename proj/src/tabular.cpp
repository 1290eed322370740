#include "graphoid/tabular.hpp"

#include <algorithm>
#include <numeric>

#include "graphoid/errors.hpp"

namespace graphoid {

void Assignment::set(VariableId v, int value_index) {
  if (vars_.contains(v)) {
    for (auto& [var, val] : items_)
      if (var == v) {
        val = value_index;
        return;
      }
  }
  vars_.insert(v);
  items_.emplace_back(v, value_index);
  std::sort(items_.begin(), items_.end());
}

int Assignment::value(VariableId v) const {
  for (const auto& [var, val] : items_)
    if (var == v) return val;
  throw DomainError("assignment does not cover variable index " +
                    std::to_string(v));
}

TabularDistribution::TabularDistribution(std::vector<TabularVariable> vars,
                                         std::vector<Rational> cells)
    : vars_(std::move(vars)), cells_(std::move(cells)) {
  std::vector<std::string> names;
  names.reserve(vars_.size());
  std::size_t expected = 1;
  for (const auto& v : vars_) {
    if (v.domain.empty())
      throw InputError("variable " + v.name + " has an empty domain");
    names.push_back(v.name);
    expected *= v.domain.size();
  }
  universe_ = Universe(std::move(names));
  if (cells_.size() != expected)
    throw InputError("cell count " + std::to_string(cells_.size()) +
                     " does not cover the product space of size " +
                     std::to_string(expected));
  strides_.assign(vars_.size(), 1);
  for (int i = static_cast<int>(vars_.size()) - 2; i >= 0; --i)
    strides_[i] = strides_[i + 1] * vars_[i + 1].domain.size();

  Rational total = 0;
  for (const auto& c : cells_) {
    if (c < 0) throw InputError("negative cell probability");
    total += c;
  }
  if (total != 1)
    throw InputError("cell probabilities sum to " + format_rational(total) +
                     ", not 1");
}

std::size_t TabularDistribution::index_of(const std::vector<int>& values) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < vars_.size(); ++i) idx += strides_[i] * values[i];
  return idx;
}

std::vector<int> TabularDistribution::values_at(std::size_t index) const {
  std::vector<int> values(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    values[i] = static_cast<int>(index / strides_[i]);
    index %= strides_[i];
  }
  return values;
}

const Rational& TabularDistribution::prob(const std::vector<int>& values) const {
  return cells_[index_of(values)];
}

Rational TabularDistribution::prob(const Assignment& partial) const {
  Rational total = 0;
  for (std::size_t idx = 0; idx < cells_.size(); ++idx) {
    const std::vector<int> v = values_at(idx);
    bool consistent = true;
    for (const auto& [var, val] : partial.items())
      if (v[var] != val) {
        consistent = false;
        break;
      }
    if (consistent) total += cells_[idx];
  }
  return total;
}

int TabularDistribution::value_index(VariableId v,
                                     const std::string& value) const {
  const auto& dom = vars_.at(v).domain;
  const auto it = std::find(dom.begin(), dom.end(), value);
  if (it == dom.end())
    throw InputError("value \"" + value + "\" not in domain of " +
                     vars_[v].name);
  return static_cast<int>(it - dom.begin());
}

bool TabularDistribution::strictly_positive() const {
  return std::all_of(cells_.begin(), cells_.end(),
                     [](const Rational& c) { return c > 0; });
}

namespace {

// Odds and ends shared by the marginal/independence routines: a subset's
// variables in universe order plus the mixed-radix layout of its marginal.
struct SubsetLayout {
  std::vector<VariableId> vars;
  std::vector<std::size_t> stride;  // per member, aligned with vars
  std::size_t cells = 1;

  SubsetLayout(const TabularDistribution& p, VarSet s) {
    vars = s.members();
    stride.assign(vars.size(), 1);
    for (int i = static_cast<int>(vars.size()) - 2; i >= 0; --i)
      stride[i] = stride[i + 1] * p.domain_size(vars[i + 1]);
    for (VariableId v : vars) cells *= p.domain_size(v);
  }

  std::size_t index(const std::vector<int>& full_values) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < vars.size(); ++i)
      idx += stride[i] * full_values[vars[i]];
    return idx;
  }
};

std::vector<Rational> compute_marginal(const TabularDistribution& p, VarSet s) {
  const SubsetLayout layout(p, s);
  std::vector<Rational> out(layout.cells, Rational(0));
  for (std::size_t idx = 0; idx < p.cell_count(); ++idx) {
    const std::vector<int> values = p.values_at(idx);
    out[layout.index(values)] += p.cells()[idx];
  }
  return out;
}

}  // namespace

const std::vector<Rational>& MarginalCache::marginal(VarSet s) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = tables_.find(s.bits);
  if (it == tables_.end())
    it = tables_.emplace(s.bits, compute_marginal(p_, s)).first;
  return it->second;
}

Rational MarginalCache::prob(const Assignment& a) {
  const auto& table = marginal(a.vars());
  const SubsetLayout layout(p_, a.vars());
  std::vector<int> values(p_.var_count(), 0);
  for (const auto& [var, val] : a.items()) values[var] = val;
  return table[layout.index(values)];
}

TabularDistribution marginalize(const TabularDistribution& p, VarSet s) {
  if (!s.subset_of(p.universe().all()))
    throw DomainError("marginalize: set is not a subset of the variables");
  std::vector<TabularVariable> vars;
  for (VariableId v : s.members()) vars.push_back(p.variables()[v]);
  return TabularDistribution(std::move(vars), compute_marginal(p, s));
}

TabularDistribution condition_on(const TabularDistribution& p,
                                 const Assignment& e) {
  if (!e.vars().subset_of(p.universe().all()))
    throw DomainError("condition_on: evidence outside the variables");
  if (e.empty()) return p;
  const Rational mass = p.prob(e);
  if (mass == 0)
    throw ZeroEvidenceError("conditioning event has probability zero");

  const VarSet keep = p.universe().all() - e.vars();
  const SubsetLayout layout(p, keep);
  std::vector<Rational> cells(layout.cells, Rational(0));
  for (std::size_t idx = 0; idx < p.cell_count(); ++idx) {
    const std::vector<int> values = p.values_at(idx);
    bool consistent = true;
    for (const auto& [var, val] : e.items())
      if (values[var] != val) {
        consistent = false;
        break;
      }
    if (consistent) cells[layout.index(values)] += p.cells()[idx] / mass;
  }
  std::vector<TabularVariable> vars;
  for (VariableId v : keep.members()) vars.push_back(p.variables()[v]);
  return TabularDistribution(std::move(vars), std::move(cells));
}

TabularDistribution restrict_domain(const TabularDistribution& p,
                                    VariableId v,
                                    const std::vector<int>& keep) {
  if (keep.empty()) throw InputError("restrict_domain: empty value list");
  std::vector<int> pos(p.domain_size(v), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= p.domain_size(v))
      throw InputError("restrict_domain: value index out of range");
    if (pos[keep[i]] != -1)
      throw InputError("restrict_domain: duplicate value index");
    pos[keep[i]] = static_cast<int>(i);
  }

  std::vector<TabularVariable> vars = p.variables();
  std::vector<std::string> dom;
  for (int k : keep) dom.push_back(vars[v].domain[k]);
  vars[v].domain = std::move(dom);

  Rational mass = 0;
  for (std::size_t idx = 0; idx < p.cell_count(); ++idx)
    if (pos[p.values_at(idx)[v]] != -1) mass += p.cells()[idx];
  if (mass == 0)
    throw ZeroEvidenceError("restriction keeps zero probability mass");

  std::size_t count = 1;
  for (const auto& tv : vars) count *= tv.domain.size();
  std::vector<std::size_t> stride(vars.size(), 1);
  for (int i = static_cast<int>(vars.size()) - 2; i >= 0; --i)
    stride[i] = stride[i + 1] * vars[i + 1].domain.size();

  std::vector<Rational> cells(count, Rational(0));
  for (std::size_t idx = 0; idx < p.cell_count(); ++idx) {
    std::vector<int> values = p.values_at(idx);
    if (pos[values[v]] == -1) continue;
    values[v] = pos[values[v]];
    std::size_t new_idx = 0;
    for (std::size_t i = 0; i < vars.size(); ++i)
      new_idx += stride[i] * values[i];
    cells[new_idx] += p.cells()[idx] / mass;
  }
  return TabularDistribution(std::move(vars), std::move(cells));
}

namespace {

// Iterates every value tuple of the variables in `set` (odometer order) and
// calls fn with a full-width value vector (unset variables stay 0).
template <typename Fn>
void for_each_tuple(const TabularDistribution& p, VarSet set, Fn&& fn) {
  const std::vector<VariableId> vars = set.members();
  std::vector<int> values(p.var_count(), 0);
  while (true) {
    fn(values);
    int i = static_cast<int>(vars.size()) - 1;
    while (i >= 0 && values[vars[i]] == p.domain_size(vars[i]) - 1)
      values[vars[i--]] = 0;
    if (i < 0) break;
    ++values[vars[i]];
  }
}

bool independent_impl(MarginalCache& cache, VarSet X, VarSet Y, VarSet Z) {
  require_disjoint(X, Y, Z);
  const TabularDistribution& p = cache.distribution();
  if (!(X | Y | Z).subset_of(p.universe().all()))
    throw InvalidTripletError("independence query outside the variables");
  if (X.empty() || Y.empty()) return true;

  const auto& m_xyz = cache.marginal(X | Y | Z);
  const auto& m_xz = cache.marginal(X | Z);
  const auto& m_yz = cache.marginal(Y | Z);
  const auto& m_z = cache.marginal(Z);
  const SubsetLayout l_xyz(p, X | Y | Z), l_xz(p, X | Z), l_yz(p, Y | Z),
      l_z(p, Z);

  bool ok = true;
  for_each_tuple(p, X | Y | Z, [&](const std::vector<int>& values) {
    if (!ok) return;
    // P(XYZ)*P(Z) = P(XZ)*P(YZ); exact, division-free, vacuous at P(Z)=0.
    if (m_xyz[l_xyz.index(values)] * m_z[l_z.index(values)] !=
        m_xz[l_xz.index(values)] * m_yz[l_yz.index(values)])
      ok = false;
  });
  return ok;
}

bool independent_at_impl(MarginalCache& cache, VarSet X, VarSet Y, VarSet Z,
                         const Assignment& z) {
  require_disjoint(X, Y, Z);
  const TabularDistribution& p = cache.distribution();
  if (!(X | Y | Z).subset_of(p.universe().all()))
    throw InvalidTripletError("independence query outside the variables");
  if (z.vars() != Z)
    throw DomainError("value assignment must cover exactly Z");
  if (p.prob(z) == 0)
    throw ZeroEvidenceError("P(Z=z) is zero; the query is undefined");
  if (X.empty() || Y.empty()) return true;

  const auto& m_xyz = cache.marginal(X | Y | Z);
  const auto& m_xz = cache.marginal(X | Z);
  const auto& m_yz = cache.marginal(Y | Z);
  const auto& m_z = cache.marginal(Z);
  const SubsetLayout l_xyz(p, X | Y | Z), l_xz(p, X | Z), l_yz(p, Y | Z),
      l_z(p, Z);

  bool ok = true;
  for_each_tuple(p, X | Y, [&](std::vector<int>& values) {
    if (!ok) return;
    for (const auto& [var, val] : z.items()) values[var] = val;
    if (m_xyz[l_xyz.index(values)] * m_z[l_z.index(values)] !=
        m_xz[l_xz.index(values)] * m_yz[l_yz.index(values)])
      ok = false;
  });
  return ok;
}

}  // namespace

bool tabular_independent(MarginalCache& cache, VarSet X, VarSet Y, VarSet Z) {
  return independent_impl(cache, X, Y, Z);
}

bool tabular_independent(const TabularDistribution& p, VarSet X, VarSet Y,
                         VarSet Z) {
  MarginalCache cache(p);
  return independent_impl(cache, X, Y, Z);
}

bool tabular_independent_at(MarginalCache& cache, VarSet X, VarSet Y, VarSet Z,
                            const Assignment& z) {
  return independent_at_impl(cache, X, Y, Z, z);
}

bool tabular_independent_at(const TabularDistribution& p, VarSet X, VarSet Y,
                            VarSet Z, const Assignment& z) {
  MarginalCache cache(p);
  return independent_at_impl(cache, X, Y, Z, z);
}

TabularOracle::TabularOracle(std::shared_ptr<const TabularDistribution> p)
    : p_(std::move(p)), cache_(*p_) {}

const Universe& TabularOracle::universe() const { return p_->universe(); }

bool TabularOracle::contains(const Triplet& t) const {
  const Triplet c = normalize(t);
  if (c.trivial()) return true;
  const std::uint64_t key = c.pack();
  {
    std::lock_guard<std::mutex> lock(mu_);
    const auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  const bool ans = independent_impl(cache_, c.X, c.Y, c.Z);
  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(key, ans);
  return ans;
}

}  // namespace graphoid
