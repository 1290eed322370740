#include "graphoid/dependency_model.hpp"

#include <algorithm>
#include <deque>

#include "graphoid/errors.hpp"

namespace graphoid {

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::kTrivialIndependence: return "trivial-independence";
    case Axiom::kSymmetry: return "symmetry";
    case Axiom::kDecomposition: return "decomposition";
    case Axiom::kWeakUnion: return "weak-union";
    case Axiom::kContraction: return "contraction";
  }
  return "?";
}

DependencyModel::DependencyModel(Universe u) : universe_(std::move(u)) {}

bool DependencyModel::add(const Triplet& t) {
  const Triplet c = normalize(t);
  if (!(c.X | c.Y | c.Z).subset_of(universe_.all()))
    throw InvalidTripletError("triplet mentions variables outside universe");
  if (c.trivial()) return false;  // always-present, never stored
  const bool inserted = keys_.insert(c.pack()).second;
  if (inserted) closed_flag_ = false;
  return inserted;
}

bool DependencyModel::contains(const Triplet& t) const {
  const Triplet c = normalize(t);
  if (!(c.X | c.Y | c.Z).subset_of(universe_.all()))
    throw InvalidTripletError("triplet mentions variables outside universe");
  if (c.trivial()) return true;
  return keys_.count(c.pack()) > 0;
}

std::vector<Triplet> DependencyModel::statements() const {
  std::vector<std::uint64_t> keys(keys_.begin(), keys_.end());
  std::sort(keys.begin(), keys.end());
  std::vector<Triplet> out;
  out.reserve(keys.size());
  for (auto k : keys) out.push_back(Triplet::unpack(k));
  return out;
}

namespace {

// Nonempty subsets of q, increasing bitmask order.
template <typename Fn>
void for_each_nonempty_subset(VarSet q, Fn&& fn) {
  for_each_subset(q, [&](VarSet s) {
    if (!s.empty()) fn(s);
  });
}

}  // namespace

DependencyModel close(const DependencyModel& m, int max_vars) {
  const int n = m.universe().size();
  if (n > max_vars)
    throw CapacityError("close: universe size " + std::to_string(n) +
                        " exceeds cap " + std::to_string(max_vars));

  DependencyModel result = m;
  std::deque<Triplet> work;
  for (const Triplet& t : result.statements()) work.push_back(t);

  const VarSet all = m.universe().all();
  auto derive = [&](VarSet X, VarSet Y, VarSet Z) {
    const Triplet c = normalize(Triplet{X, Y, Z});
    if (c.trivial()) return;
    if (result.keys_.insert(c.pack()).second) work.push_back(c);
  };

  while (!work.empty()) {
    const Triplet t = work.front();
    work.pop_front();
    const VarSet sides[2][2] = {{t.X, t.Y}, {t.Y, t.X}};
    for (const auto& side : sides) {
      const VarSet P = side[0], Q = side[1];
      // Decomposition and weak union over every split of the Q side.
      for_each_nonempty_subset(Q, [&](VarSet S) {
        if (S == Q) return;
        derive(P, S, t.Z);                 // Eq. 4
        derive(P, S, t.Z | (Q - S));       // Eq. 5
      });
      // Contraction with t as the first premise:
      // I(P,Q;Z) & I(P,W;Z+Q) => I(P,Q+W;Z).
      const VarSet rest = all - (P | Q | t.Z);
      for_each_nonempty_subset(rest, [&](VarSet W) {
        if (result.contains(P, W, t.Z | Q)) derive(P, Q | W, t.Z);
      });
      // Contraction with t as the second premise: t = I(P,W;Zc+Yc) pairs
      // with I(P,Yc;Zc) for every nonempty Yc inside t.Z.
      for_each_nonempty_subset(t.Z, [&](VarSet Yc) {
        if (result.contains(P, Yc, t.Z - Yc)) derive(P, Q | Yc, t.Z - Yc);
      });
    }
  }
  result.set_closed_flag(true);
  return result;
}

ClosednessReport is_closed(const DependencyModel& m) {
  const VarSet all = m.universe().all();
  const std::vector<Triplet> stmts = m.statements();

  std::optional<AxiomViolation> violation;
  auto scan_orientations = [&](const Triplet& t, auto&& fn) {
    const VarSet sides[2][2] = {{t.X, t.Y}, {t.Y, t.X}};
    for (const auto& side : sides) {
      fn(side[0], side[1]);
      if (violation) return;
    }
  };

  for (const Triplet& t : stmts) {
    scan_orientations(t, [&](VarSet P, VarSet Q) {
      for_each_nonempty_subset(Q, [&](VarSet S) {
        if (violation || S == Q) return;
        if (!m.contains(P, S, t.Z))
          violation = AxiomViolation{Axiom::kDecomposition, t, std::nullopt,
                                     normalize(Triplet{P, S, t.Z})};
      });
    });
    if (violation) break;
    scan_orientations(t, [&](VarSet P, VarSet Q) {
      for_each_nonempty_subset(Q, [&](VarSet S) {
        if (violation || S == Q) return;
        if (!m.contains(P, S, t.Z | (Q - S)))
          violation = AxiomViolation{Axiom::kWeakUnion, t, std::nullopt,
                                     normalize(Triplet{P, S, t.Z | (Q - S)})};
      });
    });
    if (violation) break;
    scan_orientations(t, [&](VarSet P, VarSet Q) {
      const VarSet rest = all - (P | Q | t.Z);
      for_each_nonempty_subset(rest, [&](VarSet W) {
        if (violation) return;
        if (m.contains(P, W, t.Z | Q) && !m.contains(P, Q | W, t.Z))
          violation =
              AxiomViolation{Axiom::kContraction, t,
                             normalize(Triplet{P, W, t.Z | Q}),
                             normalize(Triplet{P, Q | W, t.Z})};
      });
    });
    if (violation) break;
  }
  return ClosednessReport{!violation.has_value(), violation};
}

}  // namespace graphoid
