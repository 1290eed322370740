#ifndef GRAPHOID_DEPENDENCY_MODEL_HPP
#define GRAPHOID_DEPENDENCY_MODEL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "graphoid/triplet.hpp"
#include "graphoid/varset.hpp"

namespace graphoid {

inline constexpr int kDefaultCloseCap = 10;  // triplet space is 4^n

enum class Axiom {
  kTrivialIndependence,  // I(X,0;Z)
  kSymmetry,             // I(X,Y;Z) => I(Y,X;Z)
  kDecomposition,        // I(X,Y+W;Z) => I(X,Y;Z)
  kWeakUnion,            // I(X,Y+W;Z) => I(X,Y;Z+W)
  kContraction,          // I(X,Y;Z) & I(X,W;Z+Y) => I(X,Y+W;Z)
};

const char* axiom_name(Axiom a);

// A single failed axiom application: the premise statement(s) are members of
// the model, `missing` is the consequence that is not.
struct AxiomViolation {
  Axiom axiom;
  Triplet premise1;
  std::optional<Triplet> premise2;
  Triplet missing;
};

struct ClosednessReport {
  bool closed = false;
  std::optional<AxiomViolation> violation;
};

// A set of canonical independence triplets over a finite universe.
// Trivial (empty-side) statements are treated as always present and are
// never stored. Symmetry is absorbed by the canonical triplet form.
class DependencyModel {
 public:
  DependencyModel() = default;
  explicit DependencyModel(Universe u);

  const Universe& universe() const { return universe_; }

  // Normalizes, validates variable ids against the universe, and inserts.
  // Trivial statements are accepted and dropped. Returns true if new.
  bool add(const Triplet& t);
  bool add(VarSet X, VarSet Y, VarSet Z) { return add(Triplet{X, Y, Z}); }

  // Membership under the model's conventions: trivial statements are
  // members of every model; symmetry is free.
  bool contains(const Triplet& t) const;
  bool contains(VarSet X, VarSet Y, VarSet Z) const {
    return contains(Triplet{X, Y, Z});
  }

  // Stored (non-trivial, canonical) statements in increasing packed-key
  // order; the deterministic iteration order used by witnesses and exports.
  std::vector<Triplet> statements() const;
  std::size_t statement_count() const { return keys_.size(); }

  bool closed_flag() const { return closed_flag_; }
  void set_closed_flag(bool v) { closed_flag_ = v; }

 private:
  friend DependencyModel close(const DependencyModel&, int);
  Universe universe_;
  std::unordered_set<std::uint64_t> keys_;
  bool closed_flag_ = false;
};

// Least superset of m closed under the graphoid axioms, computed by a
// worklist over single-rule applications. Throws CapacityError when the
// universe exceeds max_vars.
DependencyModel close(const DependencyModel& m, int max_vars = kDefaultCloseCap);

// True iff every single axiom application to statements of m yields a
// statement of m; otherwise reports the first violation in the fixed
// statement/axiom scan order.
ClosednessReport is_closed(const DependencyModel& m);

}  // namespace graphoid

#endif  // GRAPHOID_DEPENDENCY_MODEL_HPP
