#include "graphoid/triplet.hpp"

#include "graphoid/errors.hpp"

namespace graphoid {

void require_disjoint(VarSet X, VarSet Y, VarSet Z) {
  if (!X.disjoint(Y) || !X.disjoint(Z) || !Y.disjoint(Z))
    throw InvalidTripletError("triplet sets are not pairwise disjoint");
}

Triplet normalize(const Triplet& t) {
  require_disjoint(t.X, t.Y, t.Z);
  // Canonical slot order: an empty side goes to Y; otherwise the smaller
  // bitmask goes to X.
  const bool swap = (t.X.empty() && !t.Y.empty()) ||
                    (!t.X.empty() && !t.Y.empty() && t.Y < t.X);
  return swap ? Triplet{t.Y, t.X, t.Z} : t;
}

}  // namespace graphoid
