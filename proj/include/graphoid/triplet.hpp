#ifndef GRAPHOID_TRIPLET_HPP
#define GRAPHOID_TRIPLET_HPP

#include <cstdint>

#include "graphoid/varset.hpp"

namespace graphoid {

// An independence statement "X independent of Y given Z" over pairwise
// disjoint var-sets. The canonical form stores the symmetric pair
// {(X,Y;Z),(Y,X;Z)} once: the two sides are ordered by bitmask value, and
// when exactly one side is empty it is placed in the Y slot.
struct Triplet {
  VarSet X, Y, Z;

  friend bool operator==(const Triplet& a, const Triplet& b) {
    return a.X == b.X && a.Y == b.Y && a.Z == b.Z;
  }
  friend bool operator!=(const Triplet& a, const Triplet& b) {
    return !(a == b);
  }

  // Eq. 2 form: one side empty. Such statements hold in every model and are
  // never stored explicitly.
  bool trivial() const { return X.empty() || Y.empty(); }

  // Packs the canonical triplet into a 64-bit key (universe size <= 21).
  std::uint64_t pack() const {
    return std::uint64_t(X.bits) | (std::uint64_t(Y.bits) << 21) |
           (std::uint64_t(Z.bits) << 42);
  }
  static Triplet unpack(std::uint64_t key) {
    constexpr std::uint64_t m = (std::uint64_t{1} << 21) - 1;
    return Triplet{VarSet(std::uint32_t(key & m)),
                   VarSet(std::uint32_t((key >> 21) & m)),
                   VarSet(std::uint32_t((key >> 42) & m))};
  }
};

// Returns the canonical representative of {(X,Y;Z),(Y,X;Z)}. Idempotent.
// Throws InvalidTripletError if the sets are not pairwise disjoint.
Triplet normalize(const Triplet& t);

// Disjointness check shared by every operation that accepts raw set triples.
void require_disjoint(VarSet X, VarSet Y, VarSet Z);

}  // namespace graphoid

#endif  // GRAPHOID_TRIPLET_HPP
