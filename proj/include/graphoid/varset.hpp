#ifndef GRAPHOID_VARSET_HPP
#define GRAPHOID_VARSET_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "graphoid/errors.hpp"

namespace graphoid {

// Index into a Universe's ordered variable list.
using VariableId = int;

// A subset of the universe, stored as a bitmask over variable indices.
// Supports at most kMaxVars variables; all set algebra is exact.
struct VarSet {
  static constexpr int kMaxVars = 32;

  std::uint32_t bits = 0;

  constexpr VarSet() = default;
  constexpr explicit VarSet(std::uint32_t mask) : bits(mask) {}

  static VarSet single(VariableId v) { return VarSet(std::uint32_t{1} << v); }
  static VarSet full(int n) {
    return VarSet(n == kMaxVars ? ~std::uint32_t{0}
                                : (std::uint32_t{1} << n) - 1);
  }
  template <typename It>
  static VarSet of(It first, It last) {
    VarSet s;
    for (; first != last; ++first) s.insert(*first);
    return s;
  }
  static VarSet of(std::initializer_list<VariableId> ids) {
    return of(ids.begin(), ids.end());
  }

  bool empty() const { return bits == 0; }
  int size() const { return std::popcount(bits); }
  bool contains(VariableId v) const { return (bits >> v) & 1u; }
  void insert(VariableId v) { bits |= std::uint32_t{1} << v; }
  void erase(VariableId v) { bits &= ~(std::uint32_t{1} << v); }
  VariableId lowest() const { return std::countr_zero(bits); }

  bool subset_of(VarSet o) const { return (bits & ~o.bits) == 0; }
  bool disjoint(VarSet o) const { return (bits & o.bits) == 0; }

  friend VarSet operator|(VarSet a, VarSet b) { return VarSet(a.bits | b.bits); }
  friend VarSet operator&(VarSet a, VarSet b) { return VarSet(a.bits & b.bits); }
  friend VarSet operator-(VarSet a, VarSet b) { return VarSet(a.bits & ~b.bits); }
  friend bool operator==(VarSet a, VarSet b) { return a.bits == b.bits; }
  friend bool operator!=(VarSet a, VarSet b) { return a.bits != b.bits; }
  // Total order on var-sets by bitmask value; used for canonical forms.
  friend bool operator<(VarSet a, VarSet b) { return a.bits < b.bits; }

  std::vector<VariableId> members() const {
    std::vector<VariableId> out;
    out.reserve(size());
    for (std::uint32_t m = bits; m; m &= m - 1)
      out.push_back(std::countr_zero(m));
    return out;
  }
};

// Calls fn(s) for every subset s of mask, in increasing bitmask order
// (starting with the empty set, ending with mask itself).
template <typename Fn>
void for_each_subset(VarSet mask, Fn&& fn) {
  std::uint32_t s = 0;
  while (true) {
    fn(VarSet(s));
    if (s == mask.bits) break;
    s = (s - mask.bits) & mask.bits;
  }
}

// Subsets of mask ordered by cardinality, lexicographic on sorted member
// lists within each cardinality. This is the fixed enumeration order for
// minimal-parent search and total-independence scans, so that returned
// witnesses are reproducible.
std::vector<VarSet> subsets_by_cardinality(VarSet mask);

// The ordered variable list over which models, distributions, and networks
// are defined. Names are unique and order is significant.
class Universe {
 public:
  Universe() = default;
  explicit Universe(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(VariableId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  VarSet all() const { return VarSet::full(size()); }

  // Throws InputError for unknown names.
  VariableId id(const std::string& name) const;
  bool has(const std::string& name) const { return index_.count(name) > 0; }

  std::vector<std::string> names_of(VarSet s) const;
  // Throws InputError if any name is unknown.
  VarSet set_of(const std::vector<std::string>& names) const;

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VariableId> index_;
};

}  // namespace graphoid

#endif  // GRAPHOID_VARSET_HPP
