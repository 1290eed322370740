#include "graphoid/varset.hpp"

#include <algorithm>

namespace graphoid {

std::vector<VarSet> subsets_by_cardinality(VarSet mask) {
  const std::vector<VariableId> elems = mask.members();
  const int m = static_cast<int>(elems.size());
  std::vector<VarSet> out;
  out.reserve(std::size_t{1} << m);
  out.push_back(VarSet{});
  for (int k = 1; k <= m; ++k) {
    // Standard lexicographic combination enumeration over elems.
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      VarSet s;
      for (int i : idx) s.insert(elems[i]);
      out.push_back(s);
      int i = k - 1;
      while (i >= 0 && idx[i] == m - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
  // 21 variables keeps a packed triplet (3 x 21 bits) inside 64 bits; every
  // exhaustive procedure here caps out far below that anyway.
  if (names_.size() > 21)
    throw InputError("universes support at most 21 variables");
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    if (names_[i].empty()) throw InputError("empty variable name");
    if (!index_.emplace(names_[i], i).second)
      throw InputError("duplicate variable name: " + names_[i]);
  }
}

VariableId Universe::id(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw InputError("unknown variable: " + name);
  return it->second;
}

std::vector<std::string> Universe::names_of(VarSet s) const {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (VariableId v : s.members()) out.push_back(name(v));
  return out;
}

VarSet Universe::set_of(const std::vector<std::string>& names) const {
  VarSet s;
  for (const auto& n : names) s.insert(id(n));
  return s;
}

}  // namespace graphoid
