#include "transversal.hpp"

#include <algorithm>

namespace lexideal::detail {

std::vector<VarSet> minimal_sets(std::vector<VarSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::stable_sort(sets.begin(), sets.end(),
                   [](VarSet a, VarSet b) { return set_size(a) < set_size(b); });
  std::vector<VarSet> kept;
  for (VarSet s : sets) {
    bool dominated = false;
    for (VarSet k : kept)
      if ((k & ~s) == 0) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(s);
  }
  return kept;
}

std::vector<VarSet> maximal_sets(std::vector<VarSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::stable_sort(sets.begin(), sets.end(),
                   [](VarSet a, VarSet b) { return set_size(a) > set_size(b); });
  std::vector<VarSet> kept;
  for (VarSet s : sets) {
    bool dominated = false;
    for (VarSet k : kept)
      if ((s & ~k) == 0) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(s);
  }
  return kept;
}

std::vector<VarSet> minimal_transversals(int n, const std::vector<VarSet>& edges) {
  std::vector<VarSet> current = {VarSet(0)};
  for (VarSet edge : edges) {
    if (edge == 0) return {};  // the unit monomial is hit by nothing
    std::vector<VarSet> next;
    next.reserve(current.size());
    for (VarSet t : current) {
      if (t & edge) {
        next.push_back(t);
        continue;
      }
      VarSet rest = edge;
      while (rest) {
        VarSet low = rest & (~rest + 1);
        next.push_back(t | low);
        rest &= rest - 1;
      }
    }
    current = minimal_sets(std::move(next));
  }
  (void)n;
  return current;
}

}  // namespace lexideal::detail
