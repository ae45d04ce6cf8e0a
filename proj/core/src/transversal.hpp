#ifndef LEXIDEAL_SRC_TRANSVERSAL_HPP
#define LEXIDEAL_SRC_TRANSVERSAL_HPP

#include <vector>

#include "lexideal/monomial.hpp"

namespace lexideal::detail {

/// All inclusion-minimal subsets of [n] meeting every set in `edges`
/// (Berge's sequential algorithm: extend the minimal transversals one edge at
/// a time and re-minimalize). For an antichain of generator supports this is
/// simultaneously the minimal-prime enumeration and, complemented, the facet
/// enumeration of the Stanley-Reisner complex.
///
/// An empty edge list yields the single empty transversal; an empty edge
/// (unit monomial) yields no transversal at all.
std::vector<VarSet> minimal_transversals(int n, const std::vector<VarSet>& edges);

/// Keep only the inclusion-minimal sets.
std::vector<VarSet> minimal_sets(std::vector<VarSet> sets);
/// Keep only the inclusion-maximal sets.
std::vector<VarSet> maximal_sets(std::vector<VarSet> sets);

}  // namespace lexideal::detail

#endif
