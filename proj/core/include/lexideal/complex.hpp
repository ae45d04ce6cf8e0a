#ifndef LEXIDEAL_COMPLEX_HPP
#define LEXIDEAL_COMPLEX_HPP

#include <string>
#include <vector>

#include "lexideal/ideal.hpp"

namespace lexideal {

/// A simplicial complex on the vertex set [n], stored by its facet antichain
/// in canonical order (cardinality, then index sequence).
///
/// Two degenerate complexes are distinguished, because Hochster's formula is
/// sensitive to the difference: the void complex (no faces at all, facet list
/// empty, Stanley-Reisner ideal (1)) and the irrelevant complex { emptyset }
/// (one empty facet, Stanley-Reisner ideal (x_1..x_n)).
class SimplicialComplex {
public:
  explicit SimplicialComplex(Ring ring) : ring_(ring) {}
  /// Builds the complex generated by `faces`: keeps the maximal ones.
  SimplicialComplex(Ring ring, const std::vector<VarSet>& faces);

  const Ring& ring() const { return ring_; }
  const std::vector<VarSet>& facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }
  bool is_irrelevant() const { return facets_.size() == 1 && facets_.front() == 0; }
  /// dim = max facet cardinality - 1; -1 for the irrelevant complex.
  int dim() const;

  bool is_face(VarSet sigma) const;
  /// True when some vertex lies in every facet (a cone, hence acyclic).
  bool is_cone() const;

  std::string str() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
  Ring ring_;
  std::vector<VarSet> facets_;
};

/// Face counts f_{-1}..f_{dim}; counts[k] is the number of faces of
/// cardinality k (so counts[0] = f_{-1} = 1 for any nonvoid complex).
struct FVector {
  std::vector<long long> counts;

  long long f(int dim) const {
    int k = dim + 1;
    return (k >= 0 && k < (int)counts.size()) ? counts[k] : 0;
  }
  long long total() const;

  friend bool operator==(const FVector&, const FVector&) = default;
};

/// Stanley-Reisner complex of a squarefree ideal: faces are the subsets whose
/// monomial avoids I. Generic path; guarded at n <= 25.
SimplicialComplex complex_of_ideal(const MonomialIdeal& I);

/// Stanley-Reisner ideal: generated by the minimal non-faces.
MonomialIdeal ideal_of_complex(const SimplicialComplex& cx);

/// The oracle decomposition I_Delta = intersection of P_{F^c} over facets F.
Decomposition facet_decomposition(const SimplicialComplex& cx);

/// i-skeleton: all faces of dimension <= i.
SimplicialComplex skeleton(const SimplicialComplex& cx, int i);

/// Pure i-skeleton: generated by the faces of dimension exactly i.
SimplicialComplex pure_skeleton(const SimplicialComplex& cx, int i);

/// link(cx, sigma) = { tau : tau disjoint sigma, tau union sigma a face }.
SimplicialComplex link(const SimplicialComplex& cx, VarSet sigma);

/// Induced subcomplex on the vertex subset sigma.
SimplicialComplex induced(const SimplicialComplex& cx, VarSet sigma);

/// All distinct faces (including the empty face). Guarded by the face-count
/// limit (default 2^20, raisable via LEXIDEAL_GUARD_FACES).
std::vector<VarSet> all_faces(const SimplicialComplex& cx);

FVector f_vector(const SimplicialComplex& cx);

/// e(k[Delta]) = number of top-dimensional faces.
long long multiplicity(const SimplicialComplex& cx);

/// All inclusion-minimal vertex covers of the graph whose edge ideal is I
/// (every generator must have degree 2). Deliberately brute force over the
/// 2^n vertex subsets, independent of the transversal machinery, so it can
/// serve as an oracle; guarded at n <= 20.
std::vector<VarSet> minimal_vertex_covers(const MonomialIdeal& edge_ideal);

/// Current face-count guard (2^20 unless LEXIDEAL_GUARD_FACES is set).
long long face_guard_limit();

}  // namespace lexideal

#endif
