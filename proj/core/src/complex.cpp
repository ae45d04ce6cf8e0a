#include "lexideal/complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

#include "transversal.hpp"

namespace lexideal {

namespace {

bool facet_less(VarSet a, VarSet b) {
  if (set_size(a) != set_size(b)) return set_size(a) < set_size(b);
  return set_to_indices(a) < set_to_indices(b);
}

}  // namespace

SimplicialComplex::SimplicialComplex(Ring ring, const std::vector<VarSet>& faces) : ring_(ring) {
  for (VarSet f : faces)
    if (f & ~full_mask(ring.vars)) fail(Errc::index_out_of_range, "face exceeds vertex set");
  facets_ = detail::maximal_sets(faces);
  std::sort(facets_.begin(), facets_.end(), facet_less);
}

int SimplicialComplex::dim() const {
  if (is_void()) fail(Errc::invalid_argument, "void complex has no dimension");
  int top = 0;
  for (VarSet f : facets_) top = std::max(top, set_size(f));
  return top - 1;
}

bool SimplicialComplex::is_face(VarSet sigma) const {
  for (VarSet f : facets_)
    if ((sigma & ~f) == 0) return true;
  return false;
}

bool SimplicialComplex::is_cone() const {
  if (facets_.empty()) return false;
  VarSet common = facets_.front();
  for (VarSet f : facets_) common &= f;
  return common != 0;
}

std::string SimplicialComplex::str() const {
  if (is_void()) return "<void>";
  std::string out = "<";
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (i) out += ", ";
    out += facets_[i] == 0 ? "{}" : SqfMonomial(ring_, facets_[i]).str();
  }
  return out + ">";
}

long long FVector::total() const {
  long long t = 0;
  for (long long c : counts) t += c;
  return t;
}

SimplicialComplex complex_of_ideal(const MonomialIdeal& I) {
  if (I.is_unit()) fail(Errc::unit_ideal, "the unit ideal is not a Stanley-Reisner ideal");
  if (I.ring().vars > 25) fail(Errc::guard_exceeded, "generic facet enumeration capped at n <= 25");
  if (I.is_zero())  // full simplex
    return SimplicialComplex(I.ring(), {full_mask(I.ring().vars)});
  std::vector<VarSet> supports;
  supports.reserve(I.gens().size());
  for (const SqfMonomial& g : I.gens()) supports.push_back(g.support());
  std::vector<VarSet> facets;
  for (VarSet t : detail::minimal_transversals(I.ring().vars, supports))
    facets.push_back(full_mask(I.ring().vars) & ~t);
  return SimplicialComplex(I.ring(), facets);
}

MonomialIdeal ideal_of_complex(const SimplicialComplex& cx) {
  if (cx.is_void()) return minimalize(cx.ring(), {SqfMonomial(cx.ring(), VarSet(0))});  // (1)
  std::vector<VarSet> complements;
  complements.reserve(cx.facets().size());
  for (VarSet f : cx.facets()) complements.push_back(full_mask(cx.ring().vars) & ~f);
  std::vector<SqfMonomial> gens;
  for (VarSet t : detail::minimal_transversals(cx.ring().vars, complements))
    gens.emplace_back(cx.ring(), t);
  return minimalize(cx.ring(), gens);
}

Decomposition facet_decomposition(const SimplicialComplex& cx) {
  if (cx.is_void()) fail(Errc::unit_ideal, "void complex has no prime decomposition");
  std::vector<PrimeSupport> primes;
  const VarSet all = full_mask(cx.ring().vars);
  for (VarSet f : cx.facets()) {
    if (f == all) return Decomposition(cx.ring());  // full simplex: zero ideal, no components
    primes.emplace_back(cx.ring(), all & ~f);
  }
  return Decomposition::from_primes(cx.ring(), primes);
}

SimplicialComplex skeleton(const SimplicialComplex& cx, int i) {
  if (cx.is_void()) return cx;
  if (i < -1) fail(Errc::invalid_argument, "skeleton dimension below -1");
  std::vector<VarSet> faces;
  for (VarSet f : cx.facets()) {
    if (set_size(f) <= i + 1) {
      faces.push_back(f);
      continue;
    }
    // all (i+1)-subsets of f
    std::vector<int> idx = set_to_indices(f);
    std::vector<int> pick(i + 1);
    for (int j = 0; j <= i; ++j) pick[j] = j;
    while (true) {
      VarSet s = 0;
      for (int j = 0; j <= i; ++j) s |= var_bit(idx[pick[j]]);
      faces.push_back(s);
      int j = i;
      while (j >= 0 && pick[j] == (int)idx.size() - (i + 1 - j)) --j;
      if (j < 0) break;
      ++pick[j];
      for (int t = j + 1; t <= i; ++t) pick[t] = pick[t - 1] + 1;
    }
    if (i + 1 == 0) faces.push_back(0);
  }
  return SimplicialComplex(cx.ring(), faces);
}

SimplicialComplex pure_skeleton(const SimplicialComplex& cx, int i) {
  if (cx.is_void() || i < -1 || (i >= 0 && cx.dim() < i))
    fail(Errc::no_faces_of_that_dimension, "no faces of dimension " + std::to_string(i));
  SimplicialComplex sk = skeleton(cx, i);
  std::vector<VarSet> faces;
  for (VarSet f : sk.facets())
    if (set_size(f) == i + 1) faces.push_back(f);
  if (faces.empty()) fail(Errc::no_faces_of_that_dimension, std::to_string(i));
  return SimplicialComplex(cx.ring(), faces);
}

SimplicialComplex link(const SimplicialComplex& cx, VarSet sigma) {
  std::vector<VarSet> faces;
  for (VarSet f : cx.facets())
    if ((sigma & ~f) == 0) faces.push_back(f & ~sigma);
  return SimplicialComplex(cx.ring(), faces);  // void when sigma is not a face
}

SimplicialComplex induced(const SimplicialComplex& cx, VarSet sigma) {
  std::vector<VarSet> faces;
  faces.reserve(cx.facets().size());
  for (VarSet f : cx.facets()) faces.push_back(f & sigma);
  return SimplicialComplex(cx.ring(), faces);
}

long long face_guard_limit() {
  static const long long limit = [] {
    if (const char* env = std::getenv("LEXIDEAL_GUARD_FACES")) {
      long long v = std::atoll(env);
      if (v > 0) return v;
    }
    return (long long)1 << 20;
  }();
  return limit;
}

std::vector<VarSet> all_faces(const SimplicialComplex& cx) {
  const long long limit = face_guard_limit();
  std::unordered_set<VarSet> seen;
  for (VarSet f : cx.facets()) {
    VarSet s = f;
    while (true) {  // submask walk, largest to smallest
      if (seen.insert(s).second && (long long)seen.size() > limit)
        fail(Errc::too_large, "face count exceeds guard (" + std::to_string(limit) + ")");
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  return {seen.begin(), seen.end()};
}

FVector f_vector(const SimplicialComplex& cx) {
  FVector fv;
  if (cx.is_void()) return fv;
  fv.counts.assign(cx.dim() + 2, 0);
  for (VarSet s : all_faces(cx)) ++fv.counts[set_size(s)];
  return fv;
}

long long multiplicity(const SimplicialComplex& cx) {
  if (cx.is_void()) fail(Errc::invalid_argument, "void complex has no multiplicity");
  const int top = cx.dim() + 1;
  long long count = 0;
  for (VarSet f : cx.facets())
    if (set_size(f) == top) ++count;
  return count;
}

std::vector<VarSet> minimal_vertex_covers(const MonomialIdeal& edge_ideal) {
  const int n = edge_ideal.ring().vars;
  if (n > 20) fail(Errc::guard_exceeded, "vertex cover enumeration capped at n <= 20");
  std::vector<VarSet> edges;
  for (const SqfMonomial& g : edge_ideal.gens()) {
    if (g.degree() != 2) fail(Errc::invalid_argument, "edge ideal must be generated in degree 2");
    edges.push_back(g.support());
  }
  std::vector<VarSet> covers;
  for (VarSet s = 0; s < (VarSet(1) << n); ++s) {
    bool ok = true;
    for (VarSet e : edges)
      if (!(s & e)) {
        ok = false;
        break;
      }
    if (ok) covers.push_back(s);
  }
  covers = detail::minimal_sets(std::move(covers));
  std::sort(covers.begin(), covers.end(), facet_less);
  return covers;
}

}  // namespace lexideal
