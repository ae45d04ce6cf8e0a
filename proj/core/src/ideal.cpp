#include "lexideal/ideal.hpp"

#include <algorithm>
#include <set>

#include "transversal.hpp"

namespace lexideal {

int MonomialIdeal::min_gen_degree() const {
  if (is_zero()) fail(Errc::zero_or_unit_ideal, "zero ideal has no generator degree");
  return gens_.front().degree();
}

int MonomialIdeal::max_gen_degree() const {
  if (is_zero()) fail(Errc::zero_or_unit_ideal, "zero ideal has no generator degree");
  return gens_.back().degree();
}

bool MonomialIdeal::is_equigenerated() const {
  return !is_zero() && gens_.front().degree() == gens_.back().degree();
}

std::string MonomialIdeal::str() const {
  if (is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ",";
    out += gens_[i].str();
  }
  return out + ")";
}

MonomialIdeal PrimeSupport::as_ideal() const {
  std::vector<SqfMonomial> gens;
  for (int i : indices()) gens.emplace_back(ring, var_bit(i));
  return minimalize(ring, gens);
}

bool component_less(const PrimeSupport& a, const PrimeSupport& b) {
  if (a.height() != b.height()) return a.height() < b.height();
  return a.indices() < b.indices();
}

Decomposition Decomposition::from_primes(Ring ring, std::vector<PrimeSupport> primes) {
  std::vector<VarSet> sets;
  sets.reserve(primes.size());
  for (const PrimeSupport& p : primes) {
    require_same_ring(ring, p.ring);
    sets.push_back(p.vars);
  }
  Decomposition out(ring);
  for (VarSet s : detail::minimal_sets(std::move(sets))) out.components_.emplace_back(ring, s);
  std::sort(out.components_.begin(), out.components_.end(), component_less);
  return out;
}

int Decomposition::min_height() const {
  if (components_.empty()) fail(Errc::invalid_argument, "empty decomposition has no height");
  int h = components_.front().height();
  for (const PrimeSupport& p : components_) h = std::min(h, p.height());
  return h;
}

MonomialIdeal Decomposition::intersection() const {
  if (components_.empty()) return MonomialIdeal(ring_);  // zero ideal: empty intersection
  MonomialIdeal acc = components_.front().as_ideal();
  for (std::size_t i = 1; i < components_.size(); ++i)
    acc = intersect(acc, components_[i].as_ideal());
  return acc;
}

std::string Decomposition::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += ", ";
    out += "P" + SqfMonomial(ring_, components_[i].vars).str();
  }
  return out + "}";
}

MonomialIdeal minimalize(Ring ring, const std::vector<SqfMonomial>& gens) {
  std::vector<VarSet> sets;
  sets.reserve(gens.size());
  for (const SqfMonomial& g : gens) {
    require_same_ring(ring, g.ring());
    sets.push_back(g.support());
  }
  std::vector<SqfMonomial> minimal;
  for (VarSet s : detail::minimal_sets(std::move(sets))) minimal.emplace_back(ring, s);
  std::sort(minimal.begin(), minimal.end(), canonical_less);
  return MonomialIdeal(ring, std::move(minimal));
}

bool contains(const MonomialIdeal& I, const SqfMonomial& m) {
  require_same_ring(I.ring(), m.ring());
  for (const SqfMonomial& g : I.gens())
    if (g.divides(m)) return true;
  return false;
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I.ring(), J.ring());
  if (I.is_zero() || J.is_zero()) return MonomialIdeal(I.ring());
  std::vector<SqfMonomial> lcms;
  lcms.reserve(I.gens().size() * J.gens().size());
  for (const SqfMonomial& a : I.gens())
    for (const SqfMonomial& b : J.gens()) lcms.push_back(a.times(b));
  return minimalize(I.ring(), lcms);
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I.ring(), J.ring());
  std::vector<SqfMonomial> gens = I.gens();
  gens.insert(gens.end(), J.gens().begin(), J.gens().end());
  return minimalize(I.ring(), gens);
}

MonomialIdeal colon(const MonomialIdeal& I, const SqfMonomial& m) {
  require_same_ring(I.ring(), m.ring());
  std::vector<SqfMonomial> gens;
  gens.reserve(I.gens().size());
  for (const SqfMonomial& g : I.gens()) gens.push_back(g.without(m));
  return minimalize(I.ring(), gens);
}

MonomialIdeal graded_component(const MonomialIdeal& I, int j) {
  if (j < 0 || j > I.ring().vars) fail(Errc::degree_out_of_range, std::to_string(j));
  if (I.is_zero() || j < I.min_gen_degree()) return MonomialIdeal(I.ring());
  std::vector<SqfMonomial> gens;
  for (const SqfMonomial& w : stratum(I.ring(), j))
    if (contains(I, w)) gens.push_back(w);
  return minimalize(I.ring(), gens);
}

MonomialIdeal alexander_dual(const MonomialIdeal& I) {
  if (!I.is_proper_nonzero())
    fail(Errc::zero_or_unit_ideal, "Alexander dual needs a proper nonzero ideal");
  std::vector<VarSet> supports;
  supports.reserve(I.gens().size());
  for (const SqfMonomial& g : I.gens()) supports.push_back(g.support());
  std::vector<SqfMonomial> gens;
  for (VarSet t : detail::minimal_transversals(I.ring().vars, supports))
    gens.emplace_back(I.ring(), t);
  return minimalize(I.ring(), gens);
}

bool has_linear_quotients(const MonomialIdeal& I, const std::vector<SqfMonomial>& order) {
  std::multiset<VarSet> expected, given;
  for (const SqfMonomial& g : I.gens()) expected.insert(g.support());
  for (const SqfMonomial& m : order) {
    require_same_ring(I.ring(), m.ring());
    given.insert(m.support());
  }
  if (expected != given) fail(Errc::not_a_permutation, "order must permute G(I)");
  for (std::size_t t = 1; t < order.size(); ++t) {
    MonomialIdeal prefix = minimalize(I.ring(), {order.begin(), order.begin() + t});
    for (const SqfMonomial& g : colon(prefix, order[t]).gens())
      if (g.degree() != 1) return false;
  }
  return true;
}

}  // namespace lexideal
