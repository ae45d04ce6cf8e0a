#ifndef LEXIDEAL_IDEAL_HPP
#define LEXIDEAL_IDEAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "lexideal/monomial.hpp"

namespace lexideal {

/// A squarefree monomial ideal held by its minimal generating set G(I),
/// canonically ordered (degree, then decreasing lex). The zero ideal is the
/// empty generator list; the unit ideal is generated by the unit monomial.
class MonomialIdeal {
public:
  explicit MonomialIdeal(Ring ring) : ring_(ring) {}
  MonomialIdeal(Ring ring, std::vector<SqfMonomial> minimal_gens_canonical)
      : ring_(ring), gens_(std::move(minimal_gens_canonical)) {}

  const Ring& ring() const { return ring_; }
  const std::vector<SqfMonomial>& gens() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_unit(); }
  bool is_proper_nonzero() const { return !is_zero() && !is_unit(); }

  int min_gen_degree() const;
  int max_gen_degree() const;
  bool is_equigenerated() const;

  std::string str() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  Ring ring_;
  std::vector<SqfMonomial> gens_;
};

/// A monomial prime P_A = (x_i : i in A), A nonempty.
struct PrimeSupport {
  Ring ring;
  VarSet vars = 0;

  PrimeSupport(Ring r, VarSet v) : ring(r), vars(v) {
    if (v == 0) fail(Errc::invalid_argument, "monomial prime needs at least one variable");
  }
  int height() const { return set_size(vars); }
  std::vector<int> indices() const { return set_to_indices(vars); }
  MonomialIdeal as_ideal() const;

  friend bool operator==(const PrimeSupport&, const PrimeSupport&) = default;
};

/// Canonical component order: by height, then by sorted index list.
bool component_less(const PrimeSupport& a, const PrimeSupport& b);

/// An antichain of monomial primes, i.e. a minimal primary decomposition of
/// a squarefree ideal. Construction minimalizes and sorts canonically.
class Decomposition {
public:
  explicit Decomposition(Ring ring) : ring_(ring) {}
  static Decomposition from_primes(Ring ring, std::vector<PrimeSupport> primes);

  const Ring& ring() const { return ring_; }
  const std::vector<PrimeSupport>& components() const { return components_; }
  bool empty() const { return components_.empty(); }
  std::size_t size() const { return components_.size(); }
  int min_height() const;

  /// Re-expand to the ideal: intersection of all components.
  MonomialIdeal intersection() const;

  std::string str() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

private:
  Ring ring_;
  std::vector<PrimeSupport> components_;
};

/// Divisibility-minimal antichain generating the same ideal. The empty set
/// yields the zero ideal.
MonomialIdeal minimalize(Ring ring, const std::vector<SqfMonomial>& gens);

/// Membership: some generator divides m.
bool contains(const MonomialIdeal& I, const SqfMonomial& m);

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);

/// I : m = ( g / gcd(g, m) : g in G(I) ), minimalized.
MonomialIdeal colon(const MonomialIdeal& I, const SqfMonomial& m);

/// Squarefree degree-j component I_[j]: the ideal generated by all squarefree
/// monomials of degree j lying in I. Zero when j is below the least generator
/// degree.
MonomialIdeal graded_component(const MonomialIdeal& I, int j);

/// Alexander dual: generators are x_{F^c} over the facets F of the
/// Stanley-Reisner complex of I; equivalently the minimal covers of the
/// generator supports. An involution on proper nonzero squarefree ideals.
MonomialIdeal alexander_dual(const MonomialIdeal& I);

/// Checks the linear-quotients condition for the GIVEN order of G(I): for
/// each t >= 2, (m_1,..,m_{t-1}) : m_t must be generated by single variables.
bool has_linear_quotients(const MonomialIdeal& I, const std::vector<SqfMonomial>& order);

}  // namespace lexideal

#endif
