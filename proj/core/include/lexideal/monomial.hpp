#ifndef LEXIDEAL_MONOMIAL_HPP
#define LEXIDEAL_MONOMIAL_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lexideal/ring.hpp"

namespace lexideal {

/// Support of a squarefree monomial as a bitmask: variable i <-> bit (i-1).
using VarSet = std::uint64_t;

inline VarSet full_mask(int n) { return (n >= 64) ? ~VarSet(0) : ((VarSet(1) << n) - 1); }
inline VarSet var_bit(int i) { return VarSet(1) << (i - 1); }
inline int set_size(VarSet s) { return std::popcount(s); }
inline bool has_var(VarSet s, int i) { return (s >> (i - 1)) & 1; }
/// Smallest 1-based index in a nonempty set.
inline int min_var(VarSet s) { return std::countr_zero(s) + 1; }
/// Largest 1-based index in a nonempty set.
inline int max_var(VarSet s) { return 64 - std::countl_zero(s); }

std::vector<int> set_to_indices(VarSet s);
VarSet indices_to_set(const std::vector<int>& idx, int n);

/// A squarefree monomial in a fixed ambient ring: x_S for S a subset of
/// {1..n}. The unit monomial 1 has empty support. Immutable value type.
class SqfMonomial {
public:
  SqfMonomial() = default;
  SqfMonomial(Ring ring, VarSet support) : ring_(ring), support_(support) {
    if (support & ~full_mask(ring.vars))
      fail(Errc::index_out_of_range, "monomial support exceeds ring variables");
  }
  SqfMonomial(Ring ring, const std::vector<int>& indices)
      : SqfMonomial(ring, indices_to_set(indices, ring.vars)) {}

  const Ring& ring() const { return ring_; }
  VarSet support() const { return support_; }
  int degree() const { return set_size(support_); }
  bool is_unit() const { return support_ == 0; }
  std::vector<int> indices() const { return set_to_indices(support_); }

  /// x_{[n] \ S}.
  SqfMonomial complement() const { return SqfMonomial(ring_, full_mask(ring_.vars) & ~support_); }

  bool divides(const SqfMonomial& other) const {
    require_same_ring(ring_, other.ring_);
    return (support_ & ~other.support_) == 0;
  }

  /// Squarefree product (= lcm); requires disjoint or overlapping supports alike.
  SqfMonomial times(const SqfMonomial& other) const {
    require_same_ring(ring_, other.ring_);
    return SqfMonomial(ring_, support_ | other.support_);
  }

  /// this / gcd(this, other): drop the variables shared with `other`.
  SqfMonomial without(const SqfMonomial& other) const {
    require_same_ring(ring_, other.ring_);
    return SqfMonomial(ring_, support_ & ~other.support_);
  }

  SqfMonomial without_var(int i) const { return SqfMonomial(ring_, support_ & ~var_bit(i)); }

  /// Token form x1x3x4; the unit monomial prints as "1".
  std::string str() const;

  friend bool operator==(const SqfMonomial&, const SqfMonomial&) = default;

private:
  Ring ring_;
  VarSet support_ = 0;
};

enum class Ordering { LT, EQ, GT };

/// Lexicographic comparison with x_1 > x_2 > ... > x_n, defined on monomials
/// of equal degree only (the two usual cross-degree conventions disagree, and
/// none is ever needed here).
Ordering lex_compare(const SqfMonomial& a, const SqfMonomial& b);

inline bool lex_greater(const SqfMonomial& a, const SqfMonomial& b) {
  return lex_compare(a, b) == Ordering::GT;
}
inline bool lex_geq(const SqfMonomial& a, const SqfMonomial& b) {
  return lex_compare(a, b) != Ordering::LT;
}

/// Largest monomial of the degree-d stratum, x_1...x_d.
SqfMonomial stratum_max(Ring ring, int d);
/// Smallest monomial of the degree-d stratum, x_{n-d+1}...x_n.
SqfMonomial stratum_min(Ring ring, int d);

/// Next monomial strictly below m within its degree stratum.
SqfMonomial succ(const SqfMonomial& m);
/// Next monomial strictly above m within its degree stratum.
SqfMonomial pred(const SqfMonomial& m);

/// All C(n,d) squarefree monomials of degree d, strictly decreasing in lex.
std::vector<SqfMonomial> stratum(Ring ring, int d);

/// Number of stratum elements lex-<= m (so the stratum minimum has rank 1).
long long stratum_rank(const SqfMonomial& m);

/// L(u,v) = { w : u >= w >= v }, in decreasing lex order.
std::vector<SqfMonomial> lexsegment(const SqfMonomial& u, const SqfMonomial& v);
/// L^i(v): from the stratum maximum down to v.
std::vector<SqfMonomial> initial_segment(const SqfMonomial& v);
/// L^f(u): from u down to the stratum minimum.
std::vector<SqfMonomial> final_segment(const SqfMonomial& u);

/// shad(T) = { w*x_i : w in T, x_i does not divide w }. Input degrees may be
/// mixed; the result is the deduplicated union of all one-variable extensions.
std::vector<SqfMonomial> shadow(const std::vector<SqfMonomial>& monomials);

/// True iff the (nonempty, equigenerated) set is lex-contiguous in its stratum.
bool is_lexsegment_set(const std::vector<SqfMonomial>& monomials);

/// Canonical order used for generator lists and serialization: by degree,
/// then decreasing lex within a degree.
bool canonical_less(const SqfMonomial& a, const SqfMonomial& b);

SqfMonomial parse_monomial_token(const std::string& token, Ring ring);

}  // namespace lexideal

#endif
