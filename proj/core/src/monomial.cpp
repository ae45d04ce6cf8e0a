#include "lexideal/monomial.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

namespace lexideal {

std::vector<int> set_to_indices(VarSet s) {
  std::vector<int> out;
  while (s) {
    int i = std::countr_zero(s) + 1;
    out.push_back(i);
    s &= s - 1;
  }
  return out;
}

VarSet indices_to_set(const std::vector<int>& idx, int n) {
  VarSet s = 0;
  for (int i : idx) {
    if (i < 1 || i > n) fail(Errc::index_out_of_range, "variable index " + std::to_string(i));
    s |= var_bit(i);
  }
  return s;
}

std::string SqfMonomial::str() const {
  if (is_unit()) return "1";
  std::string out;
  for (int i : indices()) out += "x" + std::to_string(i);
  return out;
}

Ordering lex_compare(const SqfMonomial& a, const SqfMonomial& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.degree() != b.degree())
    fail(Errc::degree_mismatch, "lex order is defined within one degree stratum");
  if (a.support() == b.support()) return Ordering::EQ;
  // The first index where the sorted supports differ is the least element of
  // the symmetric difference; the monomial owning it is lex-greater.
  VarSet diff = a.support() ^ b.support();
  VarSet low = diff & (~diff + 1);
  return (a.support() & low) ? Ordering::GT : Ordering::LT;
}

SqfMonomial stratum_max(Ring ring, int d) {
  if (d < 0 || d > ring.vars) fail(Errc::degree_out_of_range, "degree " + std::to_string(d));
  return SqfMonomial(ring, full_mask(d));
}

SqfMonomial stratum_min(Ring ring, int d) {
  if (d < 0 || d > ring.vars) fail(Errc::degree_out_of_range, "degree " + std::to_string(d));
  return SqfMonomial(ring, full_mask(ring.vars) & ~full_mask(ring.vars - d));
}

SqfMonomial succ(const SqfMonomial& m) {
  const int n = m.ring().vars, d = m.degree();
  std::vector<int> c = m.indices();
  // Next d-combination of [n] in ascending combination order, which is
  // exactly decreasing monomial lex.
  int i = d - 1;
  while (i >= 0 && c[i] == n - (d - 1 - i)) --i;
  if (i < 0) fail(Errc::no_successor, m.str() + " is the minimum of its stratum");
  ++c[i];
  for (int j = i + 1; j < d; ++j) c[j] = c[j - 1] + 1;
  return SqfMonomial(m.ring(), c);
}

SqfMonomial pred(const SqfMonomial& m) {
  const int n = m.ring().vars, d = m.degree();
  std::vector<int> c = m.indices();
  int i = d - 1;
  while (i >= 0 && c[i] - 1 == (i == 0 ? 0 : c[i - 1])) --i;
  if (i < 0) fail(Errc::no_predecessor, m.str() + " is the maximum of its stratum");
  --c[i];
  for (int j = i + 1; j < d; ++j) c[j] = n - (d - 1 - j);
  return SqfMonomial(m.ring(), c);
}

std::vector<SqfMonomial> stratum(Ring ring, int d) {
  SqfMonomial m = stratum_max(ring, d);
  const SqfMonomial last = stratum_min(ring, d);
  std::vector<SqfMonomial> out;
  out.push_back(m);
  while (!(m == last)) {
    m = succ(m);
    out.push_back(m);
  }
  return out;
}

namespace {
constexpr int kMaxN = 64;
using BinomTable = std::array<std::array<long long, kMaxN + 1>, kMaxN + 1>;

const BinomTable& binomials() {
  static const BinomTable table = [] {
    BinomTable t{};
    for (int i = 0; i <= kMaxN; ++i) {
      t[i][0] = 1;
      for (int j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
    }
    return t;
  }();
  return table;
}
}  // namespace

long long stratum_rank(const SqfMonomial& m) {
  // Count combinations that come at or after m's support in ascending
  // combination order (= monomials lex-<= m).
  const BinomTable& binom = binomials();
  const int n = m.ring().vars, d = m.degree();
  std::vector<int> c = m.indices();
  // Position (0-based) of c within ascending combination order.
  long long before = 0;
  int prev = 0;
  for (int j = 0; j < d; ++j) {
    for (int v = prev + 1; v < c[j]; ++v) before += binom[n - v][d - 1 - j];
    prev = c[j];
  }
  return binom[n][d] - before;
}

std::vector<SqfMonomial> lexsegment(const SqfMonomial& u, const SqfMonomial& v) {
  require_same_ring(u.ring(), v.ring());
  if (u.degree() != v.degree()) fail(Errc::degree_mismatch, "segment endpoints differ in degree");
  if (lex_compare(u, v) == Ordering::LT)
    fail(Errc::empty_segment, "L(" + u.str() + "," + v.str() + ")");
  std::vector<SqfMonomial> out;
  SqfMonomial m = u;
  out.push_back(m);
  while (!(m == v)) {
    m = succ(m);
    out.push_back(m);
  }
  return out;
}

std::vector<SqfMonomial> initial_segment(const SqfMonomial& v) {
  return lexsegment(stratum_max(v.ring(), v.degree()), v);
}

std::vector<SqfMonomial> final_segment(const SqfMonomial& u) {
  return lexsegment(u, stratum_min(u.ring(), u.degree()));
}

std::vector<SqfMonomial> shadow(const std::vector<SqfMonomial>& monomials) {
  if (monomials.empty()) return {};
  const Ring ring = monomials.front().ring();
  std::set<VarSet> seen;
  for (const SqfMonomial& m : monomials) {
    require_same_ring(ring, m.ring());
    VarSet missing = full_mask(ring.vars) & ~m.support();
    while (missing) {
      VarSet low = missing & (~missing + 1);
      seen.insert(m.support() | low);
      missing &= missing - 1;
    }
  }
  std::vector<SqfMonomial> out;
  out.reserve(seen.size());
  for (VarSet s : seen) out.emplace_back(ring, s);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool is_lexsegment_set(const std::vector<SqfMonomial>& monomials) {
  if (monomials.empty()) fail(Errc::invalid_argument, "empty set has no segment shape");
  const Ring ring = monomials.front().ring();
  const int d = monomials.front().degree();
  std::set<VarSet> distinct;
  for (const SqfMonomial& m : monomials) {
    require_same_ring(ring, m.ring());
    if (m.degree() != d) fail(Errc::mixed_degrees, "lexsegment test needs one degree");
    distinct.insert(m.support());
  }
  SqfMonomial top(ring, *distinct.begin()), bottom = top;
  for (VarSet s : distinct) {
    SqfMonomial m(ring, s);
    if (lex_greater(m, top)) top = m;
    if (lex_greater(bottom, m)) bottom = m;
  }
  return stratum_rank(top) - stratum_rank(bottom) + 1 == (long long)distinct.size();
}

bool canonical_less(const SqfMonomial& a, const SqfMonomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return lex_compare(a, b) == Ordering::GT;
}

SqfMonomial parse_monomial_token(const std::string& token, Ring ring) {
  if (token == "1") return SqfMonomial(ring, VarSet(0));
  std::vector<int> idx;
  size_t pos = 0;
  while (pos < token.size()) {
    if (token[pos] != 'x') fail(Errc::syntax_error, "bad monomial token '" + token + "'");
    ++pos;
    size_t start = pos;
    while (pos < token.size() && isdigit((unsigned char)token[pos])) ++pos;
    if (start == pos) fail(Errc::syntax_error, "bad monomial token '" + token + "'");
    idx.push_back(std::stoi(token.substr(start, pos - start)));
  }
  if (idx.empty()) fail(Errc::syntax_error, "empty monomial token");
  return SqfMonomial(ring, idx);
}

}  // namespace lexideal
