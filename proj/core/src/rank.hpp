#ifndef LEXIDEAL_SRC_RANK_HPP
#define LEXIDEAL_SRC_RANK_HPP

#include <cstdint>
#include <vector>

namespace lexideal::detail {

/// Dense integer matrix, row major.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<long long> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a((std::size_t)r * c, 0) {}
  long long& at(int i, int j) { return a[(std::size_t)i * cols + j]; }
  long long at(int i, int j) const { return a[(std::size_t)i * cols + j]; }
};

/// Exact rank over the rationals (fraction-free Bareiss elimination; falls
/// back to arbitrary precision when 64-bit pivots would overflow).
int rank_exact(const IntMatrix& m);

/// Rank over F_p. Always a lower bound for the rational rank.
int rank_mod_p(const IntMatrix& m, std::uint64_t p);

/// Fixed prime used by the vanishing prefilter in homology computations.
inline constexpr std::uint64_t kFilterPrime = 2147483629ULL;

}  // namespace lexideal::detail

#endif
