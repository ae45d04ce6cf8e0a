#include "rank.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace lexideal::detail {

namespace {

using boost::multiprecision::cpp_int;

struct WouldOverflow {};

/// (a*b - c*d) / e with 128-bit intermediates; throws when the result leaves
/// the 64-bit range. Division is exact in Bareiss elimination.
long long fused_step(long long a, long long b, long long c, long long d, long long e) {
  __int128 t = (__int128)a * b - (__int128)c * d;
  __int128 q = t / e;
  if (q > INT64_MAX || q < INT64_MIN) throw WouldOverflow{};
  return (long long)q;
}

int rank_bareiss_i64(IntMatrix m) {
  int rank = 0;
  long long prev = 1;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    const long long p = m.at(rank, col);
    for (int i = rank + 1; i < m.rows; ++i) {
      const long long f = m.at(i, col);
      for (int j = col + 1; j < m.cols; ++j)
        m.at(i, j) = fused_step(m.at(i, j), p, f, m.at(rank, j), prev);
      m.at(i, col) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

int rank_bareiss_big(const IntMatrix& src) {
  std::vector<std::vector<cpp_int>> m(src.rows, std::vector<cpp_int>(src.cols));
  for (int i = 0; i < src.rows; ++i)
    for (int j = 0; j < src.cols; ++j) m[i][j] = src.at(i, j);
  int rank = 0;
  cpp_int prev = 1;
  for (int col = 0; col < src.cols && rank < src.rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < src.rows; ++i)
      if (m[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank) std::swap(m[pivot], m[rank]);
    const cpp_int p = m[rank][col];
    for (int i = rank + 1; i < src.rows; ++i) {
      const cpp_int f = m[i][col];
      for (int j = col + 1; j < src.cols; ++j) m[i][j] = (m[i][j] * p - f * m[rank][j]) / prev;
      m[i][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace

int rank_exact(const IntMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  try {
    return rank_bareiss_i64(m);
  } catch (const WouldOverflow&) {
    return rank_bareiss_big(m);
  }
}

int rank_mod_p(const IntMatrix& src, std::uint64_t p) {
  if (src.rows == 0 || src.cols == 0) return 0;
  std::vector<std::vector<std::uint64_t>> m(src.rows, std::vector<std::uint64_t>(src.cols));
  for (int i = 0; i < src.rows; ++i)
    for (int j = 0; j < src.cols; ++j) {
      long long v = src.at(i, j) % (long long)p;
      if (v < 0) v += (long long)p;
      m[i][j] = (std::uint64_t)v;
    }
  int rank = 0;
  for (int col = 0; col < src.cols && rank < src.rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < src.rows; ++i)
      if (m[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank) std::swap(m[pivot], m[rank]);
    // normalize pivot row to 1 via Fermat inverse
    std::uint64_t inv = 1, base = m[rank][col], e = p - 2;
    while (e) {
      if (e & 1) inv = (__uint128_t)inv * base % p;
      base = (__uint128_t)base * base % p;
      e >>= 1;
    }
    for (int j = col; j < src.cols; ++j) m[rank][j] = (__uint128_t)m[rank][j] * inv % p;
    for (int i = rank + 1; i < src.rows; ++i) {
      const std::uint64_t f = m[i][col];
      if (!f) continue;
      for (int j = col; j < src.cols; ++j) {
        std::uint64_t sub = (__uint128_t)f * m[rank][j] % p;
        m[i][j] = (m[i][j] + p - sub) % p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace lexideal::detail
