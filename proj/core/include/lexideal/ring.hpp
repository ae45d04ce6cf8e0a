#ifndef LEXIDEAL_RING_HPP
#define LEXIDEAL_RING_HPP

#include <cstdint>

#include "lexideal/errors.hpp"

namespace lexideal {

/// Ambient polynomial ring k[x_1..x_n], identified by its variable count.
/// Variables are indexed 1..n everywhere in the public interface; supports
/// fit a 64-bit mask, hence n <= 63.
struct Ring {
  int vars = 0;

  Ring() = default;
  explicit Ring(int n) : vars(n) {
    if (n < 2 || n > 63) fail(Errc::invalid_argument, "ring needs 2 <= n <= 63");
  }

  friend bool operator==(const Ring&, const Ring&) = default;
};

inline void require_same_ring(const Ring& a, const Ring& b) {
  if (!(a == b)) fail(Errc::ambient_mismatch, "objects live in different ambient rings");
}

}  // namespace lexideal

#endif
