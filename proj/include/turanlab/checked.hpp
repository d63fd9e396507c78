#pragma once

#include <cstdint>
#include <string>

#include "turanlab/error.hpp"

namespace turanlab {

// Exact copy counts. Every arithmetic step goes through the helpers below,
// which throw Overflow instead of wrapping.
using Count = std::uint64_t;

inline Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("count addition overflows 64 bits");
  return r;
}

inline Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("count multiplication overflows 64 bits");
  return r;
}

inline Count checked_pow(Count base, int exp) {
  Count r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

inline Count factorial(int n) {
  Count r = 1;
  for (int i = 2; i <= n; ++i) r = checked_mul(r, static_cast<Count>(i));
  return r;
}

inline Count binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // r * (n - i) is always divisible by (i + 1); use 128-bit to avoid a spurious overflow.
  unsigned __int128 r = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    r = r * static_cast<unsigned __int128>(n - i) / static_cast<unsigned __int128>(i + 1);
    if (r > static_cast<unsigned __int128>(UINT64_MAX)) throw Overflow("binomial overflows 64 bits");
  }
  return static_cast<Count>(r);
}

}  // namespace turanlab
