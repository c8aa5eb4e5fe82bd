#pragma once

#include <cstdint>

#include "ramsum/rational.hpp"

namespace ramsum::detail {

using int128 = __int128;

// Exact integer accumulator. Terms are summed in 128-bit arithmetic and the
// running total spills into a GMP integer the first time a product or sum
// would overflow, so the result is exact for any input.
class ExactSum {
 public:
  void add(std::int64_t v) { add_big_or_fast(static_cast<int128>(v)); }

  // total += a * b
  void add_product(int128 a, int128 b) {
    int128 p;
    if (__builtin_mul_overflow(a, b, &p)) {
      spill_ += to_big(a) * to_big(b);
      return;
    }
    add_big_or_fast(p);
  }

  void add(const BigInt& v) { spill_ += v; }

  BigInt value() const { return spill_ + to_big(fast_); }

  static BigInt to_big(int128 v);

 private:
  void add_big_or_fast(int128 v) {
    int128 s;
    if (__builtin_add_overflow(fast_, v, &s)) {
      spill_ += to_big(fast_);
      fast_ = v;
      return;
    }
    fast_ = s;
  }

  int128 fast_ = 0;
  BigInt spill_ = 0;
};

// base^exp when it fits in 127 bits; returns false on overflow.
inline bool checked_pow(int128 base, unsigned exp, int128* out) {
  int128 r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(r, base, &r)) return false;
  }
  *out = r;
  return true;
}

}  // namespace ramsum::detail
