#pragma once

// Ramanujan sums c_k(j) = sum_{1 <= m <= k, gcd(m, k) = 1} exp(2 pi i m j / k).
//
// Three evaluators that share nothing beyond factorization:
//   ramanujan_sum         divisor formula  sum_{d | gcd(k, j)} d mu(k/d)
//   ramanujan_sum_holder  phi(k) mu(k/g) / phi(k/g),  g = gcd(k, j)
//   ramanujan_sum_float   the defining exponential sum in floating point
// j may be any integer; it is reduced mod k first and gcd(k, 0) = k, so
// c_k(0) = c_k(k) = phi(k).

#include <cstdint>
#include <span>
#include <vector>

namespace ramsum {

std::int64_t ramanujan_sum(std::uint64_t k, std::int64_t j);

// Throws InternalError if phi(k/g) does not divide phi(k) mu(k/g).
std::int64_t ramanujan_sum_holder(std::uint64_t k, std::int64_t j);

inline constexpr std::uint64_t kMaxFloatModulus = 100000;

struct FloatRamanujan {
  double real;
  double imag;
};

// k <= kMaxFloatModulus. Angles are reduced as (m j mod k) / k before the
// exponential is taken.
FloatRamanujan ramanujan_sum_complex(std::uint64_t k, std::int64_t j);

// Real part of ramanujan_sum_complex; throws InternalError if the imaginary
// part exceeds 1e-6 k. Test oracle only, never used by identity evaluators.
double ramanujan_sum_float(std::uint64_t k, std::int64_t j);

inline constexpr std::uint64_t kMaxRowModulus = std::uint64_t{1} << 26;

// c_k(0), ..., c_k(k) for k <= kMaxRowModulus. Built by adding d mu(k/d) at
// every multiple of d for each d | k; no per-index gcd.
class RamanujanRow {
 public:
  explicit RamanujanRow(std::uint64_t k);

  std::uint64_t modulus() const { return k_; }
  std::span<const std::int64_t> values() const { return values_; }
  std::int64_t operator[](std::size_t j) const { return values_[j]; }
  // Any integer j, reduced mod k.
  std::int64_t at(std::int64_t j) const;

 private:
  std::uint64_t k_;
  std::vector<std::int64_t> values_;
};

RamanujanRow ramanujan_row(std::uint64_t k);

}  // namespace ramsum
