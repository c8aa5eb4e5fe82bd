#pragma once

// Bernoulli numbers and polynomials, binomial coefficients and the two
// power-sum closed forms.
//
// Bernoulli convention: B_1 = -1/2, i.e. the coefficients of t/(e^t - 1).
// The power-sum closed form below relies on it. The other convention
// (B_1 = +1/2) silently breaks every identity built on Faulhaber's formula.

#include <cstdint>

#include "ramsum/rational.hpp"

namespace ramsum {

BigInt binomial(unsigned long n, unsigned long k);

// Exact B_m, memoized. Safe to call concurrently.
BigRational bernoulli_number(unsigned m);

// B_m(x) = sum_{i=0}^{m} C(m, i) B_i x^{m-i}.
BigRational bernoulli_polynomial(unsigned m, const BigRational& x);

// sum_{j=1}^{n} j^r through Faulhaber's formula
//   n^r / 2 + 1/(r+1) sum_{m=0}^{floor(r/2)} C(r+1, 2m) B_{2m} n^{r+1-2m}.
// Requires n >= 1, r >= 1.
BigInt power_sum(std::uint64_t n, unsigned r);

// sum_{j <= n, gcd(j, n) = 1} j^r through
//   n^{r+1}/(r+1) sum_{m=0}^{floor(r/2)} C(r+1, 2m) B_{2m} n^{-2m}
//                 prod_{p | n} (1 - p^{2m-1}).
// Requires n >= 2, r >= 1.
BigInt coprime_power_sum(std::uint64_t n, unsigned r);

// sum_{m=0}^{floor(r/2)} C(r+1, 2m) B_{2m}; equals (r+1)/2 for every r >= 0.
BigRational half_sum_check(unsigned r);

}  // namespace ramsum
