#pragma once

// Weighted averages of Ramanujan sums: each identity as a (direct, closed
// form) pair of evaluators.
//
// Summation ranges over j differ per identity and are part of the contract:
//
//   identity                         j range
//   S_r(k)                           1 .. k
//   log weight                       1 .. k
//   gcd weight, f(gcd(j, k))         1 .. k
//   log Gamma(j/k) weight            1 .. k
//   binomial C(k, j) weight          0 .. k
//   Bernoulli polynomial B_m(j/k)    0 .. k-1   (c_k(0) = phi(k))
//   Bernoulli sum lemma              0 .. k-1
//   inverse DFT                      1 .. k
//
// Rational identities return ExactPair and must agree exactly. Identities
// involving log, Gamma or cos return FloatPair and are compared with the
// mixed criterion |lhs - rhs| <= tol (1 + max(|lhs|, |rhs|)).

#include <cstdint>
#include <vector>

#include "ramsum/arith.hpp"
#include "ramsum/rational.hpp"

namespace ramsum {

inline constexpr double kDefaultTolerance = 1e-8;

struct ExactPair {
  BigRational lhs;
  BigRational rhs;

  bool holds() const { return lhs == rhs; }
};

struct FloatPair {
  double lhs;
  double rhs;
  double tolerance = kDefaultTolerance;

  double abs_error() const;
  bool holds() const;
};

bool mixed_close(double a, double b, double tolerance);

// (1/k^{r+1}) sum_{j=1}^{k} j^r c_k(j), summed exactly from the row.
BigRational s_r_direct(std::uint64_t k, unsigned r);

// phi(k)/(2k) + 1/(r+1) sum_{m=0}^{floor(r/2)} C(r+1, 2m) B_{2m} J_{2m}(k) / k^{2m}.
BigRational s_r_closed(std::uint64_t k, unsigned r);

// lhs (1/k) sum_{j=1}^{k} log(j) c_k(j);
// rhs Lambda(k) + sum_{d | k} (mu(d)/d) log(d!).
FloatPair log_weighted_pair(std::uint64_t k);

// lhs sum_{j=1}^{k} f(gcd(j, k)) c_k(j); rhs phi(k) (mu * f)(k).
ExactPair gcd_weighted_pair(std::uint64_t k, const ArithmeticFunction& f);

// lhs (1/phi(k)) sum_{j=1}^{k} log Gamma(j/k) c_k(j);
// rhs (1/2) sum_{p | k} log(p)/(p-1) - log(2 pi)/2. Requires k >= 2.
FloatPair gamma_weighted_pair(std::uint64_t k);

// lhs sum_{j=1}^{n} log Gamma(j/n); rhs ((n-1)/2) log(2 pi) - log(n)/2.
FloatPair gamma_product_check(std::uint64_t n);

// lhs sum_{d | k} (mu(d)/d) log d; rhs -(phi(k)/k) sum_{p | k} log(p)/(p-1).
FloatPair mobius_log_check(std::uint64_t k);

// lhs sum_{j=0}^{k} C(k, j) c_k(j);
// rhs sum_{d | k} d mu(k/d) sum_{m=0}^{k/d} C(k, d m). Both exact integers.
ExactPair binomial_weighted_exact(std::uint64_t k);

inline constexpr std::uint64_t kMaxCosineModulus = 1000;

// lhs 2^-k sum_{j=0}^{k} C(k, j) c_k(j) (exact integer, then scaled);
// rhs sum_{d | k} mu(k/d) sum_{l=1}^{d} (-1)^{l k/d} cos^k(l pi/d).
// Requires k <= kMaxCosineModulus.
FloatPair binomial_weighted_cosine(std::uint64_t k);

// lhs sum_{j=0}^{k-1} B_m(j/k) c_k(j); rhs B_m J_m(k) / k^{m-1}. Requires m >= 1.
ExactPair bernoulli_weighted_pair(std::uint64_t k, unsigned m);

// lhs sum_{j=0}^{k-1} B_m(j/k); rhs B_m / k^{m-1}. Requires m >= 1.
ExactPair bernoulli_sum_pair(std::uint64_t k, unsigned m);

inline constexpr std::uint64_t kMaxDftModulus = 100000;

// lhs real part of (1/k) sum_{j=1}^{k} exp(2 pi i j n / k) c_k(j);
// rhs [gcd(k, n) = 1]. Throws InternalError if the imaginary part exceeds
// 1e-8 k.
FloatPair inverse_dft_check(std::uint64_t k, std::uint64_t n);

namespace numeric {

// Neumaier-compensated summation.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

// log(n!), compensated sum of log m for n <= 10^5, log Gamma(n + 1) above.
double log_factorial(std::uint64_t n);

// Thread-safe log Gamma for x > 0.
double log_gamma(double x);

// cos(pi num / den) with num reduced mod 2 den; exact at 0, pi/2, pi, 3pi/2.
double cos_pi_ratio(std::int64_t num, std::uint64_t den);

}  // namespace numeric

}  // namespace ramsum
