#pragma once

// Factorization and the classical multiplicative functions.
//
// All inputs are positive integers not exceeding kMaxArgument (2^40). Prime
// factors are found by trial division against a table of primes below 2^20,
// which covers every square root in range.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramsum/rational.hpp"

namespace ramsum {

inline constexpr std::uint64_t kMaxArgument = std::uint64_t{1} << 40;

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

class Factorization {
 public:
  Factorization() = default;

  std::uint64_t value() const { return n_; }
  const std::vector<PrimePower>& factors() const& { return factors_; }
  // by value on temporaries, so `for (auto f : factorize(n).factors())` is safe
  std::vector<PrimePower> factors() && { return std::move(factors_); }
  bool is_one() const { return factors_.empty(); }
  bool is_squarefree() const;
  std::size_t omega() const { return factors_.size(); }

 private:
  friend Factorization factorize(std::uint64_t n);
  std::uint64_t n_ = 1;
  std::vector<PrimePower> factors_;
};

// Λ(n) kept symbolic: the prime p when n = p^a, nothing otherwise.
struct VonMangoldtValue {
  std::optional<std::uint64_t> prime_base;

  double value() const;
};

// Throws DomainError for n = 0 and RangeError for n > kMaxArgument.
Factorization factorize(std::uint64_t n);

// Deterministic primality for n <= kMaxArgument.
bool is_prime(std::uint64_t n);

int mobius(std::uint64_t n);
int mobius(const Factorization& f);

std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t euler_phi(const Factorization& f);

// J_m(n) = n^m prod_{p | n} (1 - p^-m). J_0(n) = [n = 1], J_1 = phi.
BigInt jordan_totient(unsigned m, std::uint64_t n);
BigInt jordan_totient(unsigned m, const Factorization& f);

// Ascending, generated from the factorization.
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::vector<std::uint64_t> divisors(const Factorization& f);

struct DivisorCountAndSum {
  std::uint64_t count;  // tau
  std::uint64_t sum;    // sigma
};
DivisorCountAndSum divisor_count_and_sum(std::uint64_t n);
DivisorCountAndSum divisor_count_and_sum(const Factorization& f);

VonMangoldtValue von_mangoldt(std::uint64_t n);

// A named map from positive integers to rationals. The "arbitrary f" of the
// gcd-weighted average and the operands of Dirichlet convolution.
struct ArithmeticFunction {
  std::string name;
  std::function<BigRational(std::uint64_t)> eval;

  BigRational operator()(std::uint64_t n) const { return eval(n); }
};

// (f * g)(n) = sum_{d | n} f(d) g(n/d).
BigRational dirichlet_convolve(const ArithmeticFunction& f,
                               const ArithmeticFunction& g, std::uint64_t n);

namespace functions {
ArithmeticFunction identity();
ArithmeticFunction one();        // constant 1
ArithmeticFunction unit();       // [n = 1]
ArithmeticFunction mobius();
ArithmeticFunction euler_phi();
ArithmeticFunction tau();
ArithmeticFunction sigma();
// Integer values in [-1000, 1000] from a splitmix64 hash of (seed, index, n).
// Depends only on its arguments, so evaluation order never matters.
ArithmeticFunction pseudo_random(std::uint64_t seed, unsigned index);
}  // namespace functions

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

}  // namespace ramsum
