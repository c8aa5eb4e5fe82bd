#include "ramsum/arith.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ramsum/errors.hpp"

namespace ramsum {

namespace {

constexpr std::uint32_t kSieveLimit = std::uint32_t{1} << 20;

// Built once on first use; read-only afterwards.
const std::vector<std::uint32_t>& prime_table() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kSieveLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kSieveLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kSieveLimit; j += i) {
        composite[j] = true;
      }
    }
    return out;
  }();
  return primes;
}

void check_argument(std::uint64_t n, const char* what) {
  if (n == 0) throw DomainError(std::string(what) + ": argument must be positive");
  if (n > kMaxArgument) {
    throw RangeError(std::string(what) + ": argument " + std::to_string(n) +
                     " exceeds 2^40");
  }
}

}  // namespace

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

bool Factorization::is_squarefree() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const PrimePower& pp) { return pp.exponent == 1; });
}

double VonMangoldtValue::value() const {
  return prime_base ? std::log(static_cast<double>(*prime_base)) : 0.0;
}

Factorization factorize(std::uint64_t n) {
  check_argument(n, "factorize");
  Factorization f;
  f.n_ = n;
  std::uint64_t rest = n;
  for (const std::uint32_t p : prime_table()) {
    if (std::uint64_t{p} * p > rest) break;
    if (rest % p != 0) continue;
    unsigned e = 0;
    do {
      rest /= p;
      ++e;
    } while (rest % p == 0);
    f.factors_.push_back({p, e});
  }
  if (rest > 1) f.factors_.push_back({rest, 1});
  return f;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  const Factorization f = factorize(n);
  return f.factors().size() == 1 && f.factors()[0].exponent == 1;
}

int mobius(const Factorization& f) {
  if (!f.is_squarefree()) return 0;
  return f.omega() % 2 == 0 ? 1 : -1;
}

int mobius(std::uint64_t n) { return mobius(factorize(n)); }

std::uint64_t euler_phi(const Factorization& f) {
  std::uint64_t phi = 1;
  for (const auto& [p, e] : f.factors()) {
    phi *= p - 1;
    for (unsigned i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

std::uint64_t euler_phi(std::uint64_t n) { return euler_phi(factorize(n)); }

BigInt jordan_totient(unsigned m, const Factorization& f) {
  // J_m is multiplicative with J_m(p^e) = p^{m e} - p^{m (e-1)}.
  BigInt result = 1;
  for (const auto& [p, e] : f.factors()) {
    const BigInt pm = pow(make_int(p), m);
    const BigInt lower = pow(pm, e - 1);
    result *= lower * pm - lower;
  }
  return result;
}

BigInt jordan_totient(unsigned m, std::uint64_t n) {
  return jordan_totient(m, factorize(n));
}

std::vector<std::uint64_t> divisors(const Factorization& f) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : f.factors()) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  return divisors(factorize(n));
}

DivisorCountAndSum divisor_count_and_sum(const Factorization& f) {
  DivisorCountAndSum out{1, 1};
  for (const auto& [p, e] : f.factors()) {
    out.count *= e + 1;
    std::uint64_t term = 1;
    std::uint64_t geometric = 1;
    for (unsigned i = 1; i <= e; ++i) {
      term *= p;
      geometric += term;
    }
    out.sum *= geometric;
  }
  return out;
}

DivisorCountAndSum divisor_count_and_sum(std::uint64_t n) {
  return divisor_count_and_sum(factorize(n));
}

VonMangoldtValue von_mangoldt(std::uint64_t n) {
  const Factorization f = factorize(n);
  if (f.factors().size() == 1) return {f.factors()[0].prime};
  return {};
}

BigRational dirichlet_convolve(const ArithmeticFunction& f,
                               const ArithmeticFunction& g, std::uint64_t n) {
  BigRational total = 0;
  for (const std::uint64_t d : divisors(n)) total += f(d) * g(n / d);
  return total;
}

namespace functions {

ArithmeticFunction identity() {
  return {"id", [](std::uint64_t n) { return BigRational(make_int(n)); }};
}

ArithmeticFunction one() {
  return {"one", [](std::uint64_t) { return BigRational(1); }};
}

ArithmeticFunction unit() {
  return {"unit", [](std::uint64_t n) { return BigRational(n == 1 ? 1 : 0); }};
}

ArithmeticFunction mobius() {
  return {"mu", [](std::uint64_t n) { return BigRational(ramsum::mobius(n)); }};
}

ArithmeticFunction euler_phi() {
  return {"phi", [](std::uint64_t n) {
            return BigRational(make_int(ramsum::euler_phi(n)));
          }};
}

ArithmeticFunction tau() {
  return {"tau", [](std::uint64_t n) {
            return BigRational(make_int(divisor_count_and_sum(n).count));
          }};
}

ArithmeticFunction sigma() {
  return {"sigma", [](std::uint64_t n) {
            return BigRational(make_int(divisor_count_and_sum(n).sum));
          }};
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

ArithmeticFunction pseudo_random(std::uint64_t seed, unsigned index) {
  const std::uint64_t key = splitmix64(seed ^ splitmix64(index));
  return {"rand" + std::to_string(index), [key](std::uint64_t n) {
            const std::uint64_t h = splitmix64(key ^ splitmix64(n));
            return BigRational(static_cast<long>(h % 2001) - 1000);
          }};
}

}  // namespace functions

}  // namespace ramsum
