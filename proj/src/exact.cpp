#include "ramsum/exact.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "ramsum/arith.hpp"
#include "ramsum/errors.hpp"

namespace ramsum {

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

namespace {

class BernoulliCache {
 public:
  BernoulliCache() { table_.emplace_back(1); }

  BigRational get(unsigned m) {
    {
      std::shared_lock lock(mutex_);
      if (m < table_.size()) return table_[m];
    }
    std::unique_lock lock(mutex_);
    // From sum_{j=0}^{i} C(i+1, j) B_j = 0.
    while (table_.size() <= m) {
      const unsigned i = static_cast<unsigned>(table_.size());
      BigRational acc = 0;
      for (unsigned j = 0; j < i; ++j) {
        if (j > 1 && j % 2 == 1) continue;  // odd B_j vanish beyond B_1
        acc += BigRational(binomial(i + 1, j)) * table_[j];
      }
      table_.push_back(-acc / (i + 1));
    }
    return table_[m];
  }

 private:
  std::shared_mutex mutex_;
  // deque: growth never relocates existing entries
  std::deque<BigRational> table_;
};

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

BigInt require_integer(const BigRational& q, const char* what) {
  if (!is_integer(q)) {
    throw InternalError(std::string(what) + ": closed form gave non-integer " +
                        to_string(q));
  }
  return q.get_num();
}

}  // namespace

BigRational bernoulli_number(unsigned m) { return bernoulli_cache().get(m); }

BigRational bernoulli_polynomial(unsigned m, const BigRational& x) {
  // Horner in x over coefficients C(m, i) B_i, highest power of x first.
  BigRational acc = 0;
  for (unsigned i = 0; i <= m; ++i) {
    acc = acc * x + BigRational(binomial(m, i)) * bernoulli_number(i);
  }
  return acc;
}

BigInt power_sum(std::uint64_t n, unsigned r) {
  if (n == 0 || r == 0) throw DomainError("power_sum: n and r must be positive");
  const BigInt nn = make_int(n);
  BigRational inner = 0;
  for (unsigned m = 0; 2 * m <= r; ++m) {
    inner += BigRational(binomial(r + 1, 2 * m)) * bernoulli_number(2 * m) *
             BigRational(pow(nn, r + 1 - 2 * m));
  }
  const BigRational total =
      BigRational(pow(nn, r)) / 2 + inner / (r + 1);
  return require_integer(total, "power_sum");
}

BigInt coprime_power_sum(std::uint64_t n, unsigned r) {
  if (n < 2) throw DomainError("coprime_power_sum: requires n >= 2");
  if (r == 0) throw DomainError("coprime_power_sum: requires r >= 1");
  const Factorization f = factorize(n);
  const BigInt nn = make_int(n);
  BigRational inner = 0;
  for (unsigned m = 0; 2 * m <= r; ++m) {
    // prod_{p | n} (1 - p^{2m-1}); for m = 0 this is prod (1 - 1/p).
    BigRational prod = 1;
    for (const auto& pp : f.factors()) {
      const BigInt p = make_int(pp.prime);
      prod *= m == 0 ? BigRational(1) - make_rational(BigInt(1), p)
                     : BigRational(1 - pow(p, 2 * m - 1));
    }
    inner += BigRational(binomial(r + 1, 2 * m)) * bernoulli_number(2 * m) *
             prod / BigRational(pow(nn, 2 * m));
  }
  const BigRational total = BigRational(pow(nn, r + 1)) / (r + 1) * inner;
  return require_integer(total, "coprime_power_sum");
}

BigRational half_sum_check(unsigned r) {
  BigRational acc = 0;
  for (unsigned m = 0; 2 * m <= r; ++m) {
    acc += BigRational(binomial(r + 1, 2 * m)) * bernoulli_number(2 * m);
  }
  return acc;
}

}  // namespace ramsum
