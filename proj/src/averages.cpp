#include "ramsum/averages.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ramsum/detail/exact_sum.hpp"
#include "ramsum/errors.hpp"
#include "ramsum/exact.hpp"
#include "ramsum/ramanujan.hpp"

namespace ramsum {

namespace {

void require_positive(std::uint64_t k, const char* what) {
  if (k == 0) throw DomainError(std::string(what) + ": k must be positive");
}

BigInt k_power(std::uint64_t k, unsigned long e) { return pow(make_int(k), e); }

// sum_{p | k} log(p) / (p - 1)
double log_prime_ratio_sum(const Factorization& f) {
  numeric::CompensatedSum acc;
  for (const auto& pp : f.factors()) {
    const double p = static_cast<double>(pp.prime);
    acc.add(std::log(p) / (p - 1.0));
  }
  return acc.value();
}

}  // namespace

double FloatPair::abs_error() const { return std::abs(lhs - rhs); }

bool FloatPair::holds() const { return mixed_close(lhs, rhs, tolerance); }

bool mixed_close(double a, double b, double tolerance) {
  if (!std::isfinite(a) || !std::isfinite(b)) return false;
  return std::abs(a - b) <=
         tolerance * (1.0 + std::max(std::abs(a), std::abs(b)));
}

BigRational s_r_direct(std::uint64_t k, unsigned r) {
  require_positive(k, "s_r_direct");
  if (r == 0) throw DomainError("s_r_direct: r must be positive");
  const RamanujanRow row(k);
  detail::ExactSum sum;
  for (std::uint64_t j = 1; j <= k; ++j) {
    const std::int64_t c = row[j];
    if (c == 0) continue;
    detail::int128 jr;
    if (detail::checked_pow(static_cast<detail::int128>(j), r, &jr)) {
      sum.add_product(jr, c);
    } else {
      sum.add(pow(make_int(j), r) * make_int(c));
    }
  }
  return make_rational(sum.value(), k_power(k, r + 1));
}

BigRational s_r_closed(std::uint64_t k, unsigned r) {
  require_positive(k, "s_r_closed");
  if (r == 0) throw DomainError("s_r_closed: r must be positive");
  const Factorization f = factorize(k);
  const BigInt kk = make_int(k);
  BigRational inner = 0;
  for (unsigned m = 0; 2 * m <= r; ++m) {
    inner += BigRational(binomial(r + 1, 2 * m)) * bernoulli_number(2 * m) *
             make_rational(jordan_totient(2 * m, f), pow(kk, 2 * m));
  }
  return make_rational(make_int(euler_phi(f)), 2 * kk) + inner / (r + 1);
}

FloatPair log_weighted_pair(std::uint64_t k) {
  require_positive(k, "log_weighted_pair");
  const RamanujanRow row(k);
  numeric::CompensatedSum lhs;
  for (std::uint64_t j = 2; j <= k; ++j) {  // log 1 = 0
    lhs.add(std::log(static_cast<double>(j)) * static_cast<double>(row[j]));
  }
  const Factorization f = factorize(k);
  numeric::CompensatedSum rhs;
  rhs.add(von_mangoldt(k).value());
  for (const std::uint64_t d : divisors(f)) {
    const int mu = mobius(d);
    if (mu == 0) continue;
    rhs.add(mu * numeric::log_factorial(d) / static_cast<double>(d));
  }
  return {lhs.value() / static_cast<double>(k), rhs.value()};
}

ExactPair gcd_weighted_pair(std::uint64_t k, const ArithmeticFunction& f) {
  require_positive(k, "gcd_weighted_pair");
  const RamanujanRow row(k);
  const std::vector<std::uint64_t> divs = divisors(k);
  // Bucket c_k(j) by gcd(j, k) so f is evaluated once per divisor; the
  // regrouping is exact.
  std::vector<std::int64_t> bucket(divs.size(), 0);
  for (std::uint64_t j = 1; j <= k; ++j) {
    const std::uint64_t g = gcd(j, k);
    const auto it = std::lower_bound(divs.begin(), divs.end(), g);
    bucket[static_cast<std::size_t>(it - divs.begin())] += row[j];
  }
  BigRational lhs = 0;
  for (std::size_t i = 0; i < divs.size(); ++i) {
    if (bucket[i] != 0) lhs += f(divs[i]) * BigRational(make_int(bucket[i]));
  }
  const BigRational rhs =
      BigRational(make_int(euler_phi(k))) *
      dirichlet_convolve(functions::mobius(), f, k);
  return {lhs, rhs};
}

FloatPair gamma_weighted_pair(std::uint64_t k) {
  if (k < 2) throw DomainError("gamma_weighted_pair: requires k > 1");
  const RamanujanRow row(k);
  const Factorization f = factorize(k);
  numeric::CompensatedSum lhs;
  const double kd = static_cast<double>(k);
  for (std::uint64_t j = 1; j < k; ++j) {  // log Gamma(1) = 0
    lhs.add(numeric::log_gamma(static_cast<double>(j) / kd) *
            static_cast<double>(row[j]));
  }
  const double rhs = 0.5 * log_prime_ratio_sum(f) -
                     0.5 * std::log(2.0 * std::numbers::pi);
  return {lhs.value() / static_cast<double>(euler_phi(f)), rhs};
}

FloatPair gamma_product_check(std::uint64_t n) {
  require_positive(n, "gamma_product_check");
  numeric::CompensatedSum lhs;
  const double nd = static_cast<double>(n);
  for (std::uint64_t j = 1; j <= n; ++j) {
    lhs.add(numeric::log_gamma(static_cast<double>(j) / nd));
  }
  const double rhs =
      0.5 * (nd - 1.0) * std::log(2.0 * std::numbers::pi) - 0.5 * std::log(nd);
  return {lhs.value(), rhs};
}

FloatPair mobius_log_check(std::uint64_t k) {
  require_positive(k, "mobius_log_check");
  const Factorization f = factorize(k);
  numeric::CompensatedSum lhs;
  for (const std::uint64_t d : divisors(f)) {
    const int mu = mobius(d);
    if (mu == 0 || d == 1) continue;
    const double dd = static_cast<double>(d);
    lhs.add(mu * std::log(dd) / dd);
  }
  const double rhs = -static_cast<double>(euler_phi(f)) /
                     static_cast<double>(k) * log_prime_ratio_sum(f);
  return {lhs.value(), rhs};
}

namespace {

BigInt binomial_weighted_sum(std::uint64_t k, const RamanujanRow& row) {
  BigInt lhs = 0;
  BigInt c = 1;  // C(k, j)
  for (std::uint64_t j = 0; j <= k; ++j) {
    if (row[j] != 0) lhs += c * make_int(row[j]);
    c *= make_int(k - j);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), j + 1);
  }
  return lhs;
}

}  // namespace

ExactPair binomial_weighted_exact(std::uint64_t k) {
  require_positive(k, "binomial_weighted_exact");
  const RamanujanRow row(k);
  const BigInt lhs = binomial_weighted_sum(k, row);
  BigInt rhs = 0;
  for (const std::uint64_t d : divisors(k)) {
    const int mu = mobius(k / d);
    if (mu == 0) continue;
    BigInt inner = 0;
    for (std::uint64_t m = 0; m <= k / d; ++m) inner += binomial(k, d * m);
    rhs += make_int(static_cast<std::int64_t>(d) * mu) * inner;
  }
  return {BigRational(lhs), BigRational(rhs)};
}

FloatPair binomial_weighted_cosine(std::uint64_t k) {
  require_positive(k, "binomial_weighted_cosine");
  if (k > kMaxCosineModulus) {
    throw RangeError("binomial_weighted_cosine: k exceeds " +
                     std::to_string(kMaxCosineModulus));
  }
  const RamanujanRow row(k);
  const BigInt exact = binomial_weighted_sum(k, row);
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, exact.get_mpz_t());
  const double lhs = std::ldexp(mant, static_cast<int>(exp - static_cast<long>(k)));

  numeric::CompensatedSum rhs;
  const auto kk = static_cast<int>(k);
  for (const std::uint64_t d : divisors(k)) {
    const int mu = mobius(k / d);
    if (mu == 0) continue;
    numeric::CompensatedSum inner;
    for (std::uint64_t l = 1; l <= d; ++l) {
      const double sign = ((l * (k / d)) % 2 == 0) ? 1.0 : -1.0;
      const double c =
          numeric::cos_pi_ratio(static_cast<std::int64_t>(l), d);
      inner.add(sign * std::pow(c, kk));
    }
    rhs.add(mu * inner.value());
  }
  return {lhs, rhs.value()};
}

ExactPair bernoulli_weighted_pair(std::uint64_t k, unsigned m) {
  require_positive(k, "bernoulli_weighted_pair");
  if (m == 0) throw DomainError("bernoulli_weighted_pair: m must be positive");
  const RamanujanRow row(k);
  const BigInt kk = make_int(k);
  BigRational lhs = 0;
  for (std::uint64_t j = 0; j < k; ++j) {
    if (row[j] == 0) continue;
    lhs += bernoulli_polynomial(m, make_rational(make_int(j), kk)) *
           BigRational(make_int(row[j]));
  }
  const BigRational rhs = bernoulli_number(m) *
                          BigRational(jordan_totient(m, k)) /
                          BigRational(pow(kk, m - 1));
  return {lhs, rhs};
}

ExactPair bernoulli_sum_pair(std::uint64_t k, unsigned m) {
  require_positive(k, "bernoulli_sum_pair");
  if (m == 0) throw DomainError("bernoulli_sum_pair: m must be positive");
  const BigInt kk = make_int(k);
  BigRational lhs = 0;
  for (std::uint64_t j = 0; j < k; ++j) {
    lhs += bernoulli_polynomial(m, make_rational(make_int(j), kk));
  }
  return {lhs, bernoulli_number(m) / BigRational(pow(kk, m - 1))};
}

FloatPair inverse_dft_check(std::uint64_t k, std::uint64_t n) {
  require_positive(k, "inverse_dft_check");
  if (n == 0) throw DomainError("inverse_dft_check: n must be positive");
  if (k > kMaxDftModulus) {
    throw RangeError("inverse_dft_check: k exceeds " +
                     std::to_string(kMaxDftModulus));
  }
  const RamanujanRow row(k);
  const std::uint64_t nr = n % k;
  numeric::CompensatedSum re;
  numeric::CompensatedSum im;
  for (std::uint64_t j = 1; j <= k; ++j) {
    if (row[j] == 0) continue;
    // exp(2 pi i t / k) = cos(pi 2t / k) + i sin(...), t = j n mod k
    const auto t = static_cast<std::int64_t>((j * nr) % k);
    const double c = static_cast<double>(row[j]);
    re.add(c * numeric::cos_pi_ratio(2 * t, k));
    // sin(x) = cos(x - pi/2) = cos(pi (4t - k) / (2k))
    im.add(c * numeric::cos_pi_ratio(4 * t - static_cast<std::int64_t>(k), 2 * k));
  }
  const double kd = static_cast<double>(k);
  if (std::abs(im.value()) > 1e-8 * kd) {
    throw InternalError("inverse_dft_check: imaginary part " +
                        std::to_string(im.value()) + " at k=" + std::to_string(k));
  }
  return {re.value() / kd, gcd(k, n) == 1 ? 1.0 : 0.0};
}

namespace numeric {

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    compensation_ += (sum_ - t) + x;
  } else {
    compensation_ += (x - t) + sum_;
  }
  sum_ = t;
}

double log_factorial(std::uint64_t n) {
  if (n > 100000) return log_gamma(static_cast<double>(n) + 1.0);
  CompensatedSum acc;
  for (std::uint64_t m = 2; m <= n; ++m) acc.add(std::log(static_cast<double>(m)));
  return acc.value();
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive");
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

double cos_pi_ratio(std::int64_t num, std::uint64_t den) {
  if (den == 0) throw DomainError("cos_pi_ratio: zero denominator");
  const auto period = static_cast<std::int64_t>(2 * den);
  std::int64_t r = num % period;
  if (r < 0) r += period;
  const auto half = static_cast<std::int64_t>(den);
  if (r > half) r = period - r;  // cos is even about pi
  // r in [0, den]
  if (r == 0) return 1.0;
  if (r == half) return -1.0;
  if (2 * r == half) return 0.0;
  if (3 * r == half) return 0.5;
  if (3 * r == 2 * half) return -0.5;
  if (2 * r > half) {
    return -std::cos(std::numbers::pi * static_cast<double>(half - r) /
                     static_cast<double>(den));
  }
  return std::cos(std::numbers::pi * static_cast<double>(r) /
                  static_cast<double>(den));
}

}  // namespace numeric

}  // namespace ramsum
