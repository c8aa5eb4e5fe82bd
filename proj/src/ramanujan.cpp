#include "ramsum/ramanujan.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ramsum/arith.hpp"
#include "ramsum/errors.hpp"

namespace ramsum {

namespace {

void check_modulus(std::uint64_t k, const char* what) {
  if (k == 0) throw DomainError(std::string(what) + ": k must be positive");
  if (k > kMaxArgument) throw RangeError(std::string(what) + ": k exceeds 2^40");
}

std::uint64_t reduce(std::int64_t j, std::uint64_t k) {
  const auto kk = static_cast<std::int64_t>(k);
  std::int64_t r = j % kk;
  if (r < 0) r += kk;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

std::int64_t ramanujan_sum(std::uint64_t k, std::int64_t j) {
  check_modulus(k, "ramanujan_sum");
  const std::uint64_t g = gcd(k, reduce(j, k));  // gcd(k, 0) = k
  std::int64_t total = 0;
  for (const std::uint64_t d : divisors(g)) {
    total += static_cast<std::int64_t>(d) * mobius(k / d);
  }
  return total;
}

std::int64_t ramanujan_sum_holder(std::uint64_t k, std::int64_t j) {
  check_modulus(k, "ramanujan_sum_holder");
  const std::uint64_t g = gcd(k, reduce(j, k));
  const Factorization q = factorize(k / g);
  const auto phi_k = static_cast<std::int64_t>(euler_phi(k));
  const auto phi_q = static_cast<std::int64_t>(euler_phi(q));
  const std::int64_t num = phi_k * mobius(q);
  if (num % phi_q != 0) {
    throw InternalError("ramanujan_sum_holder: phi(k/g) does not divide phi(k) mu(k/g) at k=" +
                        std::to_string(k) + ", j=" + std::to_string(j));
  }
  return num / phi_q;
}

FloatRamanujan ramanujan_sum_complex(std::uint64_t k, std::int64_t j) {
  if (k == 0) throw DomainError("ramanujan_sum_float: k must be positive");
  if (k > kMaxFloatModulus) {
    throw RangeError("ramanujan_sum_float: k exceeds " +
                     std::to_string(kMaxFloatModulus));
  }
  const std::uint64_t jr = reduce(j, k);
  double re = 0.0;
  double im = 0.0;
  for (std::uint64_t m = 1; m <= k; ++m) {
    if (gcd(m, k) != 1) continue;
    const double angle = 2.0 * std::numbers::pi *
                         static_cast<double>((m * jr) % k) /
                         static_cast<double>(k);
    re += std::cos(angle);
    im += std::sin(angle);
  }
  return {re, im};
}

double ramanujan_sum_float(std::uint64_t k, std::int64_t j) {
  const FloatRamanujan z = ramanujan_sum_complex(k, j);
  if (std::abs(z.imag) >= 1e-6 * static_cast<double>(k)) {
    throw InternalError("ramanujan_sum_float: imaginary part " +
                        std::to_string(z.imag) + " at k=" + std::to_string(k));
  }
  return z.real;
}

RamanujanRow::RamanujanRow(std::uint64_t k) : k_(k) {
  check_modulus(k, "ramanujan_row");
  if (k > kMaxRowModulus) throw RangeError("ramanujan_row: k exceeds 2^26");
  values_.assign(k + 1, 0);
  const Factorization f = factorize(k);
  for (const std::uint64_t d : divisors(f)) {
    const int mu = mobius(k / d);
    if (mu == 0) continue;
    const std::int64_t term = static_cast<std::int64_t>(d) * mu;
    for (std::uint64_t j = 0; j <= k; j += d) values_[j] += term;
  }
}

std::int64_t RamanujanRow::at(std::int64_t j) const {
  return values_[reduce(j, k_)];
}

RamanujanRow ramanujan_row(std::uint64_t k) { return RamanujanRow(k); }

}  // namespace ramsum
