#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ramsum/averages.hpp"
#include "ramsum/errors.hpp"
#include "ramsum/exact.hpp"

namespace ramsum {
namespace {

using ramsum::oracle::ramanujan;

mpq_class brute_s_r(std::uint64_t k, unsigned r) {
  mpz_class sum = 0;
  for (std::uint64_t j = 1; j <= k; ++j) {
    mpz_class jr;
    mpz_ui_pow_ui(jr.get_mpz_t(), j, r);
    sum += jr * ramanujan(k, static_cast<std::int64_t>(j));
  }
  mpz_class kr;
  mpz_ui_pow_ui(kr.get_mpz_t(), k, r + 1);
  mpq_class q(sum, kr);
  q.canonicalize();
  return q;
}

TEST(SR, Examples) {
  EXPECT_EQ(s_r_direct(1, 5), 1);
  EXPECT_EQ(s_r_closed(1, 5), 1);
  EXPECT_EQ(s_r_direct(6, 3), make_rational(1, 3));
  EXPECT_EQ(s_r_direct(6, 1), make_rational(1, 6));
  EXPECT_THROW(s_r_direct(0, 1), DomainError);
  EXPECT_THROW(s_r_closed(5, 0), DomainError);
}

TEST(SR, DirectAndClosedMatchBruteForce) {
  for (std::uint64_t k = 1; k <= 60; ++k) {
    for (unsigned r = 1; r <= 6; ++r) {
      const auto expect = brute_s_r(k, r);
      ASSERT_EQ(s_r_direct(k, r), expect) << k << " " << r;
      ASSERT_EQ(s_r_closed(k, r), expect) << k << " " << r;
    }
  }
}

TEST(SR, ClosedEqualsDirectSweep) {
  for (std::uint64_t k = 1; k <= 200; ++k) {
    for (unsigned r = 1; r <= 10; ++r) ASSERT_EQ(s_r_direct(k, r), s_r_closed(k, r));
  }
}

TEST(SR, FirstMoment) {
  for (std::uint64_t k = 2; k <= 2000; ++k) {
    ASSERT_EQ(s_r_direct(k, 1), make_rational(static_cast<std::int64_t>(oracle::phi(k)),
                                              2 * static_cast<std::int64_t>(k)));
  }
}

TEST(LogWeighted, MatchesBruteForce) {
  for (std::uint64_t k = 1; k <= 150; ++k) {
    long double lhs = 0;
    for (std::uint64_t j = 1; j <= k; ++j) lhs += std::log(static_cast<long double>(j)) * ramanujan(k, j);
    lhs /= k;
    const auto p = log_weighted_pair(k);
    ASSERT_TRUE(p.holds()) << k;
    ASSERT_NEAR(p.lhs, static_cast<double>(lhs), 1e-9 * (1 + std::abs(static_cast<double>(lhs))));
  }
  EXPECT_NEAR(log_weighted_pair(1).lhs, 0.0, 1e-15);
}

TEST(GcdWeighted, MatchesBruteForce) {
  const std::vector<ArithmeticFunction> fs = {functions::identity(), functions::tau(),
                                              functions::mobius(), functions::pseudo_random(7, 0)};
  for (const auto& f : fs) {
    for (std::uint64_t k = 1; k <= 120; ++k) {
      mpq_class lhs = 0;
      mpq_class conv = 0;
      for (std::uint64_t j = 1; j <= k; ++j) lhs += f(oracle::gcd(j, k)) * ramanujan(k, j);
      for (auto d : oracle::divisors(k)) conv += oracle::mobius(k / d) * f(d);
      const auto p = gcd_weighted_pair(k, f);
      ASSERT_EQ(p.lhs, lhs);
      ASSERT_EQ(p.rhs, conv * oracle::phi(k));
      ASSERT_TRUE(p.holds());
    }
  }
}

TEST(GcdWeighted, Corollaries) {
  for (std::uint64_t k = 1; k <= 300; ++k) {
    const std::int64_t phi = static_cast<std::int64_t>(oracle::phi(k));
    ASSERT_EQ(gcd_weighted_pair(k, functions::identity()).lhs, phi * phi);
    ASSERT_EQ(gcd_weighted_pair(k, functions::one()).lhs, k == 1 ? 1 : 0);
  }
}

TEST(GammaWeighted, HoldsAndRejectsOne) {
  EXPECT_THROW(gamma_weighted_pair(1), DomainError);
  for (std::uint64_t k = 2; k <= 300; ++k) ASSERT_TRUE(gamma_weighted_pair(k).holds()) << k;
  // prime k: lhs = log(p) / (2 (p - 1)) - log(2 pi) / 2
  const double expect = std::log(7.0) / 12.0 - std::log(2 * std::numbers::pi) / 2;
  EXPECT_NEAR(gamma_weighted_pair(7).rhs, expect, 1e-12);
}

TEST(GammaProduct, Holds) {
  EXPECT_NEAR(gamma_product_check(1).lhs, 0.0, 1e-15);
  for (std::uint64_t n = 1; n <= 500; ++n) ASSERT_TRUE(gamma_product_check(n).holds());
}

TEST(MobiusLog, Holds) {
  EXPECT_EQ(mobius_log_check(1).lhs, 0.0);
  for (std::uint64_t k = 1; k <= 500; ++k) ASSERT_TRUE(mobius_log_check(k).holds());
}

TEST(BinomialWeighted, Exact) {
  EXPECT_EQ(binomial_weighted_exact(12).lhs, -5404);
  for (std::uint64_t k = 1; k <= 100; ++k) {
    const auto row = oracle::pascal_row(static_cast<unsigned>(k));
    mpz_class lhs = 0;
    for (std::uint64_t j = 0; j <= k; ++j) lhs += row[j] * ramanujan(k, j);
    const auto p = binomial_weighted_exact(k);
    ASSERT_EQ(p.lhs, lhs) << k;
    ASSERT_TRUE(p.holds()) << k;
  }
}

TEST(BinomialWeighted, Cosine) {
  for (std::uint64_t k = 1; k <= 200; ++k) ASSERT_TRUE(binomial_weighted_cosine(k).holds()) << k;
  EXPECT_THROW(binomial_weighted_cosine(kMaxCosineModulus + 1), RangeError);
}

TEST(BernoulliWeighted, MatchesBruteForce) {
  const auto b = oracle::bernoulli_table(8);
  for (std::uint64_t k = 1; k <= 30; ++k) {
    for (unsigned m = 1; m <= 6; ++m) {
      const auto c = oracle::pascal_row(m);
      mpq_class lhs = 0;
      for (std::uint64_t j = 0; j < k; ++j) {
        mpq_class x(static_cast<long>(j), static_cast<unsigned long>(k));
        x.canonicalize();
        mpq_class poly = 0;
        for (unsigned i = 0; i <= m; ++i) {
          mpq_class xp = 1;
          for (unsigned e = 0; e < m - i; ++e) xp *= x;
          poly += mpq_class(c[i]) * b[i] * xp;
        }
        lhs += poly * ramanujan(k, j);
      }
      const auto p = bernoulli_weighted_pair(k, m);
      ASSERT_EQ(p.lhs, lhs) << k << " " << m;
      ASSERT_TRUE(p.holds()) << k << " " << m;
      ASSERT_TRUE(bernoulli_sum_pair(k, m).holds());
    }
  }
  EXPECT_THROW(bernoulli_weighted_pair(5, 0), DomainError);
}

TEST(InverseDft, MatchesBruteForce) {
  EXPECT_EQ(inverse_dft_check(4, 2).rhs, 0.0);
  EXPECT_NEAR(inverse_dft_check(4, 2).lhs, 0.0, 1e-12);
  EXPECT_NEAR(inverse_dft_check(4, 3).lhs, 1.0, 1e-12);
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  for (std::uint64_t k = 1; k <= 60; ++k) {
    for (std::uint64_t n = 1; n <= 60; ++n) {
      long double re = 0;
      for (std::uint64_t j = 1; j <= k; ++j) re += ramanujan(k, j) * std::cos(two_pi * j * n / k);
      const auto p = inverse_dft_check(k, n);
      ASSERT_NEAR(p.lhs, static_cast<double>(re / k), 1e-10);
      ASSERT_EQ(p.rhs, oracle::gcd(k, n) == 1 ? 1.0 : 0.0);
      ASSERT_TRUE(p.holds());
    }
  }
  EXPECT_THROW(inverse_dft_check(kMaxDftModulus + 1, 1), RangeError);
}

TEST(Numeric, CosPiRatioIsExactAtLatticePoints) {
  using numeric::cos_pi_ratio;
  EXPECT_EQ(cos_pi_ratio(0, 1), 1.0);
  EXPECT_EQ(cos_pi_ratio(1, 1), -1.0);
  EXPECT_EQ(cos_pi_ratio(1, 2), 0.0);
  EXPECT_EQ(cos_pi_ratio(-3, 2), 0.0);
  EXPECT_EQ(cos_pi_ratio(1, 3), 0.5);
  EXPECT_EQ(cos_pi_ratio(2, 3), -0.5);
  EXPECT_EQ(cos_pi_ratio(4, 1), 1.0);
  EXPECT_NEAR(cos_pi_ratio(1, 4), std::sqrt(0.5), 1e-16);
  for (std::int64_t a = -40; a <= 40; ++a) {
    ASSERT_NEAR(cos_pi_ratio(a, 17), std::cos(std::numbers::pi * a / 17), 1e-15);
  }
}

TEST(Numeric, CompensatedSum) {
  numeric::CompensatedSum s;
  s.add(1e16);
  s.add(1.0);
  s.add(-1e16);
  EXPECT_EQ(s.value(), 1.0);
}

TEST(Numeric, LogFactorialAndGamma) {
  EXPECT_EQ(numeric::log_factorial(0), 0.0);
  EXPECT_NEAR(numeric::log_factorial(5), std::log(120.0), 1e-14);
  EXPECT_NEAR(numeric::log_factorial(200000), std::lgamma(200001.0), 1e-6);
  EXPECT_NEAR(numeric::log_gamma(0.5), 0.5 * std::log(std::numbers::pi), 1e-14);
}

TEST(MixedClose, Criterion) {
  EXPECT_TRUE(mixed_close(1e9, 1e9 + 1, 1e-8));
  EXPECT_FALSE(mixed_close(1.0, 1.0 + 1e-7, 1e-8));
  EXPECT_TRUE(mixed_close(0.0, 5e-9, 1e-8));
  EXPECT_FALSE(mixed_close(std::nan(""), 0.0, 1e-8));
  FloatPair p{1.0, 1.5, 0.5};
  EXPECT_EQ(p.abs_error(), 0.5);
  EXPECT_TRUE(p.holds());
}

}  // namespace
}  // namespace ramsum
