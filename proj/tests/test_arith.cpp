#include <gtest/gtest.h>

#include <thread>

#include "oracles.hpp"
#include "ramsum/arith.hpp"
#include "ramsum/errors.hpp"

namespace ramsum {
namespace {

std::vector<PrimePower> pp(std::initializer_list<std::pair<std::uint64_t, unsigned>> l) {
  std::vector<PrimePower> out;
  for (auto [p, e] : l) out.push_back({p, e});
  return out;
}

TEST(Factorize, Examples) {
  EXPECT_TRUE(factorize(1).factors().empty());
  EXPECT_TRUE(factorize(1).is_one());
  EXPECT_EQ(factorize(12).factors(), pp({{2, 2}, {3, 1}}));
  // 9973 is prime (trial division oracle)
  ASSERT_EQ(oracle::trial_division(9973).size(), 1u);
  EXPECT_EQ(factorize(9973).factors(), pp({{9973, 1}}));
}

TEST(Factorize, LargeArguments) {
  const std::uint64_t big_prime = 1099511627689ULL;  // largest prime below 2^40
  EXPECT_EQ(factorize(big_prime).factors(), pp({{big_prime, 1}}));
  const std::uint64_t two40 = kMaxArgument;
  EXPECT_EQ(factorize(two40).factors(), pp({{2, 40}}));
  EXPECT_EQ(factorize(1048573ULL * 1048571ULL).factors(), pp({{1048571, 1}, {1048573, 1}}));
}

TEST(Factorize, RejectsOutOfRange) {
  EXPECT_THROW(factorize(0), DomainError);
  EXPECT_THROW(factorize(kMaxArgument + 1), RangeError);
  EXPECT_THROW(mobius(0), DomainError);
  EXPECT_THROW(euler_phi(0), DomainError);
  EXPECT_THROW(divisors(0), DomainError);
}

TEST(Factorize, RoundTripUpToOneMillion) {
  for (std::uint64_t n = 1; n <= 1'000'000; ++n) {
    const Factorization f = factorize(n);
    std::uint64_t prod = 1;
    std::uint64_t last = 0;
    for (const auto& [p, e] : f.factors()) {
      ASSERT_GT(p, last);
      last = p;
      for (unsigned i = 0; i < e; ++i) prod *= p;
    }
    ASSERT_EQ(prod, n);
  }
}

TEST(Factorize, ListedPrimesArePrime) {
  for (std::uint64_t n = 2; n <= 5000; ++n) {
    const Factorization f = factorize(n);
    for (const auto& [p, e] : f.factors()) {
      ASSERT_EQ(oracle::trial_division(p).size(), 1u);
      ASSERT_EQ(oracle::trial_division(p)[0].second, 1u);
    }
  }
}

TEST(Mobius, Examples) {
  EXPECT_EQ(mobius(1), 1);
  EXPECT_EQ(mobius(6), 1);
  EXPECT_EQ(mobius(12), 0);
  EXPECT_EQ(mobius(30), -1);
  for (std::uint64_t n = 1; n <= 2000; ++n) ASSERT_EQ(mobius(n), oracle::mobius(n)) << n;
}

TEST(EulerPhi, Examples) {
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_EQ(euler_phi(6), 2u);
  EXPECT_EQ(oracle::phi(100), 40u);
  EXPECT_EQ(euler_phi(100), 40u);
  for (std::uint64_t n = 1; n <= 1000; ++n) ASSERT_EQ(euler_phi(n), oracle::phi(n)) << n;
}

TEST(JordanTotient, Examples) {
  EXPECT_EQ(jordan_totient(2, 2), 3);
  EXPECT_EQ(jordan_totient(1, 6), 2);
  EXPECT_EQ(jordan_totient(0, 5), 0);
  EXPECT_EQ(jordan_totient(0, 1), 1);
  for (std::uint64_t n = 1; n <= 500; ++n) {
    ASSERT_EQ(jordan_totient(1, n), euler_phi(n));
  }
}

TEST(Divisors, Examples) {
  EXPECT_EQ(divisors(1), std::vector<std::uint64_t>{1});
  EXPECT_EQ(divisors(6), (std::vector<std::uint64_t>{1, 2, 3, 6}));
  const auto d36 = divisors(36);
  EXPECT_EQ(d36.size(), 9u);
  EXPECT_EQ(d36.back(), 36u);
  for (std::uint64_t n = 1; n <= 3000; ++n) ASSERT_EQ(divisors(n), oracle::divisors(n));
}

TEST(DivisorCountAndSum, Examples) {
  EXPECT_EQ(divisor_count_and_sum(1).count, 1u);
  EXPECT_EQ(divisor_count_and_sum(1).sum, 1u);
  EXPECT_EQ(divisor_count_and_sum(6).count, 4u);
  EXPECT_EQ(divisor_count_and_sum(6).sum, 12u);
  EXPECT_EQ(divisor_count_and_sum(28).count, 6u);
  EXPECT_EQ(divisor_count_and_sum(28).sum, 56u);
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    const auto d = oracle::divisors(n);
    std::uint64_t s = 0;
    for (auto x : d) s += x;
    ASSERT_EQ(divisor_count_and_sum(n).count, d.size());
    ASSERT_EQ(divisor_count_and_sum(n).sum, s);
  }
}

TEST(VonMangoldt, Examples) {
  EXPECT_FALSE(von_mangoldt(1).prime_base.has_value());
  EXPECT_EQ(von_mangoldt(8).prime_base, 2u);
  EXPECT_FALSE(von_mangoldt(12).prime_base.has_value());
  EXPECT_DOUBLE_EQ(von_mangoldt(9).value(), std::log(3.0));
  EXPECT_EQ(von_mangoldt(12).value(), 0.0);
}

TEST(DirichletConvolve, Examples) {
  EXPECT_EQ(dirichlet_convolve(functions::mobius(), functions::one(), 6), 0);
  EXPECT_EQ(dirichlet_convolve(functions::mobius(), functions::one(), 1), 1);
  EXPECT_EQ(dirichlet_convolve(functions::mobius(), functions::identity(), 6), 2);
  EXPECT_EQ(dirichlet_convolve(functions::one(), functions::one(), 12), 6);
}

TEST(DirichletConvolve, PropagatesEvaluationFailure) {
  const ArithmeticFunction bad{"bad", [](std::uint64_t n) -> BigRational {
                                 if (n == 3) throw std::runtime_error("undefined at 3");
                                 return 1;
                               }};
  EXPECT_THROW(dirichlet_convolve(functions::one(), bad, 6), std::runtime_error);
}

TEST(Multiplicativity, CoprimePairsUpTo100) {
  for (std::uint64_t a = 1; a <= 100; ++a) {
    for (std::uint64_t b = 1; b <= 100; ++b) {
      if (gcd(a, b) != 1) continue;
      const auto ab = a * b;
      ASSERT_EQ(mobius(ab), mobius(a) * mobius(b));
      ASSERT_EQ(euler_phi(ab), euler_phi(a) * euler_phi(b));
      ASSERT_EQ(divisor_count_and_sum(ab).count,
                divisor_count_and_sum(a).count * divisor_count_and_sum(b).count);
      ASSERT_EQ(divisor_count_and_sum(ab).sum,
                divisor_count_and_sum(a).sum * divisor_count_and_sum(b).sum);
      for (unsigned m = 0; m <= 4; ++m) {
        ASSERT_EQ(jordan_totient(m, ab), jordan_totient(m, a) * jordan_totient(m, b));
      }
    }
  }
}

TEST(DivisorSums, PhiAndMobius) {
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    std::uint64_t phi_sum = 0;
    int mu_sum = 0;
    for (const auto d : divisors(n)) {
      phi_sum += euler_phi(d);
      mu_sum += mobius(d);
    }
    ASSERT_EQ(phi_sum, n);
    ASSERT_EQ(mu_sum, n == 1 ? 1 : 0);
  }
}

TEST(DivisorSums, Jordan) {
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    for (unsigned m = 0; m <= 4; ++m) {
      BigInt s = 0;
      for (const auto d : divisors(n)) s += jordan_totient(m, d);
      ASSERT_EQ(s, pow(make_int(n), m)) << "n=" << n << " m=" << m;
    }
  }
}

TEST(PseudoRandomFunction, DeterministicAndBounded) {
  const auto f = functions::pseudo_random(2014, 3);
  const auto g = functions::pseudo_random(2014, 3);
  const auto h = functions::pseudo_random(2014, 4);
  bool differs = false;
  for (std::uint64_t n = 1; n <= 200; ++n) {
    ASSERT_EQ(f(n), g(n));
    ASSERT_TRUE(is_integer(f(n)));
    ASSERT_LE(abs(f(n)), 1000);
    differs |= f(n) != h(n);
  }
  EXPECT_TRUE(differs);
  EXPECT_EQ(f.name, "rand3");
}

TEST(Concurrency, PrimeTableInitOnce) {
  std::vector<std::jthread> threads;
  std::vector<std::uint64_t> results(8);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([t, &results] {
      std::uint64_t acc = 0;
      for (std::uint64_t n = 1; n <= 20000; ++n) acc += euler_phi(n + t);
      results[t] = acc;
    });
  }
  threads.clear();
  for (int t = 0; t < 8; ++t) {
    std::uint64_t acc = 0;
    for (std::uint64_t n = 1; n <= 20000; ++n) acc += euler_phi(n + t);
    EXPECT_EQ(results[t], acc);
  }
}

}  // namespace
}  // namespace ramsum
