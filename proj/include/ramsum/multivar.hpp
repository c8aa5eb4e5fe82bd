#pragma once

// Several-variable averages of products of Ramanujan sums.
//
// For k = lcm(k_1, ..., k_n):
//   E(k_1..k_n)   = (1/k) sum_{j=1}^{k} c_{k_1}(j) ... c_{k_n}(j)
//   S_r(k_1..k_n) = (1/k^{r+1}) sum_{j=1}^{k} j^r c_{k_1}(j) ... c_{k_n}(j)
//   g_m(k_1..k_n) = sum_{d_i | k_i} prod_i d_i mu(k_i/d_i) * lcm(d)^{2m-1}
// with the closed form
//   S_r = phi(k_1)...phi(k_n)/(2k)
//         + 1/(r+1) sum_{m=0}^{floor(r/2)} C(r+1, 2m) B_{2m} g_m / k^{2m}.
//
// Divisor-tuple sums walk a mixed-radix counter over the per-component
// divisor lists and refuse to start when prod tau(k_i) exceeds the budget.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ramsum/rational.hpp"

namespace ramsum {

inline constexpr std::uint64_t kDivisorTupleBudget = 10'000'000;
inline constexpr std::uint64_t kMaxTupleLcm = std::uint64_t{1} << 26;

class ModulusTuple {
 public:
  // Throws DomainError for an empty tuple or a zero component, RangeError if
  // the lcm exceeds kMaxTupleLcm.
  explicit ModulusTuple(std::vector<std::uint64_t> ks);
  ModulusTuple(std::initializer_list<std::uint64_t> ks)
      : ModulusTuple(std::vector<std::uint64_t>(ks)) {}

  std::span<const std::uint64_t> ks() const { return ks_; }
  std::size_t arity() const { return ks_.size(); }
  std::uint64_t lcm_value() const { return lcm_; }

  // "2,3,4"
  std::string to_string() const;
  // Parses "2,3,4". Throws DomainError on malformed input.
  static ModulusTuple parse(const std::string& text);

  friend bool operator==(const ModulusTuple& a, const ModulusTuple& b) {
    return a.ks_ == b.ks_;
  }

 private:
  std::vector<std::uint64_t> ks_;
  std::uint64_t lcm_;
};

// Throws InternalError if the average is not a non-negative integer.
BigInt orbicyclic_direct(const ModulusTuple& t);

// Divisor-tuple representation of E. Throws BudgetError, or InternalError on
// a non-integral result.
BigInt orbicyclic_divisor(const ModulusTuple& t,
                          std::uint64_t budget = kDivisorTupleBudget);

BigRational g_m(const ModulusTuple& t, unsigned m,
                std::uint64_t budget = kDivisorTupleBudget);

BigRational s_r_multi_direct(const ModulusTuple& t, unsigned r);

BigRational s_r_multi_closed(const ModulusTuple& t, unsigned r,
                             std::uint64_t budget = kDivisorTupleBudget);

// phi(k_1) ... phi(k_n) / (2k)
BigRational phi_product_term(const ModulusTuple& t);

// E(a_1 b_1, ..., a_n b_n) == E(a) E(b). Throws DomainError unless the
// arities match and gcd(prod a_i, prod b_i) = 1.
bool multiplicativity_check(const ModulusTuple& a, const ModulusTuple& b);

// Component-wise product a_i b_i.
ModulusTuple componentwise_product(const ModulusTuple& a, const ModulusTuple& b);

}  // namespace ramsum
