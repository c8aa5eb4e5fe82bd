#include "ramsum/multivar.hpp"

#include <charconv>
#include <string>

#include "ramsum/arith.hpp"
#include "ramsum/detail/exact_sum.hpp"
#include "ramsum/errors.hpp"
#include "ramsum/exact.hpp"
#include "ramsum/ramanujan.hpp"

namespace ramsum {

using detail::ExactSum;
using detail::int128;

ModulusTuple::ModulusTuple(std::vector<std::uint64_t> ks) : ks_(std::move(ks)), lcm_(1) {
  if (ks_.empty()) throw DomainError("modulus tuple must be non-empty");
  for (const std::uint64_t k : ks_) {
    if (k == 0) throw DomainError("modulus tuple components must be positive");
    if (k > kMaxTupleLcm) throw RangeError("modulus tuple component exceeds 2^26");
    lcm_ = lcm(lcm_, k);
    if (lcm_ > kMaxTupleLcm) throw RangeError("modulus tuple lcm exceeds 2^26");
  }
}

std::string ModulusTuple::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < ks_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(ks_[i]);
  }
  return out;
}

ModulusTuple ModulusTuple::parse(const std::string& text) {
  std::vector<std::uint64_t> ks;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view item =
        std::string_view(text).substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
    std::uint64_t v = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size()) {
      throw DomainError("malformed modulus tuple: '" + text + "'");
    }
    ks.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return ModulusTuple(std::move(ks));
}

namespace {

// prod_i c_{k_i}(j) for j = 0 .. lcm - 1, indexed by j mod lcm.
class ProductRow {
 public:
  explicit ProductRow(const ModulusTuple& t) {
    for (const std::uint64_t k : t.ks()) rows_.emplace_back(k);
  }

  // Returns false if the product does not fit in 127 bits; *big then holds it.
  bool at(std::uint64_t j, int128* out, BigInt* big) const {
    int128 p = 1;
    for (const RamanujanRow& row : rows_) {
      const std::int64_t c = row[j % row.modulus()];
      if (c == 0) {
        *out = 0;
        return true;
      }
      if (__builtin_mul_overflow(p, static_cast<int128>(c), &p)) {
        *big = 1;
        for (const RamanujanRow& r : rows_) *big *= make_int(r[j % r.modulus()]);
        return false;
      }
    }
    *out = p;
    return true;
  }

 private:
  std::vector<RamanujanRow> rows_;
};

// Calls fn(weight, big_weight, lcm(d)) for every divisor tuple with non-zero
// weight prod d_i mu(k_i/d_i). big_weight is null when the weight fits in 127
// bits. Zero-weight tuples are skipped but the budget counts the whole lattice.
template <typename Fn>
void for_each_divisor_tuple(const ModulusTuple& t, std::uint64_t budget, Fn&& fn) {
  struct Choice {
    std::uint64_t d;
    std::int64_t weight;  // d mu(k/d), non-zero
  };
  std::uint64_t lattice = 1;
  std::vector<std::vector<Choice>> choices;
  for (const std::uint64_t k : t.ks()) {
    const std::vector<std::uint64_t> divs = divisors(k);
    if (lattice > budget / divs.size()) {
      throw BudgetError("divisor-tuple lattice for (" + t.to_string() +
                        ") exceeds budget " + std::to_string(budget));
    }
    lattice *= divs.size();
    std::vector<Choice> list;
    for (const std::uint64_t d : divs) {
      const int mu = mobius(k / d);
      if (mu != 0) list.push_back({d, static_cast<std::int64_t>(d) * mu});
    }
    choices.push_back(std::move(list));
  }

  const std::size_t n = choices.size();
  std::vector<std::size_t> digit(n, 0);
  while (true) {
    int128 weight = 1;
    bool fits = true;
    std::uint64_t l = 1;
    for (std::size_t i = 0; i < n; ++i) {
      const Choice& c = choices[i][digit[i]];
      l = lcm(l, c.d);
      if (fits && __builtin_mul_overflow(weight, static_cast<int128>(c.weight), &weight)) {
        fits = false;
      }
    }
    if (fits) {
      fn(weight, static_cast<const BigInt*>(nullptr), l);
    } else {
      BigInt w = 1;
      for (std::size_t i = 0; i < n; ++i) w *= make_int(choices[i][digit[i]].weight);
      fn(int128{0}, &w, l);
    }
    // mixed-radix increment
    std::size_t i = 0;
    while (i < n && ++digit[i] == choices[i].size()) {
      digit[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
}

// g_0 .. g_{m_max} in one pass over the lattice.
std::vector<BigRational> g_values(const ModulusTuple& t, unsigned m_max,
                                  std::uint64_t budget) {
  const std::uint64_t big_l = t.lcm_value();
  std::vector<ExactSum> sums(m_max + 1);
  for_each_divisor_tuple(t, budget, [&](int128 w, const BigInt* wbig, std::uint64_t l) {
    for (unsigned m = 0; m <= m_max; ++m) {
      // m = 0 sums w / l, scaled by big_l so every term is an integer.
      int128 factor = static_cast<int128>(big_l / l);
      const bool factor_fits =
          m == 0 || detail::checked_pow(static_cast<int128>(l), 2 * m - 1, &factor);
      if (wbig == nullptr && factor_fits) {
        sums[m].add_product(w, factor);
      } else {
        const BigInt f = m == 0 ? make_int(big_l / l) : pow(make_int(l), 2 * m - 1);
        sums[m].add((wbig != nullptr ? *wbig : ExactSum::to_big(w)) * f);
      }
    }
  });
  std::vector<BigRational> out;
  out.reserve(m_max + 1);
  out.push_back(make_rational(sums[0].value(), make_int(big_l)));
  for (unsigned m = 1; m <= m_max; ++m) out.emplace_back(sums[m].value());
  return out;
}

BigInt require_nonnegative_integer(const BigRational& q, const ModulusTuple& t,
                                   const char* what) {
  if (!is_integer(q) || q < 0) {
    throw InternalError(std::string(what) + "(" + t.to_string() +
                        ") is not a non-negative integer: " + ramsum::to_string(q));
  }
  return q.get_num();
}

}  // namespace

BigInt orbicyclic_direct(const ModulusTuple& t) {
  const ProductRow row(t);
  const std::uint64_t big_l = t.lcm_value();
  ExactSum sum;
  BigInt big;
  for (std::uint64_t j = 1; j <= big_l; ++j) {
    int128 p;
    if (row.at(j, &p, &big)) {
      if (p != 0) sum.add_product(p, 1);
    } else {
      sum.add(big);
    }
  }
  return require_nonnegative_integer(make_rational(sum.value(), make_int(big_l)), t,
                                     "orbicyclic_direct");
}

BigInt orbicyclic_divisor(const ModulusTuple& t, std::uint64_t budget) {
  return require_nonnegative_integer(g_values(t, 0, budget)[0], t,
                                     "orbicyclic_divisor");
}

BigRational g_m(const ModulusTuple& t, unsigned m, std::uint64_t budget) {
  return g_values(t, m, budget)[m];
}

BigRational s_r_multi_direct(const ModulusTuple& t, unsigned r) {
  if (r == 0) throw DomainError("s_r_multi_direct: r must be positive");
  const ProductRow row(t);
  const std::uint64_t big_l = t.lcm_value();
  ExactSum sum;
  BigInt big;
  for (std::uint64_t j = 1; j <= big_l; ++j) {
    int128 p;
    const bool fits = row.at(j, &p, &big);
    if (fits && p == 0) continue;
    int128 jr;
    if (fits && detail::checked_pow(static_cast<int128>(j), r, &jr)) {
      sum.add_product(jr, p);
    } else {
      sum.add(pow(make_int(j), r) * (fits ? ExactSum::to_big(p) : big));
    }
  }
  return make_rational(sum.value(), pow(make_int(big_l), r + 1));
}

BigRational phi_product_term(const ModulusTuple& t) {
  BigInt prod = 1;
  for (const std::uint64_t k : t.ks()) prod *= make_int(euler_phi(k));
  return make_rational(prod, 2 * make_int(t.lcm_value()));
}

BigRational s_r_multi_closed(const ModulusTuple& t, unsigned r, std::uint64_t budget) {
  if (r == 0) throw DomainError("s_r_multi_closed: r must be positive");
  const std::vector<BigRational> g = g_values(t, r / 2, budget);
  const BigInt big_l = make_int(t.lcm_value());
  BigRational inner = 0;
  for (unsigned m = 0; 2 * m <= r; ++m) {
    inner += BigRational(binomial(r + 1, 2 * m)) * bernoulli_number(2 * m) * g[m] /
             BigRational(pow(big_l, 2 * m));
  }
  return phi_product_term(t) + inner / (r + 1);
}

ModulusTuple componentwise_product(const ModulusTuple& a, const ModulusTuple& b) {
  if (a.arity() != b.arity()) {
    throw DomainError("componentwise_product: arity mismatch");
  }
  std::vector<std::uint64_t> ks;
  for (std::size_t i = 0; i < a.arity(); ++i) ks.push_back(a.ks()[i] * b.ks()[i]);
  return ModulusTuple(std::move(ks));
}

bool multiplicativity_check(const ModulusTuple& a, const ModulusTuple& b) {
  if (a.arity() != b.arity()) {
    throw DomainError("multiplicativity_check: arity mismatch");
  }
  for (const std::uint64_t x : a.ks()) {
    for (const std::uint64_t y : b.ks()) {
      if (gcd(x, y) != 1) {
        throw DomainError("multiplicativity_check: (" + a.to_string() + ") and (" +
                          b.to_string() + ") are not coprime");
      }
    }
  }
  return orbicyclic_direct(componentwise_product(a, b)) ==
         orbicyclic_direct(a) * orbicyclic_direct(b);
}

}  // namespace ramsum
