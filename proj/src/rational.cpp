#include "ramsum/rational.hpp"

#include <cmath>
#include <string>

#include "ramsum/detail/exact_sum.hpp"
#include "ramsum/errors.hpp"

namespace ramsum {

BigInt make_int(std::uint64_t v) {
  BigInt z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return z;
}

BigInt make_int(std::int64_t v) {
  if (v >= 0) return make_int(static_cast<std::uint64_t>(v));
  // -(v + 1) avoids overflow at INT64_MIN.
  BigInt z = make_int(static_cast<std::uint64_t>(-(v + 1)));
  return -z - 1;
}

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigRational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(make_int(num), make_int(den));
}

std::string to_string(const BigInt& z) { return z.get_str(10); }

std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw DomainError("malformed rational: '" + std::string(whole) + "'");
  }
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw DomainError("malformed rational: '" + std::string(whole) + "'");
    }
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return BigRational(parse_integer(text, text));
  }
  const BigInt num = parse_integer(text.substr(0, slash), text);
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw DomainError("malformed rational: '" + std::string(text) + "'");
  }
  return make_rational(num, parse_integer(den_text, text));
}

bool is_integer(const BigRational& q) { return q.get_den() == 1; }

double to_double(const BigInt& z) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::ldexp(mant, static_cast<int>(exp));
}

double to_double(const BigRational& q) {
  long en = 0;
  long ed = 0;
  const double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  const double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return std::ldexp(mn / md, static_cast<int>(en - ed));
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

BigRational pow(const BigRational& base, unsigned long exponent) {
  BigRational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return r;  // powers of coprime parts stay coprime
}

namespace detail {

BigInt ExactSum::to_big(int128 v) {
  const bool negative = v < 0;
  // Magnitude as unsigned avoids overflow at the minimum value.
  unsigned __int128 mag =
      negative ? static_cast<unsigned __int128>(-(v + 1)) + 1
               : static_cast<unsigned __int128>(v);
  const std::uint64_t hi = static_cast<std::uint64_t>(mag >> 64);
  const std::uint64_t lo = static_cast<std::uint64_t>(mag);
  BigInt z = make_int(hi);
  z <<= 64;
  z += make_int(lo);
  return negative ? BigInt(-z) : z;
}

}  // namespace detail

}  // namespace ramsum
