#include "ramsum/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>

#include "ramsum/arith.hpp"
#include "ramsum/exact.hpp"
#include "ramsum/ramanujan.hpp"

namespace ramsum::verify {

namespace {

struct CatalogEntry {
  IdentityId id;
  std::string_view tag;
  CompareMode mode;
};

constexpr std::array<CatalogEntry, 20> kCatalog{{
    {IdentityId::kProp1, "prop1", CompareMode::kExact},
    {IdentityId::kProp2, "prop2", CompareMode::kTolerance},
    {IdentityId::kProp3, "prop3", CompareMode::kExact},
    {IdentityId::kProp3Corollary, "prop3-corollary", CompareMode::kExact},
    {IdentityId::kProp4, "prop4", CompareMode::kTolerance},
    {IdentityId::kGammaProduct, "gamma-product", CompareMode::kTolerance},
    {IdentityId::kMobiusLog, "mobius-log", CompareMode::kTolerance},
    {IdentityId::kProp5Exact, "prop5-exact", CompareMode::kExact},
    {IdentityId::kProp5Cosine, "prop5-cosine", CompareMode::kTolerance},
    {IdentityId::kProp6, "prop6", CompareMode::kExact},
    {IdentityId::kInverseDft, "inverse-dft", CompareMode::kTolerance},
    {IdentityId::kProp7, "prop7", CompareMode::kExact},
    {IdentityId::kProp7Corollary, "prop7-corollary", CompareMode::kExact},
    {IdentityId::kEIntegrality, "e-integrality", CompareMode::kExact},
    {IdentityId::kEMultiplicativity, "e-multiplicativity", CompareMode::kExact},
    {IdentityId::kCrossEvaluator, "cross-evaluator", CompareMode::kExact},
    {IdentityId::kHalfSum, "half-sum", CompareMode::kExact},
    {IdentityId::kFaulhaber, "faulhaber", CompareMode::kExact},
    {IdentityId::kCoprimePowerSum, "coprime-power-sum", CompareMode::kExact},
    {IdentityId::kBernoulliPolySum, "bernoulli-poly-sum", CompareMode::kExact},
}};

constexpr std::array<IdentityId, 20> kIds = [] {
  std::array<IdentityId, 20> ids{};
  for (std::size_t i = 0; i < kCatalog.size(); ++i) ids[i] = kCatalog[i].id;
  return ids;
}();

const CatalogEntry& entry(IdentityId id) {
  for (const CatalogEntry& e : kCatalog) {
    if (e.id == id) return e;
  }
  throw InternalError("unknown identity id");
}

template <typename T>
T need(const std::optional<T>& v, IdentityId id, const char* field) {
  if (!v) {
    throw SchemaError(std::string(tag(id)) + ": missing parameter '" + field + "'");
  }
  return *v;
}

std::uint64_t need_positive(const std::optional<std::uint64_t>& v, IdentityId id,
                            const char* field) {
  const std::uint64_t x = need(v, id, field);
  if (x == 0) {
    throw SchemaError(std::string(tag(id)) + ": parameter '" + field +
                      "' must be positive");
  }
  return x;
}

void check_at_most(std::uint64_t v, std::uint64_t limit, IdentityId id, const char* field) {
  if (v > limit) {
    throw SchemaError(std::string(tag(id)) + ": parameter '" + field + "' exceeds " +
                      std::to_string(limit));
  }
}

unsigned narrow(std::uint64_t v, IdentityId id, const char* field) {
  check_at_most(v, 1000, id, field);
  return static_cast<unsigned>(v);
}

void fill_exact(IdentityCase& c, const BigRational& lhs, const BigRational& rhs) {
  c.lhs = ramsum::to_string(lhs);
  c.rhs = ramsum::to_string(rhs);
  c.pass = lhs == rhs;
}

void fill_float(IdentityCase& c, const FloatPair& pair) {
  c.lhs = format_double(pair.lhs);
  c.rhs = format_double(pair.rhs);
  c.abs_error = pair.abs_error();
  c.pass = pair.holds();
}

BigInt brute_power_sum(std::uint64_t n, unsigned r, bool coprime_only) {
  BigInt total = 0;
  for (std::uint64_t j = 1; j <= n; ++j) {
    if (coprime_only && gcd(j, n) != 1) continue;
    total += pow(make_int(j), r);
  }
  return total;
}

}  // namespace

std::span<const IdentityId> all_identities() { return kIds; }

std::string_view tag(IdentityId id) { return entry(id).tag; }

std::optional<IdentityId> parse_identity(std::string_view t) {
  for (const CatalogEntry& e : kCatalog) {
    if (e.tag == t) return e.id;
  }
  return std::nullopt;
}

CompareMode comparison_mode(IdentityId id) { return entry(id).mode; }

std::string_view to_string(CompareMode mode) {
  return mode == CompareMode::kExact ? "exact" : "tolerance";
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string CaseParams::to_string() const {
  std::string out;
  auto field = [&out](const std::string& s) {
    if (!out.empty()) out += ' ';
    out += s;
  };
  if (tuple) field("ks=(" + tuple->to_string() + ")");
  if (tuple_b) field("ks2=(" + tuple_b->to_string() + ")");
  if (k) field("k=" + std::to_string(*k));
  if (j) field("j=" + std::to_string(*j));
  if (n) field("n=" + std::to_string(*n));
  if (r) field("r=" + std::to_string(*r));
  if (m) field("m=" + std::to_string(*m));
  if (!function.empty()) field("f=" + function);
  if (!form.empty()) field("form=" + form);
  return out;
}

ArithmeticFunction named_function(const std::string& name, std::uint64_t seed) {
  if (name == "id") return functions::identity();
  if (name == "tau") return functions::tau();
  if (name == "sigma") return functions::sigma();
  if (name == "mu") return functions::mobius();
  if (name == "phi") return functions::euler_phi();
  if (name.size() > 4 && name.compare(0, 4, "rand") == 0 &&
      std::all_of(name.begin() + 4, name.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
      name.size() <= 10) {
    return functions::pseudo_random(seed, static_cast<unsigned>(std::stoul(name.substr(4))));
  }
  throw SchemaError("unknown arithmetic function '" + name + "'");
}

IdentityCase run_identity(IdentityId id, const CaseParams& p, const EvalOptions& options) {
  if (!(options.tolerance > 0.0) || options.tolerance > kDefaultTolerance) {
    throw SchemaError("tolerance must be in (0, 1e-8]");
  }
  IdentityCase c;
  c.id = id;
  c.params = p;
  c.mode = comparison_mode(id);

  // Schema checks happen before any evaluation so they surface as errors,
  // not as failed cases.
  std::function<void()> evaluate;
  switch (id) {
    case IdentityId::kProp1: {
      const std::uint64_t k = need_positive(p.k, id, "k");
      const unsigned r = narrow(need_positive(p.r, id, "r"), id, "r");
      evaluate = [&c, k, r] { fill_exact(c, s_r_direct(k, r), s_r_closed(k, r)); };
      break;
    }
    case IdentityId::kProp2: {
      const std::uint64_t k = need_positive(p.k, id, "k");
      evaluate = [&c, k, &options] {
        FloatPair pair = log_weighted_pair(k);
        pair.tolerance = options.tolerance;
        fill_float(c, pair);
      };
      break;
    }
    case IdentityId::kProp3: {
      const std::uint64_t k = need_positive(p.k, id, "k");
      const ArithmeticFunction f = named_function(p.function, options.seed);
      evaluate = [&c, k, f] {
        const ExactPair pair = gcd_weighted_pair(k, f);
        fill_exact(c, pair.lhs, pair.rhs);
      };
      break;
    }
    case IdentityId::kProp3Corollary: {
      const std::uint64_t k = need_positive(p.k, id, "k");
      const std::string name = p.function;
      if (name != "id" && name != "tau" && name != "sigma") {
        throw SchemaError("prop3-corollary: function must be id, tau or sigma");
      }
      evaluate = [&c, k, name, &options] {
        const BigRational lhs = gcd_weighted_pair(k, named_function(name, options.seed)).lhs;
        const BigInt phi = make_int(euler_phi(k));
        const BigInt rhs = name == "id" ? BigInt(phi * phi)
                           : name == "tau" ? phi
                                           : BigInt(make_int(k) * phi);
        fill_exact(c, lhs, BigRational(rhs));
      };
      break;
    }
    case IdentityId::kProp4: {
      const std::uint64_t k = need_positive(p.k, id, "k");
      if (k < 2) throw SchemaError("prop4: requires k > 1");
      evaluate = [&c, k, &options] {
        FloatPair pair = gamma_weighted_pair(k);
        pair.tolerance = options.tolerance;
        fill_float(c, pair);
      };
      break;
    }
    case IdentityId::kGammaProduct: {
      const std::uint64_t n = need_positive(p.n, id, "n");
      evaluate = [&c, n, &options] {
        FloatPair pair = gamma_product_check(n);
        pair.tolerance = options.tolerance;
        fill_float(c, pair);
      };
      break;
    }
    case IdentityId::kMobiusLog: {
      const std::uint64_t k = need_positive(p.k, id, "k");
      evaluate = [&c, k, &options] {
        FloatPair pair = mobius_log_check(k);
        pair.tolerance = options.tolerance;
        fill_float(c, pair);
      };
      break;
    }
    case IdentityId::kProp5Exact: {
      const std::uint64_t k = need_positive(p.k, id, "k");
      evaluate = [&c, k] {
        const ExactPair pair = binomial_weighted_exact(k);
        fill_exact(c, pair.lhs, pair.rhs);
      };
      break;
    }
    case IdentityId::kProp5Cosine: {
      const std::uint64_t k = need_positive(p.k, id, "k");
      check_at_most(k, kMaxCosineModulus, id, "k");
      evaluate = [&c, k, &options] {
        FloatPair pair = binomial_weighted_cosine(k);
        pair.tolerance = options.tolerance;
        fill_float(c, pair);
      };
      break;
    }
    case IdentityId::kProp6: {
      const std::uint64_t k = need_positive(p.k, id, "k");
      const unsigned m = narrow(need_positive(p.m, id, "m"), id, "m");
      evaluate = [&c, k, m] {
        const ExactPair pair = bernoulli_weighted_pair(k, m);
        fill_exact(c, pair.lhs, pair.rhs);
      };
      break;
    }
    case IdentityId::kInverseDft: {
      const std::uint64_t k = need_positive(p.k, id, "k");
      const std::uint64_t n = need_positive(p.n, id, "n");
      check_at_most(k, kMaxDftModulus, id, "k");
      evaluate = [&c, k, n, &options] {
        FloatPair pair = inverse_dft_check(k, n);
        pair.tolerance = options.tolerance;
        fill_float(c, pair);
      };
      break;
    }
    case IdentityId::kProp7: {
      const unsigned r = narrow(need_positive(p.r, id, "r"), id, "r");
      if (p.form == "n1-reduction") {
        const std::uint64_t k = need_positive(p.k, id, "k");
        evaluate = [&c, k, r] {
          fill_exact(c, s_r_multi_closed(ModulusTuple{k}, r), s_r_closed(k, r));
        };
      } else if (p.form.empty()) {
        const ModulusTuple t = need(p.tuple, id, "ks");
        evaluate = [&c, t, r] { fill_exact(c, s_r_multi_direct(t, r), s_r_multi_closed(t, r)); };
      } else {
        throw SchemaError("prop7: unknown form '" + p.form + "'");
      }
      break;
    }
    case IdentityId::kProp7Corollary: {
      const ModulusTuple t = need(p.tuple, id, "ks");
      evaluate = [&c, t] {
        const BigRational lhs = s_r_multi_direct(t, 1) - phi_product_term(t);
        const BigRational rhs = BigRational(orbicyclic_divisor(t)) / 2;
        fill_exact(c, lhs, rhs);
      };
      break;
    }
    case IdentityId::kEIntegrality: {
      const ModulusTuple t = need(p.tuple, id, "ks");
      evaluate = [&c, t] {
        fill_exact(c, BigRational(orbicyclic_direct(t)), BigRational(orbicyclic_divisor(t)));
      };
      break;
    }
    case IdentityId::kEMultiplicativity: {
      const ModulusTuple a = need(p.tuple, id, "ks");
      const ModulusTuple b = need(p.tuple_b, id, "ks2");
      if (a.arity() != b.arity()) throw SchemaError("e-multiplicativity: arity mismatch");
      for (const std::uint64_t x : a.ks()) {
        for (const std::uint64_t y : b.ks()) {
          if (gcd(x, y) != 1) throw SchemaError("e-multiplicativity: tuples not coprime");
        }
      }
      evaluate = [&c, a, b] {
        const BigInt lhs = orbicyclic_direct(componentwise_product(a, b));
        const BigInt rhs = orbicyclic_direct(a) * orbicyclic_direct(b);
        fill_exact(c, BigRational(lhs), BigRational(rhs));
      };
      break;
    }
    case IdentityId::kCrossEvaluator: {
      const std::uint64_t k = need_positive(p.k, id, "k");
      const std::int64_t j = need(p.j, id, "j");
      check_at_most(k, kMaxFloatModulus, id, "k");
      evaluate = [&c, k, j] {
        const std::int64_t divisor_form = ramanujan_sum(k, j);
        const std::int64_t holder = ramanujan_sum_holder(k, j);
        const double fl = ramanujan_sum_float(k, j);
        fill_exact(c, BigRational(make_int(divisor_form)), BigRational(make_int(holder)));
        const double deviation = std::abs(fl - static_cast<double>(divisor_form));
        if (deviation > 1e-6 * static_cast<double>(k) || std::llround(fl) != divisor_form) {
          c.pass = false;
          c.error = "float definition " + format_double(fl) + " deviates by " +
                    format_double(deviation);
        }
      };
      break;
    }
    case IdentityId::kHalfSum: {
      const unsigned r = narrow(need(p.r, id, "r"), id, "r");
      evaluate = [&c, r] {
        fill_exact(c, half_sum_check(r), make_rational(static_cast<std::int64_t>(r) + 1, 2));
      };
      break;
    }
    case IdentityId::kFaulhaber: {
      const std::uint64_t n = need_positive(p.n, id, "n");
      const unsigned r = narrow(need_positive(p.r, id, "r"), id, "r");
      check_at_most(n, 1'000'000, id, "n");
      evaluate = [&c, n, r] {
        fill_exact(c, BigRational(brute_power_sum(n, r, false)), BigRational(power_sum(n, r)));
      };
      break;
    }
    case IdentityId::kCoprimePowerSum: {
      const std::uint64_t n = need_positive(p.n, id, "n");
      const unsigned r = narrow(need_positive(p.r, id, "r"), id, "r");
      if (n < 2) throw SchemaError("coprime-power-sum: requires n > 1");
      check_at_most(n, 1'000'000, id, "n");
      evaluate = [&c, n, r] {
        fill_exact(c, BigRational(brute_power_sum(n, r, true)),
                   BigRational(coprime_power_sum(n, r)));
      };
      break;
    }
    case IdentityId::kBernoulliPolySum: {
      const std::uint64_t k = need_positive(p.k, id, "k");
      const unsigned m = narrow(need_positive(p.m, id, "m"), id, "m");
      evaluate = [&c, k, m] {
        const ExactPair pair = bernoulli_sum_pair(k, m);
        fill_exact(c, pair.lhs, pair.rhs);
      };
      break;
    }
  }

  try {
    evaluate();
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception& e) {
    c.pass = false;
    c.error = e.what();
  }
  return c;
}

}  // namespace ramsum::verify
