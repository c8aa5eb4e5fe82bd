#include <algorithm>
#include <random>

#include "ramsum/arith.hpp"
#include "ramsum/verify.hpp"

namespace ramsum::verify {

namespace {

GridRanges defaults(IdentityId id) {
  GridRanges g;
  switch (id) {
    case IdentityId::kProp1:
      g.k_max = 1000;
      g.r_max = 10;
      break;
    case IdentityId::kProp2:
    case IdentityId::kProp4:
    case IdentityId::kMobiusLog:
      g.k_max = 500;
      break;
    case IdentityId::kProp3:
      g.k_max = 1000;
      g.random_functions = 20;
      break;
    case IdentityId::kProp3Corollary:
      g.k_max = 1000;
      break;
    case IdentityId::kGammaProduct:
      g.n_max = 500;
      break;
    case IdentityId::kProp5Exact:
    case IdentityId::kProp5Cosine:
      g.k_max = 200;
      break;
    case IdentityId::kProp6:
      g.k_max = 500;
      g.m_max = 8;
      break;
    case IdentityId::kInverseDft:
      g.k_max = 500;
      g.n_max = 500;
      break;
    case IdentityId::kProp7:
      g.tuple_arity_max = 3;
      g.tuple_k_max = 40;
      g.r_max = 5;
      g.k_max = 200;  // n = 1 reduction to the single-variable closed form
      break;
    case IdentityId::kProp7Corollary:
    case IdentityId::kEIntegrality:
      g.tuple_arity_max = 3;
      g.tuple_k_max = 40;
      break;
    case IdentityId::kEMultiplicativity:
      g.pairs = 200;
      g.tuple_arity_max = 3;
      g.tuple_k_max = 30;
      break;
    case IdentityId::kCrossEvaluator:
      g.k_max = 300;
      break;
    case IdentityId::kHalfSum:
      g.r_max = 40;
      break;
    case IdentityId::kFaulhaber:
      g.n_max = 200;
      g.r_max = 10;
      break;
    case IdentityId::kCoprimePowerSum:
      g.n_max = 200;
      g.r_max = 8;
      break;
    case IdentityId::kBernoulliPolySum:
      g.k_max = 60;
      g.m_max = 8;
      break;
  }
  return g;
}

void apply(std::optional<std::uint64_t>& field, const std::optional<std::uint64_t>& over) {
  if (field && over) field = over;
}

std::string range(const char* name, std::uint64_t lo, std::uint64_t hi) {
  return std::string(name) + "=" + std::to_string(lo) + ".." + std::to_string(hi);
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

GridRanges resolve_ranges(IdentityId id, const GridRanges& o) {
  GridRanges g = defaults(id);
  apply(g.k_max, o.k_max);
  apply(g.r_max, o.r_max);
  apply(g.m_max, o.m_max);
  apply(g.n_max, o.n_max);
  apply(g.tuple_arity_max, o.tuple_arity_max);
  apply(g.tuple_k_max, o.tuple_k_max);
  apply(g.random_functions, o.random_functions);
  apply(g.pairs, o.pairs);
  return g;
}

std::string describe_grid(IdentityId id, const GridRanges& g) {
  switch (id) {
    case IdentityId::kProp1:
      return range("k", 1, *g.k_max) + " " + range("r", 1, *g.r_max);
    case IdentityId::kProp2:
    case IdentityId::kMobiusLog:
    case IdentityId::kProp5Exact:
    case IdentityId::kProp5Cosine:
    case IdentityId::kProp3Corollary:
    case IdentityId::kCrossEvaluator:
      return range("k", 1, *g.k_max) +
             (id == IdentityId::kProp3Corollary  ? " f=id,tau,sigma"
              : id == IdentityId::kCrossEvaluator ? " j=0..k"
                                                  : "");
    case IdentityId::kProp3:
      return range("k", 1, *g.k_max) + " f=id,tau,sigma,mu,phi" +
             (*g.random_functions > 0
                  ? ",rand0..rand" + std::to_string(*g.random_functions - 1)
                  : std::string());
    case IdentityId::kProp4:
      return range("k", 2, *g.k_max);
    case IdentityId::kGammaProduct:
      return range("n", 1, *g.n_max);
    case IdentityId::kProp6:
    case IdentityId::kBernoulliPolySum:
      return range("k", 1, *g.k_max) + " " + range("m", 1, *g.m_max);
    case IdentityId::kInverseDft:
      return range("k", 1, *g.k_max) + " " + range("n", 1, *g.n_max);
    case IdentityId::kProp7:
      return range("arity", 1, *g.tuple_arity_max) + " " + range("ki", 1, *g.tuple_k_max) +
             " " + range("r", 1, *g.r_max) + "; n1-reduction " + range("k", 1, *g.k_max);
    case IdentityId::kProp7Corollary:
    case IdentityId::kEIntegrality:
      return range("arity", 1, *g.tuple_arity_max) + " " + range("ki", 1, *g.tuple_k_max);
    case IdentityId::kEMultiplicativity:
      return "pairs=" + std::to_string(*g.pairs) + " " + range("arity", 1, *g.tuple_arity_max) +
             " " + range("ki", 1, *g.tuple_k_max);
    case IdentityId::kHalfSum:
      return range("r", 0, *g.r_max);
    case IdentityId::kFaulhaber:
      return range("n", 1, *g.n_max) + " " + range("r", 1, *g.r_max);
    case IdentityId::kCoprimePowerSum:
      return range("n", 2, *g.n_max) + " " + range("r", 1, *g.r_max);
  }
  return {};
}

std::size_t tuple_count(std::uint64_t arity_max, std::uint64_t k_max) {
  std::size_t total = 0;
  for (std::uint64_t a = 1; a <= arity_max; ++a) total += ipow(k_max, a);
  return total;
}

ModulusTuple tuple_at(std::uint64_t arity_max, std::uint64_t k_max, std::size_t index) {
  for (std::uint64_t a = 1; a <= arity_max; ++a) {
    const std::uint64_t block = ipow(k_max, a);
    if (index < block) {
      std::vector<std::uint64_t> ks(a);
      for (std::uint64_t i = a; i-- > 0;) {
        ks[i] = index % k_max + 1;
        index /= k_max;
      }
      return ModulusTuple(std::move(ks));
    }
    index -= block;
  }
  throw DomainError("tuple index out of range");
}

std::vector<std::pair<ModulusTuple, ModulusTuple>> coprime_tuple_pairs(
    std::size_t count, std::uint64_t arity_max, std::uint64_t k_max, std::uint64_t seed) {
  // mt19937_64 output is fixed by the standard; reduce with % rather than a
  // distribution so the sequence is identical across standard libraries.
  std::mt19937_64 rng(seed);
  std::vector<std::pair<ModulusTuple, ModulusTuple>> out;
  while (out.size() < count) {
    const std::uint64_t arity = rng() % arity_max + 1;
    std::vector<std::uint64_t> a(arity);
    std::vector<std::uint64_t> b(arity);
    for (auto& x : a) x = rng() % k_max + 1;
    for (auto& x : b) x = rng() % k_max + 1;
    const bool coprime = std::all_of(a.begin(), a.end(), [&](std::uint64_t x) {
      return std::all_of(b.begin(), b.end(), [&](std::uint64_t y) { return gcd(x, y) == 1; });
    });
    if (coprime) out.emplace_back(ModulusTuple(std::move(a)), ModulusTuple(std::move(b)));
  }
  return out;
}

Grid::Grid(IdentityId id, const GridRanges& g, std::uint64_t seed) : id_(id), ranges_(g) {
  auto k_max = [&] { return *g.k_max; };
  switch (id) {
    case IdentityId::kProp1:
      size_ = k_max() * *g.r_max;
      break;
    case IdentityId::kProp2:
    case IdentityId::kMobiusLog:
    case IdentityId::kProp5Exact:
    case IdentityId::kProp5Cosine:
      size_ = k_max();
      break;
    case IdentityId::kProp4:
      size_ = k_max() >= 2 ? k_max() - 1 : 0;
      break;
    case IdentityId::kGammaProduct:
      size_ = *g.n_max;
      break;
    case IdentityId::kProp3:
      functions_ = {"id", "tau", "sigma", "mu", "phi"};
      for (std::uint64_t i = 0; i < *g.random_functions; ++i) {
        functions_.push_back("rand" + std::to_string(i));
      }
      size_ = k_max() * functions_.size();
      break;
    case IdentityId::kProp3Corollary:
      functions_ = {"id", "tau", "sigma"};
      size_ = k_max() * functions_.size();
      break;
    case IdentityId::kProp6:
    case IdentityId::kBernoulliPolySum:
      size_ = k_max() * *g.m_max;
      break;
    case IdentityId::kInverseDft:
      size_ = k_max() * *g.n_max;
      break;
    case IdentityId::kProp7:
      tuple_count_ = tuple_count(*g.tuple_arity_max, *g.tuple_k_max);
      reduction_count_ = k_max();
      size_ = (tuple_count_ + reduction_count_) * *g.r_max;
      break;
    case IdentityId::kProp7Corollary:
    case IdentityId::kEIntegrality:
      size_ = tuple_count(*g.tuple_arity_max, *g.tuple_k_max);
      break;
    case IdentityId::kEMultiplicativity:
      if (*g.tuple_k_max > 0 && *g.tuple_arity_max > 0) {
        pairs_ = coprime_tuple_pairs(*g.pairs, *g.tuple_arity_max, *g.tuple_k_max, seed);
      }
      size_ = pairs_.size();
      break;
    case IdentityId::kCrossEvaluator:
      for (std::uint64_t k = 1; k <= k_max(); ++k) {
        offsets_.push_back(size_);
        size_ += k + 1;
      }
      break;
    case IdentityId::kHalfSum:
      size_ = *g.r_max + 1;
      break;
    case IdentityId::kFaulhaber:
      size_ = *g.n_max * *g.r_max;
      break;
    case IdentityId::kCoprimePowerSum:
      size_ = *g.n_max >= 2 ? (*g.n_max - 1) * *g.r_max : 0;
      break;
  }
}

CaseParams Grid::at(std::size_t i) const {
  if (i >= size_) throw DomainError("grid index out of range");
  const GridRanges& g = ranges_;
  CaseParams p;
  switch (id_) {
    case IdentityId::kProp1:
      p.k = i / *g.r_max + 1;
      p.r = i % *g.r_max + 1;
      break;
    case IdentityId::kProp2:
    case IdentityId::kMobiusLog:
    case IdentityId::kProp5Exact:
    case IdentityId::kProp5Cosine:
      p.k = i + 1;
      break;
    case IdentityId::kProp4:
      p.k = i + 2;
      break;
    case IdentityId::kGammaProduct:
      p.n = i + 1;
      break;
    case IdentityId::kProp3:
    case IdentityId::kProp3Corollary:
      p.k = i / functions_.size() + 1;
      p.function = functions_[i % functions_.size()];
      break;
    case IdentityId::kProp6:
    case IdentityId::kBernoulliPolySum:
      p.k = i / *g.m_max + 1;
      p.m = i % *g.m_max + 1;
      break;
    case IdentityId::kInverseDft:
      p.k = i / *g.n_max + 1;
      p.n = i % *g.n_max + 1;
      break;
    case IdentityId::kProp7: {
      const std::size_t slot = i / *g.r_max;
      p.r = i % *g.r_max + 1;
      if (slot < tuple_count_) {
        p.tuple = tuple_at(*g.tuple_arity_max, *g.tuple_k_max, slot);
      } else {
        p.k = slot - tuple_count_ + 1;
        p.form = "n1-reduction";
      }
      break;
    }
    case IdentityId::kProp7Corollary:
    case IdentityId::kEIntegrality:
      p.tuple = tuple_at(*g.tuple_arity_max, *g.tuple_k_max, i);
      break;
    case IdentityId::kEMultiplicativity:
      p.tuple = pairs_[i].first;
      p.tuple_b = pairs_[i].second;
      break;
    case IdentityId::kCrossEvaluator: {
      const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), i) - 1;
      p.k = static_cast<std::uint64_t>(it - offsets_.begin()) + 1;
      p.j = static_cast<std::int64_t>(i - *it);
      break;
    }
    case IdentityId::kHalfSum:
      p.r = i;
      break;
    case IdentityId::kFaulhaber:
      p.n = i / *g.r_max + 1;
      p.r = i % *g.r_max + 1;
      break;
    case IdentityId::kCoprimePowerSum:
      p.n = i / *g.r_max + 2;
      p.r = i % *g.r_max + 1;
      break;
  }
  return p;
}

}  // namespace ramsum::verify
