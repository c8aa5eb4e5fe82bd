#pragma once

// Identity sweeps: evaluate both sides of every identity over a parameter
// grid, compare in the identity's fixed mode, and assemble a report.
//
// The comparison mode belongs to the identity, never to the caller: rational
// identities are compared exactly, the ones involving log, Gamma or cos with
// the mixed tolerance criterion. Callers may only tighten the tolerance.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ramsum/averages.hpp"
#include "ramsum/errors.hpp"
#include "ramsum/multivar.hpp"

namespace ramsum::verify {

enum class IdentityId {
  kProp1,
  kProp2,
  kProp3,
  kProp3Corollary,
  kProp4,
  kGammaProduct,
  kMobiusLog,
  kProp5Exact,
  kProp5Cosine,
  kProp6,
  kInverseDft,
  kProp7,
  kProp7Corollary,
  kEIntegrality,
  kEMultiplicativity,
  kCrossEvaluator,
  kHalfSum,
  kFaulhaber,
  kCoprimePowerSum,
  kBernoulliPolySum,
};

// Catalog order; also the order of identities in every report.
std::span<const IdentityId> all_identities();
std::string_view tag(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view tag);

enum class CompareMode { kExact, kTolerance };
CompareMode comparison_mode(IdentityId id);
std::string_view to_string(CompareMode mode);

// Parameters violate the identity's schema (missing field, k = 1 for the
// Gamma identity, unknown function name, ...).
class SchemaError : public DomainError {
 public:
  using DomainError::DomainError;
};

struct CaseParams {
  std::optional<std::uint64_t> k;
  std::optional<std::int64_t> j;
  std::optional<std::uint64_t> r;
  std::optional<std::uint64_t> m;
  std::optional<std::uint64_t> n;
  std::optional<ModulusTuple> tuple;
  std::optional<ModulusTuple> tuple_b;
  std::string function;  // prop3, prop3-corollary
  std::string form;      // prop7: empty, or "n1-reduction"

  // "k=6 r=3", "ks=(2,3) r=1", ...
  std::string to_string() const;
};

struct EvalOptions {
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = 2014;  // pseudo-random f for prop3
};

struct IdentityCase {
  IdentityId id{};
  CaseParams params;
  CompareMode mode{};
  std::string lhs;
  std::string rhs;
  bool pass = false;
  std::optional<double> abs_error;  // tolerance mode only
  std::string error;                // evaluator failure, if any
};

// Throws SchemaError if params do not fit the identity. Evaluator failures
// (budget, internal invariant) come back as a failed case carrying the error.
IdentityCase run_identity(IdentityId id, const CaseParams& params,
                          const EvalOptions& options = {});

// Function names accepted by prop3: id tau sigma mu phi rand0 .. randN.
ArithmeticFunction named_function(const std::string& name, std::uint64_t seed);

// Grid bounds. Unset fields take the identity's default (the acceptance grid).
struct GridRanges {
  std::optional<std::uint64_t> k_max;
  std::optional<std::uint64_t> r_max;
  std::optional<std::uint64_t> m_max;
  std::optional<std::uint64_t> n_max;
  std::optional<std::uint64_t> tuple_arity_max;
  std::optional<std::uint64_t> tuple_k_max;
  std::optional<std::uint64_t> random_functions;
  std::optional<std::uint64_t> pairs;
};

// The effective bounds for one identity after applying overrides.
GridRanges resolve_ranges(IdentityId id, const GridRanges& overrides);

// Human-readable description of the resolved grid, e.g. "k=1..1000 r=1..10".
std::string describe_grid(IdentityId id, const GridRanges& resolved);

// Enumerates the resolved grid of one identity in ascending parameter order.
class Grid {
 public:
  Grid(IdentityId id, const GridRanges& resolved, std::uint64_t seed);

  std::size_t size() const { return size_; }
  CaseParams at(std::size_t index) const;

 private:
  IdentityId id_;
  GridRanges ranges_;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> offsets_;  // cross-evaluator row starts
  std::vector<std::string> functions_;  // prop3 function names
  std::vector<std::pair<ModulusTuple, ModulusTuple>> pairs_;
  std::size_t tuple_count_ = 0;
  std::size_t reduction_count_ = 0;
};

// Number of ordered tuples with arity 1..arity_max and components 1..k_max.
std::size_t tuple_count(std::uint64_t arity_max, std::uint64_t k_max);
// The index-th such tuple: arity-major, then lexicographic.
ModulusTuple tuple_at(std::uint64_t arity_max, std::uint64_t k_max, std::size_t index);

// Seeded coprime tuple pairs for the multiplicativity sweep.
std::vector<std::pair<ModulusTuple, ModulusTuple>> coprime_tuple_pairs(
    std::size_t count, std::uint64_t arity_max, std::uint64_t k_max, std::uint64_t seed);

using CaseEvaluator =
    std::function<IdentityCase(IdentityId, const CaseParams&, const EvalOptions&)>;

struct SuiteConfig {
  std::string name = "custom";
  std::vector<IdentityId> identities;
  GridRanges ranges;
  EvalOptions options;
  unsigned threads = 1;  // 0 = hardware concurrency
  bool keep_cases = false;
  CaseEvaluator evaluator;  // defaults to run_identity
};

// Default full suite: every identity on its acceptance grid.
SuiteConfig full_suite_config();

struct WorstError {
  IdentityId id;
  double abs_error;
};

struct GridEntry {
  IdentityId id;
  std::string description;
  std::size_t cases;
};

struct VerificationReport {
  std::string suite;
  std::vector<GridEntry> grid;
  std::uint64_t total = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::vector<WorstError> worst_errors;  // tolerance identities only
  std::vector<IdentityCase> failures;    // ascending (identity, params)
  double wall_time_seconds = 0.0;
  std::vector<IdentityCase> cases;  // all cases, only if keep_cases

  // Per-identity pass/fail counts, in catalog order.
  struct Tally {
    IdentityId id;
    std::uint64_t total = 0;
    std::uint64_t failed = 0;
  };
  std::vector<Tally> tallies;
};

// Throws SchemaError for an empty grid, an empty identity list, or a
// tolerance looser than the default.
VerificationReport run_suite(const SuiteConfig& config);

// JSON with keys in the order suite, grid, total, passed, failed,
// worst_errors, failures, wall_time_seconds. include_timing = false drops
// wall_time_seconds, giving a body that is byte-identical across runs.
std::string to_json(const VerificationReport& report, bool include_timing = true);

// Header identity,params,mode,lhs,rhs,abs_error,pass. Uses report.cases when
// kept, otherwise the failures.
std::string to_csv(const VerificationReport& report);

std::string to_plain(const VerificationReport& report);

std::string format_double(double x);  // 17 significant digits

std::string csv_escape(std::string_view field);

}  // namespace ramsum::verify
