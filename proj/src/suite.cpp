#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ramsum/verify.hpp"

namespace ramsum::verify {

namespace {

constexpr std::size_t kChunk = 4096;

// Evaluates [begin, end) of the grid into out, in index order, with up to
// `threads` workers. The first exception (a schema error) is rethrown.
void evaluate_chunk(const Grid& grid, IdentityId id, std::size_t begin, std::size_t end,
                    const SuiteConfig& config, const CaseEvaluator& eval, unsigned threads,
                    std::vector<IdentityCase>& out) {
  out.assign(end - begin, IdentityCase{});
  std::atomic<std::size_t> next{begin};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= end) return;
      try {
        out[i - begin] = eval(id, grid.at(i), config.options);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(end);
        return;
      }
    }
  };
  const std::size_t workers = std::min<std::size_t>(threads, end - begin);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

SuiteConfig full_suite_config() {
  SuiteConfig c;
  c.name = "full";
  c.identities.assign(all_identities().begin(), all_identities().end());
  return c;
}

VerificationReport run_suite(const SuiteConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  if (config.identities.empty()) throw SchemaError("suite selects no identities");
  if (!(config.options.tolerance > 0.0) || config.options.tolerance > kDefaultTolerance) {
    throw SchemaError("tolerance may only be tightened below the default 1e-8");
  }
  const CaseEvaluator eval = config.evaluator ? config.evaluator : CaseEvaluator(run_identity);
  unsigned threads = config.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  // Catalog order regardless of the order identities were requested in.
  std::vector<IdentityId> ids;
  for (const IdentityId id : all_identities()) {
    if (std::find(config.identities.begin(), config.identities.end(), id) !=
        config.identities.end()) {
      ids.push_back(id);
    }
  }

  VerificationReport report;
  report.suite = config.name;
  std::vector<Grid> grids;
  for (const IdentityId id : ids) {
    const GridRanges resolved = resolve_ranges(id, config.ranges);
    grids.emplace_back(id, resolved, config.options.seed);
    if (grids.back().size() == 0) {
      throw SchemaError(std::string(tag(id)) + ": grid " + describe_grid(id, resolved) +
                        " contains no valid cases");
    }
    report.grid.push_back({id, describe_grid(id, resolved), grids.back().size()});
  }

  std::vector<IdentityCase> chunk;
  for (std::size_t g = 0; g < grids.size(); ++g) {
    const IdentityId id = ids[g];
    const Grid& grid = grids[g];
    VerificationReport::Tally tally{id};
    std::optional<double> worst;
    for (std::size_t begin = 0; begin < grid.size(); begin += kChunk) {
      const std::size_t end = std::min(grid.size(), begin + kChunk);
      evaluate_chunk(grid, id, begin, end, config, eval, threads, chunk);
      for (IdentityCase& c : chunk) {
        ++tally.total;
        if (c.abs_error) worst = std::max(worst.value_or(0.0), *c.abs_error);
        if (!c.pass) {
          ++tally.failed;
          report.failures.push_back(c);
        }
        if (config.keep_cases) report.cases.push_back(std::move(c));
      }
    }
    report.total += tally.total;
    report.failed += tally.failed;
    report.tallies.push_back(tally);
    if (comparison_mode(id) == CompareMode::kTolerance) {
      report.worst_errors.push_back({id, worst.value_or(0.0)});
    }
  }
  report.passed = report.total - report.failed;
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

nlohmann::ordered_json case_json(const IdentityCase& c) {
  nlohmann::ordered_json j;
  j["identity"] = std::string(tag(c.id));
  j["params"] = c.params.to_string();
  j["mode"] = std::string(to_string(c.mode));
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["abs_error"] = c.abs_error ? nlohmann::ordered_json(*c.abs_error) : nullptr;
  j["pass"] = c.pass;
  if (!c.error.empty()) j["error"] = c.error;
  return j;
}

}  // namespace

std::string to_json(const VerificationReport& report, bool include_timing) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  nlohmann::ordered_json grid = nlohmann::ordered_json::array();
  for (const GridEntry& g : report.grid) {
    grid.push_back({{"identity", std::string(tag(g.id))},
                    {"mode", std::string(to_string(comparison_mode(g.id)))},
                    {"range", g.description},
                    {"cases", g.cases}});
  }
  j["grid"] = std::move(grid);
  j["total"] = report.total;
  j["passed"] = report.passed;
  j["failed"] = report.failed;
  nlohmann::ordered_json worst = nlohmann::ordered_json::object();
  for (const WorstError& w : report.worst_errors) worst[std::string(tag(w.id))] = w.abs_error;
  j["worst_errors"] = std::move(worst);
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const IdentityCase& c : report.failures) failures.push_back(case_json(c));
  j["failures"] = std::move(failures);
  if (include_timing) j["wall_time_seconds"] = report.wall_time_seconds;
  return j.dump(2) + "\n";
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string to_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "identity,params,mode,lhs,rhs,abs_error,pass\n";
  const auto& rows = report.cases.empty() ? report.failures : report.cases;
  for (const IdentityCase& c : rows) {
    out << tag(c.id) << ',' << csv_escape(c.params.to_string()) << ',' << to_string(c.mode)
        << ',' << csv_escape(c.lhs) << ',' << csv_escape(c.rhs) << ','
        << (c.abs_error ? format_double(*c.abs_error) : std::string()) << ','
        << (c.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string to_plain(const VerificationReport& report) {
  std::ostringstream out;
  out << "suite " << report.suite << ": " << report.passed << "/" << report.total
      << " passed, " << report.failed << " failed\n";
  for (std::size_t i = 0; i < report.grid.size(); ++i) {
    const GridEntry& g = report.grid[i];
    const VerificationReport::Tally& t = report.tallies[i];
    out << "  " << tag(g.id) << " [" << to_string(comparison_mode(g.id)) << "] "
        << g.description << ": " << (t.total - t.failed) << "/" << t.total;
    for (const WorstError& w : report.worst_errors) {
      if (w.id == g.id) out << ", worst abs error " << format_double(w.abs_error);
    }
    out << '\n';
  }
  for (const IdentityCase& c : report.failures) {
    out << "FAIL " << tag(c.id) << ' ' << c.params.to_string() << ": lhs=" << c.lhs
        << " rhs=" << c.rhs;
    if (!c.error.empty()) out << " (" << c.error << ')';
    out << '\n';
  }
  out << "wall time " << format_double(report.wall_time_seconds) << " s\n";
  return out.str();
}

}  // namespace ramsum::verify
