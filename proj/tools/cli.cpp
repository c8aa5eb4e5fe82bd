#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramsum/arith.hpp"
#include "ramsum/averages.hpp"
#include "ramsum/exact.hpp"
#include "ramsum/multivar.hpp"
#include "ramsum/ramanujan.hpp"
#include "ramsum/verify.hpp"

namespace ramsum::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { kPlain, kJson, kCsv };

struct Global {
  Format format = Format::kPlain;
  std::optional<double> tolerance;
  unsigned threads = 1;
  std::uint64_t seed = verify::EvalOptions{}.seed;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json rational_json(const BigRational& q) {
  return json{{"num", q.get_num().get_str(10)}, {"den", q.get_den().get_str(10)}};
}

std::uint64_t need(const std::optional<std::uint64_t>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required option --") + flag);
  return *v;
}

// --- compute ---------------------------------------------------------------

struct ComputeArgs {
  std::string function;
  std::optional<std::uint64_t> k;
  std::optional<std::int64_t> j;
  std::optional<std::uint64_t> r;
  std::optional<std::uint64_t> m;
  std::optional<std::string> ks;
  std::optional<std::string> x;
  bool approx = false;
};

int do_compute(const ComputeArgs& a, const Global& g, std::ostream& out) {
  json params = json::object();
  auto k_param = [&] {
    const std::uint64_t k = need(a.k, "k");
    params["k"] = k;
    return k;
  };
  auto m_param = [&] {
    const std::uint64_t m = need(a.m, "m");
    if (m > 10000) throw UsageError("--m must not exceed 10000");
    params["m"] = m;
    return static_cast<unsigned>(m);
  };
  auto r_param = [&] {
    const std::uint64_t r = need(a.r, "r");
    if (r == 0 || r > 10000) throw UsageError("--r must be in 1..10000");
    params["r"] = r;
    return static_cast<unsigned>(r);
  };
  auto tuple_param = [&] {
    if (!a.ks) throw UsageError("missing required option --ks");
    ModulusTuple t = ModulusTuple::parse(*a.ks);
    params["ks"] = t.to_string();
    return t;
  };

  BigRational value;
  const std::string& f = a.function;
  if (f == "c") {
    const std::uint64_t k = k_param();
    if (!a.j) throw UsageError("missing required option --j");
    params["j"] = *a.j;
    value = make_int(ramanujan_sum(k, *a.j));
  } else if (f == "phi") {
    value = make_int(euler_phi(k_param()));
  } else if (f == "mu") {
    value = mobius(k_param());
  } else if (f == "jordan") {
    const unsigned m = m_param();
    value = jordan_totient(m, k_param());
  } else if (f == "tau") {
    value = make_int(divisor_count_and_sum(k_param()).count);
  } else if (f == "sigma") {
    value = make_int(divisor_count_and_sum(k_param()).sum);
  } else if (f == "bernoulli") {
    const unsigned m = m_param();
    if (a.x) {
      const BigRational x = parse_rational(*a.x);
      params["x"] = to_string(x);
      value = bernoulli_polynomial(m, x);
    } else {
      value = bernoulli_number(m);
    }
  } else if (f == "S") {
    if (a.ks) {
      const ModulusTuple t = tuple_param();
      value = s_r_multi_closed(t, r_param());
    } else {
      const std::uint64_t k = k_param();
      value = s_r_closed(k, r_param());
    }
  } else if (f == "E") {
    value = orbicyclic_divisor(tuple_param());
  } else if (f == "g") {
    const ModulusTuple t = tuple_param();
    value = g_m(t, m_param());
  } else {
    throw UsageError("unknown function '" + f +
                     "' (expected c, phi, mu, jordan, tau, sigma, bernoulli, S, E, g)");
  }

  const std::string exact = to_string(value);
  const std::string approx = verify::format_double(to_double(value));
  switch (g.format) {
    case Format::kPlain:
      out << (a.approx ? approx : exact) << '\n';
      break;
    case Format::kJson: {
      json j;
      j["function"] = f;
      j["params"] = params;
      j["value"] = rational_json(value);
      if (a.approx) j["approx"] = to_double(value);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::kCsv: {
      std::string p;
      for (const auto& [key, v] : params.items()) {
        if (!p.empty()) p += ' ';
        p += key + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
      }
      out << "function,params,value" << (a.approx ? ",approx" : "") << '\n';
      out << f << ',' << verify::csv_escape(p) << ',' << exact;
      if (a.approx) out << ',' << approx;
      out << '\n';
      break;
    }
  }
  return kExitOk;
}

// --- table -----------------------------------------------------------------

struct TableArgs {
  std::string kind;
  std::optional<std::uint64_t> k;
  std::optional<std::uint64_t> k_max;
  std::optional<std::uint64_t> r;
  std::optional<std::uint64_t> n;
};

void enumerate_tuples(std::uint64_t arity, std::uint64_t k_max,
                      const std::function<void(const ModulusTuple&)>& fn) {
  std::vector<std::uint64_t> ks(arity, 1);
  while (true) {
    fn(ModulusTuple(ks));
    std::size_t i = arity;
    while (i > 0 && ks[i - 1] == k_max) ks[--i] = 1;
    if (i == 0) return;
    ++ks[i - 1];
  }
}

int do_table(const TableArgs& a, const Global& g, std::ostream& out) {
  if (a.kind == "ramanujan-row") {
    const std::uint64_t k = need(a.k, "k");
    if (k == 0 || k > 1'000'000) throw UsageError("--k must be in 1..1000000");
    const RamanujanRow row(k);
    switch (g.format) {
      case Format::kPlain: {
        std::string line;
        for (const std::int64_t v : row.values()) {
          if (!line.empty()) line += ',';
          line += std::to_string(v);
        }
        out << line << '\n';
        break;
      }
      case Format::kJson: {
        json j;
        j["k"] = k;
        j["values"] = std::vector<std::int64_t>(row.values().begin(), row.values().end());
        out << j.dump(2) << '\n';
        break;
      }
      case Format::kCsv:
        out << "k,j,value\n";
        for (std::uint64_t j = 0; j <= k; ++j) out << k << ',' << j << ',' << row[j] << '\n';
        break;
    }
    return kExitOk;
  }

  if (a.kind == "s-r") {
    const std::uint64_t k_max = need(a.k_max, "k-max");
    const std::uint64_t r = need(a.r, "r");
    if (k_max == 0 || k_max > 10'000) throw UsageError("--k-max must be in 1..10000");
    if (r == 0 || r > 100) throw UsageError("--r must be in 1..100");
    json rows = json::array();
    if (g.format == Format::kCsv) out << "k,r,value\n";
    for (std::uint64_t k = 1; k <= k_max; ++k) {
      const BigRational v = s_r_direct(k, static_cast<unsigned>(r));
      switch (g.format) {
        case Format::kPlain:
          out << k << ' ' << to_string(v) << '\n';
          break;
        case Format::kCsv:
          out << k << ',' << r << ',' << to_string(v) << '\n';
          break;
        case Format::kJson:
          rows.push_back({{"k", k}, {"r", r}, {"value", rational_json(v)}});
          break;
      }
    }
    if (g.format == Format::kJson) out << rows.dump(2) << '\n';
    return kExitOk;
  }

  if (a.kind == "e-values") {
    const std::uint64_t n = need(a.n, "n");
    const std::uint64_t k_max = need(a.k_max, "k-max");
    if (n == 0 || n > 8) throw UsageError("--n must be in 1..8");
    if (k_max == 0 || k_max > 1000) throw UsageError("--k-max must be in 1..1000");
    double rows_estimate = 1;
    for (std::uint64_t i = 0; i < n; ++i) rows_estimate *= static_cast<double>(k_max);
    if (rows_estimate > 1e6) throw UsageError("e-values table would exceed 10^6 rows");
    json rows = json::array();
    if (g.format == Format::kCsv) out << "ks,value\n";
    enumerate_tuples(n, k_max, [&](const ModulusTuple& t) {
      const BigInt e = orbicyclic_divisor(t);
      switch (g.format) {
        case Format::kPlain:
          out << t.to_string() << ' ' << to_string(e) << '\n';
          break;
        case Format::kCsv:
          out << verify::csv_escape(t.to_string()) << ',' << to_string(e) << '\n';
          break;
        case Format::kJson:
          rows.push_back({{"ks", t.to_string()}, {"value", to_string(e)}});
          break;
      }
    });
    if (g.format == Format::kJson) out << rows.dump(2) << '\n';
    return kExitOk;
  }

  throw UsageError("unknown table kind '" + a.kind +
                   "' (expected ramanujan-row, s-r, e-values)");
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  bool all = false;
  std::vector<std::string> identities;
  verify::GridRanges ranges;
  bool keep_cases = false;
  bool no_timing = false;
};

int do_verify(const VerifyArgs& a, const Global& g, std::ostream& out) {
  verify::SuiteConfig config;
  if (a.all || a.identities.empty()) {
    config = verify::full_suite_config();
    if (!a.all) config.name = "full";
  } else {
    config.name = "selected";
  }
  for (const std::string& t : a.identities) {
    const auto id = verify::parse_identity(t);
    if (!id) throw UsageError("unknown identity '" + t + "'");
    if (std::find(config.identities.begin(), config.identities.end(), *id) ==
        config.identities.end()) {
      config.identities.push_back(*id);
    }
  }
  config.ranges = a.ranges;
  config.threads = g.threads;
  config.options.seed = g.seed;
  if (g.tolerance) config.options.tolerance = *g.tolerance;
  config.keep_cases = a.keep_cases && g.format == Format::kCsv;

  const verify::VerificationReport report = verify::run_suite(config);
  switch (g.format) {
    case Format::kPlain:
      out << verify::to_plain(report);
      break;
    case Format::kJson:
      out << verify::to_json(report, !a.no_timing);
      break;
    case Format::kCsv:
      out << verify::to_csv(report);
      break;
  }
  return report.failed == 0 ? kExitOk : kExitFailures;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramanujan sums and their weighted-average identities", "ramsum"};
  app.fallthrough();
  app.require_subcommand(1);

  Global g;
  std::string format = "plain";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--tolerance", g.tolerance, "Mixed tolerance, at most 1e-8");
  app.add_option("--threads", g.threads, "Worker threads for verify (0 = auto)");
  app.add_option("--seed", g.seed, "Seed for pseudo-random test functions and tuple pairs");

  ComputeArgs compute;
  CLI::App* compute_cmd = app.add_subcommand("compute", "Evaluate a single function value");
  compute_cmd->add_option("function", compute.function,
                          "c | phi | mu | jordan | tau | sigma | bernoulli | S | E | g")
      ->required();
  compute_cmd->add_option("--k", compute.k, "Modulus / argument");
  compute_cmd->add_option("--j", compute.j, "Ramanujan sum argument (any integer)");
  compute_cmd->add_option("--r", compute.r, "Power weight exponent");
  compute_cmd->add_option("--m", compute.m, "Order (Jordan, Bernoulli, g_m)");
  compute_cmd->add_option("--ks", compute.ks, "Modulus tuple, comma separated");
  compute_cmd->add_option("--x", compute.x, "Bernoulli polynomial argument p/q");
  compute_cmd->add_flag("--approx", compute.approx, "Also print a 17-digit decimal");

  TableArgs table;
  CLI::App* table_cmd = app.add_subcommand("table", "Tabulate rows and averages");
  table_cmd->add_option("kind", table.kind, "ramanujan-row | s-r | e-values")->required();
  table_cmd->add_option("--k", table.k, "Modulus for ramanujan-row");
  table_cmd->add_option("--k-max", table.k_max, "Upper bound for k");
  table_cmd->add_option("--r", table.r, "Exponent for s-r");
  table_cmd->add_option("--n", table.n, "Tuple arity for e-values");

  VerifyArgs vargs;
  std::optional<std::uint64_t> k_max, r_max, m_max, n_max, arity_max, tuple_k_max, rand_fns,
      pairs;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run identity verification sweeps");
  verify_cmd->add_flag("--all", vargs.all, "Every identity on its default grid");
  verify_cmd->add_option("--identity", vargs.identities, "Identity tag (repeatable)");
  verify_cmd->add_option("--k-max", k_max);
  verify_cmd->add_option("--r-max", r_max);
  verify_cmd->add_option("--m-max", m_max);
  verify_cmd->add_option("--n-max", n_max);
  verify_cmd->add_option("--arity-max", arity_max);
  verify_cmd->add_option("--tuple-k-max", tuple_k_max);
  verify_cmd->add_option("--random-functions", rand_fns);
  verify_cmd->add_option("--pairs", pairs);
  verify_cmd->add_flag("--keep-cases", vargs.keep_cases, "CSV: list every case");
  verify_cmd->add_flag("--no-timing", vargs.no_timing, "JSON: omit wall_time_seconds");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ramsum: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  g.format = format == "json" ? Format::kJson : format == "csv" ? Format::kCsv : Format::kPlain;
  vargs.ranges = {k_max, r_max, m_max, n_max, arity_max, tuple_k_max, rand_fns, pairs};

  try {
    if (g.tolerance && (!(*g.tolerance > 0.0) || *g.tolerance > kDefaultTolerance)) {
      throw UsageError("--tolerance must be in (0, 1e-8]");
    }
    if (compute_cmd->parsed()) return do_compute(compute, g, out);
    if (table_cmd->parsed()) return do_table(table, g, out);
    return do_verify(vargs, g, out);
  } catch (const UsageError& e) {
    err << "ramsum: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "ramsum: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RangeError& e) {
    err << "ramsum: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetError& e) {
    err << "ramsum: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace ramsum::cli
