#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ramsum/arith.hpp"
#include "ramsum/averages.hpp"
#include "ramsum/errors.hpp"
#include "ramsum/exact.hpp"
#include "ramsum/multivar.hpp"
#include "ramsum/ramanujan.hpp"
#include "ramsum/verify.hpp"

namespace py = pybind11;
using namespace ramsum;

namespace {

py::int_ to_py(const BigInt& z) {
  PyObject* o = PyLong_FromString(z.get_str().c_str(), nullptr, 10);
  if (!o) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(o);
}

py::object to_py(const BigRational& q) {
  static const py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(q.get_num()), to_py(q.get_den()));
}

// Accepts int, Fraction, or "p/q".
BigRational from_py(const py::handle& h) {
  if (py::isinstance<py::str>(h)) return parse_rational(h.cast<std::string>());
  static const py::object fraction = py::module_::import("fractions").attr("Fraction");
  const py::object f = fraction(h);
  const auto num = py::str(f.attr("numerator")).cast<std::string>();
  const auto den = py::str(f.attr("denominator")).cast<std::string>();
  return make_rational(BigInt(num), BigInt(den));
}

ModulusTuple tuple_of(const std::vector<std::uint64_t>& ks) { return ModulusTuple(ks); }

py::tuple pair(const FloatPair& p) { return py::make_tuple(p.lhs, p.rhs); }
py::tuple pair(const ExactPair& p) { return py::make_tuple(to_py(p.lhs), to_py(p.rhs)); }

template <class T>
void set_opt(std::optional<T>& slot, const py::kwargs& kw, const char* key) {
  if (kw.contains(key) && !kw[key].is_none()) slot = kw[key].cast<T>();
}

verify::IdentityId identity(const std::string& t) {
  const auto id = verify::parse_identity(t);
  if (!id) throw verify::SchemaError("unknown identity: " + t);
  return *id;
}

py::dict case_dict(const verify::IdentityCase& c) {
  py::dict d;
  d["identity"] = std::string(verify::tag(c.id));
  d["params"] = c.params.to_string();
  d["mode"] = std::string(verify::to_string(c.mode));
  d["lhs"] = c.lhs;
  d["rhs"] = c.rhs;
  d["abs_error"] = c.abs_error ? py::cast(*c.abs_error) : py::none();
  d["pass"] = c.pass;
  if (!c.error.empty()) d["error"] = c.error;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ramanujan sums and weighted-average identities";

  auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<verify::SchemaError>(m, "SchemaError", domain);
  py::register_exception<RangeError>(m, "RangeError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  // arithmetic
  m.def("factorize", [](std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (const auto& pp : factorize(n).factors()) out.emplace_back(pp.prime, pp.exponent);
    return out;
  });
  m.def("mobius", py::overload_cast<std::uint64_t>(&mobius));
  m.def("euler_phi", py::overload_cast<std::uint64_t>(&euler_phi));
  m.def("jordan_totient", [](unsigned mm, std::uint64_t n) { return to_py(jordan_totient(mm, n)); },
        py::arg("m"), py::arg("n"));
  m.def("divisors", py::overload_cast<std::uint64_t>(&divisors));
  m.def("divisor_count_and_sum", [](std::uint64_t n) {
    const auto d = divisor_count_and_sum(n);
    return py::make_tuple(d.count, d.sum);
  });

  // exact numerics
  m.def("binomial", [](unsigned long n, unsigned long k) { return to_py(binomial(n, k)); });
  m.def("bernoulli_number", [](unsigned mm) { return to_py(bernoulli_number(mm)); });
  m.def("bernoulli_polynomial", [](unsigned mm, const py::object& x) {
    return to_py(bernoulli_polynomial(mm, from_py(x)));
  });
  m.def("power_sum", [](std::uint64_t n, unsigned r) { return to_py(power_sum(n, r)); });
  m.def("coprime_power_sum", [](std::uint64_t n, unsigned r) { return to_py(coprime_power_sum(n, r)); });
  m.def("half_sum_check", [](unsigned r) { return to_py(half_sum_check(r)); });

  // Ramanujan sums
  m.def("ramanujan_sum", &ramanujan_sum, py::arg("k"), py::arg("j"));
  m.def("ramanujan_sum_holder", &ramanujan_sum_holder, py::arg("k"), py::arg("j"));
  m.def("ramanujan_sum_float", &ramanujan_sum_float, py::arg("k"), py::arg("j"));
  m.def("ramanujan_row", [](std::uint64_t k) {
    const auto row = ramanujan_row(k);
    return std::vector<std::int64_t>(row.values().begin(), row.values().end());
  });

  // averages
  m.def("s_r_direct", [](std::uint64_t k, unsigned r) { return to_py(s_r_direct(k, r)); });
  m.def("s_r_closed", [](std::uint64_t k, unsigned r) { return to_py(s_r_closed(k, r)); });
  m.def("log_weighted_pair", [](std::uint64_t k) { return pair(log_weighted_pair(k)); });
  m.def("gamma_weighted_pair", [](std::uint64_t k) { return pair(gamma_weighted_pair(k)); });
  m.def("gamma_product_check", [](std::uint64_t n) { return pair(gamma_product_check(n)); });
  m.def("mobius_log_check", [](std::uint64_t k) { return pair(mobius_log_check(k)); });
  m.def("gcd_weighted_pair", [](std::uint64_t k, const std::string& f, std::uint64_t seed) {
    return pair(gcd_weighted_pair(k, verify::named_function(f, seed)));
  }, py::arg("k"), py::arg("f"), py::arg("seed") = 2014);
  m.def("binomial_weighted_exact", [](std::uint64_t k) { return pair(binomial_weighted_exact(k)); });
  m.def("binomial_weighted_cosine", [](std::uint64_t k) { return pair(binomial_weighted_cosine(k)); });
  m.def("bernoulli_weighted_pair", [](std::uint64_t k, unsigned mm) { return pair(bernoulli_weighted_pair(k, mm)); });
  m.def("bernoulli_sum_pair", [](std::uint64_t k, unsigned mm) { return pair(bernoulli_sum_pair(k, mm)); });
  m.def("inverse_dft_check", [](std::uint64_t k, std::uint64_t n) { return pair(inverse_dft_check(k, n)); });

  // several variables; tuples are sequences of positive ints
  m.def("orbicyclic", [](const std::vector<std::uint64_t>& ks) { return to_py(orbicyclic_direct(tuple_of(ks))); });
  m.def("orbicyclic_divisor", [](const std::vector<std::uint64_t>& ks) { return to_py(orbicyclic_divisor(tuple_of(ks))); });
  m.def("g_m", [](const std::vector<std::uint64_t>& ks, unsigned mm) { return to_py(g_m(tuple_of(ks), mm)); });
  m.def("s_r_multi_direct", [](const std::vector<std::uint64_t>& ks, unsigned r) {
    return to_py(s_r_multi_direct(tuple_of(ks), r));
  });
  m.def("s_r_multi_closed", [](const std::vector<std::uint64_t>& ks, unsigned r) {
    return to_py(s_r_multi_closed(tuple_of(ks), r));
  });
  m.def("multiplicativity_check", [](const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    return multiplicativity_check(tuple_of(a), tuple_of(b));
  });

  // verification
  m.def("identities", [] {
    std::vector<std::string> out;
    for (auto id : verify::all_identities()) out.emplace_back(verify::tag(id));
    return out;
  });
  m.def("run_identity", [](const std::string& t, const py::kwargs& kw) {
    verify::CaseParams p;
    set_opt(p.k, kw, "k");
    set_opt(p.j, kw, "j");
    set_opt(p.r, kw, "r");
    set_opt(p.m, kw, "m");
    set_opt(p.n, kw, "n");
    if (kw.contains("ks")) p.tuple = tuple_of(kw["ks"].cast<std::vector<std::uint64_t>>());
    if (kw.contains("ks2")) p.tuple_b = tuple_of(kw["ks2"].cast<std::vector<std::uint64_t>>());
    if (kw.contains("f")) p.function = kw["f"].cast<std::string>();
    if (kw.contains("form")) p.form = kw["form"].cast<std::string>();
    verify::EvalOptions o;
    if (kw.contains("tolerance")) o.tolerance = kw["tolerance"].cast<double>();
    if (kw.contains("seed")) o.seed = kw["seed"].cast<std::uint64_t>();
    return case_dict(verify::run_identity(identity(t), p, o));
  }, py::arg("identity"));
  m.def("run_suite_json", [](const std::vector<std::string>& tags, const py::kwargs& kw) {
    verify::SuiteConfig cfg = verify::full_suite_config();
    if (!tags.empty()) {
      cfg.name = "custom";
      cfg.identities.clear();
      for (const auto& t : tags) cfg.identities.push_back(identity(t));
    }
    set_opt(cfg.ranges.k_max, kw, "k_max");
    set_opt(cfg.ranges.r_max, kw, "r_max");
    set_opt(cfg.ranges.m_max, kw, "m_max");
    set_opt(cfg.ranges.n_max, kw, "n_max");
    set_opt(cfg.ranges.tuple_arity_max, kw, "arity_max");
    set_opt(cfg.ranges.tuple_k_max, kw, "tuple_k_max");
    set_opt(cfg.ranges.random_functions, kw, "random_functions");
    set_opt(cfg.ranges.pairs, kw, "pairs");
    if (kw.contains("tolerance")) cfg.options.tolerance = kw["tolerance"].cast<double>();
    if (kw.contains("seed")) cfg.options.seed = kw["seed"].cast<std::uint64_t>();
    if (kw.contains("threads")) cfg.threads = kw["threads"].cast<unsigned>();
    const bool timing = !kw.contains("timing") || kw["timing"].cast<bool>();
    verify::VerificationReport rep;
    {
      py::gil_scoped_release release;
      rep = verify::run_suite(cfg);
    }
    return verify::to_json(rep, timing);
  }, py::arg("identities"));
}
