#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "palsum/analysis.hpp"

namespace py = pybind11;
using namespace palsum;

namespace {

py::int_ to_py(const mpz_class& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

mpz_class from_py(py::handle v) {
  const std::string digits = py::str(v);
  return mpz_class(digits, 10);
}

py::object to_fraction(const BigRational& q) {
  static const py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(q.numerator()), to_py(q.denominator()));
}

BigRational from_fraction(const py::handle& f) {
  return BigRational(from_py(f.attr("numerator")), from_py(f.attr("denominator")));
}

BoundsConfig config(unsigned precision_bits) {
  BoundsConfig cfg;
  cfg.precision_bits = precision_bits;
  return cfg;
}

MonotoneFn parse_fn(const std::string& name) {
  for (auto f : {MonotoneFn::reciprocal, MonotoneFn::logarithm, MonotoneFn::identity, MonotoneFn::neg_reciprocal,
                 MonotoneFn::neg_logarithm, MonotoneFn::neg_identity})
    if (name == to_string(f)) return f;
  throw std::invalid_argument("unknown function '" + name + "'");
}

py::dict kernel_dict(const KernelReport& r) {
  py::dict d;
  d["kernel"] = to_string(r.kernel);
  d["b"] = r.b.value();
  d["holds"] = r.all_hold;
  d["cases"] = r.cases;
  d["algebra_matches"] = r.algebra_matches;
  d["counterexample"] = r.counterexample ? py::cast(*r.counterexample) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_palsum, m) {
  m.doc() = "Bounds and exact partial sums for reciprocal sums of base-b palindromes.";

  py::register_exception<TermBudgetExceeded>(m, "TermBudgetExceeded", PyExc_RuntimeError);
  py::register_exception<PrecisionUnderflow>(m, "PrecisionUnderflow", PyExc_ValueError);

  py::class_<Enclosure>(m, "Interval", "Closed interval guaranteed to contain the true value.")
      .def_property_readonly("lo", &Enclosure::lo_double, "Lower end, rounded down to a float.")
      .def_property_readonly("hi", &Enclosure::hi_double, "Upper end, rounded up to a float.")
      .def_property_readonly("mid", &Enclosure::mid_double)
      .def_property_readonly("width", &Enclosure::width)
      .def_property_readonly("precision_bits", &Enclosure::precision_bits)
      .def("lower_decimal", &Enclosure::lower_decimal, py::arg("digits"))
      .def("upper_decimal", &Enclosure::upper_decimal, py::arg("digits"))
      .def("nearest_decimal", &Enclosure::nearest_decimal, py::arg("digits"))
      .def("contains", [](const Enclosure& e, const py::object& f) { return e.contains(from_fraction(f)); })
      .def("__repr__", [](const Enclosure& e) { return "Interval" + e.str(20); });

  m.def("is_palindrome", [](const py::int_& n, std::uint64_t b) { return is_palindrome(from_py(n), Base(b)); },
        py::arg("n"), py::arg("b"));
  m.def(
      "to_digits",
      [](const py::int_& n, std::uint64_t b) {
        const DigitString d = to_digits(from_py(n), Base(b));
        return std::vector<std::uint64_t>(d.digits().begin(), d.digits().end());
      },
      py::arg("n"), py::arg("b"), "Base-b digits, most significant first.");
  m.def("count_palindromes", [](std::uint64_t b, unsigned k) { return to_py(count_palindromes(Base(b), k)); },
        py::arg("b"), py::arg("k"));
  m.def(
      "enumerate_palindromes",
      [](std::uint64_t b, unsigned k, std::size_t limit) {
        py::list out;
        auto s = enumerate_palindromes(Base(b), k);
        while (auto n = s.next()) {
          if (limit && out.size() >= limit) break;
          out.append(to_py(*n));
        }
        return out;
      },
      py::arg("b"), py::arg("k"), py::arg("limit") = 0, "Increasing k-digit palindromes; limit 0 means all.");
  m.def(
      "unrank_palindrome",
      [](std::uint64_t b, unsigned k, const py::int_& i) { return to_py(unrank_palindrome(Base(b), k, from_py(i))); },
      py::arg("b"), py::arg("k"), py::arg("index"));
  m.def(
      "rank_palindrome", [](const py::int_& n, std::uint64_t b) { return to_py(rank_palindrome(from_py(n), Base(b))); },
      py::arg("n"), py::arg("b"));

  m.def("harmonic_x", [](std::uint64_t b) { return to_fraction(harmonic_x(Base(b))); }, py::arg("b"));
  m.def("harmonic_y", [](std::uint64_t b) { return to_fraction(harmonic_y(Base(b))); }, py::arg("b"));
  m.def(
      "layer_sum_exact",
      [](std::uint64_t b, unsigned k, std::uint64_t budget) {
        return to_fraction(layer_sum_exact(Base(b), k, ExactOptions{budget, 1}).value);
      },
      py::arg("b"), py::arg("k"), py::arg("term_budget") = kDefaultTermBudget);
  m.def(
      "partial_sum_exact",
      [](std::uint64_t b, unsigned k, std::uint64_t budget) {
        return to_fraction(partial_sum_exact(Base(b), k, ExactOptions{budget, 1}));
      },
      py::arg("b"), py::arg("max_k"), py::arg("term_budget") = kDefaultTermBudget);

  m.def(
      "layer_sum",
      [](std::uint64_t b, unsigned k, unsigned p) { return layer_sum_enclosure(Base(b), k, config(p)); },
      py::arg("b"), py::arg("k"), py::arg("precision_bits") = kDefaultPrecisionBits);
  m.def(
      "series_bounds",
      [](std::uint64_t b, int ell, int mm, unsigned p) {
        auto r = series_bounds(Base(b), BoundParams(ell, mm), config(p));
        return py::make_tuple(r.lower, r.upper);
      },
      py::arg("b"), py::arg("ell") = 5, py::arg("m") = 5, py::arg("precision_bits") = kDefaultPrecisionBits,
      "(lower, upper) intervals bounding s_b.");
  m.def(
      "simple_bounds",
      [](std::uint64_t b, unsigned p) {
        auto r = simple_bounds(Base(b), config(p));
        return py::make_tuple(r.lower, r.upper);
      },
      py::arg("b"), py::arg("precision_bits") = kDefaultPrecisionBits);
  m.def("crude_upper", [](std::uint64_t b, unsigned p) { return crude_upper(Base(b), config(p)); }, py::arg("b"),
        py::arg("precision_bits") = kDefaultPrecisionBits);
  m.def("tail_geometric", [](std::uint64_t b, int mm) { return to_fraction(tail_geometric_exact(Base(b), mm)); },
        py::arg("b"), py::arg("m"));
  m.def(
      "asymptotic_estimate", [](std::uint64_t b, unsigned p) { return asymptotic_estimate(Base(b), config(p)); },
      py::arg("b"), py::arg("precision_bits") = kDefaultPrecisionBits);

  m.def(
      "verify_monotone_chain", [](std::uint64_t b_max) { return verify_monotone_chain(Base(b_max)).verified; },
      py::arg("b_max"), "True when alpha_b < beta_{b+1} for every 2 <= b < b_max.");
  m.def(
      "table_row",
      [](std::uint64_t b) {
        const auto r = table_row(Base(b));
        py::dict d;
        d["b"] = r.b;
        d["L"] = r.L;
        d["M"] = r.M;
        d["U"] = r.U;
        return d;
      },
      py::arg("b"));
  m.def(
      "logconcavity_scan",
      [](std::uint64_t lo, std::uint64_t hi) { return logconcavity_scan(Base(lo), Base(hi)).all_m_positive; },
      py::arg("b_min"), py::arg("b_max"));
  m.def("kernel_middle_shift_check", [](std::uint64_t b) { return kernel_dict(kernel_middle_shift_check(Base(b))); },
        py::arg("b"));
  m.def("kernel_carry_check", [](std::uint64_t b) { return kernel_dict(kernel_carry_check(Base(b))); }, py::arg("b"));
  m.def("kernel_lead_shift_check", [](std::uint64_t b) { return kernel_dict(kernel_lead_shift_check(Base(b))); },
        py::arg("b"));
  m.def(
      "tail_inequality_check",
      [](std::uint64_t b) {
        const auto r = tail_inequality_check(Base(b));
        py::dict d = kernel_dict(r);
        d["value"] = *r.value;
        return d;
      },
      py::arg("b"));
  m.def("three_digit_shift_check", [](std::uint64_t b) { return three_digit_shift_check(Base(b)); }, py::arg("b"));
  m.def(
      "sum_integral_sandwich_check",
      [](const std::string& fn, std::int64_t a, std::int64_t b) { return sum_integral_sandwich_check(parse_fn(fn), a, b); },
      py::arg("fn"), py::arg("a"), py::arg("b"),
      "fn is one of reciprocal, logarithm, identity, neg-reciprocal, neg-logarithm, neg-identity.");
}
