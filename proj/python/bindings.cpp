#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "subconvex/characters.hpp"
#include "subconvex/circle.hpp"
#include "subconvex/errors.hpp"
#include "subconvex/exponent.hpp"
#include "subconvex/forms.hpp"
#include "subconvex/report.hpp"
#include "subconvex/scan.hpp"
#include "subconvex/suite.hpp"
#include "subconvex/sums.hpp"
#include "subconvex/voronoi.hpp"

namespace py = pybind11;
using namespace subconvex;

namespace {

py::tuple rational(const Rational& r) { return py::make_tuple(r.numerator(), r.denominator()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Numerical verification toolkit for a GL(2) x GL(2) twist";

  auto& base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<TableTooShort>(m, "TableTooShort", base.ptr());
  py::register_exception<NonInvertible>(m, "NonInvertible", base.ptr());
  py::register_exception<NonPrimitive>(m, "NonPrimitive", base.ptr());
  py::register_exception<NonConvergence>(m, "NonConvergence", base.ptr());
  py::register_exception<InvalidModulus>(m, "InvalidModulus", base.ptr());
  py::register_exception<UnsupportedWeight>(m, "UnsupportedWeight", base.ptr());
  py::register_exception<EmptyFamily>(m, "EmptyFamily", base.ptr());

  py::class_<CuspForm>(m, "CuspForm")
      .def_property_readonly("weight", &CuspForm::weight)
      .def_property_readonly("n_max", &CuspForm::n_max)
      .def("coefficient", [](const CuspForm& f, std::size_t n) { return f.raw(n).get_str(); },
           "a(n) as a decimal string")
      .def("eigenvalue", &CuspForm::lambda)
      .def("eigenvalues", [](const CuspForm& f) { return f.normalized(); });
  m.def("build_form", [](int weight, std::size_t n_max) { return build_form(weight, n_max); },
        py::arg("weight"), py::arg("n_max"));

  py::class_<DirichletCharacter>(m, "DirichletCharacter")
      .def(py::init<i64, i64>(), py::arg("modulus"), py::arg("index"))
      .def_property_readonly("modulus", &DirichletCharacter::modulus)
      .def_property_readonly("index", &DirichletCharacter::index)
      .def_property_readonly("parity", &DirichletCharacter::parity)
      .def("__call__", &DirichletCharacter::operator())
      .def("conj", &DirichletCharacter::conj);
  m.def("primitive_characters", &primitive_characters, py::arg("p"));
  m.def("gauss_sum", &gauss_sum, py::arg("chi"));
  m.def("ramanujan_sum", &ramanujan_sum, py::arg("q"), py::arg("n"));

  auto instance = [](i64 p, i64 q, const DirichletCharacter& chi, i64 mm, i64 n,
                     const std::string& conv) {
    return CharSumInstance{p, q, &chi, mm, n, convention_from_string(conv)};
  };
  m.def(
      "char_sum_bruteforce",
      [instance](i64 p, i64 q, const DirichletCharacter& chi, i64 mm, i64 n,
                 const std::string& conv) {
        return char_sum_bruteforce(instance(p, q, chi, mm, n, conv));
      },
      py::arg("p"), py::arg("q"), py::arg("chi"), py::arg("m"), py::arg("n"),
      py::arg("convention") = "plus");
  m.def(
      "char_sum_closed",
      [instance](i64 p, i64 q, const DirichletCharacter& chi, i64 mm, i64 n,
                 const std::string& conv, const std::string& variant) {
        return char_sum_closed(instance(p, q, chi, mm, n, conv),
                               closed_form_variant_from_string(variant));
      },
      py::arg("p"), py::arg("q"), py::arg("chi"), py::arg("m"), py::arg("n"),
      py::arg("convention") = "plus", py::arg("variant") = "verified");

  m.def(
      "voronoi",
      [](const CuspForm& f, i64 a, i64 q, double Y, int truncation) {
        VoronoiJob job = make_voronoi_job(f, a, q, Y, WindowKind::bump_12, 0.0, truncation);
        job.threads = 1;
        return py::make_tuple(direct_side(job), hankel_side(job));
      },
      py::arg("form"), py::arg("a"), py::arg("q"), py::arg("Y"),
      py::arg("truncation") = kDefaultTruncation, "(direct side, dual side)");
  m.def(
      "twisted_sum",
      [](const CuspForm& g, const DirichletCharacter& chi, i64 a, i64 q, double x, i64 N,
         const std::string& conv, int truncation) {
        const TwistedParams tp{a, q, x, N};
        TwistedOptions opts;
        opts.convention = convention_from_string(conv);
        opts.truncation = truncation;
        opts.threads = 1;
        return py::make_tuple(twisted_T_direct(g, chi, tp),
                              twisted_T_voronoi(g, chi, tp, opts));
      },
      py::arg("form"), py::arg("chi"), py::arg("a"), py::arg("q"), py::arg("x"),
      py::arg("N"), py::arg("convention") = "minus",
      py::arg("truncation") = kDefaultTwistedTruncation, "(direct side, dual side)");

  m.def("s_direct", &s_direct, py::arg("f"), py::arg("g"), py::arg("chi"), py::arg("N"));

  m.def(
      "exponent",
      [](const std::string& theta, const std::string& mode) {
        const ExponentSolution e =
            exponent_calculator(parse_rational(theta), exponent_mode_from_string(mode));
        py::dict d;
        d["mode"] = to_string(e.mode);
        d["theta"] = rational(e.theta);
        d["eta"] = rational(e.eta);
        d["q1_exp"] = rational(e.q1_exp);
        d["q3_exp"] = rational(e.q3_exp);
        d["q4_exp"] = rational(e.q4_exp);
        d["q1_ceiling"] = rational(e.q1_ceiling);
        d["q1_feasible"] = e.q1_feasible;
        d["final_exponent"] = rational(e.final_exponent);
        return d;
      },
      py::arg("theta") = "0", py::arg("mode") = "paper");

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& only, const std::vector<std::string>& overrides) {
        Config cfg = resolve_config("", overrides);
        cfg.only = only;
        SuiteResult r;
        {
          py::gil_scoped_release release;
          r = run_suite(cfg, nullptr);
        }
        py::list rows;
        for (const auto& rep : r.reports) {
          py::dict d;
          d["suite"] = rep.suite;
          d["identity"] = rep.identity_name;
          d["parameters"] = format_params(rep.parameters);
          d["lhs"] = rep.lhs;
          d["rhs"] = rep.rhs;
          d["rel_error"] = rep.rel_error;
          d["tolerance"] = rep.tolerance;
          d["hard"] = rep.hard;
          d["passed"] = rep.passed;
          d["note"] = rep.note;
          rows.append(d);
        }
        return py::make_tuple(rows, r.notes, r.hard_failures);
      },
      py::arg("only") = "", py::arg("overrides") = std::vector<std::string>{},
      "(rows, notes, hard_failures)");

  m.def(
      "scan",
      [](int kf, int kg, const std::vector<i64>& primes, i64 n_start, std::size_t points) {
        ScanOptions opts;
        opts.n_start = n_start;
        opts.points = points;
        const std::size_t need = std::max<std::size_t>(scan_table_length(primes, opts), 1);
        const CuspForm f = build_form(kf, need);
        const CuspForm g = build_form(kg, need);
        std::vector<ScanRow> rows;
        {
          py::gil_scoped_release release;
          rows = subconvexity_scan(f, g, primes, opts);
        }
        py::list out;
        for (const auto& r : rows) {
          py::dict d;
          d["p"] = r.p;
          d["chi_index"] = r.chi_index;
          d["grid_points"] = r.grid_points;
          d["sup_value"] = r.sup_value;
          d["argmax_N"] = r.argmax_N;
          d["ratio"] = r.ratio;
          out.append(d);
        }
        return out;
      },
      py::arg("kf"), py::arg("kg"), py::arg("primes"), py::arg("n_start") = 8,
      py::arg("points") = 0);
}
