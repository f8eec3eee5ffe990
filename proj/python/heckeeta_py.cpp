#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "heckeeta/analytic.hpp"
#include "heckeeta/characters.hpp"
#include "heckeeta/cyclotomic.hpp"
#include "heckeeta/errors.hpp"
#include "heckeeta/lseries.hpp"
#include "heckeeta/oracle.hpp"
#include "heckeeta/partitions.hpp"
#include "heckeeta/qseries.hpp"
#include "heckeeta/reports.hpp"

namespace py = pybind11;
using namespace heckeeta;

namespace {

py::int_ to_py(const BigInt& x) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(x.str().c_str(), nullptr, 10))); }

py::tuple to_py(const RingElem& x) { return py::make_tuple(to_py(x.a()), to_py(x.b())); }

py::list to_py(const std::vector<RingElem>& xs) {
  py::list out;
  for (const auto& x : xs) out.append(to_py(x));
  return out;
}

py::list to_py(const std::vector<BigInt>& xs) {
  py::list out;
  for (const auto& x : xs) out.append(to_py(x));
  return out;
}

py::dict residual_dict(const ResidualReport& r) {
  py::dict d;
  d["residual"] = r.residual;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["passed"] = r.passed;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact and numeric eta_D functions for the Hecke groups H(sqrt D)";

  py::register_exception<Error>(m, "Error");

  m.def("is_fundamental", &is_fundamental, py::arg("D"));
  m.def("kronecker", &kronecker, py::arg("n"), py::arg("D"));
  m.def(
      "char_table",
      [](int D) {
        const CharTable ct = build_char_table(D);
        py::dict d;
        d["D"] = ct.D;
        d["values"] = ct.values;
        d["qr"] = ct.qr;
        d["nr"] = ct.nr;
        return d;
      },
      py::arg("D"));

  m.def(
      "eta_coefficients", [](int D, int N) { return to_py(eta_series(D, N).coeffs()); }, py::arg("D"),
      py::arg("N"), "a_D(0..N) as numerator pairs (a, b) of (a + b sqrt D)/2");
  m.def(
      "delta5_coefficients",
      [](int N) {
        if (N < 1) throw Error("N must be at least 1");
        return to_py(delta5_series(N - 1).coeffs());
      },
      py::arg("N"), "tau_5(1..N) as numerator pairs");
  m.def(
      "a_via_convolution", [](int D, int N) { return to_py(a_via_convolution(D, N)); }, py::arg("D"),
      py::arg("N"));
  m.def(
      "period_polynomials",
      [](int D) {
        const PeriodPair pp = period_polynomials(build_char_table(D));
        return py::make_tuple(to_py(pp.plus), to_py(pp.minus));
      },
      py::arg("D"));

  m.def(
      "l_minus_one",
      [](int D) {
        const LValueRecord r = l_minus_one(build_char_table(D));
        py::module_ fractions = py::module_::import("fractions");
        py::dict d;
        d["S_chi"] = to_py(r.s_chi);
        d["L_minus_1"] = fractions.attr("Fraction")(to_py(numerator(r.l_minus_one)), to_py(denominator(r.l_minus_one)));
        d["m"] = fractions.attr("Fraction")(to_py(numerator(r.m_exponent)), to_py(denominator(r.m_exponent)));
        return d;
      },
      py::arg("D"));
  m.def(
      "l_prime_zero",
      [](int D, unsigned digits) { return l_prime_zero(build_char_table(D), digits).str(digits); },
      py::arg("D"), py::arg("digits") = 50, "L'(0, chi_D) as a decimal string");

  m.def("p_table", [](int N) { return to_py(p_table(N)); }, py::arg("N"));
  m.def(
      "p_nr_table", [](int D, int N) { return to_py(p_nr_table(build_char_table(D), N)); }, py::arg("D"),
      py::arg("N"));
  m.def(
      "length_distribution",
      [](int D, int N) {
        py::list rows;
        for (const auto& row : length_distribution(D, N)) rows.append(to_py(row));
        return rows;
      },
      py::arg("D"), py::arg("N"));

  m.def(
      "eval_eta",
      [](int D, std::complex<double> z, int n_max) { return eval_eta_numeric(D, HalfPlanePoint(z), n_max); },
      py::arg("D"), py::arg("z"), py::arg("n_max") = 300);
  m.def(
      "check_inversion",
      [](int D, std::complex<double> z, int n_max, double tol) {
        return residual_dict(check_inversion(EtaEvaluator(D), HalfPlanePoint(z), n_max, tol));
      },
      py::arg("D"), py::arg("z"), py::arg("n_max") = 300, py::arg("tol") = 1e-6);
  m.def(
      "check_translation",
      [](int D, std::complex<double> z, int n_max, double tol) {
        return residual_dict(check_translation(EtaEvaluator(D), HalfPlanePoint(z), n_max, tol));
      },
      py::arg("D"), py::arg("z"), py::arg("n_max") = 300, py::arg("tol") = 1e-6);
  m.def(
      "theorem21_check",
      [](int D, double y, int n_max, unsigned digits, double tol) {
        return residual_dict(theorem21_check(D, y, n_max, digits, tol));
      },
      py::arg("D"), py::arg("y"), py::arg("n_max") = 400, py::arg("digits") = 50, py::arg("tol") = 1e-8);

  m.def(
      "word_matrix",
      [](std::vector<long long> ks, int D) {
        const GroupWord w = word_matrix(ks, D);
        py::list entries;
        for (const auto& e : w.m) entries.append(to_py(e));
        return entries;
      },
      py::arg("ks"), py::arg("D") = 5, "entries a, b, c, d as numerator pairs over 2");
  m.def(
      "predicted_u", [](std::vector<long long> ks) { return predicted_u(word_matrix(ks, 5)); }, py::arg("ks"));
  m.def(
      "check_u_gamma",
      [](std::vector<long long> ks, std::optional<std::complex<double>> z, double tol) {
        const GroupWord w = word_matrix(ks, 5);
        const HalfPlanePoint p = z ? HalfPlanePoint(*z) : balanced_point(w, 0.25);
        const UGammaReport r = check_u_gamma(w, p, 0, tol);
        py::dict d;
        d["predicted"] = r.predicted;
        d["exponent_sum"] = r.exponent_sum;
        d["ratio"] = r.ratio;
        d["residual"] = r.residual;
        d["passed"] = r.passed;
        return d;
      },
      py::arg("ks"), py::arg("z") = py::none(), py::arg("tol") = 1e-4);

  m.def(
      "bound_envelope",
      [](int D, long long N) {
        const EnvelopeReport r = bound_envelope(D, N);
        py::dict d;
        d["c0"] = r.c0;
        d["cD"] = r.cD;
        d["c_tilde"] = r.c_tilde;
        d["c_remark"] = r.c_remark ? py::cast(*r.c_remark) : py::none();
        d["c_used"] = r.c_used;
        d["log_value"] = r.log_value;
        d["value"] = r.value;
        return d;
      },
      py::arg("D"), py::arg("N"));

  m.def("verify_table", []() {
    py::list out;
    for (const auto& c : verify_table())
      out.append(py::make_tuple(c.series, c.D, c.N, c.passed));
    return out;
  });
}
