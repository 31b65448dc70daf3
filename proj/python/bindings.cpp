#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperfns/eisenstein.hpp"
#include "hyperfns/fourier.hpp"
#include "hyperfns/hc_series.hpp"
#include "hyperfns/specfun.hpp"
#include "hyperfns/verify.hpp"

namespace py = pybind11;
using namespace hyperfns;

namespace {

std::optional<KType> ktype_of(std::optional<int> k, std::optional<int> l) {
  if (!k && !l) return std::nullopt;
  return KType{k.value_or(0), l.value_or(0)};
}

py::tuple as_tuple(const EvalResult& r) { return py::make_tuple(r.value, r.abs_err, to_string(r.status)); }

}  // namespace

PYBIND11_MODULE(_hyperfns, m) {
  m.doc() = "Eisenstein integrals on hyperbolic spaces";

  static py::exception<Error> exc(m, "HyperfnsError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      exc((std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def("log_gamma", &specfun::log_gamma, py::arg("z"));
  m.def(
      "hyp2f1",
      [](Complex a, Complex b, Complex c, double z) { return as_tuple(specfun::hyp2f1_nonpos(a, b, c, z)); },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"),
      "2F1(a, b; c; z) for z <= 0 as (value, abs_err, status).");

  m.def(
      "gamma_coeffs",
      [](int p, int q, Complex lambda, int n, std::optional<int> k, std::optional<int> l, bool tilde) {
        const Space s(p, q);
        const auto t = tilde ? hc::gamma_tilde(s, ktype_of(k, l), lambda, n)
                             : hc::gamma_coeffs(s, ktype_of(k, l), lambda, n);
        std::vector<std::optional<Complex>> out;
        for (int i = 0; i <= n; ++i)
          out.push_back(t.regular[i] ? std::optional<Complex>(t.values[i]) : std::nullopt);
        return out;
      },
      py::arg("p"), py::arg("q"), py::arg("lam"), py::arg("n"), py::arg("k") = py::none(),
      py::arg("l") = py::none(), py::arg("tilde") = false,
      "Series coefficients m = 0..n; None where the coefficient has a pole.");

  m.def(
      "c_function",
      [](int p, int q, Complex lambda, std::optional<int> k, std::optional<int> l) {
        return as_tuple(eis::c_function(Space(p, q), ktype_of(k, l), lambda));
      },
      py::arg("p"), py::arg("q"), py::arg("lam"), py::arg("k") = py::none(), py::arg("l") = py::none());

  m.def(
      "eisenstein",
      [](int p, int q, Complex lambda, double t, std::optional<int> k, std::optional<int> l, int w,
         const std::string& method) {
        const Space s(p, q);
        const auto kt = ktype_of(k, l);
        const auto eta = eis::EtaVector::unit(s, w);
        if (method == "closed") return as_tuple(eis::eisenstein_closed(s, kt, lambda, eta, w, t));
        if (method == "series") return as_tuple(eis::eisenstein_series(s, kt, lambda, eta, w, t));
        if (method == "auto") return as_tuple(eis::eisenstein(s, kt, lambda, eta, w, t));
        throw Error(ErrorCode::InvalidArgument, "method must be closed, series or auto");
      },
      py::arg("p"), py::arg("q"), py::arg("lam"), py::arg("t"), py::arg("k") = py::none(),
      py::arg("l") = py::none(), py::arg("w") = 1, py::arg("method") = "auto",
      "E°(lambda, e_w) on orbit w at A_q-coordinate t.");

  m.def(
      "eisenstein_regularized",
      [](int p, int q, double R, Complex lambda, double t, std::optional<int> k, std::optional<int> l) {
        const Space s(p, q);
        return as_tuple(eis::eisenstein_regularized(s, ktype_of(k, l), R, lambda, eis::EtaVector::unit(s), 1, t));
      },
      py::arg("p"), py::arg("q"), py::arg("R"), py::arg("lam"), py::arg("t"), py::arg("k") = py::none(),
      py::arg("l") = py::none());

  m.def(
      "classify",
      [](int p, int q, double R, double lambda0, std::optional<int> k, std::optional<int> l) {
        return std::string(eis::to_string(eis::classify_bounded(Space(p, q), ktype_of(k, l), R, lambda0)));
      },
      py::arg("p"), py::arg("q"), py::arg("R"), py::arg("lam0"), py::arg("k") = py::none(),
      py::arg("l") = py::none());

  m.def(
      "e_poles",
      [](int p, int q, int count, std::optional<int> k, std::optional<int> l) {
        std::vector<double> out;
        for (const auto& pr : eis::pole_catalog(Space(p, q), ktype_of(k, l)).e_poles)
          for (Half h : pr.first(count)) out.push_back(h.value());
        return out;
      },
      py::arg("p"), py::arg("q"), py::arg("count") = 5, py::arg("k") = py::none(), py::arg("l") = py::none(),
      "First `count` points of each E° pole progression.");

  m.def(
      "fourier_smooth_bump",
      [](int p, int q, Complex lambda, double a, double b, std::optional<int> k, std::optional<int> l) {
        const Space s(p, q);
        const auto f = fourier::RadialProfile::uniform(s, fourier::Profile::smooth_bump(a, b));
        return as_tuple(fourier::fourier_transform(s, ktype_of(k, l), f, lambda, eis::EtaVector::unit(s)));
      },
      py::arg("p"), py::arg("q"), py::arg("lam"), py::arg("a") = 1.0, py::arg("b") = 2.0, py::arg("k") = py::none(),
      py::arg("l") = py::none(), "Fourier transform of exp(-1/((t-a)(b-t))) on every orbit, unit eta.");

  m.def(
      "verify",
      [](const std::string& suite) {
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& c : verify::run_suite(suite)) out.emplace_back(c.name, c.pass, c.detail);
        return out;
      },
      py::arg("suite"));
}
