#include "hyperfns/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "hyperfns/specfun.hpp"

namespace hyperfns::verify {

namespace {

using eis::EtaVector;
using fourier::Profile;
using fourier::RadialProfile;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

CheckResult worst_check(const std::string& name, double worst, double tol, const std::string& what = "max rel err") {
  return {name, worst <= tol, what + " " + fmt(worst) + " (tol " + fmt(tol) + ")"};
}

std::vector<Space> spaces(const SuiteOptions& opt) {
  if (opt.space) return {*opt.space};
  return {Space{2, 1}, Space{3, 2}, Space{5, 3}, Space{7, 2}};
}

bool ktype_ok(const Space& s, const KType& k) {
  try {
    validate(s, k);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<KType> ktypes(const Space& s, const SuiteOptions& opt) {
  std::vector<KType> out;
  if (opt.ktype) {
    if (ktype_ok(s, *opt.ktype)) out.push_back(*opt.ktype);
    return out;
  }
  for (KType k : {KType{1, 0}, KType{0, 2}, KType{2, 1}})
    if (ktype_ok(s, k)) out.push_back(k);
  return out;
}

std::string tag(const Space& s) { return "(" + std::to_string(s.p) + "," + std::to_string(s.q) + ")"; }

// Points at least `gap` away from every half-integer on the real axis and
// from the pole lattices used by the checks.
Complex regular_point(std::mt19937_64& rng, double box, double gap = 0.05) {
  std::uniform_real_distribution<double> u(-box, box);
  for (;;) {
    const Complex z(u(rng), u(rng));
    if (std::abs(z.imag()) > gap) return z;
    const double fr = std::abs(2.0 * z.real() - std::round(2.0 * z.real())) / 2.0;
    if (fr > gap) return z;
  }
}

// ---------------------------------------------------------------- specfun

std::vector<CheckResult> specfun_suite(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> ua(-2.5, 2.5), uc(0.6, 3.0), u01(0.0, 1.0);
  using specfun::Hyp2f1Route;

  auto band = [&](double lo, double hi, Hyp2f1Route r1, Hyp2f1Route r2) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Complex a(ua(rng), ua(rng)), b(ua(rng), ua(rng)), c(uc(rng), 0.0);
      const double z = lo + (hi - lo) * u01(rng);
      const EvalResult x = specfun::hyp2f1_nonpos(a, b, c, z, r1);
      const EvalResult y = specfun::hyp2f1_nonpos(a, b, c, z, r2);
      if (x.status == Status::AccuracyLoss || y.status == Status::AccuracyLoss) continue;
      worst = std::max(worst, relative_error(x.value, y.value));
    }
    return worst;
  };
  out.push_back(worst_check("specfun.overlap_series_pfaff", band(-0.6, -0.4, Hyp2f1Route::Series, Hyp2f1Route::Pfaff), 1e-9));
  out.push_back(worst_check("specfun.overlap_pfaff_inversion", band(-2.2, -1.8, Hyp2f1Route::Pfaff, Hyp2f1Route::Inversion), 1e-9));

  {
    double worst = 0.0;
    std::uniform_real_distribution<double> s(-1.5, 1.5);
    for (int i = 0; i < 100; ++i) {
      const Complex a(s(rng), s(rng)), b(s(rng), s(rng)), c(uc(rng), 0.0);
      const double z = -50.0 * u01(rng);
      const EvalResult lhs = specfun::hyp2f1_nonpos(a, b, c, z);
      const EvalResult rhs = specfun::hyp2f1_power_series(a, c - b, c, z / (z - 1.0));
      if (lhs.status == Status::AccuracyLoss) continue;
      worst = std::max(worst, relative_error(lhs.value, std::pow(1.0 - z, -a) * rhs.value));
    }
    out.push_back(worst_check("specfun.pfaff_symmetry", worst, 1e-9));
  }
  {
    double worst = 0.0;
    std::uniform_real_distribution<double> re(-6.0, 6.0), im(-20.0, 20.0);
    for (int i = 0; i < 200; ++i) {
      Complex z(re(rng), im(rng));
      if (std::abs(z.imag()) < 0.05 && std::abs(z.real() - std::round(z.real())) < 0.05) z += 0.25;
      const Complex lhs = std::exp(specfun::log_gamma(z) + specfun::log_gamma(1.0 - z));
      const Complex rhs = std::numbers::pi / std::sin(std::numbers::pi * z);
      worst = std::max(worst, relative_error(lhs, rhs));
    }
    out.push_back(worst_check("specfun.reflection", worst, 1e-11));
  }
  {
    double worst = 0.0;
    std::uniform_real_distribution<double> re(-8.0, 12.0), im(-6.0, 6.0);
    for (int i = 0; i < 100; ++i) {
      specfun::GammaRatioSpec spec;
      Complex direct = 1.0;
      for (int k = 0; k < 3; ++k) {
        const Complex n(re(rng), im(rng)), d(re(rng), im(rng));
        spec.numerators.push_back({n, 1.0});
        spec.denominators.push_back({d, 1.0});
        direct *= specfun::gamma_direct(n) / specfun::gamma_direct(d);
      }
      const EvalResult r = specfun::gamma_ratio(spec);
      worst = std::max(worst, relative_error(r.value, direct));
    }
    out.push_back(worst_check("specfun.gamma_ratio_direct", worst, 1e-10));
  }
  return out;
}

// ---------------------------------------------------------------- hc-series

std::vector<CheckResult> hc_suite(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(opt.seed + 1);
  std::uniform_real_distribution<double> ut(0.5, 4.0);
  for (const Space& s : spaces(opt)) {
    double worst = 0.0, worst_k = 0.0;
    for (int i = 0; i < 20; ++i) {
      const Complex lam = regular_point(rng, 2.5);
      const double t = ut(rng);
      auto f = [&](double x) { return hc::phi_series(s, std::nullopt, lam, x).value; };
      worst = std::max(worst, eis::radial_residual(s, std::nullopt, lam, f, t, 1e-3));
      for (const KType& k : ktypes(s, opt)) {
        auto g = [&](double x) { return hc::phi_series(s, k, lam, x).value; };
        worst_k = std::max(worst_k, eis::radial_residual(s, k, lam, g, t, 1e-3));
      }
    }
    out.push_back(worst_check("hc.ode_residual " + tag(s), worst, 1e-5, "max residual"));
    if (!ktypes(s, opt).empty()) out.push_back(worst_check("hc.ode_residual_ktype " + tag(s), worst_k, 1e-5, "max residual"));

    // Gamma_m times prod_{j <= m/2} (lambda - j) is entire, so a sharp local
    // peak of it on a fine real sweep marks a pole outside {1, ..., m/2}.
    int stray = 0;
    {
      const int M = 40;
      const double step = 1e-3;
      std::vector<std::vector<double>> h;
      for (double x = 0.0123; x <= 21.0; x += step) {
        std::vector<double> row(M / 2 + 1, 0.0);
        try {
          const auto tab = hc::gamma_coeffs(s, std::nullopt, Complex(x, 0.0), M);
          for (int m = 0; m <= M; m += 2) {
            double v = std::abs(tab.values[m]);
            for (int j = 1; j <= m / 2; ++j) v *= std::abs(x - j);
            row[m / 2] = v;
          }
        } catch (const Error&) {
          row.assign(M / 2 + 1, std::numeric_limits<double>::infinity());
        }
        h.push_back(row);
      }
      for (std::size_t i = 20; i + 20 < h.size(); ++i)
        for (std::size_t m = 0; m < h[i].size(); ++m) {
          const double c = h[i][m];
          if (c > 1.5 * std::max(h[i - 1][m], h[i + 1][m]) && c > 10.0 * std::max(h[i - 20][m], h[i + 20][m])) ++stray;
        }
    }
    out.push_back({"hc.pole_containment " + tag(s), stray == 0, std::to_string(stray) + " stray peaks"});

    double reg = 0.0;
    std::vector<std::optional<KType>> kts{std::nullopt};
    for (const KType& k : ktypes(s, opt)) kts.push_back(k);
    for (const std::optional<KType>& k : kts) {
      const double chi = hc::growth_exponent(s, k);
      for (int j0 = 1; j0 <= 6; ++j0)
        for (const Complex lam : {Complex(j0 + 1e-7, 0.0), Complex(j0, 1e-4)}) {
          const auto tab = hc::gamma_coeffs(s, k, lam, 200);
          for (int m = 0; m <= 200; ++m)
            reg = std::max(reg, std::abs((lam - double(j0)) * tab.values[m]) / std::pow(1.0 + m, chi));
        }
    }
    out.push_back(worst_check("hc.regularized_bound " + tag(s), reg, kRegularizedGammaM, "max |(l-l0)G_m|/(1+m)^chi"));

    double red = 0.0;
    for (int i = 0; i < 10; ++i) {
      const Complex lam = regular_point(rng, 3.0);
      const auto a = hc::gamma_coeffs(s, std::nullopt, lam, 60);
      const auto b = hc::gamma_coeffs(s, KType{0, 0}, lam, 60);
      for (int m = 0; m <= 60; ++m) red = std::max(red, std::abs(a.values[m] - b.values[m]));
    }
    out.push_back(worst_check("hc.ktype_reduction " + tag(s), red, 1e-12, "max abs diff"));
  }
  return out;
}

// ---------------------------------------------------------------- eisenstein

std::vector<CheckResult> identities_suite(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(opt.seed + 2);
  std::uniform_real_distribution<double> ut(0.3, 3.0), ue(-1.0, 1.0);
  for (const Space& s : spaces(opt)) {
    auto random_eta = [&] {
      EtaVector e;
      for (std::size_t i = 0; i < s.orbits().size(); ++i) e.components.emplace_back(ue(rng), ue(rng));
      return e;
    };
    double fe = 0.0, conj = 0.0, unit = 0.0, ode = 0.0;
    for (int i = 0; i < 40; ++i) {
      const Complex lam = regular_point(rng, 2.5, 0.1);
      const double t = ut(rng);
      const EtaVector eta = random_eta();
      if (eis::c_function(s, std::nullopt, lam).status != Status::Regular) continue;
      for (int w : s.orbits()) {
        const Complex lhs = eis::eisenstein_closed(s, std::nullopt, lam, eta, w, t).value;
        const Complex rhs = eis::eisenstein_closed(s, std::nullopt, -lam, eis::apply_c_matrix(s, lam, eta), w, t).value;
        fe = std::max(fe, relative_error(lhs, rhs));

        EtaVector ceta = eta;
        for (auto& c : ceta.components) c = std::conj(c);
        const Complex a = std::conj(eis::eisenstein_closed(s, std::nullopt, -std::conj(lam), eta, w, t).value);
        const Complex b = eis::eisenstein_closed(s, std::nullopt, -lam, ceta, w, t).value;
        conj = std::max(conj, relative_error(a, b));
      }
      ode = std::max(ode, eis::ode_residual(s, std::nullopt, lam, EtaVector::unit(s), 1, t + 0.2, 1e-3));
    }
    for (double xi = 0.1; xi <= 30.0; xi += 0.37) {
      const Complex c1 = eis::c_function(s, std::nullopt, Complex(0.0, xi)).value;
      const Complex c2 = eis::c_function(s, std::nullopt, Complex(0.0, -xi)).value;
      unit = std::max({unit, std::abs(std::abs(c1) - 1.0), std::abs(c1 * c2 - 1.0), std::abs(c2 - std::conj(c1))});
    }
    out.push_back(worst_check("eis.functional_equation " + tag(s), fe, 1e-8));
    out.push_back(worst_check("eis.conjugation " + tag(s), conj, 1e-9));
    out.push_back(worst_check("eis.unitary_c " + tag(s), unit, 1e-10, "max deviation"));
    out.push_back(worst_check("eis.ode_residual " + tag(s), ode, 1e-5, "max residual"));

    double asym = 0.0;
    for (double re : {0.3, 0.9, 1.7, 2.6})
      for (double im : {0.0, 0.8, -1.9}) {
        const Complex lam(re, im);
        const EvalResult r = eis::eisenstein_closed(s, std::nullopt, lam, EtaVector::unit(s), 1, 30.0);
        if (!r.usable() || eis::in_any(eis::pole_catalog(s, std::nullopt).e_poles, lam, 1e-3)) continue;
        asym = std::max(asym, std::abs(std::exp((s.rho_value() - lam) * 30.0) * r.value - 1.0));
      }
    out.push_back(worst_check("eis.asymptotics " + tag(s), asym, 1e-3, "max deviation"));

    double env = 0.0;
    const double R = 2.0;
    const auto pR = eis::p_R_poly(s, std::nullopt, R);
    for (double re = -R + 0.13; re <= 3.0; re += 0.37)
      for (double im = -3.0; im <= 3.0; im += 0.7)
        for (double t = 0.0; t <= 10.0; t += 0.66) {
          const Complex lam(re, im);
          const EvalResult r = eis::eisenstein_regularized(s, std::nullopt, R, lam, EtaVector::unit(s), 1, t);
          if (!r.usable()) continue;
          const double bound = std::pow(1.0 + std::abs(lam), pR.degree()) * (1.0 + t) *
                               std::exp((std::abs(re) - s.rho_value()) * t);
          env = std::max(env, std::abs(r.value) / bound);
        }
    out.push_back(worst_check("eis.growth_envelope " + tag(s), env, kEnvelopeM, "fitted M"));

    {
      double jac = 0.0;
      for (int i = 0; i < 20; ++i) {
        const Complex lam = regular_point(rng, 2.5, 0.1);
        const double t = 0.3 + 0.5 * ut(rng);
        const double rho = s.rho_value();
        specfun::GammaRatioSpec spec;
        spec.numerators = {{0.5 * (lam + rho), 0.5}, {0.5 * (lam - rho + double(s.q)), 0.5}};
        spec.denominators = {{lam, 1.0}, {Complex(0.5 * s.q, 0.0), 1.0}};
        spec.log_factor = (lam - rho) * std::log(2.0);
        const EvalResult pre = specfun::gamma_ratio(spec);
        if (pre.status != Status::Regular) continue;
        const Complex phi = eis::jacobi_phi(0.5 * s.q - 1.0, 0.5 * s.p - 1.0, Complex(0.0, -1.0) * lam, t).value;
        jac = std::max(jac, relative_error(eis::eisenstein_closed(s, std::nullopt, lam, EtaVector::unit(s), 1, t).value,
                                           pre.value * phi));
      }
      out.push_back(worst_check("eis.jacobi " + tag(s), jac, 1e-8));
    }

    int misfit = 0, tried = 0;
    const double R5 = 5.0;
    for (double l0 : {-2.3, -0.7, -1.0, 0.4, 2.9, 3.6, 4.8}) {
      const auto cls = eis::classify_bounded(s, std::nullopt, R5, Complex(l0, 0.0));
      if (cls == eis::Boundedness::Undetermined) continue;
      ++tried;
      if (!growth_agrees(s, cls, l0, probe_growth(s, std::nullopt, R5, l0))) ++misfit;
    }
    out.push_back({"eis.classifier_empirics " + tag(s), misfit == 0, std::to_string(misfit) + "/" + std::to_string(tried) + " disagree"});

    // Positive E° poles: complex-step limit against the offset average.
    double lim = 0.0;
    int poles = 0;
    for (const auto& prog : eis::pole_catalog(s, std::nullopt).e_poles)
      for (Half h = prog.start; h.value() > 0.0; h = Half{h.twice + 2 * prog.step}) {
        ++poles;
        for (double t : {0.7, 1.5}) {
          const auto a = eis::eisenstein_regularized(s, std::nullopt, 3.0, Complex(h.value(), 0.0), EtaVector::unit(s), 1, t,
                                                     eis::RegularizationMethod::ComplexStep);
          const auto b = eis::eisenstein_regularized(s, std::nullopt, 3.0, Complex(h.value(), 0.0), EtaVector::unit(s), 1, t,
                                                     eis::RegularizationMethod::Offset);
          lim = std::max(lim, relative_error(a.value, b.value));
        }
      }
    if (poles > 0) out.push_back(worst_check("eis.regularized_limit " + tag(s), lim, 1e-6));

    double unit_res = 0.0;
    for (double xi = 0.5; xi <= 12.0; xi += 1.1)
      unit_res = std::max(unit_res, eis::ode_residual(s, std::nullopt, Complex(0.0, xi), EtaVector::unit(s), 1, 1.3, 1e-3));
    out.push_back(worst_check("eis.ode_residual_unitary " + tag(s), unit_res, 1e-5, "max residual"));
  }
  return out;
}

// ---------------------------------------------------------------- fourier

std::vector<CheckResult> fourier_suite(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  for (const Space& s : spaces(opt)) {
    const RadialProfile f = RadialProfile::uniform(s, Profile::smooth_bump(1.0, 2.0));
    const EtaVector eta = EtaVector::of(s, Complex(0.7, 0.2), Complex(-0.4, 0.9));
    double sym = 0.0, conv = 0.0, halving = 0.0, kred = 0.0;
    for (const Complex lam : {Complex(0.3, 1.7), Complex(-0.8, 4.2), Complex(1.3, -2.4), Complex(0.0, 9.5)}) {
      const Complex lhs = fourier::fourier_transform(s, std::nullopt, f, -lam, eta).value;
      const Complex rhs = fourier::fourier_transform(s, std::nullopt, f, lam, eis::apply_c_matrix(s, lam, eta)).value;
      sym = std::max(sym, relative_error(lhs, rhs));

      quad::QuadratureConfig half;
      half.target_abs_err *= 0.5;
      const EvalResult rh = fourier::fourier_transform(s, std::nullopt, f, lam, eta, half);
      halving = std::max(halving, std::abs(rh.value - fourier::fourier_transform(s, std::nullopt, f, lam, eta).value) /
                                      (rh.abs_err + 1e-14 * std::abs(rh.value)));

      // The adaptive estimate must also cover the gap to a run started on a finer grid.
      quad::QuadratureConfig fine;
      fine.panels = 32;
      const EvalResult ra = fourier::fourier_transform(s, std::nullopt, f, lam, eta);
      const EvalResult rb = fourier::fourier_transform(s, std::nullopt, f, lam, eta, fine);
      conv = std::max(conv, std::abs(ra.value - rb.value) / (ra.abs_err + 1e-14 * std::abs(ra.value)));

      const Complex k0 = fourier::fourier_transform(s, KType{0, 0}, f, lam, eta).value;
      kred = std::max(kred, relative_error(k0, fourier::fourier_transform(s, std::nullopt, f, lam, eta).value));
    }
    out.push_back(worst_check("fourier.symmetry " + tag(s), sym, 1e-7));
    out.push_back(worst_check("fourier.quadrature_halving " + tag(s), halving, 1.0, "max |diff|/err"));
    out.push_back(worst_check("fourier.quadrature_refinement " + tag(s), conv, 1.0, "max |diff|/err"));
    out.push_back(worst_check("fourier.ktype_consistency " + tag(s), kred, 1e-9));

    double meas = 0.0;
    for (const RadialProfile& g : {f, RadialProfile::uniform(s, Profile::polynomial_bump(0.5, 2.5, 1.0, 2.0))}) {
      const double n2 = fourier::lp_norm(s, g, 2.0);
      double direct = 0.0;
      for (int w : s.orbits()) {
        const Profile& p = g.at(w);
        direct += quad::integrate_fixed([&](double t) { return Complex(p(t) * p(t) * fourier::jacobian(s, t), 0.0); },
                                        p.a, p.b, 400, 32).real();
      }
      meas = std::max(meas, std::abs(n2 * n2 - direct) / direct);
    }
    out.push_back(worst_check("fourier.measure " + tag(s), meas, 1e-9));
  }
  return out;
}

}  // namespace

GrowthProbe probe_growth(const Space& s, std::optional<KType> kt, double R, double lambda0) {
  GrowthProbe g;
  const EtaVector eta = EtaVector::unit(s);
  double sup_a = 0.0, sup_b = 0.0;
  std::vector<double> ts, ys;
  for (double t = 0.0; t <= 50.0 + 1e-9; t += 0.25) {
    const EvalResult r = eis::eisenstein_regularized(s, kt, R, Complex(lambda0, 0.0), eta, 1, t);
    const double v = std::abs(r.value);
    g.sup_abs = std::max(g.sup_abs, v);
    if (t >= 30.0 && t < 40.0) sup_a = std::max(sup_a, v);
    if (t >= 40.0) sup_b = std::max(sup_b, v);
    if (t >= 20.0 && t <= 40.0 && v > 0.0) {
      ts.push_back(t);
      ys.push_back(std::log(v));
    }
  }
  g.sup_ratio = sup_a > 0.0 ? sup_b / sup_a : 0.0;
  if (ts.size() > 2) {
    double mt = 0, my = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      mt += ts[i];
      my += ys[i];
    }
    mt /= ts.size();
    my /= ts.size();
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      sxy += (ts[i] - mt) * (ys[i] - my);
      sxx += (ts[i] - mt) * (ts[i] - mt);
    }
    g.slope = sxy / sxx;
  }
  return g;
}

bool growth_agrees(const Space& s, eis::Boundedness cls, double lambda0, const GrowthProbe& g) {
  switch (cls) {
    case eis::Boundedness::IdenticallyZero: return g.sup_abs < 1e-10;
    case eis::Boundedness::Bounded: return g.sup_ratio <= 1.05;
    case eis::Boundedness::Unbounded: {
      const double expect = std::abs(lambda0) - s.rho_value();
      return std::abs(g.slope - expect) <= 0.25 * std::abs(expect);
    }
    case eis::Boundedness::Undetermined: return false;
  }
  return false;
}

double relative_error(Complex got, Complex expected) {
  const double scale = std::abs(expected);
  if (scale == 0.0) return std::abs(got);
  return std::abs(got - expected) / scale;
}

std::vector<std::string> suite_names() {
  return {"specfun", "hc-series", "eisenstein", "identities", "fourier", "fixtures", "all"};
}

double fixture_tolerance(const std::string& suite) { return suite == "regularized" ? 1e-6 : 1e-10; }

Complex evaluate_fixture(const std::string& suite, const io::FixtureRecord& r) {
  auto space = [&] { return Space(r.integer("p"), r.integer("q")); };
  auto ktype = [&]() -> std::optional<KType> {
    if (!r.has("k")) return std::nullopt;
    return KType{r.integer("k"), r.integer("l")};
  };
  if (suite == "log_gamma") return specfun::log_gamma(r.complex("z"));
  if (suite == "hyp2f1")
    return specfun::hyp2f1_nonpos(r.complex("a"), r.complex("b"), r.complex("c"), r.real("z")).value;
  if (suite == "b_coeffs") {
    const int m = r.integer("m");
    return hc::b_coeffs(space(), m)[m];
  }
  if (suite == "cs_series") {
    const int n = r.integer("n_max");
    const auto [c, sv] = hc::cs_coeffs(n);
    Complex acc = 0.0;
    for (int m = 0; m <= n; ++m) acc += c[m] * std::exp(-m * r.real("t"));
    return acc;
  }
  if (suite == "gamma_tilde" || suite == "gamma_coeffs") {
    const int m = r.integer("m");
    const auto tab = suite == "gamma_tilde" ? hc::gamma_tilde(space(), ktype(), r.complex("lambda"), m)
                                            : hc::gamma_coeffs(space(), ktype(), r.complex("lambda"), m);
    return tab.values[m];
  }
  if (suite == "phi_series") return hc::phi_series(space(), ktype(), r.complex("lambda"), r.real("t")).value;
  if (suite == "c_function") return eis::c_function(space(), ktype(), r.complex("lambda")).value;
  if (suite == "eisenstein") {
    const Space s = space();
    return eis::eisenstein_closed(s, ktype(), r.complex("lambda"), EtaVector::unit(s), 1, r.real("t")).value;
  }
  if (suite == "regularized") {
    const Space s = space();
    return eis::eisenstein_regularized(s, ktype(), r.real("R"), r.complex("lambda0"), EtaVector::unit(s), 1, r.real("t")).value;
  }
  if (suite == "fourier") {
    const Space s = space();
    const auto f = RadialProfile::uniform(s, Profile::smooth_bump(r.real("a"), r.real("b")));
    return fourier::fourier_transform(s, ktype(), f, r.complex("lambda"), EtaVector::unit(s)).value;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown fixture suite " + suite);
}

std::vector<CheckResult> check_fixtures() {
  std::vector<CheckResult> out;
  const auto suites = io::fixture_suites();
  if (suites.empty()) return {{"fixtures.present", false, "no fixture files under " + io::fixture_dir()}};
  for (const auto& suite : suites) {
    const double tol = fixture_tolerance(suite);
    double worst = 0.0;
    std::string worst_id;
    int n = 0;
    for (const auto& rec : io::load_fixtures(suite)) {
      ++n;
      double err;
      try {
        err = relative_error(evaluate_fixture(suite, rec), rec.expected);
      } catch (const std::exception& e) {
        err = std::numeric_limits<double>::infinity();
      }
      if (!(err <= worst)) {
        worst = err;
        worst_id = rec.case_id;
      }
    }
    out.push_back({"fixtures." + suite, worst <= tol,
                   std::to_string(n) + " cases, max rel err " + fmt(worst) + (worst_id.empty() ? "" : " at " + worst_id) +
                       " (tol " + fmt(tol) + ")"});
  }
  return out;
}

std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  auto add = [&](std::vector<CheckResult> v) { out.insert(out.end(), v.begin(), v.end()); };
  if (name == "specfun" || name == "all") add(specfun_suite(opt));
  if (name == "hc-series" || name == "all") add(hc_suite(opt));
  if (name == "identities" || name == "eisenstein" || name == "all") add(identities_suite(opt));
  if (name == "fourier" || name == "all") add(fourier_suite(opt));
  if (name == "fixtures" || name == "all") add(check_fixtures());
  if (out.empty() && std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
    throw Error(ErrorCode::InvalidArgument, "unknown suite " + name);
  return out;
}

}  // namespace hyperfns::verify
