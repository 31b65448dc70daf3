// Acceptance criteria 1-8. One PASS/FAIL line per criterion on stdout,
// diagnostics indented below it. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "hyperfns/fourier.hpp"
#include "hyperfns/specfun.hpp"
#include "hyperfns/verify.hpp"

using namespace hyperfns;
using eis::EtaVector;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  template <class... A>
  void note(const char* fmt, A... args) {
    if constexpr (sizeof...(A) == 0) {
      notes.emplace_back(fmt);
    } else {
      char buf[512];
      std::snprintf(buf, sizeof buf, fmt, args...);
      notes.emplace_back(buf);
    }
  }
};

double rel(Complex a, Complex b) { return verify::relative_error(a, b); }

const std::vector<Space> kGridSpaces{Space(2, 1), Space(3, 2), Space(5, 3), Space(7, 2)};

// 5x5 grid on |Re|, |Im| <= 2.5 minus real half-integers, where some catalog
// or series pole can sit.
std::vector<Complex> lambda_grid() {
  std::vector<Complex> out;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const Complex l(-2.5 + 1.25 * i, -2.5 + 1.25 * j);
      if (l.imag() == 0.0 && std::abs(2.0 * l.real() - std::round(2.0 * l.real())) < 1e-9) continue;
      out.push_back(l);
    }
  return out;
}

const std::vector<double> kTs{0.5, 1.0, 2.0, 4.0};

Outcome criterion1() {
  Outcome o;
  double worst = 0.0;
  int n = 0;
  for (const Space& s : kGridSpaces)
    for (Complex lam : lambda_grid())
      for (int w : s.orbits())
        for (double t : kTs) {
          const auto e = EtaVector::unit(s, w);
          const EvalResult a = eis::eisenstein_closed(s, std::nullopt, lam, e, w, t);
          const EvalResult b = eis::eisenstein_series(s, std::nullopt, lam, e, w, t);
          worst = std::max(worst, rel(a.value, b.value));
          ++n;
        }
  o.pass = worst <= 1e-8;
  o.note("%d comparisons, max relative difference %.3g (bound 1e-8)", n, worst);
  return o;
}

Outcome criterion2() {
  Outcome o;
  double closed = 0.0, series = 0.0;
  int n = 0;
  std::vector<std::optional<KType>> kts{std::nullopt, KType{1, 0}, KType{0, 2}, KType{2, 1}};
  for (const Space& s : kGridSpaces)
    for (const auto& kt : kts)
      for (Complex lam : lambda_grid())
        for (double t : kTs) {
          closed = std::max(closed, eis::ode_residual(s, kt, lam, EtaVector::unit(s), 1, t, 1e-3));
          auto f = [&](double x) { return hc::phi_series(s, kt, lam, x).value; };
          series = std::max(series, eis::radial_residual(s, kt, lam, f, t, 1e-3));
          ++n;
        }
  o.pass = closed < 1e-5 && series < 1e-5;
  o.note("%d points; max residual closed form %.3g, Harish-Chandra series %.3g (bound 1e-5)", n, closed, series);
  o.note("K-types (1,0),(0,2),(2,1) taken formally on every space, including q = 1");
  return o;
}

Outcome criterion3() {
  Outcome o;
  const double R = 5.0;
  std::mt19937_64 rng(7);
  for (const Space& s : {Space(3, 2), Space(7, 2)}) {
    const double rho = s.rho_value();
    auto far_from_specials = [&](double x) {
      return std::abs(2.0 * x - std::round(2.0 * x)) > 0.02;
    };
    std::uniform_real_distribution<double> ub(-rho, rho), uu(rho, R);
    std::uniform_int_distribution<int> side(0, 1);
    int bad_b = 0, bad_u = 0, bad_z = 0, nb = 0, nu = 0, nz = 0;
    double worst_ratio = 0.0, worst_slope = 0.0, worst_zero = 0.0;
    while (nb < 20) {
      const double l0 = ub(rng);
      if (!far_from_specials(l0)) continue;
      ++nb;
      if (eis::classify_bounded(s, std::nullopt, R, Complex(l0, 0.0)) != eis::Boundedness::Bounded) {
        ++bad_b;
        continue;
      }
      const auto g = verify::probe_growth(s, std::nullopt, R, l0);
      worst_ratio = std::max(worst_ratio, g.sup_ratio);
      if (!verify::growth_agrees(s, eis::Boundedness::Bounded, l0, g)) ++bad_b;
    }
    while (nu < 20) {
      double l0 = uu(rng);
      if (side(rng)) l0 = -l0;
      if (!far_from_specials(l0)) continue;
      ++nu;
      if (eis::classify_bounded(s, std::nullopt, R, Complex(l0, 0.0)) != eis::Boundedness::Unbounded) {
        ++bad_u;
        continue;
      }
      const auto g = verify::probe_growth(s, std::nullopt, R, l0);
      const double expect = std::abs(l0) - rho;
      worst_slope = std::max(worst_slope, std::abs(g.slope - expect) / expect);
      if (!verify::growth_agrees(s, eis::Boundedness::Unbounded, l0, g)) ++bad_u;
    }
    for (int k = 0; k <= static_cast<int>(R); ++k) {
      ++nz;
      const auto g = verify::probe_growth(s, std::nullopt, R, -k);
      worst_zero = std::max(worst_zero, g.sup_abs);
      if (eis::classify_bounded(s, std::nullopt, R, Complex(-k, 0.0)) != eis::Boundedness::IdenticallyZero ||
          !verify::growth_agrees(s, eis::Boundedness::IdenticallyZero, -k, g))
        ++bad_z;
    }
    if (bad_b || bad_u || bad_z) o.pass = false;
    o.note("(%d,%d): bounded %d/%d ok (max sup ratio %.4f), unbounded %d/%d ok (max rel slope error %.3f), "
           "-N0 %d/%d ok (max |value| %.2g)",
           s.p, s.q, nb - bad_b, nb, worst_ratio, nu - bad_u, nu, worst_slope, nz - bad_z, nz, worst_zero);
  }
  o.note("the set -N0 meets [-R, 0] in %d points, all of which are used", 6);
  return o;
}

Outcome criterion4() {
  Outcome o;
  struct Case {
    Space s;
    std::optional<KType> kt;
  };
  for (auto reading : {eis::KTypeReading::Consistent, eis::KTypeReading::Literal}) {
    for (const Case& c : {Case{Space(3, 2), {}}, Case{Space(5, 3), {}}, Case{Space(7, 3), {}}, Case{Space(3, 1), KType{0, 4}}}) {
      if (reading == eis::KTypeReading::Literal && !c.kt) continue;
      const auto cat = eis::pole_catalog(c.s, c.kt, reading);
      int spikes = 0, troughs = 0, stray_spikes = 0, stray_troughs = 0;
      for (int i = 0; i <= 2000; ++i) {
        const double x = -10.0 + 0.01 * i;
        const EvalResult r = eis::c_function(c.s, c.kt, Complex(x, 0.0));
        const double v = std::abs(r.value);
        const bool spike = r.status == Status::Pole || v > 1e6;
        const bool trough = r.status == Status::Zero || (r.usable() && v < 1e-6);
        if (spike) {
          ++spikes;
          if (!eis::in_any(cat.c_poles, Complex(x, 0.0), 2e-2)) ++stray_spikes;
        }
        if (trough) {
          ++troughs;
          if (!eis::in_any(cat.c_zeros, Complex(x, 0.0), 2e-2)) ++stray_troughs;
        }
      }
      if (stray_spikes || stray_troughs) o.pass = false;
      o.note("(%d,%d)%s%s: %d spikes (%d outside catalog), %d troughs (%d outside catalog)", c.s.p, c.s.q,
             c.kt ? " K-type (0,4)" : "", c.kt ? (reading == eis::KTypeReading::Consistent ? " consistent reading" : " literal reading") : "",
             spikes, stray_spikes, troughs, stray_troughs);
    }
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.5, 2.5), ut(0.2, 3.0), ue(-1.0, 1.0);
  double fe = 0.0, literal = 0.0, conj = 0.0, cc = 0.0;
  int n = 0;
  for (const Space& s : {Space(2, 1), Space(4, 1), Space(3, 2), Space(5, 3), Space(7, 2)}) {
    int taken = 0;
    while (taken < 40) {
      const Complex lam(u(rng), u(rng));
      if (std::abs(lam.imag()) < 0.05 && std::abs(2.0 * lam.real() - std::round(2.0 * lam.real())) < 0.1) continue;
      if (eis::c_function(s, std::nullopt, lam).status != Status::Regular) continue;
      ++taken;
      ++n;
      EtaVector eta;
      for (std::size_t i = 0; i < s.orbits().size(); ++i) eta.components.emplace_back(ue(rng), ue(rng));
      EtaVector ceta = eta;
      for (auto& z : ceta.components) z = std::conj(z);
      const double t = ut(rng);
      for (int w : s.orbits()) {
        const Complex lhs = eis::eisenstein_closed(s, std::nullopt, -lam, eta, w, t).value;
        // valid form, stated with C°(-1, -lambda)
        fe = std::max(fe, rel(lhs, eis::eisenstein_closed(s, std::nullopt, lam, eis::apply_c_matrix(s, -lam, eta), w, t).value));
        literal = std::max(literal, rel(lhs, eis::eisenstein_closed(s, std::nullopt, lam, eis::apply_c_matrix(s, lam, eta), w, t).value));
        const Complex a = std::conj(eis::eisenstein_closed(s, std::nullopt, -std::conj(lam), eta, w, t).value);
        const Complex b = eis::eisenstein_closed(s, std::nullopt, -lam, ceta, w, t).value;
        conj = std::max(conj, rel(a, b));
      }
      cc = std::max(cc, std::abs(eis::c_function(s, std::nullopt, lam).value * eis::c_function(s, std::nullopt, -lam).value - 1.0));
    }
  }
  o.pass = fe <= 1e-7 && conj <= 1e-7 && cc <= 1e-7;
  o.note("%d points on (2,1),(4,1),(3,2),(5,3),(7,2); both orbits when q = 1", n);
  o.note("E°(-l,eta) = E°(l, C°(-1,-l) eta): max rel err %.3g", fe);
  o.note("conjugation symmetry: max rel err %.3g", conj);
  o.note("c(l)c(-l) = 1: max abs err %.3g", cc);
  o.note("diagnostic, literal form E°(-l,eta) = E°(l, C°(-1,l) eta): max rel deviation %.3g (holds only where c(l)^2 = 1)", literal);
  return o;
}

Outcome criterion6() {
  Outcome o;
  double worst = 0.0;
  int n = 0;
  for (const Space& s : {Space(2, 3), Space(3, 3)})
    for (Complex lam : lambda_grid())
      for (double t : kTs) {
        const double rho = s.rho_value();
        specfun::GammaRatioSpec g;
        g.numerators = {{0.5 * (lam + rho), 0.5}, {0.5 * (lam - rho + double(s.q)), 0.5}};
        g.denominators = {{lam, 1.0}, {Complex(0.5 * s.q, 0.0), 1.0}};
        g.log_factor = (lam - rho) * std::log(2.0);
        const EvalResult pre = specfun::gamma_ratio(g);
        const EvalResult E = eis::eisenstein_closed(s, std::nullopt, lam, EtaVector::unit(s), 1, t);
        if (pre.status == Status::Pole || E.status == Status::Pole) continue;
        const Complex phi = eis::jacobi_phi(0.5 * s.q - 1.0, 0.5 * s.p - 1.0, Complex(0.0, -1.0) * lam, t).value;
        worst = std::max(worst, rel(E.value, pre.value * phi));
        ++n;
      }
  o.pass = worst <= 1e-8;
  o.note("%d comparisons, max rel err %.3g (bound 1e-8)", n, worst);
  return o;
}

Outcome criterion7() {
  using namespace fourier;
  Outcome o;
  const Profile smooth = Profile::smooth_bump(1.0, 2.0);
  const Profile poly = Profile::polynomial_bump(1.0, 2.0, 1.0, 4.0);
  HarnessOptions ho;

  for (const Space& s : {Space(5, 3), Space(3, 3), Space(7, 2)})
    for (const Profile& p : {smooth, poly}) {
      const auto r = plancherel_check(s, RadialProfile::uniform(s, p), EtaVector::unit(s), ho);
      if (!(r.lhs <= r.rhs)) o.pass = false;
      o.note("plancherel (%d,%d) %s: lhs %.6g rhs %.6g ratio %.4f tail %.2g", s.p, s.q,
             p.kind == ProfileKind::SmoothBump ? "smooth" : "poly", r.lhs, r.rhs, r.ratio, r.tail_estimate);
    }
  {
    const Space s(3, 2);
    const auto r = plancherel_check(s, RadialProfile::uniform(s, smooth), EtaVector::unit(s), ho);
    o.note("diagnostic plancherel (3,2) smooth: ratio %.4f, expected sqrt(4^(1-rho) pi) = %.4f (> 1, see notes)", r.ratio,
           std::sqrt(std::pow(4.0, 1.0 - s.rho_value()) * std::numbers::pi));
  }

  const Space s(5, 3);
  const auto f = RadialProfile::uniform(s, smooth);
  const auto eta = EtaVector::unit(s);
  struct Hy {
    double r, l0;
  };
  for (const Hy h : {Hy{1.0, 1.5}, Hy{1.5, 0.5}, Hy{2.0, 0.0}}) {
    HarnessOptions a = ho, b = ho;
    a.xi_max = 100.0;
    b.xi_max = 200.0;
    const double ra = hy_ratio(s, std::nullopt, f, eta, h.r, h.l0, 3.0, a).ratio;
    const double rb = hy_ratio(s, std::nullopt, f, eta, h.r, h.l0, 3.0, b).ratio;
    const double change = std::max(ra, rb) / std::min(ra, rb);
    if (!(std::isfinite(ra) && std::isfinite(rb) && change < 2.0)) o.pass = false;
    o.note("hausdorff-young (5,3) r=%.1f l0=%.1f R=3: ratio %.6g at 100, %.6g at 200 (change x%.4f)", h.r, h.l0, ra, rb, change);
  }

  LineSpec line;
  line.re_part = 0.5;
  line.heights = {1.0, 100.0};
  for (int j = 0; j <= 7; ++j) line.heights.push_back(std::ldexp(1.0, j));
  const auto v = rl_decay_profile(s, std::nullopt, f, eta, 1.0, line, ho);
  double lo = 0.0, hi = 0.0;
  for (int j = 0; j <= 7; ++j) {
    if (j <= 2) lo = std::max(lo, v[2 + j]);
    if (j >= 5) hi = std::max(hi, v[2 + j]);
  }
  const bool rl_ok = v[1] < 0.01 * v[0] && hi < lo;
  if (!rl_ok) o.pass = false;
  o.note("riemann-lebesgue (5,3) r=1 Re=0.5: |F(100)|/|F(1)| = %.3g, dyadic max j>=5 %.3g vs j<=2 %.3g", v[1] / v[0], hi, lo);

  std::vector<Complex> grid;
  for (double x = -20.25; x <= 2.0; x += 1.0)
    for (double y : {0.0, 1.0, 3.0, 10.0}) grid.emplace_back(x, y);
  const auto pw = paley_wiener_check(s, std::nullopt, f, eta, 2, 2.0, grid, ho);
  if (!pw.rate_ok) o.pass = false;
  o.note("paley-wiener (5,3) n=2 R=2: fitted rate %.4f vs support end %.2f (+0.05), M %.4g", pw.rate, pw.support_end, pw.M);
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (const auto& r : verify::check_fixtures()) {
    if (!r.pass) o.pass = false;
    o.note("%s %s: %s", r.pass ? "ok" : "FAILED", r.name.c_str(), r.detail.c_str());
  }
  return o;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* title;
    std::function<Outcome()> run;
    double budget_s;  // runtime bound from the criterion, 0 if none
  };
  const std::vector<Entry> all{
      {1, "dual-route agreement", criterion1, 30},
      {2, "ODE residuals", criterion2, 60},
      {3, "boundedness classifier vs empirics", criterion3, 0},
      {4, "catalog correctness", criterion4, 0},
      {5, "functional equations", criterion5, 0},
      {6, "Jacobi cross-check", criterion6, 0},
      {7, "Fourier harnesses", criterion7, 300},
      {8, "fixture conformance", criterion8, 0},
  };
  int failed = 0;
  for (const auto& e : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = e.run();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.note("exception: %s", ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (e.budget_s > 0.0 && secs > e.budget_s) {
      o.pass = false;
      o.note("runtime %.1fs exceeds the %.0fs budget", secs, e.budget_s);
    }
    std::printf("criterion %d (%s): %s [%.1fs]\n", e.id, e.title, o.pass ? "PASS" : "FAIL", secs);
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
