#include "hyperfns/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace hyperfns::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kEulerGamma = 0.5772156649015328606065121;
constexpr double kStirlingMin = 15.0;

// zeta(2) .. zeta(40)
constexpr std::array<double, 39> kZeta = {
    1.644934066848226436472, 1.2020569031595942854,  1.082323233711138191516,
    1.036927755143369926331, 1.017343061984449139715, 1.00834927738192282684,
    1.004077356197944339379, 1.002008392826082214418, 1.000994575127818085337,
    1.000494188604119464559, 1.000246086553308048299, 1.000122713347578489147,
    1.000061248135058704829, 1.000030588236307020494, 1.000015282259408651872,
    1.000007637197637899762, 1.00000381729326499984,  1.000001908212716553939,
    1.000000953962033872796, 1.000000476932986787806, 1.000000238450502727733,
    1.000000119219925965311, 1.000000059608189051259, 1.000000029803503514652,
    1.000000014901554828365, 1.000000007450711789835, 1.000000003725334024788,
    1.000000001862659723513, 1.00000000093132743242,  1.000000000465662906503,
    1.000000000232831183368, 1.000000000116415501727, 1.000000000058207720879,
    1.000000000029103850445, 1.000000000014551921891, 1.000000000007275959835,
    1.000000000003637979547, 1.00000000000181898965,  1.000000000000909494784};

// B_{2k} / (2k (2k-1)), k = 1..10
constexpr std::array<double, 10> kStirlingCoef = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0};

Complex stirling(Complex w) {
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex s = 0.0;
  Complex p = inv;
  for (double c : kStirlingCoef) {
    s += c * p;
    p *= inv2;
  }
  return (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * std::numbers::pi) + s;
}

// log(1 + x) without cancellation for small x.
Complex clog1p(Complex x) {
  const double re = 0.5 * std::log1p(2.0 * x.real() + std::norm(x));
  const double im = std::atan2(x.imag(), 1.0 + x.real());
  return {re, im};
}

// log Gamma(1 + x) for |x| < 1/4 by its Taylor series.
Complex lgamma1p_taylor(Complex x) {
  Complex s = -kEulerGamma * x;
  Complex p = -x;
  for (std::size_t i = 0; i < kZeta.size(); ++i) {
    p *= -x;
    const double k = static_cast<double>(i + 2);
    s += kZeta[i] * p / k;
  }
  return s;
}

Complex log_residue_factor(int n, double slope) {
  // Gamma(-n + slope*d) ~ (-1)^n / (n! slope d)
  Complex v = -std::lgamma(n + 1.0) - std::log(Complex(slope, 0.0));
  if (n % 2 != 0) v += Complex(0.0, std::numbers::pi);
  return v;
}

struct SeriesSum {
  Complex sum{1.0, 0.0};
  double max_term = 1.0;
  int terms = 0;
};

SeriesSum f21_series(Complex a, Complex b, Complex c, double z) {
  SeriesSum out;
  if (z == 0.0) return out;
  // A nonpositive integer numerator parameter truncates the series exactly.
  if (nonpositive_integer_index(a) >= 0) a = Complex(std::round(a.real()), 0.0);
  if (nonpositive_integer_index(b) >= 0) b = Complex(std::round(b.real()), 0.0);
  constexpr int kMaxTerms = 200000;
  Complex term = 1.0;
  int small = 0;
  for (int n = 0; n < kMaxTerms; ++n) {
    const double dn = n;
    const Complex ratio = (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
    term *= ratio;
    out.sum += term;
    out.terms = n + 1;
    const double at = std::abs(term);
    out.max_term = std::max(out.max_term, at);
    if (at == 0.0) return out;
    if (std::abs(ratio) < 1.0 &&
        (at <= 0.25 * kEps * std::abs(out.sum) || at <= 1e-30 * out.max_term)) {
      if (++small >= 2) return out;
    } else {
      small = 0;
    }
  }
  throw Error(ErrorCode::SlowConvergence, "2F1 series did not converge");
}

double series_err(const SeriesSum& s) {
  return kEps * (4.0 * s.max_term + std::sqrt(static_cast<double>(s.terms)) * std::abs(s.sum));
}

EvalResult direct_route(Complex a, Complex b, Complex c, double z) {
  const SeriesSum s = f21_series(a, b, c, z);
  return {s.sum, series_err(s), Status::Regular};
}

EvalResult pfaff_route(Complex a, Complex b, Complex c, double z) {
  const double w = z / (z - 1.0);
  const SeriesSum s = f21_series(a, c - b, c, w);
  const Complex pre = std::exp(-a * std::log1p(-z));
  return {pre * s.sum, std::abs(pre) * series_err(s), Status::Regular};
}

// Connection formula around infinity; requires a - b off the integers.
EvalResult inversion_route(Complex a, Complex b, Complex c, double z) {
  const double x = 1.0 / z;
  const double L = std::log(-z);
  EvalResult out;
  auto add_term = [&](Complex a1, Complex b1) {
    GammaRatioSpec g{{{c}, {b1 - a1}}, {{b1}, {c - a1}}, -a1 * L};
    const LogEval coef = gamma_ratio_log(g);
    if (coef.status == Status::Zero) return;
    if (coef.status == Status::Pole)
      throw Error(ErrorCode::ParameterPole, "2F1 inversion hit a degenerate parameter");
    const SeriesSum s = f21_series(a1, a1 - c + 1.0, a1 - b1 + 1.0, x);
    const Complex pre = std::exp(coef.log_value);
    const Complex v = pre * s.sum;
    out.value += v;
    out.abs_err += std::abs(pre) * series_err(s) + std::abs(v) * coef.rel_err;
  };
  add_term(a, b);
  add_term(b, a);
  return out;
}

Complex lagrange(const std::vector<double>& nodes, const std::vector<Complex>& vals, Complex x) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    Complex w = 1.0;
    for (std::size_t j = 0; j < nodes.size(); ++j)
      if (j != i) w *= (x - nodes[j]) / (nodes[i] - nodes[j]);
    s += w * vals[i];
  }
  return s;
}

// a - b = n + delta with |delta| tiny: interpolate in a around b + n, never
// touching the degenerate point itself. The connection terms blow up like 1/s,
// so nodes stay at |s| >= 5e-3 and the degree-7 interpolant absorbs the spread.
EvalResult degenerate_route(Complex b, Complex c, double z, int n, Complex delta) {
  const std::vector<double> outer = {-0.04, -0.03, -0.02, -0.01, 0.01, 0.02, 0.03, 0.04};
  const std::vector<double> inner = {-0.02, -0.015, -0.01, -0.005, 0.005, 0.01, 0.015, 0.02};
  auto G = [&](double s) { return inversion_route(b + static_cast<double>(n) + s, b, c, z); };
  double noise = 0.0;
  auto sample = [&](const std::vector<double>& nodes) {
    std::vector<Complex> v;
    for (double s : nodes) {
      const EvalResult r = G(s);
      v.push_back(r.value);
      noise = std::max(noise, r.abs_err);
    }
    return v;
  };
  const Complex v1 = lagrange(outer, sample(outer), delta);
  const Complex v2 = lagrange(inner, sample(inner), delta);
  EvalResult out{v2, std::abs(v1 - v2) + 4.0 * noise, Status::Regular};
  if (std::abs(v1 - v2) > 1e-7 * std::abs(v2)) out.status = Status::AccuracyLoss;
  return out;
}

}  // namespace

int nonpositive_integer_index(Complex z) {
  if (std::abs(z.imag()) >= pole_eps || z.real() > 0.5) return -1;
  const double r = std::round(z.real());
  if (std::abs(z.real() - r) >= pole_eps) return -1;
  return static_cast<int>(-r);
}

Complex log_gamma(Complex z) {
  if (nonpositive_integer_index(z) >= 0)
    throw Error(ErrorCode::PoleAtNonpositiveInteger, "log_gamma at a nonpositive integer");
  if (std::abs(z - 1.0) < 0.25) return lgamma1p_taylor(z - 1.0);
  if (std::abs(z - 2.0) < 0.25) return clog1p(z - 2.0) + lgamma1p_taylor(z - 2.0);
  // Upward recurrence keeps the principal branch: each log(z+k) is analytic
  // off the negative axis and the identity holds on the positive axis.
  Complex shift = 0.0;
  Complex w = z;
  while (w.real() < kStirlingMin) {
    shift += std::log(w);
    w += 1.0;
  }
  return stirling(w) - shift;
}

Complex gamma_direct(Complex z) {
  Complex prod = 1.0;
  Complex w = z;
  while (w.real() < kStirlingMin) {
    prod *= w;
    w += 1.0;
  }
  return std::exp(stirling(w)) / prod;
}

LogEval gamma_ratio_log(const GammaRatioSpec& spec) {
  LogEval out;
  out.log_value = spec.log_factor;
  double mag = std::abs(spec.log_factor);
  auto accumulate = [&](const GammaArg& g, double sign) {
    const int n = nonpositive_integer_index(g.arg);
    Complex v;
    if (n >= 0) {
      out.order += sign > 0 ? 1 : -1;
      v = log_residue_factor(n, g.slope);
    } else {
      v = log_gamma(g.arg);
    }
    out.log_value += sign * v;
    mag += std::abs(v);
  };
  for (const auto& g : spec.numerators) accumulate(g, 1.0);
  for (const auto& g : spec.denominators) accumulate(g, -1.0);
  out.rel_err = kEps * (4.0 + mag);
  if (out.order > 0)
    out.status = Status::Pole;
  else if (out.order < 0)
    out.status = Status::Zero;
  return out;
}

EvalResult gamma_ratio(const GammaRatioSpec& spec) {
  const LogEval le = gamma_ratio_log(spec);
  EvalResult out;
  out.status = le.status;
  if (le.status != Status::Regular) return out;
  if (le.log_value.real() > 709.0) {
    out.status = Status::Overflow;
    return out;
  }
  out.value = std::exp(le.log_value);
  out.abs_err = std::abs(out.value) * le.rel_err;
  return out;
}

EvalResult hyp2f1_nonpos(Complex a, Complex b, Complex c, double z, Hyp2f1Route route) {
  if (!(z <= 0.0)) throw Error(ErrorCode::InvalidArgument, "hyp2f1_nonpos needs z <= 0");
  if (nonpositive_integer_index(c) >= 0)
    throw Error(ErrorCode::ParameterPole, "2F1 with c a nonpositive integer");
  if (z == 0.0) return {Complex(1.0, 0.0), 0.0, Status::Regular};

  const bool polynomial = nonpositive_integer_index(a) >= 0 || nonpositive_integer_index(b) >= 0;
  if (route == Hyp2f1Route::Auto) {
    if (polynomial || z > -0.5)
      route = Hyp2f1Route::Series;
    else if (z >= -2.0)
      route = Hyp2f1Route::Pfaff;
    else
      route = Hyp2f1Route::Inversion;
  }

  EvalResult r;
  switch (route) {
    case Hyp2f1Route::Series:
      r = direct_route(a, b, c, z);
      break;
    case Hyp2f1Route::Pfaff:
      r = pfaff_route(a, b, c, z);
      break;
    default: {
      const Complex d = a - b;
      const double n = std::round(d.real());
      const Complex delta = d - n;
      if (std::abs(delta) < 2.5e-6)
        r = degenerate_route(b, c, z, static_cast<int>(n), delta);
      else
        r = inversion_route(a, b, c, z);
      break;
    }
  }
  if (r.status == Status::Regular && r.abs_err > 1e-8 * std::abs(r.value))
    r.status = Status::AccuracyLoss;
  return r;
}

EvalResult hyp2f1_power_series(Complex a, Complex b, Complex c, double x) {
  if (!(std::abs(x) < 1.0)) throw Error(ErrorCode::InvalidArgument, "power series needs |x| < 1");
  if (nonpositive_integer_index(c) >= 0)
    throw Error(ErrorCode::ParameterPole, "2F1 with c a nonpositive integer");
  return direct_route(a, b, c, x);
}

}  // namespace hyperfns::specfun
