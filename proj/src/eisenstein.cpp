#include "hyperfns/eisenstein.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hyperfns/specfun.hpp"

namespace hyperfns::eis {

namespace {

using specfun::GammaArg;
using specfun::GammaRatioSpec;

constexpr double kEps = std::numeric_limits<double>::epsilon();
const double kLog2 = std::log(2.0);

// Pole-proximity thresholds for the regularized evaluation.
constexpr double kLimitRadius = 1e-6;
constexpr double kWarnRadius = 1e-3;

struct Params {
  double rho, q, K, L;
};

Params params(const Space& s, std::optional<KType> kt) {
  const KType k = kt.value_or(KType{});
  return {s.rho_value(), static_cast<double>(s.q), static_cast<double>(std::abs(k.k)),
          static_cast<double>(std::abs(k.l))};
}

// 2^{lambda - rho} Gamma(A) Gamma(A2) / (Gamma(lambda) Gamma(q/2 + L))
GammaRatioSpec prefactor_spec(const Params& P, Complex lambda) {
  const Complex A = 0.5 * (lambda + P.rho + P.K + P.L);
  const Complex A2 = 0.5 * (lambda - P.rho + P.q - P.K + P.L);
  return GammaRatioSpec{{{A, 0.5}, {A2, 0.5}},
                        {{lambda, 1.0}, {Complex(0.5 * P.q + P.L, 0.0), 1.0}},
                        (lambda - P.rho) * kLog2};
}

GammaRatioSpec c_spec(const Params& P, Complex lambda) {
  const double s = P.K + P.L;
  const double d = P.q - P.K + P.L;
  return GammaRatioSpec{
      {{0.5 * (lambda + P.rho + s), 0.5}, {-lambda, -1.0}, {0.5 * (lambda - P.rho + d), 0.5}},
      {{0.5 * (-lambda + P.rho + s), -0.5}, {lambda, 1.0}, {0.5 * (-lambda - P.rho + d), -0.5}},
      2.0 * lambda * kLog2};
}

Complex trig_factor(const Params& P, double t) {
  return std::pow(std::cosh(t), P.K) * std::pow(std::sinh(t), P.L);
}

EvalResult closed_core(const Space& s, std::optional<KType> kt, Complex lambda, double t) {
  if (t < 0.0) throw Error(ErrorCode::InvalidArgument, "eisenstein_closed needs t >= 0");
  const Params P = params(s, kt);
  const auto le = specfun::gamma_ratio_log(prefactor_spec(P, lambda));
  EvalResult out;
  if (le.status == Status::Pole || le.status == Status::Zero) {
    out.status = le.status;
    return out;
  }
  const double sh = std::sinh(t);
  const EvalResult F = specfun::hyp2f1_nonpos(0.5 * (lambda + P.rho + P.K + P.L),
                                              0.5 * (-lambda + P.rho + P.K + P.L),
                                              Complex(0.5 * P.q + P.L, 0.0), -sh * sh);
  if (le.log_value.real() > 700.0) {
    out.status = Status::Overflow;
    return out;
  }
  const Complex pre = std::exp(le.log_value) * trig_factor(P, t);
  out.value = pre * F.value;
  out.abs_err = std::abs(pre) * F.abs_err + std::abs(out.value) * le.rel_err;
  out.status = F.status;
  return out;
}

EvalResult series_core(const Space& s, std::optional<KType> kt, Complex lambda, double t) {
  const EvalResult c = c_function(s, kt, lambda);
  if (c.status == Status::Pole || c.status == Status::Overflow)
    throw Error(ErrorCode::SeriesPole, "c(lambda) is singular; series route unavailable");
  const EvalResult a = hc::phi_series(s, kt, lambda, t);
  EvalResult out{a.value, a.abs_err, a.status};
  if (c.status != Status::Zero) {
    const EvalResult b = hc::phi_series(s, kt, -lambda, t);
    out.value += c.value * b.value;
    out.abs_err += std::abs(c.value) * b.abs_err + c.abs_err * std::abs(b.value);
    if (b.status != Status::Regular) out.status = b.status;
  }
  return out;
}

EvalResult scale(EvalResult r, Complex eta) {
  r.value *= eta;
  r.abs_err *= std::abs(eta);
  return r;
}

int count_roots_at(const RootPolynomial& p, Complex z) {
  int n = 0;
  for (const Complex& r : p.roots)
    if (std::abs(r - z) < pole_eps) ++n;
  return n;
}

// Order of the pole (positive) or zero (negative) of p_R(lambda) E°(lambda)
// at lambda0, and of p_R c; both from exact Gamma bookkeeping.
struct LimitInfo {
  int order_E = 0;
  int order_pc = 0;
};

LimitInfo limit_orders(const Space& s, std::optional<KType> kt, const RootPolynomial& pR,
                       Complex lambda0) {
  const Params P = params(s, kt);
  const int roots = count_roots_at(pR, lambda0);
  LimitInfo li;
  li.order_E = specfun::gamma_ratio_log(prefactor_spec(P, lambda0)).order - roots;
  li.order_pc = specfun::gamma_ratio_log(c_spec(P, lambda0)).order - roots;
  return li;
}

// lim p_R(lambda) E°(lambda)(t) from the closed form: the 2F1 factor is entire
// in lambda, so only the Gamma prefactor and p_R need the residue bookkeeping.
EvalResult exact_limit(const Space& s, std::optional<KType> kt, const RootPolynomial& pR,
                       Complex lambda0, double t) {
  const Params P = params(s, kt);
  const auto le = specfun::gamma_ratio_log(prefactor_spec(P, lambda0));
  const int roots = count_roots_at(pR, lambda0);
  const int order = le.order - roots;
  EvalResult out;
  if (order > 0) {
    out.status = Status::Pole;
    return out;
  }
  if (order < 0) {
    out.status = Status::Regularized;
    return out;
  }
  Complex poly = pR.leading;
  for (const Complex& r : pR.roots)
    if (std::abs(r - lambda0) >= pole_eps) poly *= (lambda0 - r);
  const double sh = std::sinh(t);
  const EvalResult F = specfun::hyp2f1_nonpos(0.5 * (lambda0 + P.rho + P.K + P.L),
                                              0.5 * (-lambda0 + P.rho + P.K + P.L),
                                              Complex(0.5 * P.q + P.L, 0.0), -sh * sh);
  const Complex pre = std::exp(le.log_value) * poly * trig_factor(P, t);
  out.value = pre * F.value;
  out.abs_err = std::abs(pre) * F.abs_err + std::abs(out.value) * le.rel_err;
  out.status = F.status == Status::Regular ? Status::Regularized : F.status;
  return out;
}

// d/dlambda [(lambda - lambda0) p_R E°] at real lambda0 by complex step on the
// two-series representation. Needs t >= t_min_series and p_R c with at most a
// simple pole at lambda0.
EvalResult complex_step_limit(const Space& s, std::optional<KType> kt, const RootPolynomial& pR,
                              double lambda0, double t) {
  constexpr double h = 1e-20;
  const Complex lam(lambda0, h);
  const Complex dl(0.0, h);
  const Complex first = pR(lam) * hc::phi_series_scaled(s, kt, lam, lambda0, t);
  const Complex pc = dl * pR(lam) * c_function_direct(s, kt, lam);
  Complex second = 0.0;
  if (std::abs(pc) > 0.0) second = pc * hc::phi_series(s, kt, -lam, t).value;
  const double v = (first + second).imag() / h;
  return {Complex(v, 0.0), 1e-13 * std::abs(v) + 1e-300, Status::Regularized};
}

EvalResult offset_limit(const Space& s, std::optional<KType> kt, const RootPolynomial& pR,
                        Complex lambda0, double t) {
  auto F = [&](double e) {
    const Complex a = lambda0 + e, b = lambda0 - e;
    const EvalResult ra = closed_core(s, kt, a, t), rb = closed_core(s, kt, b, t);
    return 0.5 * (pR(a) * ra.value + pR(b) * rb.value);
  };
  const Complex A1 = F(1e-3), A2 = F(5e-4);
  const Complex v = (4.0 * A2 - A1) / 3.0;
  return {v, std::abs(A2 - A1) / 3.0 * 1e-3 + 1e-12 * std::abs(v), Status::Regularized};
}

}  // namespace

EtaVector EtaVector::unit(const Space& s, int w) {
  EtaVector e;
  e.components.assign(s.orbits().size(), Complex(0.0, 0.0));
  e.components.at(w == 1 ? 0 : 1) = 1.0;
  return e;
}

EtaVector EtaVector::of(const Space& s, Complex plus, Complex minus) {
  EtaVector e;
  e.components = {plus};
  if (s.q == 1) e.components.push_back(minus);
  return e;
}

double EtaVector::norm() const {
  double acc = 0.0;
  for (const Complex& c : components) acc += std::norm(c);
  return std::sqrt(acc);
}

void check_eta(const Space& s, const EtaVector& eta) {
  if (eta.components.size() != s.orbits().size())
    throw Error(ErrorCode::InvalidArgument, "eta must have one entry per orbit");
}

bool Progression::contains(Half x) const {
  const std::int64_t diff = x.twice - start.twice;
  const std::int64_t st = 2 * static_cast<std::int64_t>(step);
  if (diff % st != 0) return false;
  return diff / st >= 0;
}

bool Progression::contains(Complex z, double tol) const {
  Half h;
  return near_half_integer(z, tol, &h) && contains(h);
}

std::vector<Half> Progression::first(int n) const {
  std::vector<Half> out;
  for (int i = 0; i < n; ++i) out.push_back(Half{start.twice + 2 * step * i});
  return out;
}

bool in_any(const std::vector<Progression>& set, Complex z, double tol) {
  return std::any_of(set.begin(), set.end(), [&](const Progression& p) { return p.contains(z, tol); });
}

std::optional<Half> nearest_e_pole(const PoleCatalog& cat, Complex z, double tol) {
  Half h;
  if (!near_half_integer(z, tol, &h)) return std::nullopt;
  for (const auto& p : cat.e_poles)
    if (p.contains(h)) return h;
  return std::nullopt;
}

PoleCatalog pole_catalog(const Space& s, std::optional<KType> kt, KTypeReading reading) {
  const KType k = kt.value_or(KType{});
  const Half rho = s.rho();
  const Half K = Half::from_int(std::abs(k.k));
  const Half L = Half::from_int(std::abs(k.l));
  const Half q = Half::from_int(s.q);
  // The only place the two readings differ.
  const Half shift = reading == KTypeReading::Consistent ? K - L : L - K;
  PoleCatalog c;
  c.e_poles = {{-rho - K - L, -2}, {rho - q + shift, -2}};
  c.c_poles = {{-rho - K - L, -2}, {Half{0}, 1}, {rho - q + shift, -2}};
  c.c_zeros = {{rho + K + L, 2}, {Half{0}, -1}, {-rho + q - shift, 2}};
  c.e_zeros = {{Half{0}, -1}};
  return c;
}

std::vector<Half> undetermined_set(const Space& s, const KType& kt, KTypeReading reading) {
  std::vector<Half> out;
  const Half rho = s.rho();
  if (!rho.is_integer()) return out;
  const std::int64_t K = std::abs(kt.k), L = std::abs(kt.l);
  const std::int64_t top = rho.twice / 2 - s.q + (reading == KTypeReading::Consistent ? K - L : L - K);
  for (std::int64_t n = rho.twice / 2 + 1; n <= top; ++n) out.push_back(Half::from_int(n));
  return out;
}

SpectralPoint make_spectral_point(const Space& s, std::optional<KType> kt, Complex lambda, double r,
                                  double R, KTypeReading reading) {
  const PoleCatalog cat = pole_catalog(s, kt, reading);
  SpectralPoint sp;
  sp.lambda = lambda;
  sp.is_E_pole = in_any(cat.e_poles, lambda, pole_eps);
  sp.is_c_pole = in_any(cat.c_poles, lambda, pole_eps);
  sp.is_nonpos_int = specfun::nonpositive_integer_index(lambda) >= 0;
  const double rho = s.rho_value();
  sp.in_S1 = std::abs(lambda.real()) <= rho;
  sp.in_Sr = r >= 1.0 && r <= 2.0 && std::abs(lambda.real()) <= (2.0 / r - 1.0) * rho;
  sp.in_aR = lambda.real() <= R;
  return sp;
}

EvalResult c_function(const Space& s, std::optional<KType> kt, Complex lambda) {
  return specfun::gamma_ratio(c_spec(params(s, kt), lambda));
}

Complex c_function_direct(const Space& s, std::optional<KType> kt, Complex lambda) {
  const GammaRatioSpec g = c_spec(params(s, kt), lambda);
  Complex v = std::exp(g.log_factor);
  for (const auto& a : g.numerators) v *= specfun::gamma_direct(a.arg);
  for (const auto& a : g.denominators) v /= specfun::gamma_direct(a.arg);
  return v;
}

std::vector<std::vector<EvalResult>> c_matrix(const Space& s, Complex lambda) {
  const EvalResult c = c_function(s, std::nullopt, lambda);
  const std::size_t n = s.orbits().size();
  std::vector<std::vector<EvalResult>> m(n, std::vector<EvalResult>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = c;
  return m;
}

EtaVector apply_c_matrix(const Space& s, Complex lambda, const EtaVector& eta) {
  check_eta(s, eta);
  const auto m = c_matrix(s, lambda);
  EtaVector out;
  out.components.assign(eta.components.size(), Complex(0.0, 0.0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out.components[i] += m[i][j].value * eta.components[j];
  return out;
}

EvalResult eisenstein_closed(const Space& s, std::optional<KType> kt, Complex lambda,
                             const EtaVector& eta, int w, double t) {
  check_eta(s, eta);
  const Complex e = eta[w];
  EvalResult r = closed_core(s, kt, lambda, t);
  if (!r.usable()) return r;
  return scale(r, e);
}

EvalResult eisenstein_series(const Space& s, std::optional<KType> kt, Complex lambda,
                             const EtaVector& eta, int w, double t) {
  check_eta(s, eta);
  return scale(series_core(s, kt, lambda, t), eta[w]);
}

EvalResult eisenstein(const Space& s, std::optional<KType> kt, Complex lambda, const EtaVector& eta,
                      int w, double t) {
  check_eta(s, eta);
  Half h;
  const bool series_ok = std::abs(lambda) > 8.0 && t >= 0.25 &&
                         !(near_half_integer(lambda, 1e-3, &h) && h.is_integer());
  if (series_ok) {
    const EvalResult c = c_function(s, kt, lambda);
    if (c.status == Status::Regular) return scale(series_core(s, kt, lambda, t), eta[w]);
  }
  return eisenstein_closed(s, kt, lambda, eta, w, t);
}

RadialEvaluator::RadialEvaluator(const Space& s, std::optional<KType> kt, Complex lambda,
                                 double t_lo)
    : s_(s), kt_(kt), lambda_(lambda) {
  if (kt) validate(s, *kt);
  const double dist = std::abs(lambda - std::round(lambda.real()));
  if (dist < 0.05) return;
  c_ = c_function(s, kt, lambda);
  if (c_.status != Status::Regular) return;
  const double t0 = std::max(t_lo, 0.25);
  int n_max = 32;
  for (; n_max <= 8192; n_max *= 2) {
    plus_ = std::make_shared<const hc::CoeffTable>(hc::gamma_coeffs(s, kt, lambda, n_max));
    minus_ = std::make_shared<const hc::CoeffTable>(hc::gamma_coeffs(s, kt, -lambda, n_max));
    if (hc::phi_from_table(*plus_, t0).converged && hc::phi_from_table(*minus_, t0).converged) {
      series_ = true;
      return;
    }
  }
}

EvalResult RadialEvaluator::operator()(double t) const {
  if (!series_ || t < 0.25) return closed_core(s_, kt_, lambda_, t);
  const auto a = hc::phi_from_table(*plus_, t);
  const auto b = hc::phi_from_table(*minus_, t);
  if (!a.converged || !b.converged) return closed_core(s_, kt_, lambda_, t);
  EvalResult out{a.result.value + c_.value * b.result.value, 0.0, Status::Regular};
  out.abs_err = a.result.abs_err + std::abs(c_.value) * b.result.abs_err +
                c_.abs_err * std::abs(b.result.value);
  return out;
}

RootPolynomial p_R_poly(const Space& s, std::optional<KType> kt, double R, KTypeReading reading) {
  RootPolynomial p;
  const int top = static_cast<int>(std::floor(R));
  if (!kt || kt->trivial()) {
    const double rho = s.rho_value();
    for (int j = 0; j <= top; ++j) {
      p.roots.emplace_back(-rho - 2.0 * j, 0.0);
      p.roots.emplace_back(rho - s.q - 2.0 * j, 0.0);
    }
    return p;
  }
  for (const auto& prog : pole_catalog(s, kt, reading).e_poles)
    for (Half h = prog.start; h.value() >= -R; h = Half{h.twice + 2 * prog.step})
      p.roots.emplace_back(h.value(), 0.0);
  return p;
}

EvalResult eisenstein_regularized(const Space& s, std::optional<KType> kt, double R, Complex lambda0,
                                  const EtaVector& eta, int w, double t,
                                  RegularizationMethod method, KTypeReading reading) {
  check_eta(s, eta);
  if (lambda0.real() < -R - pole_eps)
    throw Error(ErrorCode::OutOfDomain, "lambda0 lies outside -a*(R)");
  const Complex e = eta[w];
  if (specfun::nonpositive_integer_index(lambda0) >= 0) return {Complex(0.0, 0.0), 0.0, Status::Zero};

  const RootPolynomial pR = p_R_poly(s, kt, R, reading);
  const PoleCatalog cat = pole_catalog(s, kt, reading);
  const auto near = nearest_e_pole(cat, lambda0, kWarnRadius);
  const bool at_pole = near && std::abs(lambda0 - near->value()) < kLimitRadius;

  if (method == RegularizationMethod::Auto) {
    if (!at_pole) {
      EvalResult r = closed_core(s, kt, lambda0, t);
      if (!r.usable()) return r;
      r = scale(r, pR(lambda0) * e);
      if (near && r.status == Status::Regular) r.status = Status::NearPole;
      return r;
    }
    const LimitInfo li = limit_orders(s, kt, pR, Complex(near->value(), 0.0));
    method = (t >= hc::t_min_series && li.order_pc <= 1) ? RegularizationMethod::ComplexStep
                                                         : RegularizationMethod::ExactLimit;
  }

  const Complex target = at_pole ? Complex(near->value(), 0.0) : lambda0;
  EvalResult r;
  switch (method) {
    case RegularizationMethod::ComplexStep:
      if (std::abs(target.imag()) > 0.0)
        throw Error(ErrorCode::InvalidArgument, "complex-step limit needs a real lambda0");
      r = complex_step_limit(s, kt, pR, target.real(), t);
      break;
    case RegularizationMethod::Offset:
      r = offset_limit(s, kt, pR, target, t);
      break;
    default:
      r = exact_limit(s, kt, pR, target, t);
      break;
  }
  if (!r.usable()) return r;
  return scale(r, e);
}

const char* to_string(Boundedness b) {
  switch (b) {
    case Boundedness::Bounded: return "Bounded";
    case Boundedness::Unbounded: return "Unbounded";
    case Boundedness::IdenticallyZero: return "IdenticallyZero";
    case Boundedness::Undetermined: return "Undetermined";
  }
  return "unknown";
}

Boundedness classify_bounded(const Space& s, std::optional<KType> kt, double R, Complex lambda0,
                             KTypeReading reading) {
  if (lambda0.real() < -R - pole_eps)
    throw Error(ErrorCode::OutOfDomain, "lambda0 lies outside -a*(R)");
  if (specfun::nonpositive_integer_index(lambda0) >= 0) return Boundedness::IdenticallyZero;
  if (kt && !kt->trivial()) {
    Half h;
    if (near_half_integer(lambda0, pole_eps, &h)) {
      const auto A = undetermined_set(s, *kt, reading);
      if (std::find(A.begin(), A.end(), h) != A.end()) return Boundedness::Undetermined;
    }
  }
  return std::abs(lambda0.real()) <= s.rho_value() + pole_eps ? Boundedness::Bounded
                                                              : Boundedness::Unbounded;
}

double radial_residual(const Space& s, std::optional<KType> kt, Complex lambda,
                       const std::function<Complex(double)>& f, double t, double h) {
  if (!(t > 2.0 * h && h > 0.0)) throw Error(ErrorCode::InvalidArgument, "need t > 2h > 0");
  const Complex fm2 = f(t - 2 * h), fm1 = f(t - h), f0 = f(t), fp1 = f(t + h), fp2 = f(t + 2 * h);
  const Complex d1 = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
  const Complex d2 = (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
  const double drift = (s.p - 1) * std::tanh(t) + (s.q - 1) / std::tanh(t);
  Complex Lf = d2 + drift * d1;
  if (kt) {
    const double K = std::abs(kt->k), L = std::abs(kt->l);
    const double ch = std::cosh(t), sh = std::sinh(t);
    Lf += K * (K + s.p - 2) / (ch * ch) * f0 - L * (L + s.q - 2) / (sh * sh) * f0;
  }
  const double rho = s.rho_value();
  return std::abs(Lf - (lambda * lambda - rho * rho) * f0) / (1.0 + std::abs(f0));
}

double ode_residual(const Space& s, std::optional<KType> kt, Complex lambda, const EtaVector& eta,
                    int w, double t, double h) {
  auto f = [&](double x) { return eisenstein_closed(s, kt, lambda, eta, w, x).value; };
  return radial_residual(s, kt, lambda, f, t, h);
}

EvalResult jacobi_phi(double alpha, double beta, Complex mu, double t) {
  const Complex i(0.0, 1.0);
  const Complex a = 0.5 * (alpha + beta + 1.0 + i * mu);
  const Complex b = 0.5 * (alpha - beta + 1.0 + i * mu);
  const double th = std::tanh(t);
  const EvalResult F = specfun::hyp2f1_power_series(a, b, Complex(alpha + 1.0, 0.0), th * th);
  const Complex pre = std::exp(-2.0 * a * std::log(std::cosh(t)));
  return {pre * F.value, std::abs(pre) * F.abs_err + kEps * std::abs(pre * F.value), F.status};
}

}  // namespace hyperfns::eis
