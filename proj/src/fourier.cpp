#include "hyperfns/fourier.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>

#include "hyperfns/specfun.hpp"

namespace hyperfns::fourier {

namespace {

using eis::EtaVector;

// Radial part of E°(mu)(t) with eta = unit, or of p_R(mu) E°(mu)(t) when R is set.
class Kernel {
 public:
  Kernel(const Space& s, std::optional<KType> kt, Complex mu, double t_lo, const FourierOptions& opt)
      : s_(s), kt_(kt), mu_(mu), unit_(EtaVector::unit(s)), opt_(opt), radial_(s, kt, mu, t_lo) {
    if (opt.regularize_R) {
      const auto cat = eis::pole_catalog(s, kt, opt.reading);
      regularized_path_ = eis::nearest_e_pole(cat, mu, 1e-3).has_value() ||
                          specfun::nonpositive_integer_index(mu) >= 0;
      scale_ = eis::p_R_poly(s, kt, *opt.regularize_R, opt.reading)(mu);
    }
  }

  EvalResult operator()(double t) const {
    if (regularized_path_)
      return eis::eisenstein_regularized(s_, kt_, *opt_.regularize_R, mu_, unit_, 1, t,
                                         eis::RegularizationMethod::Auto, opt_.reading);
    EvalResult r = radial_(t);
    r.value *= scale_;
    r.abs_err *= std::abs(scale_);
    return r;
  }

 private:
  Space s_;
  std::optional<KType> kt_;
  Complex mu_;
  EtaVector unit_;
  FourierOptions opt_;
  eis::RadialEvaluator radial_;
  bool regularized_path_ = false;
  Complex scale_ = 1.0;
};

bool bad_status(Status st) { return st == Status::Pole || st == Status::Overflow; }

struct LineResult {
  double total = 0.0, last = 0.0, prev = 0.0;
};

// Integrates g(xi)^p over [-X, X] (or sup for p = inf) on panels aligned with
// the dyadic points X/4 and X/2, using the symmetry g(-xi) = g(xi) if asked.
LineResult line_integral(const std::function<double(double)>& g, double p, bool symmetric,
                         const HarnessOptions& opt) {
  const double X = opt.xi_max;
  if (!(X > 0.0)) throw Error(ErrorCode::InvalidArgument, "xi_max must be positive");
  const quad::GaussRule& rule = quad::gauss_legendre(opt.nodes);
  struct Node {
    double xi, w;
    int decade;  // 0 inner, 1 = [X/4, X/2], 2 = [X/2, X]
  };
  std::vector<Node> nodes;
  const double cuts[4] = {0.0, X / 4, X / 2, X};
  for (int seg = 0; seg < 3; ++seg) {
    const double lo = cuts[seg], hi = cuts[seg + 1];
    const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / opt.panel_width)));
    const double h = (hi - lo) / panels;
    for (int k = 0; k < panels; ++k)
      for (std::size_t i = 0; i < rule.x.size(); ++i) {
        const double xi = lo + h * (k + 0.5 + 0.5 * rule.x[i]);
        const double w = 0.5 * h * rule.w[i];
        nodes.push_back({xi, w, seg});
        if (!symmetric) nodes.push_back({-xi, w, seg});
      }
  }
  const auto vals = parallel_map<double>(nodes.size(), opt.jobs, [&](std::size_t i) { return g(nodes[i].xi); });
  LineResult out;
  const bool sup = std::isinf(p);
  const double mult = symmetric ? 2.0 : 1.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double v = sup ? vals[i] : mult * nodes[i].w * std::pow(vals[i], p);
    double& slot = nodes[i].decade == 2 ? out.last : nodes[i].decade == 1 ? out.prev : out.total;
    slot = sup ? std::max(slot, v) : slot + v;
  }
  out.total = sup ? std::max({out.total, out.prev, out.last}) : out.total + out.prev + out.last;
  return out;
}

double tail_from(const LineResult& L, double p) {
  if (std::isinf(p)) return L.last;
  if (L.prev > 0.0 && L.last < L.prev) {
    const double ratio = L.last / L.prev;
    return L.last * ratio / (1.0 - ratio);
  }
  return L.last;
}

// Normal equations for a 3-parameter linear model, solved by Cramer's rule.
std::array<double, 3> least_squares3(const std::vector<std::array<double, 3>>& X,
                                     const std::vector<double>& Y) {
  double A[3][3] = {}, r[3] = {};
  for (std::size_t k = 0; k < X.size(); ++k)
    for (int i = 0; i < 3; ++i) {
      r[i] += X[k][i] * Y[k];
      for (int j = 0; j < 3; ++j) A[i][j] += X[k][i] * X[k][j];
    }
  auto det = [](const double M[3][3]) {
    return M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
           M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
           M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
  };
  const double D = det(A);
  std::array<double, 3> out{};
  for (int c = 0; c < 3; ++c) {
    double B[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) B[i][j] = j == c ? r[i] : A[i][j];
    out[c] = det(B) / D;
  }
  return out;
}

bool real_eta(const EtaVector& eta) {
  return std::all_of(eta.components.begin(), eta.components.end(),
                     [](Complex c) { return c.imag() == 0.0; });
}

}  // namespace

double jacobian(const Space& s, double t) {
  if (t < 0.0) throw Error(ErrorCode::InvalidArgument, "jacobian needs t >= 0");
  return std::pow(std::cosh(t), s.p - 1) * std::pow(std::sinh(t), s.q - 1);
}

Profile Profile::smooth_bump(double a, double b, double scale) {
  Profile p;
  p.kind = ProfileKind::SmoothBump;
  p.a = a;
  p.b = b;
  p.scale = scale;
  p.validate();
  return p;
}

Profile Profile::polynomial_bump(double a, double b, double power, double scale) {
  Profile p;
  p.kind = ProfileKind::PolynomialBump;
  p.a = a;
  p.b = b;
  p.power = power;
  p.scale = scale;
  p.validate();
  return p;
}

Profile Profile::sampled(double a, double b, std::vector<double> samples) {
  Profile p;
  p.kind = ProfileKind::CustomSampled;
  p.a = a;
  p.b = b;
  p.samples = std::move(samples);
  p.validate();
  return p;
}

void Profile::validate() const {
  if (kind == ProfileKind::Zero) return;
  if (!(a > 0.0 && b > a)) throw Error(ErrorCode::InvalidArgument, "profile support needs 0 < a < b");
  if (kind == ProfileKind::PolynomialBump && !(power > 0.0))
    throw Error(ErrorCode::InvalidArgument, "polynomial bump power must be positive");
  if (kind == ProfileKind::CustomSampled && samples.size() < 2)
    throw Error(ErrorCode::InvalidArgument, "sampled profile needs at least two samples");
}

double Profile::operator()(double t) const {
  if (kind == ProfileKind::Zero || t <= a || t >= b) return 0.0;
  switch (kind) {
    case ProfileKind::SmoothBump: return scale * std::exp(-1.0 / ((t - a) * (b - t)));
    case ProfileKind::PolynomialBump: return scale * std::pow((t - a) * (b - t), power);
    case ProfileKind::CustomSampled: {
      const double u = (t - a) / (b - a) * static_cast<double>(samples.size() - 1);
      const std::size_t i = std::min(static_cast<std::size_t>(u), samples.size() - 2);
      const double f = u - static_cast<double>(i);
      return (1.0 - f) * samples[i] + f * samples[i + 1];
    }
    default: return 0.0;
  }
}

bool Profile::is_zero() const {
  if (kind == ProfileKind::Zero || scale == 0.0) return true;
  if (kind == ProfileKind::CustomSampled)
    return std::all_of(samples.begin(), samples.end(), [](double v) { return v == 0.0; });
  return false;
}

RadialProfile RadialProfile::uniform(const Space& s, const Profile& p) {
  return RadialProfile{std::vector<Profile>(s.orbits().size(), p)};
}

bool RadialProfile::is_zero() const {
  return std::all_of(per_orbit.begin(), per_orbit.end(), [](const Profile& p) { return p.is_zero(); });
}

double RadialProfile::support_end() const {
  double b = 0.0;
  for (const auto& p : per_orbit)
    if (!p.is_zero()) b = std::max(b, p.b);
  return b;
}

void RadialProfile::check(const Space& s) const {
  if (per_orbit.size() != s.orbits().size())
    throw Error(ErrorCode::InvalidArgument, "profile needs one entry per orbit");
  for (const auto& p : per_orbit) p.validate();
}

EvalResult fourier_transform(const Space& s, std::optional<KType> kt, const RadialProfile& f,
                             Complex lambda, const EtaVector& eta, const QuadratureConfig& cfg,
                             const FourierOptions& opt) {
  f.check(s);
  eis::check_eta(s, eta);
  if (kt) validate(s, *kt);
  quad::validate(cfg);
  EvalResult out;
  if (f.is_zero()) return out;

  const Complex mu = -lambda;
  double t_lo = std::numeric_limits<double>::infinity();
  for (const auto& p : f.per_orbit)
    if (!p.is_zero()) t_lo = std::min(t_lo, p.a);
  const Kernel kernel(s, kt, mu, t_lo, opt);
  bool accuracy_loss = false;

  for (int w : s.orbits()) {
    const Profile& prof = f.at(w);
    if (prof.is_zero() || eta[w] == Complex(0.0, 0.0)) continue;
    if (!opt.regularize_R) {
      const EvalResult probe = eis::eisenstein_closed(s, kt, mu, EtaVector::unit(s), 1, 0.5 * (prof.a + prof.b));
      if (probe.status == Status::Pole)
        throw Error(ErrorCode::IntegrandPole, "E°(-lambda) has a pole; request the regularized integrand");
    }
    double node_err = 0.0;
    auto integrand = [&](double t) -> Complex {
      const double fj = prof(t) * jacobian(s, t);
      if (fj == 0.0) return 0.0;
      const EvalResult e = kernel(t);
      if (bad_status(e.status))
        throw Error(ErrorCode::IntegrandPole, "integrand is singular at a quadrature node");
      if (e.status == Status::AccuracyLoss) accuracy_loss = true;
      node_err = std::max(node_err, e.abs_err * std::abs(fj));
      return fj * e.value;
    };
    QuadratureConfig local = cfg;
    if (prof.kind == ProfileKind::CustomSampled)
      local.panels = std::clamp(static_cast<int>(prof.samples.size()) - 1, cfg.panels, cfg.max_panels / 2);
    const quad::QuadResult q = quad::integrate(integrand, prof.a, prof.b, local);
    out.value += eta[w] * q.value;
    out.abs_err += std::abs(eta[w]) * (q.abs_err + node_err * (prof.b - prof.a));
  }
  out.status = accuracy_loss ? Status::AccuracyLoss : Status::Regular;
  return out;
}

double lp_norm(const Space& s, const RadialProfile& f, double r, const QuadratureConfig& cfg) {
  f.check(s);
  if (!(r >= 1.0)) throw Error(ErrorCode::InvalidArgument, "lp_norm needs r >= 1");
  if (std::isinf(r)) {
    double m = 0.0;
    for (const auto& p : f.per_orbit) {
      if (p.is_zero()) continue;
      // grid scan, then golden-section refinement around the best sample
      constexpr int n = 1024;
      const double h = (p.b - p.a) / n;
      auto g = [&](double t) { return std::abs(p(std::clamp(t, p.a, p.b))); };
      int best = 0;
      for (int i = 0; i <= n; ++i)
        if (g(p.a + i * h) > g(p.a + best * h)) best = i;
      double lo = p.a + (best - 1) * h, hi = p.a + (best + 1) * h;
      const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
      for (int it = 0; it < 60; ++it) {
        const double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
        if (g(x1) < g(x2)) lo = x1; else hi = x2;
      }
      m = std::max({m, g(p.a + best * h), g(0.5 * (lo + hi))});
    }
    return m;
  }
  double acc = 0.0;
  for (const auto& p : f.per_orbit) {
    if (p.is_zero()) continue;
    QuadratureConfig local = cfg;
    if (p.kind == ProfileKind::CustomSampled)
      local.panels = std::clamp(static_cast<int>(p.samples.size()) - 1, cfg.panels, cfg.max_panels / 2);
    acc += quad::integrate([&](double t) { return Complex(std::pow(std::abs(p(t)), r) * jacobian(s, t), 0.0); },
                           p.a, p.b, local)
               .value.real();
  }
  return std::pow(acc, 1.0 / r);
}

HarnessReport plancherel_check(const Space& s, const RadialProfile& f, const EtaVector& eta,
                               const HarnessOptions& opt) {
  f.check(s);
  eis::check_eta(s, eta);
  HarnessReport rep;
  rep.xi_max = opt.xi_max;
  if (f.is_zero()) return rep;
  auto g = [&](double xi) {
    return std::abs(fourier_transform(s, std::nullopt, f, Complex(0.0, xi), eta, opt.quad).value);
  };
  const LineResult L = line_integral(g, 2.0, real_eta(eta), opt);
  rep.lhs = std::sqrt(L.total);
  rep.rhs = lp_norm(s, f, 2.0, opt.quad) * eta.norm();
  rep.ratio = rep.rhs > 0.0 ? rep.lhs / rep.rhs : 0.0;
  rep.tail_estimate = tail_from(L, 2.0);
  return rep;
}

HarnessReport hy_ratio(const Space& s, std::optional<KType> kt, const RadialProfile& f,
                       const EtaVector& eta, double r, double lambda0, double R,
                       const HarnessOptions& opt) {
  f.check(s);
  eis::check_eta(s, eta);
  if (!(r >= 1.0 && r <= 2.0)) throw Error(ErrorCode::DomainViolation, "hy_ratio needs 1 <= r <= 2");
  const double strip = (2.0 / r - 1.0) * s.rho_value();
  if (std::abs(lambda0) > strip + pole_eps || lambda0 > R + pole_eps)
    throw Error(ErrorCode::DomainViolation, "lambda0 must lie in S_r and a*(R)");
  HarnessReport rep;
  rep.xi_max = opt.xi_max;
  if (f.is_zero()) return rep;

  FourierOptions fo;
  fo.regularize_R = R;
  const int d = eis::p_R_poly(s, kt, R).degree();
  const double rp = r == 1.0 ? std::numeric_limits<double>::infinity() : r / (r - 1.0);
  auto g = [&](double xi) {
    const Complex lam(lambda0, xi);
    const Complex den = std::pow(1.0 + lam, d);
    if (std::abs(den) < 1e-300) throw Error(ErrorCode::DomainViolation, "(1 + lambda)^d vanishes on the line");
    return std::abs(fourier_transform(s, kt, f, lam, eta, opt.quad, fo).value / den);
  };
  const LineResult L = line_integral(g, rp, real_eta(eta), opt);
  rep.lhs = std::isinf(rp) ? L.total : std::pow(L.total, 1.0 / rp);
  rep.rhs = lp_norm(s, f, r, opt.quad) * eta.norm();
  rep.ratio = rep.rhs > 0.0 ? rep.lhs / rep.rhs : 0.0;
  rep.tail_estimate = tail_from(L, rp);
  return rep;
}

std::vector<double> rl_decay_profile(const Space& s, std::optional<KType> kt,
                                     const RadialProfile& f, const EtaVector& eta, double r,
                                     const LineSpec& line, const HarnessOptions& opt) {
  f.check(s);
  eis::check_eta(s, eta);
  if (!(r >= 1.0 && r < 2.0)) throw Error(ErrorCode::DomainViolation, "rl_decay_profile needs 1 <= r < 2");
  if (!(std::abs(line.re_part) < (2.0 / r - 1.0) * s.rho_value()))
    throw Error(ErrorCode::DomainViolation, "lambda0 must lie in the open strip S_r");
  if (f.is_zero()) return std::vector<double>(line.heights.size(), 0.0);
  return parallel_map<double>(line.heights.size(), opt.jobs, [&](std::size_t i) {
    return std::abs(fourier_transform(s, kt, f, Complex(line.re_part, line.heights[i]), eta, opt.quad).value);
  });
}

PaleyWienerFit paley_wiener_check(const Space& s, std::optional<KType> kt, const RadialProfile& f,
                                  const EtaVector& eta, int n, double R,
                                  const std::vector<Complex>& grid, const HarnessOptions& opt) {
  f.check(s);
  eis::check_eta(s, eta);
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be nonnegative");
  for (const Complex& z : grid)
    if (z.real() > R + pole_eps) throw Error(ErrorCode::DomainViolation, "grid point outside a*(R)");
  PaleyWienerFit fit;
  fit.support_end = f.support_end();
  if (f.is_zero() || grid.empty()) return fit;

  FourierOptions fo;
  fo.regularize_R = R;
  const double en = eta.norm();
  const auto vals = parallel_map<double>(grid.size(), opt.jobs, [&](std::size_t i) {
    return std::abs(fourier_transform(s, kt, f, grid[i], eta, opt.quad, fo).value);
  });

  // M uses G itself. The rate is a property of F f: log|p_R(-lambda)| is
  // subtracted exactly and only columns with Re lambda <= -1 enter, where
  // p_R(-lambda) stays away from its roots for every catalog.
  const RootPolynomial pR = eis::p_R_poly(s, kt, R, fo.reading);
  std::map<double, double> envelope;  // -Re lambda -> max log(|F f| / |eta|)
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = std::abs(grid[i].real());
    const double g = vals[i] / en;
    fit.M = std::max(fit.M, g * std::pow(1.0 + std::abs(grid[i]), n) * std::exp(-fit.support_end * x));
    const double pr = std::abs(pR(-grid[i]));
    if (grid[i].real() <= -1.0 && g > 0.0 && pr > 0.0) {
      const double y = std::log(g) - std::log(pr);
      auto [it, fresh] = envelope.emplace(-grid[i].real(), y);
      if (!fresh) it->second = std::max(it->second, y);
    }
  }
  // Envelope model y = c + rate x + kappa log(1 + x); the free power absorbs
  // the polynomial growth of the Gamma prefactor.
  std::vector<std::array<double, 3>> X;
  std::vector<double> Y;
  for (const auto& [x, y] : envelope) {
    X.push_back({1.0, x, std::log1p(x)});
    Y.push_back(y);
  }
  if (X.size() >= 3) {
    fit.rate = least_squares3(X, Y)[1];
  } else if (X.size() == 2) {
    fit.rate = (Y[1] - Y[0]) / (X[1][1] - X[0][1]);
  }
  fit.rate_ok = fit.rate <= fit.support_end + 0.05;
  return fit;
}

}  // namespace hyperfns::fourier
