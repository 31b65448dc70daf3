#pragma once

#include <optional>
#include <vector>

#include "hyperfns/eisenstein.hpp"
#include "hyperfns/quadrature.hpp"

namespace hyperfns::fourier {

using quad::QuadratureConfig;

// cosh^{p-1} t sinh^{q-1} t
double jacobian(const Space& s, double t);

enum class ProfileKind { Zero, SmoothBump, PolynomialBump, CustomSampled };

// One radial profile on a single orbit, supported in [a, b] with 0 < a < b.
//   SmoothBump      scale * exp(-1 / ((t - a)(b - t)))
//   PolynomialBump  scale * ((t - a)(b - t))^power, C^0 at the ends for power = 1
//   CustomSampled   linear interpolation of `samples` on a uniform grid over [a, b]
struct Profile {
  ProfileKind kind = ProfileKind::Zero;
  double a = 1.0, b = 2.0;
  double scale = 1.0;
  double power = 1.0;
  std::vector<double> samples;

  static Profile zero() { return {}; }
  static Profile smooth_bump(double a, double b, double scale = 1.0);
  static Profile polynomial_bump(double a, double b, double power = 1.0, double scale = 1.0);
  static Profile sampled(double a, double b, std::vector<double> samples);

  double operator()(double t) const;
  bool is_zero() const;
  void validate() const;
};

struct RadialProfile {
  std::vector<Profile> per_orbit;  // same indexing as EtaVector

  static RadialProfile uniform(const Space& s, const Profile& p);
  const Profile& at(int w) const { return per_orbit.at(w == 1 ? 0 : 1); }
  bool is_zero() const;
  double support_end() const;
  void check(const Space& s) const;
};

struct FourierOptions {
  // When set, returns p_R(-lambda) F f(lambda)(eta) with the integrand taken
  // through the regularized Eisenstein integral, so E°(-lambda) poles are allowed.
  std::optional<double> regularize_R;
  eis::KTypeReading reading = eis::KTypeReading::Consistent;
};

EvalResult fourier_transform(const Space& s, std::optional<KType> kt, const RadialProfile& f,
                             Complex lambda, const eis::EtaVector& eta,
                             const QuadratureConfig& quad = {}, const FourierOptions& opt = {});

// (sum_w int |f_w|^r J dt)^{1/r}; r = infinity gives the sup norm.
double lp_norm(const Space& s, const RadialProfile& f, double r, const QuadratureConfig& quad = {});

struct LineSpec {
  double re_part = 0.0;
  std::vector<double> heights;
};

struct HarnessOptions {
  double xi_max = 200.0;
  double panel_width = 2.0;  // xi panels of the line rule
  int nodes = 16;
  int jobs = 1;
  QuadratureConfig quad;
};

// lhs, rhs and ratio = lhs / rhs. tail_estimate is the geometric extrapolation
// of the last dyadic decade [xi_max/2, xi_max] of the integral (before the
// outer root), or the sup over that decade for r' = infinity.
struct HarnessReport {
  double lhs = 0.0, rhs = 0.0, ratio = 0.0, xi_max = 0.0, tail_estimate = 0.0;
};

HarnessReport plancherel_check(const Space& s, const RadialProfile& f, const eis::EtaVector& eta,
                               const HarnessOptions& opt = {});

HarnessReport hy_ratio(const Space& s, std::optional<KType> kt, const RadialProfile& f,
                       const eis::EtaVector& eta, double r, double lambda0, double R,
                       const HarnessOptions& opt = {});

std::vector<double> rl_decay_profile(const Space& s, std::optional<KType> kt,
                                     const RadialProfile& f, const eis::EtaVector& eta, double r,
                                     const LineSpec& line, const HarnessOptions& opt = {});

struct PaleyWienerFit {
  double M = 0.0;
  // x-coefficient of c + rate x + kappa log(1+x) fitted to max log|F f| per
  // column x = -Re lambda >= 1
  double rate = 0.0;
  double support_end = 0.0;
  bool rate_ok = true;     // rate <= support_end + 0.05
};

PaleyWienerFit paley_wiener_check(const Space& s, std::optional<KType> kt, const RadialProfile& f,
                                  const eis::EtaVector& eta, int n, double R,
                                  const std::vector<Complex>& grid, const HarnessOptions& opt = {});

// Evaluates fn(i) for i in [0, n) on up to `jobs` threads; results keep index order.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, int jobs, Fn fn);

}  // namespace hyperfns::fourier

#include "hyperfns/detail/parallel.hpp"
