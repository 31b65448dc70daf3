#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "hyperfns/hc_series.hpp"
#include "hyperfns/polynomial.hpp"
#include "hyperfns/types.hpp"

namespace hyperfns::eis {

// Two readings of the K-type pole offsets. Consistent follows the Gamma
// factors of the closed form: poles at rho - q + |k| - |l| - 2n. Literal uses
// rho - q + |l| - |k| - 2n.
enum class KTypeReading { Consistent, Literal };

struct EtaVector {
  std::vector<Complex> components;  // [0] is orbit +1, [1] is orbit -1

  static EtaVector unit(const Space& s, int w = 1);
  static EtaVector of(const Space& s, Complex plus, Complex minus = Complex(0.0, 0.0));
  Complex operator[](int w) const { return components.at(w == 1 ? 0 : 1); }
  double norm() const;
};

void check_eta(const Space& s, const EtaVector& eta);

// {start, start + step, start + 2 step, ...}
struct Progression {
  Half start;
  int step = -2;  // in units of 1: one of -2, -1, +1, +2

  bool contains(Half x) const;
  bool contains(Complex z, double tol) const;
  std::vector<Half> first(int n) const;
};

struct PoleCatalog {
  std::vector<Progression> e_poles, c_poles, c_zeros, e_zeros;
};

bool in_any(const std::vector<Progression>& set, Complex z, double tol);
// Nearest E°-pole within tol of z, if any.
std::optional<Half> nearest_e_pole(const PoleCatalog& cat, Complex z, double tol);

PoleCatalog pole_catalog(const Space& s, std::optional<KType> kt,
                         KTypeReading reading = KTypeReading::Consistent);

// Integers where the K-type boundedness classification makes no claim (integer rho).
std::vector<Half> undetermined_set(const Space& s, const KType& kt,
                                   KTypeReading reading = KTypeReading::Consistent);

struct SpectralPoint {
  Complex lambda;
  bool is_E_pole = false;
  bool is_c_pole = false;
  bool is_nonpos_int = false;
  bool in_S1 = false;
  bool in_Sr = false;
  bool in_aR = false;
};

SpectralPoint make_spectral_point(const Space& s, std::optional<KType> kt, Complex lambda, double r,
                                  double R, KTypeReading reading = KTypeReading::Consistent);

EvalResult c_function(const Space& s, std::optional<KType> kt, Complex lambda);
// Plain-product c(lambda) for complex-step paths; moderate |lambda| only.
Complex c_function_direct(const Space& s, std::optional<KType> kt, Complex lambda);

// |W| x |W| matrix C°(-1, lambda); diagonal with both entries c(lambda).
std::vector<std::vector<EvalResult>> c_matrix(const Space& s, Complex lambda);
EtaVector apply_c_matrix(const Space& s, Complex lambda, const EtaVector& eta);

EvalResult eisenstein_closed(const Space& s, std::optional<KType> kt, Complex lambda,
                             const EtaVector& eta, int w, double t);
EvalResult eisenstein_series(const Space& s, std::optional<KType> kt, Complex lambda,
                             const EtaVector& eta, int w, double t);
// Picks the series route for large |lambda| away from t = 0, the closed form otherwise.
EvalResult eisenstein(const Space& s, std::optional<KType> kt, Complex lambda, const EtaVector& eta,
                      int w, double t);

// Radial part of E°(lambda, e_1)(t) at fixed lambda over many t. c(lambda) and
// both series tables are built once, sized for t >= t_lo. Uses the series for
// t >= 0.25 when lambda is at least 0.05 from every integer and c(lambda) is
// regular; the closed form otherwise.
class RadialEvaluator {
 public:
  RadialEvaluator(const Space& s, std::optional<KType> kt, Complex lambda, double t_lo = 0.25);
  EvalResult operator()(double t) const;
  bool uses_series() const { return series_; }

 private:
  Space s_;
  std::optional<KType> kt_;
  Complex lambda_;
  bool series_ = false;
  EvalResult c_;
  std::shared_ptr<const hc::CoeffTable> plus_, minus_;
};

RootPolynomial p_R_poly(const Space& s, std::optional<KType> kt, double R,
                        KTypeReading reading = KTypeReading::Consistent);

enum class RegularizationMethod { Auto, ComplexStep, ExactLimit, Offset };

EvalResult eisenstein_regularized(const Space& s, std::optional<KType> kt, double R, Complex lambda0,
                                  const EtaVector& eta, int w, double t,
                                  RegularizationMethod method = RegularizationMethod::Auto,
                                  KTypeReading reading = KTypeReading::Consistent);

enum class Boundedness { Bounded, Unbounded, IdenticallyZero, Undetermined };
const char* to_string(Boundedness b);

Boundedness classify_bounded(const Space& s, std::optional<KType> kt, double R, Complex lambda0,
                             KTypeReading reading = KTypeReading::Consistent);

// |L f - (lambda^2 - rho^2) f| / (1 + |f|) with 5-point differences, where L is
// the radial Laplacian or its (k,l) component.
double radial_residual(const Space& s, std::optional<KType> kt, Complex lambda,
                       const std::function<Complex(double)>& f, double t, double h);

double ode_residual(const Space& s, std::optional<KType> kt, Complex lambda, const EtaVector& eta,
                    int w, double t, double h);

// Jacobi function phi^{(alpha,beta)}_mu(t) through the tanh^2 form of its
// 2F1 kernel, independent of the -sinh^2 evaluation used elsewhere.
EvalResult jacobi_phi(double alpha, double beta, Complex mu, double t);

}  // namespace hyperfns::eis
