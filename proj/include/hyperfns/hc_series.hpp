#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "hyperfns/polynomial.hpp"
#include "hyperfns/types.hpp"

namespace hyperfns {

struct Space {
  int p = 1;
  int q = 1;

  Space() = default;
  Space(int p_, int q_);

  Half rho() const { return Half{p + q - 2}; }
  double rho_value() const { return 0.5 * (p + q - 2); }
  // Orbit labels: {+1} for q > 1, {+1, -1} for q = 1.
  std::vector<int> orbits() const { return q > 1 ? std::vector<int>{1} : std::vector<int>{1, -1}; }
};

struct KType {
  int k = 0;
  int l = 0;
  bool trivial() const { return k == 0 && l == 0; }
};

// Checks the representation-theoretic constraints on (k, l). Library
// routines accept any integers; callers that want the strict rules use this.
void validate(const Space& s, const KType& kt);

namespace hc {

// phi_series refuses t below this; callers fall back to the closed form.
inline constexpr double t_min_series = 0.05;

enum class CoeffKind { GammaTilde, Gamma };

// Coefficients of e^{-mt}, m = 0..n_max. Odd m vanish identically.
struct CoeffTable {
  Space space;
  std::optional<KType> ktype;
  Complex lambda;
  int n_max = 0;
  CoeffKind kind = CoeffKind::Gamma;
  std::vector<Complex> values;
  std::vector<bool> regular;
};

std::vector<double> d_coeffs(const Space& s, int n_max);
// Constants c_m, s_m of the K-type potential; sum c_m e^{-mt} = -sech^2 t.
std::pair<std::vector<double>, std::vector<double>> cs_coeffs(int n_max);
std::vector<double> b_coeffs(const Space& s, int n_max);

CoeffTable gamma_tilde(const Space& s, std::optional<KType> kt, Complex lambda, int n_max);
CoeffTable gamma_coeffs(const Space& s, std::optional<KType> kt, Complex lambda, int n_max);

RootPolynomial q_R_poly(double R);

// Exponent chi in |Gamma_m| <= M (1+m)^chi, fitted over m <= 500 (see tests).
double growth_exponent(const Space& s, std::optional<KType> kt);

EvalResult phi_series(const Space& s, std::optional<KType> kt, Complex lambda, double t,
                      double tol = 1e-16);

// Sums e^{(lambda-rho)t} sum_m Gamma_m e^{-mt} over a precomputed Gamma table.
// converged is false when the tail bound at t is still above tol.
struct TableSum {
  EvalResult result;
  bool converged = false;
};
TableSum phi_from_table(const CoeffTable& table, double t, double tol = 1e-16);

// (lambda - lambda0) * Phi_lambda(t) for real lambda0, analytic through a
// series pole at lambda0. Built for complex-step differentiation.
Complex phi_series_scaled(const Space& s, std::optional<KType> kt, Complex lambda, double lambda0,
                          double t);

// Memo for gamma_coeffs. Readers share a lock; inserts are exclusive.
class CoefficientCache {
 public:
  explicit CoefficientCache(std::size_t capacity = 4096);
  ~CoefficientCache();
  std::shared_ptr<const CoeffTable> get(const Space& s, std::optional<KType> kt, Complex lambda,
                                        int n_max);
  std::size_t size() const;
  void clear();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

CoefficientCache& global_cache();

}  // namespace hc
}  // namespace hyperfns
