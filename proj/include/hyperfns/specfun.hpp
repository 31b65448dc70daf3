#pragma once

#include <vector>

#include "hyperfns/types.hpp"

namespace hyperfns::specfun {

// Returns n >= 0 when z is within pole_eps of -n, else -1.
int nonpositive_integer_index(Complex z);

// Principal branch of log Gamma. Throws PoleAtNonpositiveInteger.
Complex log_gamma(Complex z);

// Gamma(z) from plain complex products, no logarithms. Analytic in z, so it
// keeps O(h) imaginary parts intact on complex-step paths. Only for moderate |z|.
Complex gamma_direct(Complex z);

struct GammaArg {
  Complex arg;
  double slope = 1.0;  // d(arg)/d(lambda), used for residue limits at poles
};

struct GammaRatioSpec {
  std::vector<GammaArg> numerators;
  std::vector<GammaArg> denominators;
  Complex log_factor{0.0, 0.0};  // multiplied in as exp(log_factor)
};

struct LogEval {
  Complex log_value{0.0, 0.0};
  double rel_err = 0.0;
  Status status = Status::Regular;  // Regular, Pole or Zero
  int order = 0;                    // numerator poles minus denominator poles
};

LogEval gamma_ratio_log(const GammaRatioSpec& spec);
EvalResult gamma_ratio(const GammaRatioSpec& spec);

enum class Hyp2f1Route { Auto, Series, Pfaff, Inversion };

// Gauss 2F1(a,b;c;z) for real z <= 0.
EvalResult hyp2f1_nonpos(Complex a, Complex b, Complex c, double z,
                         Hyp2f1Route route = Hyp2f1Route::Auto);

// Plain power series for real |x| < 1.
EvalResult hyp2f1_power_series(Complex a, Complex b, Complex c, double x);

}  // namespace hyperfns::specfun
