#pragma once

#include <functional>
#include <vector>

#include "hyperfns/types.hpp"

namespace hyperfns::quad {

struct QuadratureConfig {
  int panels = 4;
  int nodes_per_panel = 32;
  double target_abs_err = 1e-12;
  // Also stop once the estimate is below target_rel_err * |I|; integrals of
  // E° grow like e^{|Re lambda| t}, so a pure absolute target is meaningless
  // far from the unitary axis.
  double target_rel_err = 1e-13;
  int max_panels = 4096;
};

void validate(const QuadratureConfig& cfg);

// Nodes and weights on [-1, 1]; cached per n.
struct GaussRule {
  std::vector<double> x, w;
};
const GaussRule& gauss_legendre(int n);

struct QuadResult {
  Complex value;
  double abs_err = 0.0;
  int panels = 0;
};

// Composite rule on [a, b]. Each panel is compared against the half-order
// rule and the worst panel is bisected until the summed estimate meets the
// target; throws QuadratureBudgetExceeded at max_panels.
QuadResult integrate(const std::function<Complex(double)>& f, double a, double b,
                     const QuadratureConfig& cfg = {});

// Non-adaptive composite rule with `panels` equal panels of n nodes.
Complex integrate_fixed(const std::function<Complex(double)>& f, double a, double b, int panels,
                        int n);

}  // namespace hyperfns::quad
