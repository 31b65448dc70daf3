#pragma once

#include <vector>

#include "hyperfns/types.hpp"

namespace hyperfns {

// Polynomial kept in factored form: leading * prod (x - root).
struct RootPolynomial {
  std::vector<Complex> roots;
  Complex leading{1.0, 0.0};

  Complex operator()(Complex x) const {
    Complex v = leading;
    for (const Complex& r : roots) v *= (x - r);
    return v;
  }
  int degree() const { return static_cast<int>(roots.size()); }
  // Ascending coefficients c_0 .. c_deg.
  std::vector<Complex> coefficients() const {
    std::vector<Complex> c{leading};
    for (const Complex& r : roots) {
      std::vector<Complex> next(c.size() + 1, Complex(0.0, 0.0));
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i + 1] += c[i];
        next[i] -= r * c[i];
      }
      c = std::move(next);
    }
    return c;
  }
};

}  // namespace hyperfns
