#include "hyperfns/quadrature.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>

namespace hyperfns::quad {

namespace {

GaussRule make_rule(int n) {
  GaussRule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.x[i] = -x;
    r.x[n - 1 - i] = x;
    r.w[i] = r.w[n - 1 - i] = w;
  }
  return r;
}

struct Panel {
  double a, b;
  Complex value;
  double err;
  double l1;
  bool operator<(const Panel& o) const { return err < o.err; }
};

Complex apply(const GaussRule& g, const std::function<Complex(double)>& f, double a, double b,
              double* l1 = nullptr) {
  const double h = 0.5 * (b - a), m = 0.5 * (a + b);
  Complex s = 0.0;
  double sa = 0.0;
  for (std::size_t i = 0; i < g.x.size(); ++i) {
    const Complex v = f(m + h * g.x[i]);
    s += g.w[i] * v;
    sa += g.w[i] * std::abs(v);
  }
  if (l1) *l1 = h * sa;
  return h * s;
}

}  // namespace

void validate(const QuadratureConfig& cfg) {
  if (cfg.panels < 1 || cfg.nodes_per_panel < 2 || cfg.max_panels < cfg.panels ||
      !(cfg.target_abs_err > 0.0) || cfg.target_rel_err < 0.0)
    throw Error(ErrorCode::InvalidArgument, "invalid quadrature configuration");
}

const GaussRule& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, GaussRule> rules;
  std::lock_guard lock(mu);
  auto it = rules.find(n);
  if (it == rules.end()) it = rules.emplace(n, make_rule(n)).first;
  return it->second;
}

QuadResult integrate(const std::function<Complex(double)>& f, double a, double b,
                     const QuadratureConfig& cfg) {
  validate(cfg);
  QuadResult out;
  if (b <= a) return out;
  const GaussRule& hi = gauss_legendre(cfg.nodes_per_panel);
  const GaussRule& lo = gauss_legendre(cfg.nodes_per_panel / 2);
  auto eval = [&](double x0, double x1) {
    double l1 = 0.0;
    const Complex v = apply(hi, f, x0, x1, &l1);
    return Panel{x0, x1, v, std::abs(v - apply(lo, f, x0, x1)), l1};
  };

  std::priority_queue<Panel> heap;
  const double w = (b - a) / cfg.panels;
  for (int i = 0; i < cfg.panels; ++i)
    heap.push(eval(a + i * w, i + 1 == cfg.panels ? b : a + (i + 1) * w));

  double l1 = 0.0;
  auto totals = [&] {
    Complex v = 0.0;
    double e = 0.0;
    l1 = 0.0;
    auto copy = heap;
    while (!copy.empty()) {
      v += copy.top().value;
      e += copy.top().err;
      l1 += copy.top().l1;
      copy.pop();
    }
    return std::pair{v, e};
  };

  // Oscillatory integrands cancel; nothing below the rounding floor of
  // int |f| is attainable, so that floor is always accepted.
  constexpr double kFloor = 64.0 * std::numeric_limits<double>::epsilon();
  auto target = [&](Complex v) {
    return std::max({cfg.target_abs_err, cfg.target_rel_err * std::abs(v), kFloor * l1});
  };
  auto [value, err] = totals();
  while (err > target(value)) {
    if (static_cast<int>(heap.size()) >= cfg.max_panels)
      throw Error(ErrorCode::QuadratureBudgetExceeded, "quadrature panel cap reached");
    const Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel l = eval(worst.a, mid), r = eval(mid, worst.b);
    value += l.value + r.value - worst.value;
    err += l.err + r.err - worst.err;
    l1 += l.l1 + r.l1 - worst.l1;
    heap.push(l);
    heap.push(r);
    // Re-sum occasionally so the running totals do not drift.
    if (heap.size() % 64 == 0) std::tie(value, err) = totals();
  }
  std::tie(value, err) = totals();
  out.value = value;
  out.abs_err = err;
  out.panels = static_cast<int>(heap.size());
  return out;
}

Complex integrate_fixed(const std::function<Complex(double)>& f, double a, double b, int panels,
                        int n) {
  const GaussRule& g = gauss_legendre(n);
  const double w = (b - a) / panels;
  Complex s = 0.0;
  for (int i = 0; i < panels; ++i) s += apply(g, f, a + i * w, a + (i + 1) * w);
  return s;
}

}  // namespace hyperfns::quad
