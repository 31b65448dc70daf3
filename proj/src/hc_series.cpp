#include "hyperfns/hc_series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace hyperfns {

Space::Space(int p_, int q_) : p(p_), q(q_) {
  if (p < 1 || q < 1) throw Error(ErrorCode::InvalidArgument, "space needs p >= 1 and q >= 1");
}

void validate(const Space& s, const KType& kt) {
  auto bad = [](const char* msg) { throw Error(ErrorCode::InvalidArgument, msg); };
  if (s.p == 1 && kt.k != 0) bad("p = 1 forces k = 0");
  if (s.p > 2 && kt.k < 0) bad("p > 2 needs k >= 0");
  if (s.q == 1 && kt.l != 0) bad("q = 1 forces l = 0");
  if (s.q > 2 && kt.l < 0) bad("q > 2 needs l >= 0");
}

namespace hc {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Potential coefficients U_n of x^n, x = e^{-2t}, in
//   m(m - 2 lambda) Gt_m = sum_{n=1}^{m/2} U_n Gt_{m-2n}.
// d_n is already the x^n coefficient. c_{2n} from cs_coeffs sums to
// -sech^2 and s_{2n} to csch^2, and the operator carries
// +k(k+p-2) sech^2 - l(l+q-2) csch^2, so both enter with a plus sign here.
std::vector<double> potential(const Space& s, const KType& kt, int jmax) {
  const std::vector<double> d = d_coeffs(s, jmax);
  const auto [c, sv] = cs_coeffs(2 * jmax);
  const double K = static_cast<double>(kt.k) * (kt.k + s.p - 2);
  const double L = static_cast<double>(kt.l) * (kt.l + s.q - 2);
  std::vector<double> u(jmax + 1, 0.0);
  for (int n = 1; n <= jmax; ++n) u[n] = d[n] + K * c[2 * n] + L * sv[2 * n];
  return u;
}

// Gt at x-powers j = 0..jmax. With lambda0 set (a positive integer), returns
// (lambda - lambda0) Gt_j with the vanishing divisor cancelled exactly.
std::vector<Complex> tilde_even(const Space& s, const KType& kt, Complex lambda, int jmax,
                                std::vector<bool>* regular, const double* lambda0) {
  const std::vector<double> u = potential(s, kt, jmax);
  std::vector<Complex> g(jmax + 1, Complex(0.0, 0.0));
  g[0] = 1.0;
  if (regular) regular->assign(jmax + 1, true);
  int j0 = -1;
  if (lambda0 && *lambda0 >= 1.0 && std::abs(*lambda0 - std::round(*lambda0)) < pole_eps)
    j0 = static_cast<int>(std::round(*lambda0));
  const bool scaled = lambda0 != nullptr;
  for (int j = 1; j <= jmax; ++j) {
    const double m = 2.0 * j;
    Complex acc = 0.0;
    for (int n = 1; n <= j; ++n) acc += u[n] * g[j - n];
    if (j == j0) {
      // Everything below j0 is still unscaled here.
      g[j] = -acc / (2.0 * m);
      for (int i = 0; i < j; ++i) g[i] *= (lambda - *lambda0);
      continue;
    }
    const Complex div = m * (m - 2.0 * lambda);
    if (std::abs(div) < pole_eps * m) {
      if (regular) (*regular)[j] = false;
      g[j] = 0.0;
      continue;
    }
    g[j] = acc / div;
  }
  if (scaled && (j0 < 0 || j0 > jmax))
    for (auto& v : g) v *= (lambda - *lambda0);
  return g;
}

std::vector<Complex> convolve_b(const Space& s, const std::vector<Complex>& gt) {
  const int jmax = static_cast<int>(gt.size()) - 1;
  const std::vector<double> b = b_coeffs(s, 2 * jmax);
  std::vector<Complex> out(jmax + 1, Complex(0.0, 0.0));
  for (int j = 0; j <= jmax; ++j)
    for (int i = 0; i <= j; ++i) out[j] += b[2 * i] * gt[j - i];
  return out;
}

CoeffTable to_table(const Space& s, std::optional<KType> kt, Complex lambda, int n_max,
                    CoeffKind kind, const std::vector<Complex>& even,
                    const std::vector<bool>& even_regular) {
  CoeffTable t{s, kt, lambda, n_max, kind, {}, {}};
  t.values.assign(n_max + 1, Complex(0.0, 0.0));
  t.regular.assign(n_max + 1, true);
  for (int m = 0; m <= n_max; m += 2) {
    t.values[m] = even[m / 2];
    // Gamma_m inherits every pole of Gt_{m'} with m' <= m.
    bool ok = true;
    for (int j = 0; j <= m / 2; ++j) ok = ok && even_regular[j];
    t.regular[m] = kind == CoeffKind::Gamma ? ok : even_regular[m / 2];
  }
  return t;
}

struct SeriesOutcome {
  Complex sum;
  double tail = 0.0;
  double rounding = 0.0;
  bool converged = false;
};

SeriesOutcome sum_series(const std::vector<Complex>& g, double t, double chi, double tol) {
  SeriesOutcome out;
  double env = 0.0;
  double abs_sum = 0.0;
  const double denom = 1.0 - std::exp(-t);
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double m = 2.0 * static_cast<double>(j);
    const double w = std::exp(-m * t);
    out.sum += g[j] * w;
    abs_sum += std::abs(g[j]) * w;
    env = std::max(env, std::abs(g[j]) / std::pow(1.0 + m, chi));
    const double mn = m + 2.0;
    out.tail = env * std::pow(1.0 + mn, chi) * std::exp(-mn * t) / denom;
    if (j > 0 && out.tail < tol * std::max(std::abs(out.sum), 1e-300)) {
      out.converged = true;
      break;
    }
  }
  out.rounding = 4.0 * kEps * abs_sum;
  return out;
}

int initial_terms(double t) {
  return std::clamp(static_cast<int>(20.0 / t), 16, 4000);
}

}  // namespace

std::vector<double> d_coeffs(const Space& s, int n_max) {
  std::vector<double> d(std::max(n_max, 0) + 1, 0.0);
  const double rho = s.rho_value();
  d[0] = rho * rho;
  const double a = static_cast<double>(s.q - 1) * (s.q - 3);
  const double b = static_cast<double>(s.p - 1) * (s.p - 3);
  for (int n = 1; n <= n_max; ++n) d[n] = (a + (n % 2 == 0 ? b : -b)) * n;
  return d;
}

std::pair<std::vector<double>, std::vector<double>> cs_coeffs(int n_max) {
  std::vector<double> c(std::max(n_max, 0) + 1, 0.0), sv(std::max(n_max, 0) + 1, 0.0);
  for (int m = 1; 2 * m <= n_max; ++m) {
    c[2 * m] = 4.0 * (m % 2 == 0 ? 1.0 : -1.0) * m;
    sv[2 * m] = 4.0 * m;
  }
  return {c, sv};
}

std::vector<double> b_coeffs(const Space& s, int n_max) {
  // 2^{-rho} J^{-1/2} e^{rho t} = (1 + x)^{-alpha} (1 - x)^{-beta}, x = e^{-2t}.
  const int jmax = std::max(n_max, 0) / 2;
  const double alpha = 0.5 * (s.p - 1);
  const double beta = 0.5 * (s.q - 1);
  std::vector<double> A(jmax + 1), B(jmax + 1);
  A[0] = B[0] = 1.0;
  for (int j = 1; j <= jmax; ++j) {
    A[j] = A[j - 1] * (-alpha - j + 1) / j;
    B[j] = B[j - 1] * (beta + j - 1) / j;
  }
  std::vector<double> b(std::max(n_max, 0) + 1, 0.0);
  for (int j = 0; j <= jmax; ++j) {
    double acc = 0.0;
    for (int i = 0; i <= j; ++i) acc += A[i] * B[j - i];
    b[2 * j] = acc;
  }
  return b;
}

CoeffTable gamma_tilde(const Space& s, std::optional<KType> kt, Complex lambda, int n_max) {
  std::vector<bool> reg;
  const auto even = tilde_even(s, kt.value_or(KType{}), lambda, n_max / 2, &reg, nullptr);
  return to_table(s, kt, lambda, n_max, CoeffKind::GammaTilde, even, reg);
}

CoeffTable gamma_coeffs(const Space& s, std::optional<KType> kt, Complex lambda, int n_max) {
  std::vector<bool> reg;
  const auto even = tilde_even(s, kt.value_or(KType{}), lambda, n_max / 2, &reg, nullptr);
  return to_table(s, kt, lambda, n_max, CoeffKind::Gamma, convolve_b(s, even), reg);
}

RootPolynomial q_R_poly(double R) {
  RootPolynomial poly;
  const int top = static_cast<int>(std::floor(R / 2.0));
  for (int j = 1; j <= 2 * top; ++j) poly.roots.emplace_back(0.5 * j, 0.0);
  return poly;
}

double growth_exponent(const Space& s, std::optional<KType> kt) {
  const KType k = kt.value_or(KType{});
  const double fitted =
      std::max({static_cast<double>(s.p - 3 + std::abs(k.k)),
                static_cast<double>(s.q - 3 + std::abs(k.l)), 0.0});
  return fitted + 1.0;
}

TableSum phi_from_table(const CoeffTable& table, double t, double tol) {
  if (t < t_min_series)
    throw Error(ErrorCode::SlowConvergence, "phi_series needs t >= t_min_series");
  std::vector<Complex> even;
  for (int m = 0; m <= table.n_max; m += 2) even.push_back(table.values[m]);
  const SeriesOutcome so = sum_series(even, t, growth_exponent(table.space, table.ktype), tol);
  const Complex pre = std::exp((table.lambda - table.space.rho_value()) * t);
  TableSum out{{pre * so.sum, std::abs(pre) * (so.tail + so.rounding), Status::Regular}, so.converged};
  if (!so.converged) out.result.status = Status::AccuracyLoss;
  return out;
}

EvalResult phi_series(const Space& s, std::optional<KType> kt, Complex lambda, double t,
                      double tol) {
  if (t < t_min_series)
    throw Error(ErrorCode::SlowConvergence, "phi_series needs t >= t_min_series");
  Half h;
  if (near_half_integer(lambda, pole_eps, &h) && h.is_integer() && h.twice > 0)
    throw Error(ErrorCode::SeriesPole, "Harish-Chandra series pole at lambda = " + to_string(h));
  // Power-of-two table sizes keep cache keys shared across nearby t.
  int n_max = 32;
  while (n_max < 2 * initial_terms(t)) n_max *= 2;
  for (int attempt = 0; attempt < 6; ++attempt, n_max *= 2) {
    const auto ts = phi_from_table(*global_cache().get(s, kt, lambda, n_max), t, tol);
    if (ts.converged || attempt == 5) return ts.result;
  }
  throw Error(ErrorCode::SlowConvergence, "phi_series did not converge");
}

Complex phi_series_scaled(const Space& s, std::optional<KType> kt, Complex lambda, double lambda0,
                          double t) {
  if (t < t_min_series)
    throw Error(ErrorCode::SlowConvergence, "phi_series needs t >= t_min_series");
  const double chi = growth_exponent(s, kt);
  int jmax = initial_terms(t);
  for (int attempt = 0; attempt < 6; ++attempt, jmax *= 2) {
    const auto gt = tilde_even(s, kt.value_or(KType{}), lambda, jmax, nullptr, &lambda0);
    const auto g = convolve_b(s, gt);
    const SeriesOutcome so = sum_series(g, t, chi, 1e-16);
    if (so.converged || attempt == 5) return std::exp((lambda - s.rho_value()) * t) * so.sum;
  }
  return 0.0;
}

struct CoefficientCache::Impl {
  using Key = std::tuple<int, int, int, int, bool, double, double, int>;
  std::size_t capacity;
  mutable std::shared_mutex mu;
  std::map<Key, std::shared_ptr<const CoeffTable>> tables;
};

CoefficientCache::CoefficientCache(std::size_t capacity) : impl_(std::make_unique<Impl>()) {
  impl_->capacity = capacity;
}

CoefficientCache::~CoefficientCache() = default;

std::shared_ptr<const CoeffTable> CoefficientCache::get(const Space& s, std::optional<KType> kt,
                                                        Complex lambda, int n_max) {
  const KType k = kt.value_or(KType{});
  const Impl::Key key{s.p, s.q, k.k, k.l, kt.has_value(), lambda.real(), lambda.imag(), n_max};
  {
    std::shared_lock lock(impl_->mu);
    auto it = impl_->tables.find(key);
    if (it != impl_->tables.end()) return it->second;
  }
  auto table = std::make_shared<const CoeffTable>(gamma_coeffs(s, kt, lambda, n_max));
  std::unique_lock lock(impl_->mu);
  if (impl_->tables.size() >= impl_->capacity) impl_->tables.clear();
  return impl_->tables.emplace(key, table).first->second;
}

std::size_t CoefficientCache::size() const {
  std::shared_lock lock(impl_->mu);
  return impl_->tables.size();
}

void CoefficientCache::clear() {
  std::unique_lock lock(impl_->mu);
  impl_->tables.clear();
}

CoefficientCache& global_cache() {
  static CoefficientCache cache;
  return cache;
}

}  // namespace hc
}  // namespace hyperfns
