#include <gtest/gtest.h>

#include <cmath>

#include "hyperfns/fourier.hpp"
#include "hyperfns/verify.hpp"

using namespace hyperfns;
using namespace hyperfns::fourier;
using eis::EtaVector;

namespace {

RadialProfile bump(const Space& s) { return RadialProfile::uniform(s, Profile::smooth_bump(1.0, 2.0)); }

HarnessOptions quick(double xi_max) {
  HarnessOptions o;
  o.xi_max = xi_max;
  return o;
}

}  // namespace

TEST(Jacobian, SpecExamples) {
  EXPECT_EQ(jacobian(Space(3, 2), 0.0), 0.0);
  EXPECT_EQ(jacobian(Space(3, 1), 0.0), 1.0);
  const Space s(5, 3);
  const double t = 30.0;
  EXPECT_NEAR(jacobian(s, t) / std::exp(2.0 * s.rho_value() * t), std::pow(2.0, -2.0 * s.rho_value()), 1e-12);
}

TEST(Quadrature, GaussRuleIsExactForPolynomials) {
  const auto& g = quad::gauss_legendre(16);
  double acc = 0.0;
  for (std::size_t i = 0; i < g.x.size(); ++i) acc += g.w[i] * std::pow(g.x[i], 30);
  EXPECT_NEAR(acc, 2.0 / 31.0, 1e-15);
}

TEST(Quadrature, AdaptiveMeetsTarget) {
  const auto r = quad::integrate([](double x) { return Complex(std::cos(40.0 * x), std::sin(x)); }, 0.0, 3.0);
  EXPECT_NEAR(r.value.real(), std::sin(120.0) / 40.0, 1e-12);
  EXPECT_NEAR(r.value.imag(), 1.0 - std::cos(3.0), 1e-12);
  EXPECT_LE(r.abs_err, 1e-12);
}

TEST(Quadrature, BudgetExceeded) {
  quad::QuadratureConfig cfg;
  cfg.max_panels = 8;
  try {
    quad::integrate([](double x) { return Complex(std::cos(1e4 * x), 0.0); }, 0.0, 10.0, cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::QuadratureBudgetExceeded);
  }
}

TEST(Profiles, Shapes) {
  const Profile b = Profile::smooth_bump(1.0, 2.0);
  EXPECT_EQ(b(1.0), 0.0);
  EXPECT_EQ(b(2.5), 0.0);
  EXPECT_NEAR(b(1.5), std::exp(-4.0), 1e-16);
  const Profile p = Profile::polynomial_bump(0.0 + 1.0, 3.0, 1.0);
  EXPECT_NEAR(p(2.0), 1.0, 1e-15);
  const Profile c = Profile::sampled(1.0, 2.0, {0.0, 1.0, 0.0});
  EXPECT_NEAR(c(1.25), 0.5, 1e-15);
  EXPECT_THROW(Profile::smooth_bump(2.0, 1.0).validate(), Error);
  EXPECT_THROW(RadialProfile::uniform(Space(3, 2), b).check(Space(3, 1)), Error);
}

TEST(Transform, ZeroProfile) {
  const Space s(3, 2);
  const auto z = RadialProfile::uniform(s, Profile::zero());
  EXPECT_EQ(fourier_transform(s, std::nullopt, z, Complex(0.5, 2.0), EtaVector::unit(s)).value, Complex(0.0, 0.0));
}

TEST(Transform, LinearInEta) {
  const Space s(3, 2);
  const auto f = bump(s);
  const auto one = fourier_transform(s, std::nullopt, f, Complex(0.5, 2.0), EtaVector::of(s, 1.0));
  const auto two = fourier_transform(s, std::nullopt, f, Complex(0.5, 2.0), EtaVector::of(s, 2.0));
  EXPECT_LT(std::abs(two.value - 2.0 * one.value), 1e-15 * std::abs(one.value) * 4);
}

TEST(Transform, IntegrandPoleUnlessRegularized) {
  // E°(-lambda) has a pole at -lambda = -1.5 for (3,2)
  const Space s(3, 2);
  const auto f = bump(s);
  try {
    fourier_transform(s, std::nullopt, f, Complex(1.5, 0.0), EtaVector::unit(s));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IntegrandPole);
  }
  FourierOptions o;
  o.regularize_R = 2.0;
  const auto r = fourier_transform(s, std::nullopt, f, Complex(1.5, 0.0), EtaVector::unit(s), {}, o);
  EXPECT_TRUE(std::isfinite(std::abs(r.value)));
  EXPECT_GT(std::abs(r.value), 0.0);
}

TEST(Transform, RegularizedMatchesPRTimesPlainOffPole) {
  const Space s(5, 3);
  const auto f = bump(s);
  const Complex lam(0.4, 1.3);
  FourierOptions o;
  o.regularize_R = 2.0;
  const auto reg = fourier_transform(s, std::nullopt, f, lam, EtaVector::unit(s), {}, o);
  const auto plain = fourier_transform(s, std::nullopt, f, lam, EtaVector::unit(s));
  const Complex want = eis::p_R_poly(s, std::nullopt, 2.0)(-lam) * plain.value;
  EXPECT_LT(std::abs(reg.value - want) / std::abs(want), 1e-10);
}

TEST(Transform, KTypeRuns) {
  const Space s(5, 3);
  const auto r = fourier_transform(s, KType{2, 1}, bump(s), Complex(0.7, 1.9), EtaVector::unit(s));
  EXPECT_TRUE(std::isfinite(std::abs(r.value)));
  EXPECT_EQ(r.status, Status::Regular);
}

TEST(Norms, LpOfPolynomialBump) {
  const Space s(2, 1);  // J = cosh t, two orbits
  const auto f = RadialProfile::uniform(s, Profile::polynomial_bump(1.0, 2.0, 1.0));
  EXPECT_NEAR(lp_norm(s, f, std::numeric_limits<double>::infinity()), 0.25, 1e-12);
  const double n1 = lp_norm(s, f, 1.0);
  const double direct = 2.0 * quad::integrate_fixed([](double t) { return Complex((t - 1.0) * (2.0 - t) * std::cosh(t), 0.0); },
                                                    1.0, 2.0, 8, 32).real();
  EXPECT_NEAR(n1, direct, 1e-13);
}

TEST(Harness, ZeroProfileGivesZeros) {
  const Space s(5, 3);
  const auto z = RadialProfile::uniform(s, Profile::zero());
  const auto e = EtaVector::unit(s);
  const auto pl = plancherel_check(s, z, e, quick(20.0));
  EXPECT_EQ(pl.lhs, 0.0);
  EXPECT_EQ(pl.rhs, 0.0);
  EXPECT_EQ(hy_ratio(s, std::nullopt, z, e, 1.5, 0.5, 2.0, quick(20.0)).lhs, 0.0);
  LineSpec line{0.5, {1.0, 2.0, 4.0}};
  for (double v : rl_decay_profile(s, std::nullopt, z, e, 1.0, line, quick(20.0))) EXPECT_EQ(v, 0.0);
  const auto pw = paley_wiener_check(s, std::nullopt, z, e, 2, 2.0, {Complex(-1.0, 0.0), Complex(-3.0, 1.0)});
  EXPECT_EQ(pw.M, 0.0);
}

TEST(Harness, PlancherelMonotoneInXiMax) {
  const Space s(5, 3);
  const auto f = bump(s);
  double prev = 0.0;
  for (double x : {5.0, 10.0, 20.0}) {
    const auto r = plancherel_check(s, f, EtaVector::unit(s), quick(x));
    EXPECT_GE(r.lhs, prev);
    prev = r.lhs;
  }
}

TEST(Harness, HyDomainViolation) {
  const Space s(5, 3);
  try {
    hy_ratio(s, std::nullopt, bump(s), EtaVector::unit(s), 2.0, 0.5, 2.0, quick(10.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DomainViolation);
  }
  EXPECT_THROW(hy_ratio(s, std::nullopt, bump(s), EtaVector::unit(s), 2.5, 0.0, 2.0, quick(10.0)), Error);
}

TEST(Harness, PaleyWienerMGrowsWithN) {
  const Space s(5, 3);
  const std::vector<Complex> grid{Complex(-1.0, 0.0), Complex(-2.0, 3.0), Complex(-4.0, 10.0), Complex(0.5, 6.0)};
  const auto a = paley_wiener_check(s, std::nullopt, bump(s), EtaVector::unit(s), 2, 2.0, grid);
  const auto b = paley_wiener_check(s, std::nullopt, bump(s), EtaVector::unit(s), 4, 2.0, grid);
  EXPECT_GT(b.M, a.M);
  EXPECT_EQ(a.support_end, 2.0);
}

TEST(Parallel, KeepsOrderAndRethrows) {
  const auto v = parallel_map<int>(100, 4, [](std::size_t i) { return static_cast<int>(i * i); });
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(v[i], static_cast<int>(i * i));
  EXPECT_THROW(parallel_map<int>(10, 3, [](std::size_t i) -> int {
                 if (i == 7) throw std::runtime_error("boom");
                 return 0;
               }),
               std::runtime_error);
}

TEST(Parallel, TransformGridIsJobCountInvariant) {
  const Space s(3, 2);
  const auto f = bump(s);
  auto run = [&](int jobs) {
    return parallel_map<Complex>(6, jobs, [&](std::size_t i) {
      return fourier_transform(s, std::nullopt, f, Complex(0.3, 1.0 + 2.0 * i), EtaVector::unit(s)).value;
    });
  };
  EXPECT_EQ(run(1), run(3));
}

TEST(FourierInvariants, AllPass) {
  for (const auto& r : verify::run_suite("fourier")) EXPECT_TRUE(r.pass) << r.name << ": " << r.detail;
}
