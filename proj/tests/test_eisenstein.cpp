#include <gtest/gtest.h>

#include <cmath>

#include "hyperfns/eisenstein.hpp"
#include "hyperfns/specfun.hpp"
#include "hyperfns/verify.hpp"

using namespace hyperfns;
using namespace hyperfns::eis;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::vector<double> values(const std::vector<Half>& v) {
  std::vector<double> out;
  for (Half h : v) out.push_back(h.value());
  return out;
}

}  // namespace

TEST(CFunction, SpecExamples) {
  const Space s(4, 3);
  const Complex lam(0.8, 1.1);
  EXPECT_LT(std::abs(c_function(s, std::nullopt, lam).value * c_function(s, std::nullopt, -lam).value - 1.0), 1e-13);
  EXPECT_EQ(c_function(s, std::nullopt, Complex(1.0, 0.0)).status, Status::Pole);
  const EvalResult z = c_function(s, std::nullopt, Complex(-2.0, 0.0));
  EXPECT_EQ(z.status, Status::Zero);
  EXPECT_EQ(z.value, Complex(0.0, 0.0));
}

TEST(CFunction, DirectProductAgrees) {
  const Space s(5, 3);
  for (auto kt : {std::optional<KType>{}, std::optional<KType>{KType{2, 1}}}) {
    const Complex lam(0.37, -1.4);
    EXPECT_LT(rel(c_function_direct(s, kt, lam), c_function(s, kt, lam).value), 1e-12);
  }
}

TEST(CMatrix, Shapes) {
  const auto m1 = c_matrix(Space(3, 1), Complex(0.4, 0.9));
  ASSERT_EQ(m1.size(), 2u);
  EXPECT_EQ(m1[0][1].value, Complex(0.0, 0.0));
  EXPECT_EQ(m1[1][0].value, Complex(0.0, 0.0));
  EXPECT_EQ(m1[0][0].value, m1[1][1].value);
  const auto m2 = c_matrix(Space(5, 3), Complex(0.4, 0.9));
  ASSERT_EQ(m2.size(), 1u);
  EXPECT_EQ(m2[0][0].value, c_function(Space(5, 3), std::nullopt, Complex(0.4, 0.9)).value);
}

TEST(EtaVector, SizeRule) {
  EtaVector two;
  two.components = {1.0, 2.0};
  EXPECT_THROW(check_eta(Space(5, 3), two), Error);
  EXPECT_NO_THROW(check_eta(Space(5, 1), two));
  EXPECT_THROW(check_eta(Space(5, 1), EtaVector::unit(Space(5, 3))), Error);
}

TEST(EisensteinClosed, ValueAtZero) {
  const Space s(3, 2);
  const Complex lam(0.9, 0.6);
  const double rho = s.rho_value();
  const Complex want = std::pow(2.0, lam - rho) * specfun::gamma_direct(0.5 * (lam + rho)) *
                       specfun::gamma_direct(0.5 * (lam - rho + 2.0)) /
                       (specfun::gamma_direct(lam) * specfun::gamma_direct(1.0));
  EXPECT_LT(rel(eisenstein_closed(s, std::nullopt, lam, EtaVector::unit(s), 1, 0.0).value, want), 1e-13);
}

TEST(EisensteinClosed, VanishesOnNonpositiveIntegers) {
  for (Space s : {Space(3, 2), Space(4, 3), Space(2, 1)})
    for (double t : {0.0, 0.5, 3.0}) {
      const EvalResult r = eisenstein_closed(s, std::nullopt, Complex(-3.0, 0.0), EtaVector::unit(s), 1, t);
      EXPECT_EQ(r.value, Complex(0.0, 0.0));
    }
}

TEST(EisensteinClosed, FiniteWhereCatalogProgressionMeetsNonpositiveIntegers) {
  // (5,3): rho - q = 0, so 0 is in the E°-pole progression, yet 1/Gamma(lambda)
  // cancels it and E° is finite there; p_R E° still vanishes.
  const Space s(5, 3);
  const EvalResult r = eisenstein_closed(s, std::nullopt, Complex(0.0, 0.0), EtaVector::unit(s), 1, 1.0);
  EXPECT_TRUE(r.usable());
  EXPECT_TRUE(std::isfinite(std::abs(r.value)));
}

TEST(EisensteinClosed, IntegerRhoCancelsZeroAgainstPole) {
  // (5,3), lambda = -3: the Gamma(0) pole cancels 1/Gamma(-3) and the 2F1 has
  // a = 0, so E° is the constant -1/2 (mpmath, lambda = -3 + 1e-30).
  const Space s(5, 3);
  for (double t : {0.0, 0.7, 4.0}) {
    const EvalResult r = eisenstein_closed(s, std::nullopt, Complex(-3.0, 0.0), EtaVector::unit(s), 1, t);
    EXPECT_NEAR(std::abs(r.value + 0.5), 0.0, 1e-14);
  }
  EXPECT_EQ(eisenstein_regularized(s, std::nullopt, 3.0, Complex(-3.0, 0.0), EtaVector::unit(s), 1, 1.0).value,
            Complex(0.0, 0.0));
}

TEST(EisensteinClosed, PoleStatus) {
  const Space s(7, 3);
  EXPECT_EQ(eisenstein_closed(s, std::nullopt, Complex(1.0, 0.0), EtaVector::unit(s), 1, 1.0).status, Status::Pole);
}

TEST(EisensteinClosed, LinearInEta) {
  const Space s(4, 1);
  const auto e = EtaVector::of(s, Complex(0.3, -2.0), Complex(1.5, 0.5));
  for (int w : s.orbits()) {
    const EvalResult a = eisenstein_closed(s, std::nullopt, Complex(0.4, 0.7), e, w, 1.1);
    const EvalResult u = eisenstein_closed(s, std::nullopt, Complex(0.4, 0.7), EtaVector::unit(s, w), w, 1.1);
    EXPECT_LT(rel(a.value, e[w] * u.value), 1e-15);
  }
}

TEST(EisensteinSeries, MatchesClosedForm) {
  const Space s(5, 3);
  const auto e = EtaVector::unit(s);
  EXPECT_LT(rel(eisenstein_series(s, std::nullopt, Complex(0.4, 0.9), e, 1, 2.0).value,
                eisenstein_closed(s, std::nullopt, Complex(0.4, 0.9), e, 1, 2.0).value),
            1e-8);
  EXPECT_LT(rel(eisenstein_series(s, KType{2, 1}, Complex(1.4, -0.3), e, 1, 0.6).value,
                eisenstein_closed(s, KType{2, 1}, Complex(1.4, -0.3), e, 1, 0.6).value),
            1e-8);
}

TEST(EisensteinSeries, CTermNegligibleForLargeRealPart) {
  const Space s(3, 2);
  const Complex lam(9.3, 0.2);
  const double t = 3.0;
  const Complex phi = hc::phi_series(s, std::nullopt, lam, t).value;
  EXPECT_LT(rel(eisenstein_series(s, std::nullopt, lam, EtaVector::unit(s), 1, t).value, phi), 1e-15 * 1e3);
}

TEST(EisensteinSeries, BothOrbitsWhenQIsOne) {
  const Space s(4, 1);
  const auto e = EtaVector::of(s, Complex(0.0, 0.0), Complex(1.0, 0.0));
  EXPECT_EQ(eisenstein_series(s, std::nullopt, Complex(0.6, 0.4), e, 1, 1.0).value, Complex(0.0, 0.0));
  EXPECT_LT(rel(eisenstein_series(s, std::nullopt, Complex(0.6, 0.4), e, -1, 1.0).value,
                eisenstein_closed(s, std::nullopt, Complex(0.6, 0.4), e, -1, 1.0).value),
            1e-10);
}

TEST(EisensteinAuto, LargeImaginaryPart) {
  const Space s(5, 3);
  const auto e = EtaVector::unit(s);
  const Complex lam(0.3, 40.0);
  const EvalResult a = eisenstein(s, std::nullopt, lam, e, 1, 1.5);
  const EvalResult b = eisenstein_series(s, std::nullopt, lam, e, 1, 1.5);
  EXPECT_LT(rel(a.value, b.value), 1e-12);
}

TEST(RadialEvaluatorTest, MatchesClosedAndSeries) {
  const Space s(7, 2);
  for (Complex lam : {Complex(0.3, 2.0), Complex(-1.0, 0.0), Complex(0.2, 25.0)}) {
    const RadialEvaluator ev(s, std::nullopt, lam, 0.3);
    for (double t : {0.3, 0.9, 2.0}) {
      const EvalResult want = ev.uses_series() ? eisenstein_series(s, std::nullopt, lam, EtaVector::unit(s), 1, t)
                                               : eisenstein_closed(s, std::nullopt, lam, EtaVector::unit(s), 1, t);
      EXPECT_LT(std::abs(ev(t).value - want.value), 1e-12 * std::max(1.0, std::abs(want.value)));
    }
  }
}

TEST(PoleCatalog, SpecExamples) {
  const auto c73 = pole_catalog(Space(7, 3), std::nullopt);
  std::vector<double> all;
  for (const auto& p : c73.e_poles)
    for (double v : values(p.first(3))) all.push_back(v);
  std::sort(all.begin(), all.end());
  EXPECT_EQ(all, (std::vector<double>{-8, -6, -4, -3, -1, 1}));

  for (const auto& p : pole_catalog(Space(3, 2), std::nullopt).e_poles) EXPECT_LT(p.start.value(), 0.0);

  const auto lit = pole_catalog(Space(3, 1), KType{0, 4}, KTypeReading::Literal);
  bool found = false;
  for (const auto& p : lit.e_poles)
    if (values(p.first(4)) == std::vector<double>{4, 2, 0, -2}) found = true;
  EXPECT_TRUE(found);
}

TEST(PoleCatalog, ExactMembership) {
  const auto c = pole_catalog(Space(3, 2), std::nullopt);
  EXPECT_TRUE(in_any(c.e_poles, Complex(-2.5, 0.0), 1e-12));
  EXPECT_FALSE(in_any(c.e_poles, Complex(-2.0, 0.0), 1e-12));
  EXPECT_FALSE(in_any(c.e_poles, Complex(-2.5, 1e-6), 1e-9));
  EXPECT_TRUE(in_any(c.c_poles, Complex(3.0, 0.0), 1e-12));
}

TEST(SpectralPointFlags, Consistency) {
  const Space s(5, 3);
  const auto sp = make_spectral_point(s, std::nullopt, Complex(-2.0, 0.0), 1.5, 3.0);
  EXPECT_TRUE(sp.is_nonpos_int);
  EXPECT_TRUE(sp.in_S1);
  EXPECT_FALSE(sp.in_Sr);  // (2/1.5 - 1) * 3 = 1 < 2
  EXPECT_TRUE(sp.in_aR);
  EXPECT_TRUE(sp.is_E_pole);
  EXPECT_FALSE(make_spectral_point(s, std::nullopt, Complex(3.5, 0.0), 1.0, 3.0).in_aR);
}

TEST(PR, SpecExamples) {
  const auto p = p_R_poly(Space(3, 2), std::nullopt, 1.0);
  std::vector<double> roots;
  for (Complex r : p.roots) roots.push_back(r.real());
  std::sort(roots.begin(), roots.end());
  EXPECT_EQ(roots, (std::vector<double>{-3.5, -2.5, -1.5, -0.5}));
  for (double R : {0.5, 1.0, 2.7, 4.0}) EXPECT_EQ(p_R_poly(Space(5, 3), std::nullopt, R).degree(), 2 * (int(R) + 1));
}

TEST(PR, RootsCoverCatalogPolesInDomain) {
  for (auto [s, kt] : {std::pair{Space(7, 3), std::optional<KType>{}}, std::pair{Space(5, 3), std::optional<KType>{KType{2, 1}}},
                       std::pair{Space(3, 2), std::optional<KType>{KType{1, 2}}}}) {
    const double R = 3.0;
    const auto p = p_R_poly(s, kt, R);
    const auto cat = pole_catalog(s, kt);
    for (const auto& prog : cat.e_poles)
      for (Half h = prog.start; h.value() >= -R; h = Half{h.twice + 2 * prog.step})
        EXPECT_LT(std::abs(p(Complex(h.value(), 0.0))), 1e-12) << h.value();
    for (Complex r : p.roots)
      if (r.real() >= -R) EXPECT_TRUE(in_any(cat.e_poles, r, 1e-12)) << r.real();
  }
}

TEST(Regularized, ZeroOnNonpositiveIntegers) {
  const Space s(3, 2);
  for (double t : {0.0, 1.0, 10.0}) {
    const EvalResult r = eisenstein_regularized(s, std::nullopt, 3.0, Complex(-2.0, 0.0), EtaVector::unit(s), 1, t);
    EXPECT_EQ(r.value, Complex(0.0, 0.0));
    EXPECT_EQ(r.status, Status::Zero);
  }
}

TEST(Regularized, OffPoleIsPRTimesClosed) {
  const Space s(5, 3);
  const Complex l0(0.6, 0.3);
  const auto e = EtaVector::unit(s);
  const Complex want = p_R_poly(s, std::nullopt, 2.0)(l0) * eisenstein_closed(s, std::nullopt, l0, e, 1, 1.2).value;
  EXPECT_LT(rel(eisenstein_regularized(s, std::nullopt, 2.0, l0, e, 1, 1.2).value, want), 1e-10);
}

TEST(Regularized, LimitMethodsAgreeAtPositivePole) {
  const Space s(7, 3);
  const auto e = EtaVector::unit(s);
  const Complex l0(1.0, 0.0);
  const auto cs = eisenstein_regularized(s, std::nullopt, 3.0, l0, e, 1, 1.0, RegularizationMethod::ComplexStep);
  const auto ex = eisenstein_regularized(s, std::nullopt, 3.0, l0, e, 1, 1.0, RegularizationMethod::ExactLimit);
  const auto of = eisenstein_regularized(s, std::nullopt, 3.0, l0, e, 1, 1.0, RegularizationMethod::Offset);
  EXPECT_EQ(cs.status, Status::Regularized);
  EXPECT_LT(rel(cs.value, of.value), 1e-6);
  EXPECT_LT(rel(ex.value, cs.value), 1e-10);
}

TEST(Regularized, NearPoleWarning) {
  const Space s(7, 3);
  const auto r = eisenstein_regularized(s, std::nullopt, 3.0, Complex(1.0 + 1e-4, 0.0), EtaVector::unit(s), 1, 1.0);
  EXPECT_EQ(r.status, Status::NearPole);
}

TEST(Regularized, OutOfDomain) {
  try {
    eisenstein_regularized(Space(3, 2), std::nullopt, 2.0, Complex(-2.5, 0.0), EtaVector::unit(Space(3, 2)), 1, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutOfDomain);
  }
}

TEST(Classify, SpecExamples) {
  EXPECT_EQ(classify_bounded(Space(3, 2), std::nullopt, 3.0, Complex(1.0, 0.0)), Boundedness::Bounded);
  EXPECT_EQ(classify_bounded(Space(3, 2), std::nullopt, 3.0, Complex(2.0, 0.0)), Boundedness::Unbounded);
  EXPECT_EQ(classify_bounded(Space(3, 1), KType{0, 4}, 5.0, Complex(3.0, 0.0), KTypeReading::Literal),
            Boundedness::Undetermined);
  EXPECT_EQ(classify_bounded(Space(3, 2), std::nullopt, 3.0, Complex(-2.0, 0.0)), Boundedness::IdenticallyZero);
  EXPECT_EQ(values(undetermined_set(Space(3, 1), KType{0, 4}, KTypeReading::Literal)), (std::vector<double>{2, 3, 4}));
}

TEST(Classify, ConsistentReadingUndeterminedSet) {
  // rho = 3 integer, rho - q + |k| - |l| = 3 - 3 + 4 - 0 = 4
  EXPECT_EQ(values(undetermined_set(Space(5, 3), KType{4, 0})), (std::vector<double>{4}));
  EXPECT_EQ(classify_bounded(Space(5, 3), KType{4, 0}, 5.0, Complex(4.0, 0.0)), Boundedness::Undetermined);
  // rho not an integer: nothing is excluded
  EXPECT_TRUE(undetermined_set(Space(4, 3), KType{4, 0}).empty());
}

TEST(OdeResidual, SpecExamples) {
  const Space s(5, 3);
  const auto e = EtaVector::unit(s);
  EXPECT_LT(ode_residual(s, std::nullopt, Complex(1.0, 1.0), e, 1, 1.7, 1e-3), 1e-5);
  EXPECT_LT(ode_residual(s, KType{2, 1}, Complex(1.0, 1.0), e, 1, 1.7, 1e-3), 1e-5);
  for (double xi : {0.5, 3.0, 9.0}) EXPECT_LT(ode_residual(s, std::nullopt, Complex(0.0, xi), e, 1, 1.0, 1e-3), 1e-5);
}

TEST(Jacobi, CrossCheckPLessEqualQ) {
  for (Space s : {Space(2, 3), Space(3, 3)}) {
    const Complex lam(0.7, 0.4);
    const double t = 1.3, rho = s.rho_value();
    const Complex pre = std::pow(2.0, lam - rho) * specfun::gamma_direct(0.5 * (lam + rho)) *
                        specfun::gamma_direct(0.5 * (lam - rho + double(s.q))) /
                        (specfun::gamma_direct(lam) * specfun::gamma_direct(0.5 * s.q));
    const Complex phi = jacobi_phi(0.5 * s.q - 1.0, 0.5 * s.p - 1.0, Complex(0.0, -1.0) * lam, t).value;
    EXPECT_LT(rel(eisenstein_closed(s, std::nullopt, lam, EtaVector::unit(s), 1, t).value, pre * phi), 1e-10);
  }
}

TEST(EisensteinInvariants, AllPass) {
  for (const auto& r : verify::run_suite("identities")) EXPECT_TRUE(r.pass) << r.name << ": " << r.detail;
}
