#include <gtest/gtest.h>

#include "hyperfns/verify.hpp"

using namespace hyperfns;

TEST(Fixtures, EverySuitePresent) {
  const auto suites = io::fixture_suites();
  for (const char* s : {"log_gamma", "hyp2f1", "b_coeffs", "cs_series", "gamma_tilde", "gamma_coeffs", "phi_series",
                        "c_function", "eisenstein", "regularized", "fourier"})
    EXPECT_NE(std::find(suites.begin(), suites.end(), s), suites.end()) << s;
}

TEST(Fixtures, EveryCaseReproduced) {
  for (const auto& suite : io::fixture_suites()) {
    const double tol = verify::fixture_tolerance(suite);
    for (const auto& rec : io::load_fixtures(suite)) {
      SCOPED_TRACE(suite + "/" + rec.case_id);
      const Complex got = verify::evaluate_fixture(suite, rec);
      EXPECT_LE(verify::relative_error(got, rec.expected), tol);
    }
  }
}

TEST(Fixtures, SpecNamedCasesExist) {
  bool g5 = false;
  for (const auto& r : io::load_fixtures("gamma_coeffs"))
    if (r.integer("p") == 3 && r.integer("q") == 2 && r.integer("m") == 5 && r.complex("lambda") == Complex(0.7, 0.3)) {
      g5 = true;
      EXPECT_GE(r.digits, 40);
    }
  EXPECT_TRUE(g5);
}
