#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_helpers.hpp"

using namespace mpstest;

TEST_CASE("check_normalization: GHZ passes the squared reading") {
  const ConditionReport report = check_normalization(ghz_family(), 1e-15);
  CHECK(report.pass);
  REQUIRE_EQ(report.residuals.size(), 1);
  CHECK_LE(report.residuals[0], 1e-15);

  // The literal (unsquared) sum is sqrt(2), recorded in the notes.
  const std::size_t pos = report.notes.find("s1 = ");
  REQUIRE_NE(pos, std::string::npos);
  const double s1 = std::strtod(report.notes.c_str() + pos + 5, nullptr);
  CHECK_LE(std::abs(s1 - std::sqrt(2.0)), 1e-15);
}

TEST_CASE("check_normalization: scalar family") {
  ComplexMatrix one(1, 1);
  one(0, 0) = 1.0;
  ComplexMatrix zero(1, 1);
  zero(0, 0) = 0.0;
  const MPSFamily family(2, 1, {SiteTensors{{one, zero}}}, Tail::RepeatLast);
  const ConditionReport report = check_normalization(family, 1e-15);
  CHECK(report.pass);
  CHECK_EQ(report.residuals[0], 0.0);
}

TEST_CASE("check_consistency: GHZ residuals are exactly zero") {
  const ConditionReport report = check_consistency(ghz_family(), 5, 0.0);
  CHECK(report.pass);
  REQUIRE_EQ(report.residuals.size(), 5);
  for (double r : report.residuals) {
    CHECK_EQ(r, 0.0);
  }
  CHECK_NE(report.notes.find("cover"), std::string::npos);
}

TEST_CASE("check_consistency: projector families pass") {
  ProjectorFamilySpec spec;
  spec.m = 4;
  spec.d = 2;
  spec.first_site_coefficients = {Complex{0.6, 0.0}, Complex{0.8, 0.0}};
  const MPSFamily family = projector_family(spec);
  const ConditionReport report = check_consistency(family, 4, 1e-15);
  CHECK(report.pass);
  for (double r : report.residuals) {
    CHECK_EQ(r, 0.0);
  }
}

TEST_CASE("check_consistency: identity tail fails at n = 1") {
  const ConditionReport report =
      check_consistency(broken_identity_tail(), 3, 1e-10);
  CHECK_FALSE(report.pass);
  // Defect at n = 1 is 0.5 * P_i (x) P_i, Frobenius norm 1/2.
  CHECK_EQ(report.checked_sites[0], 1);
  CHECK_LE(std::abs(report.residuals[0] - 0.5), 1e-14);
}

TEST_CASE("check_consistency: finite tail needs site n_max + 1") {
  const MPSFamily ghz = ghz_family();
  const MPSFamily finite(2, 2, {ghz.site(1), ghz.site(2)}, Tail::Finite);
  CHECK_NOTHROW(check_consistency(finite, 1));
  CHECK_THROWS_AS(check_consistency(finite, 2), RangeError);
}

TEST_CASE("trace identity: identity tensors give m^2 on both sides") {
  const int m = 3;
  SiteTensors site{{eye(m), eye(m)}};
  const MPSFamily family(2, m, {site}, Tail::RepeatLast);
  const std::vector<int> left{0, 1, 0};
  const std::vector<int> right{1, 1, 0};
  const TraceIdentityCheck check =
      evaluate_trace_identity(family, 2, 1, left, right);
  check_close(check.lhs, Complex{9.0, 0.0}, 1e-13, 0.0);
  check_close(check.rhs, Complex{9.0, 0.0}, 1e-13, 0.0);
}

TEST_CASE("trace identity: GHZ all-zeros tuple gives 1/2") {
  const std::vector<int> tuple{0, 0, 0};
  const TraceIdentityCheck check =
      evaluate_trace_identity(ghz_family(), 2, 1, tuple, tuple);
  check_close(check.lhs, Complex{0.5, 0.0}, 1e-15, 0.0);
  CHECK_LE(check.deviation, 1e-15);
}

TEST_CASE("trace identity: random family, mixed tuples") {
  Rng rng(41);
  const MPSFamily family = random_family(rng, 2, 3, 4);
  const std::vector<int> left = random_tuple(rng, 2, 4);
  const std::vector<int> right = random_tuple(rng, 2, 4);
  CHECK(verify_trace_identity(family, 2, 2, left, right, 1e-10));
}

TEST_CASE("trace identity: scalar families reduce to commuting products") {
  Rng rng(44);
  const MPSFamily scalars = random_family(rng, 2, 1, 3);
  for (int rep = 0; rep < 20; ++rep) {
    const std::vector<int> left = random_tuple(rng, 2, 4);
    const std::vector<int> right = random_tuple(rng, 2, 4);
    const TraceIdentityCheck check =
        evaluate_trace_identity(scalars, 2, 2, left, right);
    CHECK_LE(check.deviation, 1e-15 * (1.0 + std::abs(check.lhs)));
  }
}

TEST_CASE("trace identity: malformed tuples rejected") {
  const MPSFamily ghz = ghz_family();
  const std::vector<int> short_tuple{0, 0};
  const std::vector<int> ok{0, 0, 0};
  const std::vector<int> out_of_range{0, 0, 2};
  CHECK_THROWS_AS(evaluate_trace_identity(ghz, 2, 1, short_tuple, ok),
                  ArgumentError);
  CHECK_THROWS_AS(evaluate_trace_identity(ghz, 2, 1, ok, out_of_range),
                  ArgumentError);
}

TEST_CASE("property: the trace identity holds for arbitrary families") {
  Rng rng(42);
  for (int rep = 0; rep < 1000; ++rep) {
    const int d = rng.uniform_int(1, 4);
    const int m = rng.uniform_int(1, 5);
    const int n = rng.uniform_int(1, 4);
    const int k = rng.uniform_int(1, 4);
    const MPSFamily family = random_family(rng, d, m, rng.uniform_int(1, 4));
    const std::vector<int> left = random_tuple(rng, d, n + k);
    const std::vector<int> right = random_tuple(rng, d, n + k);
    const TraceIdentityCheck check =
        evaluate_trace_identity(family, n, k, left, right);
    INFO("rep = ", rep, ", d = ", d, ", m = ", m, ", n = ", n, ", k = ", k);
    CHECK_LE(check.deviation, 1e-10 * (1.0 + std::abs(check.lhs)));
  }
}

TEST_CASE("property: consistency residuals are unitary-conjugation invariant") {
  Rng rng(43);
  for (int rep = 0; rep < 20; ++rep) {
    const int d = rng.uniform_int(2, 4);
    const int m = rng.uniform_int(2, 5);
    const MPSFamily family = random_family(rng, d, m, 2);
    const ComplexMatrix u = random_unitary(rng, m);
    const MPSFamily rotated = conjugate_family(family, u);

    const ConditionReport base = check_consistency(family, 3);
    const ConditionReport conj = check_consistency(rotated, 3);
    REQUIRE_EQ(base.residuals.size(), conj.residuals.size());
    for (std::size_t i = 0; i < base.residuals.size(); ++i) {
      CHECK_LE(std::abs(base.residuals[i] - conj.residuals[i]),
               1e-9 * (1.0 + base.residuals[i]));
    }
  }
}

TEST_CASE("property: exact consistency implies n-independent norms") {
  const MPSFamily ghz = ghz_family();
  REQUIRE(check_consistency(ghz, 3, 0.0).pass);
  const double base = norm_squared(ghz, 1);
  for (int n = 2; n <= 6; ++n) {
    CHECK_LE(std::abs(norm_squared(ghz, n) - base), 1e-15);
  }

  ProjectorFamilySpec spec;
  spec.m = 3;
  spec.d = 3;
  const double r = 1.0 / std::sqrt(3.0);
  spec.first_site_coefficients = {Complex{r, 0.0}, Complex{r, 0.0},
                                  Complex{r, 0.0}};
  const MPSFamily proj = projector_family(spec);
  REQUIRE(check_consistency(proj, 3, 0.0).pass);
  const double proj_base = norm_squared(proj, 1);
  for (int n = 2; n <= 6; ++n) {
    CHECK_LE(std::abs(norm_squared(proj, n) - proj_base), 1e-15);
  }
}
