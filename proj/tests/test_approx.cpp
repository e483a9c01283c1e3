#include <cmath>
#include <numbers>

#include "oracle.hpp"
#include "support.hpp"
#include "trigpoly/approx.hpp"

using namespace trigpoly;
using oracle::Mp;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("coefficients c_j = t_j pi^{2j}") {
  ApproxPolynomial p1 = build_poly(TrigFunction::cos_pi_x, 1);
  CHECK(oracle::rel_err(p1.hp_coeffs()[0], Mp::pi()) < 1e-60);
  CHECK(p1.y_coeffs()[0] == kPi);

  ApproxPolynomial q2 = build_poly(TrigFunction::sin_pi_x, 2);
  CHECK(oracle::rel_err(q2.hp_coeffs()[1], Mp::pi()) < 1e-60);

  ApproxPolynomial q5 = build_poly(TrigFunction::sin_pi_x, 5);
  Mp c5 = oracle::t(5) * oracle::pow(Mp::pi(), 10);
  CHECK(oracle::rel_err(c5, Mp::parse("0.0230461696847205191187123489562")) < 1e-29);
  CHECK(oracle::rel_err(q5.hp_coeffs()[4], c5) < 1e-50);
  CHECK(q5.y_coeffs()[4] == c5.to_double());

  ApproxPolynomial p5 = build_poly(TrigFunction::cos_pi_x, 5);
  CHECK(p5.y_coeffs() == q5.y_coeffs());
  for (double c : q5.y_coeffs()) CHECK(c > 0);
  CHECK(q5.degree_m() == 5);
  CHECK_THROWS_CODE(build_poly(TrigFunction::sin_pi_x, 0), Errc::invalid_argument);
}

TEST_CASE("evaluation") {
  for (int m = 1; m <= 10; ++m) {
    ApproxPolynomial q = build_poly(TrigFunction::sin_pi_x, m);
    ApproxPolynomial p = build_poly(TrigFunction::cos_pi_x, m);
    CHECK(q(0.0) == 0.0);
    CHECK(q(1.0) == 0.0);
    CHECK(p(0.5) == 0.0);
    CHECK(p(-0.5) == 0.0);
    CHECK(eval(p, 0.3) == p(-0.3));
  }
  ApproxPolynomial q1 = build_poly(TrigFunction::sin_pi_x, 1);
  CHECK(q1(0.5) == doctest::Approx(kPi / 4).epsilon(1e-15));
  // Any real x is accepted.
  CHECK(std::isfinite(q1(3.7)));

  const mpfr_prec_t bits = working_bits(50);
  ApproxPolynomial q4 = build_poly(TrigFunction::sin_pi_x, 4);
  Mp expected = oracle::Q(4, Mp(1) / Mp(2));
  CHECK(oracle::rel_err(expected, Mp::parse("0.999977059857425706923060418229")) < 1e-29);
  CHECK(oracle::rel_err(q4.eval_hp(ExtReal(0.5, bits)), expected) < 1e-60);
  CHECK(q4(0.5) == doctest::Approx(expected.to_double()).epsilon(1e-15));
  for (double x : {0.1, 0.37, 0.8}) {
    CHECK(oracle::rel_err(q4.eval_hp(ExtReal(x, bits)), oracle::Q(4, oracle::from(x))) < 1e-60);
  }
}

TEST_CASE("Q_m(x) = P_m(x - 1/2) and the symmetries") {
  const mpfr_prec_t bits = working_bits(50);
  for (int m : {1, 4, 9}) {
    ApproxPolynomial q = build_poly(TrigFunction::sin_pi_x, m);
    ApproxPolynomial p = build_poly(TrigFunction::cos_pi_x, m);
    // Dyadic points, so that 1 - x and x - 1/2 are exact.
    for (int i = 0; i <= 64; ++i) {
      ExtReal x = ExtReal(static_cast<long>(i), bits) / 64L;
      CHECK(abs(q.eval_hp(x) - p.eval_hp(x - ExtReal(0.5, bits))) < ExtReal(1e-65, 64));
      CHECK(q.eval_hp(x) == q.eval_hp(1L - x));
      CHECK(p.eval_hp(x) == p.eval_hp(-x));
    }
  }
}

TEST_CASE("shifted variable and reference") {
  CHECK(shifted_variable(TrigFunction::cos_pi_x, 0.0) == 0.25);
  CHECK(shifted_variable(TrigFunction::sin_pi_x, 0.5) == 0.25);
  const mpfr_prec_t bits = working_bits(50);
  CHECK(reference_value(TrigFunction::sin_pi_x, ExtReal(0.5, bits)) == 1L);
  CHECK(reference_value(TrigFunction::cos_pi_x, ExtReal(0.5, bits)) == 0L);
  Domain d = certified_domain(TrigFunction::cos_pi_x);
  CHECK(d.lo == -0.5);
  CHECK(d.hi == 0.5);
  CHECK_FALSE(d.contains_open(0.5));
  CHECK(certified_domain(TrigFunction::sin_pi_x).contains_open(0.999));
}

TEST_CASE("error certificate") {
  ErrorCertificate c = error_bound(TrigFunction::cos_pi_x, 1, 0.0);
  CHECK(c.leading_term == doctest::Approx(std::pow(kPi, 4) / (16 * 24)).epsilon(1e-14));
  CHECK(c.q_m == doctest::Approx(kPi * kPi / 120).epsilon(1e-14));
  CHECK(c.bound >= oracle::bound(1, Mp(1) / Mp(4)).to_double());
  CHECK(c.bound == doctest::Approx(0.2764027204531976).epsilon(1e-14));
  CHECK(c.tail_factor == doctest::Approx(1 / (1 - c.q_m)).epsilon(1e-14));
  // The actual error 1 - pi/4 is below the bound.
  CHECK(1 - kPi / 4 < c.bound);
  CHECK(c.domain.lo == -0.5);

  ErrorCertificate s4 = error_bound(TrigFunction::sin_pi_x, 4, 0.5);
  CHECK(s4.bound == doctest::Approx(2.5682103358546866758e-05).epsilon(1e-12));
  CHECK(s4.bound >= oracle::bound(4, Mp(1) / Mp(4)).to_double());

  // The bound vanishes with y at the endpoints.
  CHECK(error_bound(TrigFunction::sin_pi_x, 1, 1e-8).bound < 1e-14);

  CHECK_THROWS_CODE(error_bound(TrigFunction::sin_pi_x, 2, 0.0), Errc::domain);
  CHECK_THROWS_CODE(error_bound(TrigFunction::sin_pi_x, 2, 1.0), Errc::domain);
  CHECK_THROWS_CODE(error_bound(TrigFunction::cos_pi_x, 2, 0.5), Errc::domain);
  CHECK_THROWS_CODE(error_bound(TrigFunction::cos_pi_x, 2, -0.7), Errc::domain);
}

TEST_CASE("certificate asymptotics") {
  double prev_ratio = INFINITY;
  double prev_bound = INFINITY;
  for (int m = 1; m <= 30; ++m) {
    ErrorCertificate c = error_bound(TrigFunction::sin_pi_x, m, 0.5);
    CHECK(c.q_m > 0);
    CHECK(c.q_m < 1);
    CHECK(c.q_m == doctest::Approx(kPi * kPi / 4 / ((2.0 * m + 4) * (2.0 * m + 3))));
    double ratio = c.bound / c.leading_term;
    CHECK(ratio >= 1.0);
    CHECK(ratio < prev_ratio);
    CHECK(c.bound < prev_bound);
    prev_ratio = ratio;
    prev_bound = c.bound;
  }
  CHECK(prev_ratio < 1.003);
  CHECK(tail_ratio(1).to_double() == doctest::Approx(kPi * kPi / 120));
}

TEST_CASE("error_bound_y rounds upward") {
  const mpfr_prec_t bits = working_bits(50);
  for (int m = 1; m <= 7; ++m) {
    ExtReal b = error_bound_y(m, ExtReal(0.25, bits));
    Mp exact = oracle::bound(m, Mp(1) / Mp(4));
    CHECK(mpfr_cmp(b.raw(), exact.get()) >= 0);
    CHECK(oracle::rel_err(b, exact) < 1e-40);
  }
}

TEST_CASE("degree selection") {
  CHECK(select_degree(TrigFunction::sin_pi_x, 1e-6) == 5);
  CHECK(select_degree(TrigFunction::sin_pi_x, 0.3) == 1);
  CHECK(select_degree(TrigFunction::sin_pi_x, 0.2764) == 2);
  CHECK(select_degree(TrigFunction::sin_pi_x, 2.6e-5) == 4);
  CHECK(select_degree(TrigFunction::sin_pi_x, 2.5e-5) == 5);
  for (double tol : {1.0, 0.01, 1e-9, 1e-15, 1e-100}) {
    CHECK(select_degree(TrigFunction::cos_pi_x, tol) == select_degree(TrigFunction::sin_pi_x, tol));
  }
  CHECK_THROWS_CODE(select_degree(TrigFunction::sin_pi_x, 0.0), Errc::invalid_argument);
  CHECK_THROWS_CODE(select_degree(TrigFunction::sin_pi_x, -1.0), Errc::invalid_argument);
  CHECK_THROWS_CODE(select_degree(TrigFunction::sin_pi_x, 1e-300, 50), Errc::limit_exceeded);
}

TEST_CASE("Maclaurin partial sums") {
  CHECK(maclaurin_eval(1, 0.5) == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(maclaurin_eval(2, 0.5) == doctest::Approx(kPi / 2 - std::pow(kPi / 2, 3) / 6).epsilon(1e-15));
  CHECK(maclaurin_eval(2, 0.5) == doctest::Approx(0.924832229288650).epsilon(1e-14));
  for (int m = 1; m <= 8; ++m) {
    CHECK(maclaurin_eval(m, 0.0) == 0.0);
    CHECK(maclaurin_eval(m, -0.3) == -maclaurin_eval(m, 0.3));
    for (double x : {0.2, 0.5, 1.0}) {
      CHECK(oracle::rel_err(maclaurin_eval_hp(m, ExtReal(x, working_bits(50))), oracle::S(m, oracle::from(x))) <
            1e-60);
    }
  }
  MaclaurinPoly s3(3);
  CHECK(s3.odd_coeffs().size() == 3);
  CHECK(s3.odd_coeffs()[1] < 0L);
}

TEST_CASE("monomial coefficients of Q_m") {
  const Mp pi = Mp::pi();
  auto q1 = taylor_coeffs_at_zero(build_poly(TrigFunction::sin_pi_x, 1));
  REQUIRE(q1.size() == 3);
  CHECK(q1[0] == 0L);
  CHECK(oracle::rel_err(q1[1], pi) < 1e-60);
  CHECK(oracle::rel_err(q1[2], -pi) < 1e-60);

  auto q2 = taylor_coeffs_at_zero(build_poly(TrigFunction::sin_pi_x, 2));
  REQUIRE(q2.size() == 5);
  CHECK(oracle::rel_err(q2[1], pi) < 1e-60);
  CHECK(abs(q2[2]) < ExtReal(1e-60, 64));

  auto q3 = taylor_coeffs_at_zero(build_poly(TrigFunction::sin_pi_x, 3));
  CHECK(oracle::rel_err(q3[3], -oracle::pow(pi, 3) / Mp(6)) < 1e-60);

  for (int m = 1; m <= 8; ++m) CHECK(taylor_coeffs_at_zero(build_poly(TrigFunction::sin_pi_x, m))[0] == 0L);
  CHECK_THROWS_CODE(taylor_coeffs_at_zero(build_poly(TrigFunction::cos_pi_x, 2)), Errc::invalid_argument);
}

TEST_CASE("bracketing and bound on sampled points") {
  const mpfr_prec_t bits = working_bits(50);
  for (TrigFunction func : {TrigFunction::sin_pi_x, TrigFunction::cos_pi_x}) {
    Domain d = certified_domain(func);
    for (int m = 1; m <= 6; ++m) {
      ApproxPolynomial a = build_poly(func, m);
      ApproxPolynomial b = build_poly(func, m + 1);
      for (int i = 1; i < 50; ++i) {
        double x = d.lo + (d.hi - d.lo) * i / 50;
        ExtReal xe(x, bits);
        ExtReal ref = reference_value(func, xe);
        CHECK(a.eval_hp(xe) < b.eval_hp(xe));
        CHECK(b.eval_hp(xe) < ref);
        ExtReal err = ref - a.eval_hp(xe);
        CHECK(err.to_double() < error_bound(func, m, x).bound);
      }
    }
  }
}
