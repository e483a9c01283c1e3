#include "oracle.hpp"
#include "support.hpp"
#include "trigpoly/prover.hpp"

using namespace trigpoly;
using oracle::Mp;

namespace {

IntervalPolynomial exact_poly(std::initializer_list<long> coeffs) {
  IntervalPolynomial p;
  for (long c : coeffs) p.push_back(IntervalValue::from_long(c, 128));
  return p;
}

void check_tiling(const PositivityProof& proof) {
  REQUIRE_FALSE(proof.subintervals.empty());
  CHECK(proof.subintervals.front().x.lo() == proof.domain.lo());
  CHECK(proof.subintervals.back().x.hi() == proof.domain.hi());
  for (std::size_t i = 0; i + 1 < proof.subintervals.size(); ++i) {
    CHECK(proof.subintervals[i].x.hi() == proof.subintervals[i + 1].x.lo());
  }
  for (const auto& t : proof.subintervals) {
    CHECK(t.lower_bound > 0L);
    CHECK(t.depth <= proof.max_depth_used);
  }
}

}  // namespace

TEST_CASE("polynomial helpers") {
  IntervalPolynomial p = exact_poly({1, -3, 2});  // 2x^2 - 3x + 1
  IntervalPolynomial d = derivative(p);
  REQUIRE(d.size() == 2);
  CHECK(d[0].lo() == -3L);
  CHECK(d[1].lo() == 4L);
  IntervalPolynomial sq = multiply(p, p);
  REQUIRE(sq.size() == 5);
  CHECK(sq[4].lo() == 4L);
  CHECK(sq[0].lo() == 1L);
  IntervalPolynomial p2 = dilate_by_two(p);
  CHECK(p2[2].lo() == 8L);
  CHECK(add(p, exact_poly({1}))[0].lo() == 2L);
  CHECK(horner(p, IntervalValue::from_long(3, 128)).lo() == 10L);
  IntervalValue x(ExtReal(0L, 128), ExtReal(1L, 128));
  IntervalValue v = enclose(p, d, x);
  // p on [0, 1] has range [-1/8, 1].
  CHECK(v.lo() <= ExtReal(-0.125, 64));
  CHECK(v.hi() >= 1L);
}

TEST_CASE("prove_positive on simple polynomials") {
  // x^2 - x + 1/2 > 0 everywhere, minimum 1/4 at 1/2.
  IntervalPolynomial p = {IntervalValue::from_ratio(1, 2, 128), IntervalValue::from_long(-1, 128),
                          IntervalValue::from_long(1, 128)};
  PositivityProof proof = prove_positive(p, ExtReal(0L, 128), ExtReal(1L, 128), 20);
  CHECK(proof.proved());
  check_tiling(proof);
  CHECK(proof.min_lower_bound() <= ExtReal(0.25, 64));

  // (x - 1/2)^2 has a zero: never proved.
  IntervalPolynomial z = {IntervalValue::from_ratio(1, 4, 128), IntervalValue::from_long(-1, 128),
                          IntervalValue::from_long(1, 128)};
  PositivityProof fail = prove_positive(z, ExtReal(0L, 128), ExtReal(1L, 128), 30);
  CHECK_FALSE(fail.proved());
  REQUIRE(fail.unresolved.has_value());
  CHECK(fail.unresolved->contains(ExtReal(0.5, 64)));

  // A negative polynomial stops at once.
  PositivityProof neg = prove_positive(exact_poly({-1}), ExtReal(0L, 128), ExtReal(1L, 128), 10);
  CHECK_FALSE(neg.proved());
  CHECK(neg.subintervals.empty());
  CHECK_THROWS_CODE(neg.min_lower_bound(), Errc::invalid_argument);
  CHECK_THROWS_CODE(prove_positive(p, ExtReal(0L, 128), ExtReal(1L, 128), -1), Errc::invalid_argument);
}

TEST_CASE("the example inequality is proved") {
  ExampleProof ex = prove_example_inequality();
  CHECK(ex.proof.proved());
  CHECK(ex.envelope_nonnegative);
  check_tiling(ex.proof);
  CHECK(ex.proof.domain.lo() == 0L);
  CHECK(ex.proof.domain.hi() == 0.5);
  CHECK(ex.proof.max_depth_used <= kDefaultProofDepth);
  // min f_4 is about 5.1e-5, so every lower bound stays below it.
  CHECK(ex.proof.min_lower_bound() < ExtReal(5.2e-5, 64));
  CHECK(prove_example_inequality(20).proof.proved());
  CHECK_THROWS_CODE(prove_example_inequality(7), Errc::invalid_argument);
  CHECK_THROWS_CODE(prove_example_inequality(24, 20), Errc::precision_too_low);
}

TEST_CASE("tightened variants are never proved") {
  // f_4 - 1e-4 is negative near x = 0.12.
  ExampleProof shifted = prove_example_inequality(24, 50, 1e-4);
  CHECK_FALSE(shifted.proof.proved());
  REQUIRE(shifted.proof.unresolved.has_value());
  // Depth 8 cannot separate a margin of 1e-7 from zero.
  ExampleProof shallow = prove_example_inequality(8, 50, 5.1e-5);
  CHECK_FALSE(shallow.proof.proved());
}

TEST_CASE("the interval polynomial encloses the oracle f_4") {
  IntervalPolynomial f4 = example_envelope_polynomial();
  REQUIRE(f4.size() == 17);
  for (int i = 0; i <= 20; ++i) {
    Mp x = oracle::from(i / 40.0);
    IntervalValue v = horner(f4, IntervalValue(ExtReal(i / 40.0, 300), 300));
    Mp exact = oracle::f4(x);
    CHECK(mpfr_cmp(v.lo().raw(), exact.get()) <= 0);
    CHECK(mpfr_cmp(exact.get(), v.hi().raw()) <= 0);
  }
  // Q_4 coefficients: x^1 is pi.
  ExampleProof ex = prove_example_inequality();
  CHECK(ex.envelope[1].contains(ExtReal::pi(400)));
}

TEST_CASE("f and f_4 values") {
  const mpfr_prec_t bits = working_bits(50);
  CHECK(oracle::rel_err(oracle::f4(Mp(1) / Mp(2)), Mp::parse("1.00497672485133209192657651303")) < 1e-29);
  CHECK(oracle::rel_err(oracle::f(Mp(1) / Mp(2)), Mp::parse("1.00501391358314661599548015012")) < 1e-29);
  CHECK(oracle::rel_err(example_function(ExtReal(0.5, bits)), oracle::f(Mp(1) / Mp(2))) < 1e-60);
  ApproxPolynomial q4 = build_poly(TrigFunction::sin_pi_x, 4);
  CHECK(oracle::rel_err(example_lower_envelope(ExtReal(0.5, bits), q4), oracle::f4(Mp(1) / Mp(2))) < 1e-60);
  CHECK(oracle::rel_err(example_function(ExtReal(0L, bits)), Mp(4) / Mp(9)) < 1e-60);
}

TEST_CASE("curve samples") {
  auto curves = example_curves(101);
  REQUIRE(curves.size() == 101);
  CHECK(curves.front().x == 0.0);
  CHECK(curves.back().x == 0.5);
  CHECK(curves.front().f_minus_f4 == 0L);
  CHECK(oracle::rel_err(curves.front().f, Mp(4) / Mp(9)) < 1e-60);
  for (const auto& s : curves) {
    CHECK(s.f_minus_f4.sign() >= 0);
    CHECK(s.f > 0L);
  }
  CHECK_THROWS_CODE(example_curves(1), Errc::invalid_argument);
}
