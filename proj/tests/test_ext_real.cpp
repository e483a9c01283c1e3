#include <cmath>

#include "oracle.hpp"
#include "support.hpp"
#include "trigpoly/ext_real.hpp"
#include "trigpoly/interval.hpp"

using namespace trigpoly;

TEST_CASE("precision helpers") {
  CHECK(bits_for_digits(50) >= 167);
  CHECK(working_bits(50) == bits_for_digits(70));
  CHECK_NOTHROW(require_digits(30));
  CHECK_THROWS_CODE(require_digits(29), Errc::precision_too_low);
  CHECK(ExtReal(1L, bits_for_digits(40)).digits() >= 40);
}

TEST_CASE("arithmetic is correctly rounded at the larger precision") {
  const mpfr_prec_t bits = working_bits(50);
  ExtReal third = ExtReal(1L, bits) / 3L;
  CHECK(third.bits() == bits);
  ExtReal low(1L, 64);
  CHECK((low + third).bits() == bits);
  CHECK(oracle::rel_err(third, oracle::Mp(1) / oracle::Mp(3)) < 1e-69);
  CHECK(oracle::rel_err(sqrt(ExtReal(2L, bits)), oracle::sqrt(oracle::Mp(2))) < 1e-69);
  CHECK(pow(ExtReal(3L, bits), 4) == 81L);
  CHECK(ExtReal(2.5, 64) > 2L);
  CHECK(ExtReal(2.5, 64) < 3.0);
}

TEST_CASE("parse") {
  const mpfr_prec_t bits = working_bits(50);
  CHECK(ExtReal::parse("0.25", bits) == 0.25);
  CHECK(ExtReal::parse("-1e-3", bits) < 0L);
  CHECK_THROWS_CODE(ExtReal::parse("", bits), Errc::invalid_argument);
  CHECK_THROWS_CODE(ExtReal::parse("1.5x", bits), Errc::invalid_argument);
  CHECK_THROWS_CODE(ExtReal::parse("inf", bits), Errc::invalid_argument);
}

TEST_CASE("sin_pi and cos_pi are exact at multiples of one half") {
  const mpfr_prec_t bits = working_bits(50);
  for (long k = -8; k <= 8; ++k) {
    ExtReal x = ExtReal(k, bits) / 2L;
    ExtReal s = sin_pi(x);
    ExtReal c = cos_pi(x);
    constexpr long kSin[] = {0, 1, 0, -1};
    CHECK(s == kSin[((k % 4) + 4) % 4]);
    CHECK(abs(s).to_double() + abs(c).to_double() == 1.0);
  }
  CHECK(sin_pi(ExtReal(0.5, bits)) == 1L);
  CHECK(cos_pi(ExtReal(1L, bits)) == -1L);
  CHECK(sin_pi(ExtReal(-0.5, bits)) == -1L);
}

TEST_CASE("sin_pi agrees with the oracle away from the zeros") {
  const mpfr_prec_t bits = working_bits(50);
  for (double x : {0.1, 0.3333, 0.77, 1.9, -2.6, 1e-9}) {
    CHECK(oracle::rel_err(sin_pi(ExtReal(x, bits)), oracle::sin_pi(oracle::from(x))) < 1e-68);
    CHECK(oracle::rel_err(cos_pi(ExtReal(x, bits)), oracle::cos_pi(oracle::from(x))) < 1e-68);
  }
}

TEST_CASE("formatting") {
  const mpfr_prec_t bits = working_bits(50);
  CHECK(ExtReal(1L, bits).str(5) == "1");
  CHECK(ExtReal(0.125, bits).sci(3) == "1.25e-01");
  CHECK(ExtReal(0L, bits).sci(3) == "0.00e+00");
  CHECK((-ExtReal(0L, bits)).sci(3) == "0.00e+00");
  ExtReal third = ExtReal(1L, bits) / 3L;
  CHECK(third.sci(3, MPFR_RNDD) == "3.33e-01");
  CHECK(third.sci(3, MPFR_RNDU) == "3.34e-01");
}

TEST_CASE("directed helpers bound the exact result") {
  ExtReal a = ExtReal(1L, 64) / 3L;
  ExtReal b = ExtReal(2L, 64) / 7L;
  oracle::Mp exact = oracle::from(a) * oracle::from(b);
  CHECK(mpfr_cmp(mul_up(a, b).raw(), exact.get()) >= 0);
  CHECK(mpfr_cmp(add_up(a, b).raw(), (oracle::from(a) + oracle::from(b)).get()) >= 0);
  CHECK(mpfr_cmp(div_up(a, b).raw(), (oracle::from(a) / oracle::from(b)).get()) >= 0);
  CHECK(unit_roundoff(64) == std::ldexp(1.0, -63));
}

TEST_CASE("interval arithmetic encloses sampled point results") {
  const mpfr_prec_t bits = 80;
  IntervalValue a(ExtReal(-1.25, bits), ExtReal(0.75, bits));
  IntervalValue b(ExtReal(0.5, bits), ExtReal(2.0, bits));
  IntervalValue third = IntervalValue::from_ratio(1, 3, bits);
  CHECK(third.contains(ExtReal(1L, 400) / 3L));
  CHECK(IntervalValue::pi(bits).contains(ExtReal::pi(400)));

  IntervalValue sum = a + b;
  IntervalValue diff = a - b;
  IntervalValue prod = a * b;
  IntervalValue scaled = a * 7L;
  IntervalValue sq = pow(a, 2);
  IntervalValue cube = pow(a, 3);
  IntervalValue inv = b.reciprocal();
  IntervalValue mixed = (a * third + b) * a - third;
  CHECK(sq.lo() == 0L);
  for (int i = 0; i <= 16; ++i) {
    for (int k = 0; k <= 16; ++k) {
      oracle::Mp x = oracle::from(-1.25 + 2.0 * i / 16);
      oracle::Mp y = oracle::from(0.5 + 1.5 * k / 16);
      oracle::Mp t = oracle::Mp(1) / oracle::Mp(3);
      auto inside = [](const IntervalValue& iv, const oracle::Mp& v) {
        return mpfr_cmp(iv.lo().raw(), v.get()) <= 0 && mpfr_cmp(v.get(), iv.hi().raw()) <= 0;
      };
      CHECK(inside(sum, x + y));
      CHECK(inside(diff, x - y));
      CHECK(inside(prod, x * y));
      CHECK(inside(scaled, x * oracle::Mp(7)));
      CHECK(inside(sq, x * x));
      CHECK(inside(cube, x * x * x));
      CHECK(inside(inv, oracle::Mp(1) / y));
      CHECK(inside(mixed, (x * t + y) * x - t));
    }
  }
}

TEST_CASE("interval edge cases") {
  CHECK_THROWS_CODE(IntervalValue(ExtReal(1L, 64), ExtReal(0L, 64)), Errc::invalid_argument);
  IntervalValue straddle(ExtReal(-1L, 64), ExtReal(1L, 64));
  CHECK(straddle.contains_zero());
  CHECK_THROWS_CODE(straddle.reciprocal(), Errc::domain);
  IntervalValue x(ExtReal(0L, 64), ExtReal(2L, 64));
  IntervalValue y(ExtReal(1L, 64), ExtReal(3L, 64));
  IntervalValue both = intersect(x, y);
  CHECK(both.lo() == 1L);
  CHECK(both.hi() == 2L);
  CHECK(x.midpoint() == 1L);
  CHECK(x.width() == 2L);
}
