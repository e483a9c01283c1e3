#include "trigpoly/interval.hpp"

#include <algorithm>
#include <utility>

#include "trigpoly/errors.hpp"

namespace trigpoly {

namespace {

mpfr_prec_t wider(const IntervalValue& a, const IntervalValue& b) { return std::max(a.bits(), b.bits()); }

}  // namespace

IntervalValue::IntervalValue(mpfr_prec_t bits) : lo_(bits), hi_(bits) {}

IntervalValue::IntervalValue(const ExtReal& point, mpfr_prec_t bits)
    : lo_(point.rounded(bits, MPFR_RNDD)), hi_(point.rounded(bits, MPFR_RNDU)) {}

IntervalValue::IntervalValue(ExtReal lo, ExtReal hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!(lo_ <= hi_)) throw Error(Errc::invalid_argument, "interval requires lo <= hi");
  mpfr_prec_t bits = std::max(lo_.bits(), hi_.bits());
  if (lo_.bits() != bits) lo_ = lo_.rounded(bits, MPFR_RNDD);
  if (hi_.bits() != bits) hi_ = hi_.rounded(bits, MPFR_RNDU);
}

IntervalValue IntervalValue::from_long(long value, mpfr_prec_t bits) {
  return IntervalValue(ExtReal(value, 64), bits);
}

IntervalValue IntervalValue::from_ratio(long p, long q, mpfr_prec_t bits) {
  if (q == 0) throw Error(Errc::invalid_argument, "zero denominator");
  mpq_class r(p, q);
  r.canonicalize();
  IntervalValue out(bits);
  mpfr_set_q(out.lo_.raw(), r.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_.raw(), r.get_mpq_t(), MPFR_RNDU);
  return out;
}

IntervalValue IntervalValue::from_certified(const CertifiedValue& cv) {
  mpfr_prec_t bits = cv.value.bits();
  IntervalValue out(bits);
  mpfr_sub(out.lo_.raw(), cv.value.raw(), cv.bound.raw(), MPFR_RNDD);
  mpfr_add(out.hi_.raw(), cv.value.raw(), cv.bound.raw(), MPFR_RNDU);
  return out;
}

IntervalValue IntervalValue::pi(mpfr_prec_t bits) {
  return IntervalValue(ExtReal::pi(bits, MPFR_RNDD), ExtReal::pi(bits, MPFR_RNDU));
}

ExtReal IntervalValue::width() const {
  ExtReal out(bits());
  mpfr_sub(out.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
  return out;
}

ExtReal IntervalValue::midpoint() const {
  ExtReal out(bits() + 1);
  mpfr_add(out.raw(), lo_.raw(), hi_.raw(), MPFR_RNDN);
  mpfr_div_2ui(out.raw(), out.raw(), 1, MPFR_RNDN);
  return out;
}

IntervalValue IntervalValue::operator-() const {
  IntervalValue out(bits());
  mpfr_neg(out.lo_.raw(), hi_.raw(), MPFR_RNDD);
  mpfr_neg(out.hi_.raw(), lo_.raw(), MPFR_RNDU);
  return out;
}

IntervalValue& IntervalValue::operator+=(const IntervalValue& rhs) {
  IntervalValue out(wider(*this, rhs));
  mpfr_add(out.lo_.raw(), lo_.raw(), rhs.lo_.raw(), MPFR_RNDD);
  mpfr_add(out.hi_.raw(), hi_.raw(), rhs.hi_.raw(), MPFR_RNDU);
  return *this = std::move(out);
}

IntervalValue& IntervalValue::operator-=(const IntervalValue& rhs) {
  IntervalValue out(wider(*this, rhs));
  mpfr_sub(out.lo_.raw(), lo_.raw(), rhs.hi_.raw(), MPFR_RNDD);
  mpfr_sub(out.hi_.raw(), hi_.raw(), rhs.lo_.raw(), MPFR_RNDU);
  return *this = std::move(out);
}

IntervalValue& IntervalValue::operator*=(const IntervalValue& rhs) {
  mpfr_prec_t bits = wider(*this, rhs);
  const ExtReal* a[2] = {&lo_, &hi_};
  const ExtReal* b[2] = {&rhs.lo_, &rhs.hi_};
  ExtReal lo(bits), hi(bits), tmp(bits);
  bool first = true;
  for (const ExtReal* x : a) {
    for (const ExtReal* y : b) {
      mpfr_mul(tmp.raw(), x->raw(), y->raw(), MPFR_RNDD);
      if (first || tmp < lo) lo = tmp;
      mpfr_mul(tmp.raw(), x->raw(), y->raw(), MPFR_RNDU);
      if (first || tmp > hi) hi = tmp;
      first = false;
    }
  }
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  return *this;
}

IntervalValue& IntervalValue::operator*=(long rhs) {
  IntervalValue out(bits());
  if (rhs >= 0) {
    mpfr_mul_si(out.lo_.raw(), lo_.raw(), rhs, MPFR_RNDD);
    mpfr_mul_si(out.hi_.raw(), hi_.raw(), rhs, MPFR_RNDU);
  } else {
    mpfr_mul_si(out.lo_.raw(), hi_.raw(), rhs, MPFR_RNDD);
    mpfr_mul_si(out.hi_.raw(), lo_.raw(), rhs, MPFR_RNDU);
  }
  return *this = std::move(out);
}

IntervalValue IntervalValue::reciprocal() const {
  if (contains_zero()) throw Error(Errc::domain, "reciprocal of an interval containing zero");
  IntervalValue out(bits());
  mpfr_ui_div(out.lo_.raw(), 1, hi_.raw(), MPFR_RNDD);
  mpfr_ui_div(out.hi_.raw(), 1, lo_.raw(), MPFR_RNDU);
  return out;
}

std::string IntervalValue::str(int significant) const {
  return "[" + lo_.sci(significant) + ", " + hi_.sci(significant) + "]";
}

IntervalValue pow(const IntervalValue& x, unsigned n) {
  mpfr_prec_t bits = x.bits();
  if (n == 0) return IntervalValue::from_long(1, bits);
  ExtReal lo(bits), hi(bits);
  if (x.lo().sign() >= 0) {
    mpfr_pow_ui(lo.raw(), x.lo().raw(), n, MPFR_RNDD);
    mpfr_pow_ui(hi.raw(), x.hi().raw(), n, MPFR_RNDU);
  } else if (x.hi().sign() <= 0) {
    if (n % 2 == 1) {
      mpfr_pow_ui(lo.raw(), x.lo().raw(), n, MPFR_RNDD);
      mpfr_pow_ui(hi.raw(), x.hi().raw(), n, MPFR_RNDU);
    } else {
      mpfr_pow_ui(lo.raw(), x.hi().raw(), n, MPFR_RNDD);
      mpfr_pow_ui(hi.raw(), x.lo().raw(), n, MPFR_RNDU);
    }
  } else if (n % 2 == 1) {
    mpfr_pow_ui(lo.raw(), x.lo().raw(), n, MPFR_RNDD);
    mpfr_pow_ui(hi.raw(), x.hi().raw(), n, MPFR_RNDU);
  } else {
    ExtReal a(bits), b(bits);
    mpfr_pow_ui(a.raw(), x.lo().raw(), n, MPFR_RNDU);
    mpfr_pow_ui(b.raw(), x.hi().raw(), n, MPFR_RNDU);
    hi = max(a, b);
  }
  return IntervalValue(std::move(lo), std::move(hi));
}

IntervalValue intersect(const IntervalValue& a, const IntervalValue& b) {
  ExtReal lo = max(a.lo(), b.lo());
  ExtReal hi = min(a.hi(), b.hi());
  if (hi < lo) throw Error(Errc::domain, "disjoint intervals");
  return IntervalValue(std::move(lo), std::move(hi));
}

}  // namespace trigpoly
