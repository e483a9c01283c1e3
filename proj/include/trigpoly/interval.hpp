#pragma once

#include <string>

#include "trigpoly/ext_real.hpp"

namespace trigpoly {

/// Closed interval [lo, hi] with outward-rounded arithmetic: the exact result
/// of an operation on any points of the operands lies in the computed result.
class IntervalValue {
 public:
  explicit IntervalValue(mpfr_prec_t bits = 128);
  /// Degenerate interval; exact when `point` fits in `bits`.
  IntervalValue(const ExtReal& point, mpfr_prec_t bits);
  explicit IntervalValue(const ExtReal& point) : IntervalValue(point, point.bits()) {}
  /// Throws Errc::invalid_argument unless lo <= hi.
  IntervalValue(ExtReal lo, ExtReal hi);

  static IntervalValue from_long(long value, mpfr_prec_t bits);
  /// Enclosure of a rational p/q.
  static IntervalValue from_ratio(long p, long q, mpfr_prec_t bits);
  /// Enclosure of the certified value [v - bound, v + bound].
  static IntervalValue from_certified(const CertifiedValue& cv);
  static IntervalValue pi(mpfr_prec_t bits);

  const ExtReal& lo() const { return lo_; }
  const ExtReal& hi() const { return hi_; }
  mpfr_prec_t bits() const { return lo_.bits(); }

  ExtReal width() const;
  ExtReal midpoint() const;
  bool contains(const ExtReal& x) const { return lo_ <= x && x <= hi_; }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool positive() const { return lo_.sign() > 0; }

  IntervalValue operator-() const;
  IntervalValue& operator+=(const IntervalValue& rhs);
  IntervalValue& operator-=(const IntervalValue& rhs);
  IntervalValue& operator*=(const IntervalValue& rhs);
  IntervalValue& operator*=(long rhs);

  friend IntervalValue operator+(IntervalValue a, const IntervalValue& b) { return a += b; }
  friend IntervalValue operator-(IntervalValue a, const IntervalValue& b) { return a -= b; }
  friend IntervalValue operator*(IntervalValue a, const IntervalValue& b) { return a *= b; }
  friend IntervalValue operator*(IntervalValue a, long b) { return a *= b; }
  friend IntervalValue operator*(long a, IntervalValue b) { return b *= a; }

  /// Reciprocal; throws Errc::domain when the interval contains zero.
  IntervalValue reciprocal() const;

  std::string str(int significant) const;

 private:
  ExtReal lo_;
  ExtReal hi_;
};

/// Tight enclosure of x^n: even powers of a zero-straddling interval start at 0.
IntervalValue pow(const IntervalValue& x, unsigned n);
IntervalValue intersect(const IntervalValue& a, const IntervalValue& b);

}  // namespace trigpoly
