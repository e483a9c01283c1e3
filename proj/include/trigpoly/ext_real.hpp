#pragma once

// Extended-precision real numbers backed by MPFR.
//
// Every value carries its own binary precision. Binary operations produce a
// result at the larger of the two operand precisions, correctly rounded to
// nearest. Directed-rounding helpers are provided for error-bound bookkeeping
// and interval arithmetic.

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace trigpoly {

inline constexpr int kMinDigits = 30;
inline constexpr int kDefaultDigits = 50;
inline constexpr int kGuardDigits = 20;

/// Binary precision that holds at least `digits` significant decimal digits.
mpfr_prec_t bits_for_digits(int digits);

/// Working precision for a request of `digits`: the request plus guard digits.
mpfr_prec_t working_bits(int digits);

/// Throws Errc::precision_too_low when digits < kMinDigits.
void require_digits(int digits);

class ExtReal {
 public:
  ExtReal();
  explicit ExtReal(mpfr_prec_t bits);
  ExtReal(long value, mpfr_prec_t bits);
  ExtReal(int value, mpfr_prec_t bits) : ExtReal(static_cast<long>(value), bits) {}
  ExtReal(double value, mpfr_prec_t bits);
  ExtReal(const mpz_class& value, mpfr_prec_t bits);
  ExtReal(const mpq_class& value, mpfr_prec_t bits);

  /// Parses a decimal literal; throws Errc::invalid_argument on bad input.
  static ExtReal parse(std::string_view text, mpfr_prec_t bits);
  static ExtReal pi(mpfr_prec_t bits, mpfr_rnd_t rnd = MPFR_RNDN);

  ExtReal(const ExtReal& other);
  ExtReal(ExtReal&& other) noexcept;
  ExtReal& operator=(const ExtReal& other);
  ExtReal& operator=(ExtReal&& other) noexcept;
  ~ExtReal();

  mpfr_prec_t bits() const { return mpfr_get_prec(value_); }
  /// Decimal digits resolvable at this precision.
  int digits() const;
  /// Copy rounded to another precision.
  ExtReal rounded(mpfr_prec_t bits, mpfr_rnd_t rnd = MPFR_RNDN) const;

  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }

  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }
  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }

  /// Shortest "%g"-style rendering with `significant` digits.
  std::string str(int significant) const;
  /// Scientific rendering with `significant` digits, e.g. "2.46093e-07".
  std::string sci(int significant, mpfr_rnd_t rnd = MPFR_RNDN) const;

  ExtReal operator-() const;

  ExtReal& operator+=(const ExtReal& rhs);
  ExtReal& operator-=(const ExtReal& rhs);
  ExtReal& operator*=(const ExtReal& rhs);
  ExtReal& operator/=(const ExtReal& rhs);
  ExtReal& operator+=(long rhs);
  ExtReal& operator-=(long rhs);
  ExtReal& operator*=(long rhs);
  ExtReal& operator/=(long rhs);
  ExtReal& operator*=(const mpz_class& rhs);
  ExtReal& operator/=(const mpz_class& rhs);

  friend ExtReal operator+(ExtReal lhs, const ExtReal& rhs) { return lhs += rhs; }
  friend ExtReal operator-(ExtReal lhs, const ExtReal& rhs) { return lhs -= rhs; }
  friend ExtReal operator*(ExtReal lhs, const ExtReal& rhs) { return lhs *= rhs; }
  friend ExtReal operator/(ExtReal lhs, const ExtReal& rhs) { return lhs /= rhs; }
  friend ExtReal operator+(ExtReal lhs, long rhs) { return lhs += rhs; }
  friend ExtReal operator-(ExtReal lhs, long rhs) { return lhs -= rhs; }
  friend ExtReal operator*(ExtReal lhs, long rhs) { return lhs *= rhs; }
  friend ExtReal operator/(ExtReal lhs, long rhs) { return lhs /= rhs; }
  friend ExtReal operator*(ExtReal lhs, const mpz_class& rhs) { return lhs *= rhs; }
  friend ExtReal operator/(ExtReal lhs, const mpz_class& rhs) { return lhs /= rhs; }
  friend ExtReal operator+(long lhs, const ExtReal& rhs) { return rhs + lhs; }
  friend ExtReal operator-(long lhs, const ExtReal& rhs) { return -(rhs - lhs); }
  friend ExtReal operator*(long lhs, const ExtReal& rhs) { return rhs * lhs; }
  friend ExtReal operator/(long lhs, const ExtReal& rhs);

  friend bool operator==(const ExtReal& a, const ExtReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const ExtReal& a, const ExtReal& b);
  friend bool operator==(const ExtReal& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const ExtReal& a, long b);
  friend bool operator==(const ExtReal& a, double b) { return mpfr_cmp_d(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const ExtReal& a, double b);

 private:
  mpfr_t value_;
};

ExtReal abs(const ExtReal& x);
ExtReal sqrt(const ExtReal& x);
ExtReal pow(const ExtReal& x, long n);
ExtReal sin(const ExtReal& x);
ExtReal cos(const ExtReal& x);
ExtReal log10(const ExtReal& x);
ExtReal max(const ExtReal& a, const ExtReal& b);
ExtReal min(const ExtReal& a, const ExtReal& b);

/// sin(pi x) and cos(pi x) to the precision of x.
ExtReal sin_pi(const ExtReal& x);
ExtReal cos_pi(const ExtReal& x);

/// 10^-digits at the given precision.
ExtReal ten_to_minus(int digits, mpfr_prec_t bits);

/// Unit roundoff 2^(1-bits) of a precision, as a value.
ExtReal unit_roundoff(mpfr_prec_t bits);

// Upward-rounded arithmetic on non-negative bounds. Results use the larger
// operand precision (at least 64 bits).
ExtReal add_up(const ExtReal& a, const ExtReal& b);
ExtReal mul_up(const ExtReal& a, const ExtReal& b);
ExtReal div_up(const ExtReal& a, const ExtReal& b);
ExtReal abs_up(const ExtReal& a, mpfr_prec_t bits = 64);

/// A value together with an upper bound on its absolute error.
struct CertifiedValue {
  ExtReal value;
  ExtReal bound;
};

}  // namespace trigpoly
