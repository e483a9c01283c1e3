#include "trigpoly/ext_real.hpp"

#include <algorithm>
#include <clocale>
#include <cmath>
#include <cstring>
#include <string>
#include <string_view>

#include "trigpoly/errors.hpp"

namespace trigpoly {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::precision_too_low: return "precision-too-low";
    case Errc::overflow_guard: return "overflow-guard";
    case Errc::domain: return "domain";
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::limit_exceeded: return "limit-exceeded";
    case Errc::io: return "io";
  }
  return "unknown";
}

mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 2;
}

mpfr_prec_t working_bits(int digits) { return bits_for_digits(digits + kGuardDigits); }

void require_digits(int digits) {
  if (digits < kMinDigits) {
    throw Error(Errc::precision_too_low,
                "requested " + std::to_string(digits) + " digits; at least " +
                    std::to_string(kMinDigits) + " are required");
  }
}

namespace {

// Raise the precision of `dst` to at least `bits`, keeping its value exactly.
void widen(mpfr_ptr dst, mpfr_prec_t bits) {
  if (mpfr_get_prec(dst) < bits) mpfr_prec_round(dst, bits, MPFR_RNDN);
}

// MPFR formatting follows the C locale; output always uses '.'.
std::string take_formatted(char* buf) {
  std::string out(buf);
  mpfr_free_str(buf);
  const char* point = std::localeconv()->decimal_point;
  if (point != nullptr && std::string_view(point) != ".") {
    if (auto pos = out.find(point); pos != std::string::npos) out.replace(pos, std::strlen(point), ".");
  }
  return out;
}

std::partial_ordering order_from_cmp(int c, bool unordered) {
  if (unordered) return std::partial_ordering::unordered;
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

}  // namespace

ExtReal::ExtReal() : ExtReal(working_bits(kDefaultDigits)) {}

ExtReal::ExtReal(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

ExtReal::ExtReal(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

ExtReal::ExtReal(double value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

ExtReal::ExtReal(const mpz_class& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

ExtReal::ExtReal(const mpq_class& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

ExtReal ExtReal::parse(std::string_view text, mpfr_prec_t bits) {
  ExtReal out(bits);
  std::string s(text);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(out.value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw Error(Errc::invalid_argument, "not a real number: '" + s + "'");
  }
  if (!out.is_finite()) throw Error(Errc::invalid_argument, "not a finite number: '" + s + "'");
  return out;
}

ExtReal ExtReal::pi(mpfr_prec_t bits, mpfr_rnd_t rnd) {
  ExtReal out(bits);
  mpfr_const_pi(out.value_, rnd);
  return out;
}

ExtReal::ExtReal(const ExtReal& other) {
  mpfr_init2(value_, other.bits());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

ExtReal::ExtReal(ExtReal&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

ExtReal& ExtReal::operator=(const ExtReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

ExtReal& ExtReal::operator=(ExtReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

ExtReal::~ExtReal() { mpfr_clear(value_); }

int ExtReal::digits() const { return static_cast<int>(std::floor((bits() - 1) * 0.30102999566398120)); }

ExtReal ExtReal::rounded(mpfr_prec_t bits, mpfr_rnd_t rnd) const {
  ExtReal out(bits);
  mpfr_set(out.value_, value_, rnd);
  return out;
}

std::string ExtReal::str(int significant) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", significant, value_);
  return take_formatted(buf);
}

std::string ExtReal::sci(int significant, mpfr_rnd_t rnd) const {
  char* buf = nullptr;
  // Print zero without its sign.
  mpfr_srcptr v = value_;
  mpfr_t zero;
  if (is_zero()) {
    mpfr_init2(zero, 2);
    mpfr_set_zero(zero, 1);
    v = zero;
  }
  mpfr_asprintf(&buf, "%.*R*e", std::max(significant - 1, 0), rnd, v);
  if (is_zero()) mpfr_clear(zero);
  return take_formatted(buf);
}

ExtReal ExtReal::operator-() const {
  ExtReal out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

ExtReal& ExtReal::operator+=(const ExtReal& rhs) {
  widen(value_, rhs.bits());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

ExtReal& ExtReal::operator-=(const ExtReal& rhs) {
  widen(value_, rhs.bits());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

ExtReal& ExtReal::operator*=(const ExtReal& rhs) {
  widen(value_, rhs.bits());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

ExtReal& ExtReal::operator/=(const ExtReal& rhs) {
  widen(value_, rhs.bits());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

ExtReal& ExtReal::operator+=(long rhs) {
  mpfr_add_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

ExtReal& ExtReal::operator-=(long rhs) {
  mpfr_sub_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

ExtReal& ExtReal::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

ExtReal& ExtReal::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

ExtReal& ExtReal::operator*=(const mpz_class& rhs) {
  mpfr_mul_z(value_, value_, rhs.get_mpz_t(), MPFR_RNDN);
  return *this;
}

ExtReal& ExtReal::operator/=(const mpz_class& rhs) {
  mpfr_div_z(value_, value_, rhs.get_mpz_t(), MPFR_RNDN);
  return *this;
}

ExtReal operator/(long lhs, const ExtReal& rhs) {
  ExtReal out(rhs.bits());
  mpfr_si_div(out.value_, lhs, rhs.value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
  bool unordered = mpfr_unordered_p(a.value_, b.value_) != 0;
  return order_from_cmp(unordered ? 0 : mpfr_cmp(a.value_, b.value_), unordered);
}

std::partial_ordering operator<=>(const ExtReal& a, long b) {
  bool unordered = mpfr_nan_p(a.value_) != 0;
  return order_from_cmp(unordered ? 0 : mpfr_cmp_si(a.value_, b), unordered);
}

std::partial_ordering operator<=>(const ExtReal& a, double b) {
  bool unordered = mpfr_nan_p(a.value_) != 0 || std::isnan(b);
  return order_from_cmp(unordered ? 0 : mpfr_cmp_d(a.value_, b), unordered);
}

ExtReal abs(const ExtReal& x) {
  ExtReal out(x);
  mpfr_abs(out.raw(), out.raw(), MPFR_RNDN);
  return out;
}

ExtReal sqrt(const ExtReal& x) {
  ExtReal out(x.bits());
  mpfr_sqrt(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

ExtReal pow(const ExtReal& x, long n) {
  ExtReal out(x.bits());
  mpfr_pow_si(out.raw(), x.raw(), n, MPFR_RNDN);
  return out;
}

ExtReal sin(const ExtReal& x) {
  ExtReal out(x.bits());
  mpfr_sin(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

ExtReal cos(const ExtReal& x) {
  ExtReal out(x.bits());
  mpfr_cos(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

ExtReal log10(const ExtReal& x) {
  ExtReal out(x.bits());
  mpfr_log10(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

ExtReal max(const ExtReal& a, const ExtReal& b) { return a < b ? b : a; }
ExtReal min(const ExtReal& a, const ExtReal& b) { return b < a ? b : a; }

namespace {

// sin(pi x) (or cos when `cosine`), exact at multiples of 1/2. The argument is
// reduced modulo 2 exactly before multiplying by pi.
ExtReal trig_pi(const ExtReal& x, bool cosine) {
  const mpfr_prec_t bits = x.bits();
  ExtReal two_x = x * 2L;  // exact: scaling by a power of two
  if (mpfr_integer_p(two_x.raw())) {
    ExtReal quarter(bits);
    mpfr_fmod(quarter.raw(), two_x.raw(), ExtReal(4L, 8).raw(), MPFR_RNDN);  // exact
    long k = mpfr_get_si(quarter.raw(), MPFR_RNDN);
    if (k < 0) k += 4;
    if (cosine) k = (k + 1) % 4;
    static constexpr long kSin[] = {0, 1, 0, -1};
    return ExtReal(kSin[k], bits);
  }
  ExtReal reduced(bits);
  mpfr_fmod(reduced.raw(), x.raw(), ExtReal(2L, 8).raw(), MPFR_RNDN);  // exact
  // Extra bits so that the rounding of pi * x does not dominate near zeros.
  ExtReal wide = reduced.rounded(bits + 32);
  ExtReal arg = ExtReal::pi(wide.bits()) * wide;
  return (cosine ? cos(arg) : sin(arg)).rounded(bits);
}

}  // namespace

ExtReal sin_pi(const ExtReal& x) { return trig_pi(x, false); }

ExtReal cos_pi(const ExtReal& x) { return trig_pi(x, true); }

ExtReal ten_to_minus(int digits, mpfr_prec_t bits) {
  ExtReal out(10L, bits);
  mpfr_pow_si(out.raw(), out.raw(), -digits, MPFR_RNDN);
  return out;
}

ExtReal unit_roundoff(mpfr_prec_t bits) {
  ExtReal out(1L, 64);
  mpfr_mul_2si(out.raw(), out.raw(), 1 - static_cast<long>(bits), MPFR_RNDN);
  return out;
}

namespace {

mpfr_prec_t bound_bits(const ExtReal& a, const ExtReal& b) {
  return std::max<mpfr_prec_t>({a.bits(), b.bits(), 64});
}

}  // namespace

ExtReal add_up(const ExtReal& a, const ExtReal& b) {
  ExtReal out(bound_bits(a, b));
  mpfr_add(out.raw(), a.raw(), b.raw(), MPFR_RNDU);
  return out;
}

ExtReal mul_up(const ExtReal& a, const ExtReal& b) {
  ExtReal out(bound_bits(a, b));
  mpfr_mul(out.raw(), a.raw(), b.raw(), MPFR_RNDU);
  return out;
}

ExtReal div_up(const ExtReal& a, const ExtReal& b) {
  ExtReal out(bound_bits(a, b));
  mpfr_div(out.raw(), a.raw(), b.raw(), MPFR_RNDU);
  return out;
}

ExtReal abs_up(const ExtReal& a, mpfr_prec_t bits) {
  ExtReal out(bits);
  mpfr_abs(out.raw(), a.raw(), MPFR_RNDU);
  return out;
}

}  // namespace trigpoly
