#include "trigpoly/coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "trigpoly/errors.hpp"

namespace trigpoly {

const char* to_string(Route route) {
  switch (route) {
    case Route::recurrence: return "recurrence";
    case Route::direct: return "direct";
    case Route::bessel: return "bessel";
  }
  return "unknown";
}

namespace {

// Precision escalation stops here; beyond it a run is reported as failed.
constexpr mpfr_prec_t kMaxEscalatedBits = mpfr_prec_t{1} << 17;

void require_index(int j, const CoefficientLimits& limits) {
  if (j < 1) throw Error(Errc::invalid_argument, "coefficient index must be >= 1, got " + std::to_string(j));
  if (j > limits.max_j) {
    throw Error(Errc::overflow_guard, "coefficient index " + std::to_string(j) + " exceeds the configured limit " +
                                          std::to_string(limits.max_j));
  }
}

void require_positive(const ExtReal& z) {
  if (!(z.sign() > 0)) throw Error(Errc::domain, "T_j(z) routines require z > 0");
}

// (1 + c u) rounded up, for inflating bounds by a small relative amount.
ExtReal inflation(long c, mpfr_prec_t bits) {
  ExtReal one(1L, 64);
  return add_up(one, mul_up(ExtReal(c, 64), unit_roundoff(bits)));
}

// Rounding contribution c * u * magnitude, rounded up.
ExtReal rounding_term(long c, mpfr_prec_t bits, const ExtReal& magnitude) {
  return mul_up(mul_up(ExtReal(c, 64), unit_roundoff(bits)), abs_up(magnitude));
}

// Sum of an alternating series whose terms are produced by `term(k)`. The
// tail certificate is used once |term(i+1)/term(i)| < 1 for all i > k, which
// `tail_decreasing(k)` reports. Stops when the next term is at most
// 10^-(stop_digits) times the partial sum.
template <class Term, class Decreasing>
CertifiedValue alternating_sum(Term term, Decreasing tail_decreasing, mpfr_prec_t bits, int stop_digits) {
  const ExtReal tol = ten_to_minus(stop_digits, bits);
  ExtReal sum(bits);
  ExtReal abs_sum(64);
  ExtReal current = term(0);
  for (int k = 0;; ++k) {
    sum += current;
    abs_sum = add_up(abs_sum, abs_up(current));
    ExtReal next = term(k + 1);
    if (tail_decreasing(k) && abs(next) <= tol * abs(sum)) {
      // First omitted term bounds the tail; every term carries a few
      // roundings per power of the argument.
      ExtReal bound = mul_up(abs_up(next), inflation(8L * (k + 2), bits));
      bound = add_up(bound, rounding_term(5L * (k + 1) + 12, bits, abs_sum));
      return {std::move(sum), std::move(bound)};
    }
    current = std::move(next);
  }
}

ExtReal pi_at(mpfr_prec_t bits) { return ExtReal::pi(bits); }

CertifiedValue general_series_bits(int j, const ExtReal& z, mpfr_prec_t bits, int stop_digits) {
  ExtReal zw = z.rounded(std::max(bits, z.bits()));
  auto term = [&](int k) {
    ExtReal t = pow(zw, k);
    t *= binomial(static_cast<unsigned long>(j + k), static_cast<unsigned long>(j));
    t /= factorial(static_cast<unsigned long>(2 * j + 2 * k));
    return (k % 2 == 0) ? t : -t;
  };
  // |a_{i+1}/a_i| = z / (2 (i+1) (2j+2i+1)), decreasing in i.
  auto decreasing = [&](int k) {
    long i = k + 1;
    return mpfr_cmp_si(zw.raw(), 2 * (i + 1) * (2L * j + 2 * i + 1)) < 0;
  };
  return alternating_sum(term, decreasing, bits, stop_digits);
}

ExtReal gamma_half_bits(int n, mpfr_prec_t bits) {
  mpz_class four_pow;
  mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, static_cast<unsigned long>(n));
  ExtReal out = sqrt(pi_at(bits));
  out *= factorial(2UL * n);
  out /= four_pow * factorial(static_cast<unsigned long>(n));
  return out;
}

CertifiedValue bessel_j_half_bits(int j, const ExtReal& x, mpfr_prec_t bits, int stop_digits) {
  ExtReal half = x.rounded(std::max(bits, x.bits())) / 2L;
  ExtReal half_sq = half * half;
  auto term = [&](int k) {
    ExtReal t = pow(half_sq, k);
    t /= factorial(static_cast<unsigned long>(k));
    t /= gamma_half_bits(j + k, bits);
    return (k % 2 == 0) ? t : -t;
  };
  // |b_{i+1}/b_i| = (x/2)^2 / ((i+1)(j+i+1/2)) = 2 (x/2)^2 / ((i+1)(2j+2i+1)).
  auto decreasing = [&](int k) {
    long i = k + 1;
    ExtReal lhs = half_sq * 2L;
    return mpfr_cmp_si(lhs.raw(), (i + 1) * (2L * j + 2 * i + 1)) < 0;
  };
  CertifiedValue series = alternating_sum(term, decreasing, bits, stop_digits);
  ExtReal prefactor = pow(half, j - 1) * sqrt(half);
  ExtReal value = prefactor * series.value;
  ExtReal bound = mul_up(abs_up(prefactor), series.bound);
  bound = add_up(bound, rounding_term(2L * j + 8, bits, value));
  return {std::move(value), std::move(bound)};
}

struct RecurrenceRun {
  std::vector<CertifiedValue> values;
  // log2 of the largest ratio bound / (u |value|); infinite when a value is zero.
  double log2_amplification = 0.0;
  bool resolved = true;
};

// Forward three-term recurrence v_j = A_j v_{j-1} - B_j v_{j-2} for j >= 2 with
// A_j, B_j > 0, tracking a first-order rigorous error bound:
//   e_j <= A_j e_{j-1} + B_j e_{j-2} + c u (A_j |v_{j-1}| + B_j |v_{j-2}|).
template <class Coefficients>
RecurrenceRun run_recurrence(int j_max, CertifiedValue seed0, CertifiedValue seed1, Coefficients coefficients,
                             mpfr_prec_t bits, int digits) {
  RecurrenceRun run;
  const ExtReal slack = inflation(16, bits);
  const ExtReal target = ten_to_minus(digits, 64);
  CertifiedValue prev2 = std::move(seed0);
  CertifiedValue prev1 = std::move(seed1);
  run.values.push_back(prev1);
  for (int j = 2; j <= j_max; ++j) {
    auto [a, b] = coefficients(j);
    ExtReal left = a * prev1.value;
    ExtReal right = b * prev2.value;
    ExtReal value = left - right;
    ExtReal a_up = mul_up(abs_up(a), slack);
    ExtReal b_up = mul_up(abs_up(b), slack);
    ExtReal bound = add_up(mul_up(a_up, prev1.bound), mul_up(b_up, prev2.bound));
    bound = add_up(bound, rounding_term(12, bits, add_up(abs_up(left), abs_up(right))));
    prev2 = std::move(prev1);
    prev1 = CertifiedValue{std::move(value), std::move(bound)};
    run.values.push_back(prev1);
  }
  const ExtReal u = unit_roundoff(bits);
  for (const auto& v : run.values) {
    if (v.value.is_zero() || !(v.bound < target * abs(v.value))) run.resolved = false;
    if (v.value.is_zero()) {
      run.log2_amplification = INFINITY;
      continue;
    }
    ExtReal ratio = div_up(v.bound, mul_up(u, abs_up(v.value)));
    mpfr_log2(ratio.raw(), ratio.raw(), MPFR_RNDU);
    run.log2_amplification = std::max(run.log2_amplification, ratio.to_double(MPFR_RNDU));
  }
  return run;
}

// Bits to request after a run at `bits` lost 2^log2_amplification ulps.
mpfr_prec_t escalate(mpfr_prec_t bits, mpfr_prec_t base_bits, double log2_amplification) {
  if (!std::isfinite(log2_amplification)) return bits * 2;
  mpfr_prec_t need = base_bits + static_cast<mpfr_prec_t>(std::ceil(std::max(log2_amplification, 0.0))) + 32;
  return std::max(need, bits + 64);
}

// Round to `bits`, adding the rounding error to the bound.
CertifiedValue round_certified(const CertifiedValue& v, mpfr_prec_t bits) {
  ExtReal value = v.value.rounded(bits);
  ExtReal bound = add_up(v.bound, rounding_term(1, bits, v.value));
  return {std::move(value), std::move(bound)};
}

}  // namespace

mpz_class factorial(unsigned long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

ExtReal pi_value(int digits) { return pi_at(working_bits(digits)); }

IntervalValue pi_enclosure(int digits) { return IntervalValue::pi(working_bits(digits)); }

// --- CoefficientTable -------------------------------------------------------

CoefficientTable::CoefficientTable(std::vector<CoefficientEntry> entries, int precision_digits)
    : entries_(std::move(entries)), precision_digits_(precision_digits) {
  const ExtReal target = ten_to_minus(precision_digits, 64);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    const std::string where = "table entry j=" + std::to_string(e.j);
    if (e.j != static_cast<int>(i) + 1) throw Error(Errc::invalid_argument, where + " is out of order");
    ExtReal lo(e.value.bits()), hi(e.value.bits());
    mpfr_sub(lo.raw(), e.value.raw(), e.trunc_bound.raw(), MPFR_RNDD);
    mpfr_add(hi.raw(), e.value.raw(), e.trunc_bound.raw(), MPFR_RNDU);
    if (!(lo.sign() > 0) || !(hi * factorial(2UL * e.j) < 1L)) {
      throw Error(Errc::invalid_argument, where + " violates 0 < t_j < 1/(2j)!");
    }
    if (!(e.trunc_bound < target * e.value)) {
      throw Error(Errc::invalid_argument, where + " has a certificate above 10^-digits t_j");
    }
  }
}

CoefficientTable CoefficientTable::unchecked(std::vector<CoefficientEntry> entries, int precision_digits) {
  CoefficientTable out;
  out.entries_ = std::move(entries);
  out.precision_digits_ = precision_digits;
  return out;
}

const CoefficientEntry& CoefficientTable::at(int j) const {
  if (j < 1 || j > max_j()) throw Error(Errc::invalid_argument, "no table entry for j=" + std::to_string(j));
  return entries_[static_cast<std::size_t>(j - 1)];
}

// --- direct series ----------------------------------------------------------

SeriesTerm series_term(int j, int k, int digits) {
  require_digits(digits);
  require_index(j, {});
  if (k < 0) throw Error(Errc::invalid_argument, "series index k must be >= 0");
  mpfr_prec_t bits = working_bits(digits);
  ExtReal pi = pi_at(bits);
  ExtReal z = pi * pi / 4L;
  ExtReal a = pow(z, k);
  a *= binomial(static_cast<unsigned long>(j + k), static_cast<unsigned long>(j));
  a /= factorial(static_cast<unsigned long>(2 * j + 2 * k));
  if (k % 2 == 1) a = -a;
  return {j, k, std::move(a)};
}

CertifiedValue coefficient_direct(int j, int digits, const CoefficientLimits& limits) {
  require_digits(digits);
  require_index(j, limits);
  mpfr_prec_t bits = working_bits(digits);
  ExtReal pi = pi_at(bits);
  return general_series_bits(j, pi * pi / 4L, bits, digits + 5);
}

ExtReal coefficient_partial_sum(int j, int last_k, int digits) {
  require_digits(digits);
  require_index(j, {});
  ExtReal sum(working_bits(digits));
  for (int k = 0; k <= last_k; ++k) sum += series_term(j, k, digits).a_jk;
  return sum;
}

// --- recurrence -------------------------------------------------------------

CoefficientTable coefficient_recurrence(int j_max, int digits, const CoefficientLimits& limits) {
  require_digits(digits);
  require_index(j_max, limits);
  const mpfr_prec_t base = working_bits(digits);
  for (mpfr_prec_t bits = base;;) {
    ExtReal pi = pi_at(bits);
    ExtReal pi2 = pi * pi;
    CertifiedValue t0{ExtReal(bits), ExtReal(64)};
    ExtReal inv_pi = 1L / pi;
    CertifiedValue t1{inv_pi, rounding_term(3, bits, inv_pi)};
    auto coefficients = [&](int j) {
      ExtReal a = ExtReal(2L * (2 * j - 3), bits) / (pi2 * static_cast<long>(j));
      ExtReal b = 1L / (pi2 * (static_cast<long>(j) * (j - 1)));
      return std::pair{std::move(a), std::move(b)};
    };
    RecurrenceRun run = run_recurrence(j_max, std::move(t0), std::move(t1), coefficients, bits, digits);
    if (run.resolved) {
      std::vector<CoefficientEntry> entries;
      entries.reserve(run.values.size());
      for (std::size_t i = 0; i < run.values.size(); ++i) {
        CertifiedValue v = round_certified(run.values[i], base);
        entries.push_back({static_cast<int>(i) + 1, std::move(v.value), Route::recurrence, std::move(v.bound)});
      }
      return CoefficientTable(std::move(entries), digits);
    }
    bits = escalate(bits, base, run.log2_amplification);
    if (bits > kMaxEscalatedBits) {
      throw Error(Errc::limit_exceeded, "recurrence needs more than " + std::to_string(kMaxEscalatedBits) + " bits");
    }
  }
}

// --- Bessel route -----------------------------------------------------------

ExtReal gamma_half(int n, int digits) {
  if (n < 0) throw Error(Errc::invalid_argument, "gamma_half requires n >= 0");
  return gamma_half_bits(n, working_bits(std::max(digits, 1)));
}

CertifiedValue bessel_j_half(int j, const ExtReal& x, int digits) {
  require_digits(digits);
  require_index(j, {});
  if (!(x.sign() > 0)) throw Error(Errc::domain, "bessel_j_half requires x > 0");
  return bessel_j_half_bits(j, x, working_bits(digits), digits + 5);
}

CertifiedValue coefficient_bessel(int j, int digits, const CoefficientLimits& limits) {
  require_digits(digits);
  require_index(j, limits);
  mpfr_prec_t bits = working_bits(digits);
  ExtReal pi = pi_at(bits);
  CertifiedValue bessel = bessel_j_half_bits(j, pi / 2L, bits, digits + 5);
  ExtReal prefactor = pow(pi, 1 - j) / (factorial(static_cast<unsigned long>(j)) * 2);
  ExtReal value = prefactor * bessel.value;
  ExtReal bound = mul_up(abs_up(prefactor), bessel.bound);
  // pi/2 and the prefactor are rounded; J_{j-1/2}(x) ~ x^{j-1/2} near 0 so the
  // relative sensitivity to the argument is about j.
  bound = add_up(bound, rounding_term(4L * j + 16, bits, value));
  return {std::move(value), std::move(bound)};
}

CoefficientTable coefficient_table(Route route, int j_max, int digits, const CoefficientLimits& limits) {
  if (route == Route::recurrence) return coefficient_recurrence(j_max, digits, limits);
  require_digits(digits);
  require_index(j_max, limits);
  std::vector<CoefficientEntry> entries;
  for (int j = 1; j <= j_max; ++j) {
    CertifiedValue v = route == Route::direct ? coefficient_direct(j, digits, limits) : coefficient_bessel(j, digits, limits);
    entries.push_back({j, std::move(v.value), route, std::move(v.bound)});
  }
  return CoefficientTable(std::move(entries), digits);
}

// --- general T_j(z) ---------------------------------------------------------

CertifiedValue general_direct(int j, const ExtReal& z, int digits) {
  require_digits(digits);
  if (j < 0) throw Error(Errc::invalid_argument, "T_j requires j >= 0");
  require_positive(z);
  const mpfr_prec_t base = working_bits(digits);
  const ExtReal target = ten_to_minus(digits, 64);
  // Large z makes the leading terms grow before they decay; add the lost
  // bits and retry once the cancellation is known.
  for (mpfr_prec_t bits = base;;) {
    CertifiedValue v = general_series_bits(j, z, bits, digits + 5);
    if (v.bound < target * abs(v.value) || bits > kMaxEscalatedBits / 2) return round_certified(v, base);
    bits *= 2;
  }
}

std::vector<CertifiedValue> general_recurrence(int j_max, const ExtReal& z, int digits) {
  require_digits(digits);
  if (j_max < 2) throw Error(Errc::invalid_argument, "general_recurrence requires j_max >= 2");
  require_positive(z);
  const mpfr_prec_t base = working_bits(digits);
  for (mpfr_prec_t bits = base;;) {
    ExtReal zw = z.rounded(std::max(bits, z.bits()));
    CertifiedValue t0 = general_series_bits(0, zw, bits, digits + 5 + static_cast<int>((bits - base) / 3));
    CertifiedValue t1 = general_series_bits(1, zw, bits, digits + 5 + static_cast<int>((bits - base) / 3));
    auto coefficients = [&](int j) {
      ExtReal a = ExtReal(2L * j - 3, bits) / (zw * (2L * j));
      ExtReal b = 1L / (zw * (4L * j * (j - 1)));
      return std::pair{std::move(a), std::move(b)};
    };
    RecurrenceRun run = run_recurrence(j_max, std::move(t0), std::move(t1), coefficients, bits, digits);
    mpfr_prec_t next = escalate(bits, base, run.log2_amplification);
    if (run.resolved || next > kMaxEscalatedBits) {
      // Unresolved values (e.g. T_j(z) near a zero for large z) are returned
      // with their honest, possibly large, bounds.
      std::vector<CertifiedValue> out;
      for (const auto& v : run.values) out.push_back(round_certified(v, base));
      return out;
    }
    bits = next;
  }
}

CertifiedValue general_bessel(int j, const ExtReal& z, int digits) {
  require_digits(digits);
  require_index(j, {});
  require_positive(z);
  mpfr_prec_t bits = working_bits(digits);
  ExtReal zw = z.rounded(std::max(bits, z.bits()));
  ExtReal root = sqrt(zw);
  CertifiedValue bessel = bessel_j_half_bits(j, root, bits, digits + 5);
  ExtReal two_pow = ExtReal(1L, bits);
  mpfr_mul_2si(two_pow.raw(), two_pow.raw(), j, MPFR_RNDN);
  ExtReal prefactor = sqrt(pi_at(bits)) / (two_pow * sqrt(ExtReal(2L, bits)) * factorial(static_cast<unsigned long>(j)));
  prefactor *= sqrt(root) / pow(root, j);
  ExtReal value = prefactor * bessel.value;
  ExtReal bound = mul_up(abs_up(prefactor), bessel.bound);
  bound = add_up(bound, rounding_term(4L * j + 16, bits, value));
  return {std::move(value), std::move(bound)};
}

}  // namespace trigpoly
