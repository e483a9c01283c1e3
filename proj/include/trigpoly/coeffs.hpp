#pragma once

// Coefficients t_j of the expansion
//
//   cos(pi x) = sum_{j>=1} t_j pi^{2j} (1/4 - x^2)^j,
//
// and the general family T_j(z) = sum_k (-z)^k C(j+k, j) / (2j+2k)!, with
// t_j = T_j(pi^2/4). Three independent numeric routes are provided (direct
// alternating series, three-term recurrence, half-integer Bessel series) plus
// an exact symbolic route over the ring Q[pi^2].

#include <string>
#include <vector>

#include "trigpoly/ext_real.hpp"
#include "trigpoly/interval.hpp"

namespace trigpoly {

inline constexpr int kDefaultMaxJ = 200;

struct CoefficientLimits {
  int max_j = kDefaultMaxJ;
};

enum class Route { recurrence, direct, bessel };
const char* to_string(Route route);

struct CoefficientEntry {
  int j;
  ExtReal value;
  Route route;
  /// Upper bound on |value - t_j|, truncation and rounding included.
  ExtReal trunc_bound;
};

/// Immutable table t_1..t_J. Construction validates contiguity from j = 1,
/// positivity, the upper bound 1/(2j)! and the certificate size.
class CoefficientTable {
 public:
  CoefficientTable(std::vector<CoefficientEntry> entries, int precision_digits);

  int precision_digits() const { return precision_digits_; }
  int max_j() const { return static_cast<int>(entries_.size()); }
  const std::vector<CoefficientEntry>& entries() const { return entries_; }
  /// Entry for index j (1-based); throws Errc::invalid_argument when absent.
  const CoefficientEntry& at(int j) const;

  /// Copy without validation. Used to build corrupted fixtures for the
  /// verification failure path.
  static CoefficientTable unchecked(std::vector<CoefficientEntry> entries, int precision_digits);

 private:
  CoefficientTable() = default;
  std::vector<CoefficientEntry> entries_;
  int precision_digits_ = kDefaultDigits;
};

/// One term a_{j,k} = (-pi^2/4)^k C(j+k, j) / (2j+2k)!.
struct SeriesTerm {
  int j;
  int k;
  ExtReal a_jk;
};

SeriesTerm series_term(int j, int k, int digits);

/// Exact (2n)! and C(n, k).
mpz_class factorial(unsigned long n);
mpz_class binomial(unsigned long n, unsigned long k);

/// pi at the working precision for `digits`.
ExtReal pi_value(int digits);
/// Rigorous enclosure of pi with width below 10^-digits.
IntervalValue pi_enclosure(int digits);

/// t_j from its defining alternating series. Summation stops at the first
/// index K with |a_{j,K+1}| <= 10^-(digits+5) |partial sum|; the bound is
/// |a_{j,K+1}| plus accumulated rounding.
CertifiedValue coefficient_direct(int j, int digits, const CoefficientLimits& limits = {});

/// Partial sum a_{j,0} + ... + a_{j,K} without truncation control.
ExtReal coefficient_partial_sum(int j, int last_k, int digits);

/// t_1..t_{j_max} from t_j = 2(2j-3)/(pi^2 j) t_{j-1} - t_{j-2}/(pi^2 j(j-1)),
/// seeded with t_0 = 0, t_1 = 1/pi. The forward recurrence amplifies rounding
/// error roughly like ((2j)!)^2 / pi^(2j); precision is raised until the
/// propagated error bound of every entry is below 10^-digits t_j.
CoefficientTable coefficient_recurrence(int j_max, int digits, const CoefficientLimits& limits = {});

/// t_j = pi^{1-j} / (2 j!) J_{j-1/2}(pi/2).
CertifiedValue coefficient_bessel(int j, int digits, const CoefficientLimits& limits = {});

/// Table of the direct or Bessel route, for cross checks.
CoefficientTable coefficient_table(Route route, int j_max, int digits, const CoefficientLimits& limits = {});

/// Gamma(n + 1/2) = sqrt(pi) (2n)! / (4^n n!).
ExtReal gamma_half(int n, int digits);

/// Bessel function of the first kind J_{j-1/2}(x) for j >= 1 (half-integer order)
/// and x > 0, from its power series.
CertifiedValue bessel_j_half(int j, const ExtReal& x, int digits);

/// T_j(z) from its power series; j = 0 gives cos(sqrt z). Requires z > 0.
CertifiedValue general_direct(int j, const ExtReal& z, int digits);

/// T_1(z)..T_{j_max}(z) from T_j = (2j-3)/(2jz) T_{j-1} - T_{j-2}/(4j(j-1)z),
/// seeded by the series values of T_0 and T_1. Requires j_max >= 2 and z > 0.
std::vector<CertifiedValue> general_recurrence(int j_max, const ExtReal& z, int digits);

/// T_j(z) = sqrt(pi) / (j! 2^{j+1/2}) z^{1/4-j/2} J_{j-1/2}(sqrt z).
CertifiedValue general_bessel(int j, const ExtReal& z, int digits);

/// t_j = N_j(pi^2) / (D_j pi^{2j-1}) with N_j an integer polynomial whose
/// coefficients share no common factor.
struct SymbolicCoefficient {
  int j;
  /// numerator[k] multiplies (pi^2)^k.
  std::vector<mpq_class> numerator;
  mpq_class denominator_rational;
  int pi_power;

  /// Rendering such as "(12 - pi^2)/(6*pi^5)".
  std::string to_string() const;
  /// Value at `digits` with a bound covering rounding and cancellation.
  CertifiedValue evaluate(int digits) const;
};

std::vector<SymbolicCoefficient> coefficient_symbolic(int j_max);

}  // namespace trigpoly
