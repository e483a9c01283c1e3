#pragma once

#include <vector>

#include "trigpoly/coeffs.hpp"
#include "trigpoly/ext_real.hpp"

namespace trigpoly {

enum class TrigFunction { cos_pi_x, sin_pi_x };
const char* to_string(TrigFunction func);

/// Open interval on which the one-sided bounds hold: (-1/2, 1/2) for cos(pi x)
/// and (0, 1) for sin(pi x).
struct Domain {
  double lo;
  double hi;
  bool contains_open(double x) const { return lo < x && x < hi; }
};
Domain certified_domain(TrigFunction func);

/// The polynomial variable: y = 1/4 - x^2 for cosine, y = x(1 - x) for sine.
double shifted_variable(TrigFunction func, double x);
ExtReal shifted_variable(TrigFunction func, const ExtReal& x);

/// cos(pi x) or sin(pi x) at the precision of x.
ExtReal reference_value(TrigFunction func, const ExtReal& x);

/// Partial sum sum_{j=1}^m c_j y^j with c_j = t_j pi^{2j} > 0. The cosine
/// polynomial P_m and the sine polynomial Q_m share coefficients and differ
/// only in the variable y, so Q_m(x) = P_m(x - 1/2).
class ApproxPolynomial {
 public:
  ApproxPolynomial(TrigFunction func, std::vector<ExtReal> hp_coeffs, int digits);

  TrigFunction func() const { return func_; }
  int degree_m() const { return static_cast<int>(hp_coeffs_.size()); }
  int digits() const { return digits_; }
  /// c_1..c_m rounded once to double.
  const std::vector<double>& y_coeffs() const { return y_coeffs_; }
  const std::vector<ExtReal>& hp_coeffs() const { return hp_coeffs_; }

  /// Horner in y; any finite x is accepted.
  double operator()(double x) const;
  ExtReal eval_hp(const ExtReal& x) const;
  /// Horner in the variable y directly.
  double eval_y(double y) const;
  ExtReal eval_y_hp(const ExtReal& y) const;

 private:
  TrigFunction func_;
  std::vector<double> y_coeffs_;
  std::vector<ExtReal> hp_coeffs_;
  int digits_;
};

ApproxPolynomial build_poly(TrigFunction func, int m, int digits = kDefaultDigits);
/// Same, reusing a coefficient table that covers j = 1..m.
ApproxPolynomial build_poly(TrigFunction func, int m, const CoefficientTable& table);

inline double eval(const ApproxPolynomial& p, double x) { return p(x); }

struct ErrorCertificate {
  TrigFunction func;
  int m;
  double x;
  double leading_term;  ///< pi^{2m+2} y^{m+1} / (2m+2)!
  double tail_factor;   ///< 1 / (1 - q_m)
  double q_m;           ///< (pi^2/4) / ((2m+4)(2m+3))
  double bound;         ///< leading_term * tail_factor, rounded upward
  Domain domain;
};

/// q_m at the working precision of `digits`.
ExtReal tail_ratio(int m, int digits = kDefaultDigits);

/// Bound pi^{2m+2} y^{m+1} / (2m+2)! / (1 - q_m) on the truncation error, for
/// a given y in [0, 1/4], evaluated at the precision of y and rounded upward.
ExtReal error_bound_y(int m, const ExtReal& y);

/// Throws Errc::domain outside the open certified domain of `func`.
ErrorCertificate error_bound(TrigFunction func, int m, double x);

/// Smallest m whose bound at y = 1/4 (the supremum over the domain) is <= tol.
/// Throws Errc::limit_exceeded when m would exceed `max_m`.
int select_degree(TrigFunction func, double tol, int max_m = kDefaultMaxJ);

/// Maclaurin partial sum S_m(x) = sum_{j=1}^m (-1)^{j-1} (pi x)^{2j-1} / (2j-1)!.
class MaclaurinPoly {
 public:
  MaclaurinPoly(int m, int digits = kDefaultDigits);

  int m() const { return m_; }
  /// Coefficients of x^1, x^3, ..., x^{2m-1}.
  const std::vector<ExtReal>& odd_coeffs() const { return hp_coeffs_; }

  double operator()(double x) const;
  ExtReal eval_hp(const ExtReal& x) const;

 private:
  int m_;
  std::vector<ExtReal> hp_coeffs_;
  std::vector<double> coeffs_;
};

double maclaurin_eval(int m, double x);
ExtReal maclaurin_eval_hp(int m, const ExtReal& x);

/// Monomial coefficients of Q_m: entries 0..2m multiply x^0..x^{2m}.
/// Throws Errc::invalid_argument for the cosine polynomial.
std::vector<ExtReal> taylor_coeffs_at_zero(const ApproxPolynomial& p);

}  // namespace trigpoly
