#include "trigpoly/approx.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "trigpoly/errors.hpp"

namespace trigpoly {

const char* to_string(TrigFunction func) {
  return func == TrigFunction::cos_pi_x ? "cos" : "sin";
}

Domain certified_domain(TrigFunction func) {
  return func == TrigFunction::cos_pi_x ? Domain{-0.5, 0.5} : Domain{0.0, 1.0};
}

double shifted_variable(TrigFunction func, double x) {
  return func == TrigFunction::cos_pi_x ? 0.25 - x * x : x * (1.0 - x);
}

ExtReal shifted_variable(TrigFunction func, const ExtReal& x) {
  // Both forms are exact when x has at most half the working bits.
  ExtReal wide = x.rounded(2 * x.bits() + 2);
  ExtReal y = func == TrigFunction::cos_pi_x ? ExtReal(0.25, wide.bits()) - wide * wide : wide * (1L - wide);
  return y.rounded(x.bits());
}

ExtReal reference_value(TrigFunction func, const ExtReal& x) {
  return func == TrigFunction::cos_pi_x ? cos_pi(x) : sin_pi(x);
}

namespace {

void require_degree(int m) {
  if (m < 1) throw Error(Errc::invalid_argument, "degree m must be >= 1, got " + std::to_string(m));
}

}  // namespace

// --- ApproxPolynomial -------------------------------------------------------

ApproxPolynomial::ApproxPolynomial(TrigFunction func, std::vector<ExtReal> hp_coeffs, int digits)
    : func_(func), hp_coeffs_(std::move(hp_coeffs)), digits_(digits) {
  require_degree(static_cast<int>(hp_coeffs_.size()));
  y_coeffs_.reserve(hp_coeffs_.size());
  for (const auto& c : hp_coeffs_) {
    if (!(c.sign() > 0)) throw Error(Errc::invalid_argument, "approximant coefficients must be positive");
    y_coeffs_.push_back(c.to_double());
  }
}

double ApproxPolynomial::eval_y(double y) const {
  double acc = 0.0;
  for (auto it = y_coeffs_.rbegin(); it != y_coeffs_.rend(); ++it) acc = (acc + *it) * y;
  return acc;
}

ExtReal ApproxPolynomial::eval_y_hp(const ExtReal& y) const {
  ExtReal acc(std::max(y.bits(), hp_coeffs_.front().bits()));
  for (auto it = hp_coeffs_.rbegin(); it != hp_coeffs_.rend(); ++it) {
    acc += *it;
    acc *= y;
  }
  return acc;
}

double ApproxPolynomial::operator()(double x) const { return eval_y(shifted_variable(func_, x)); }

ExtReal ApproxPolynomial::eval_hp(const ExtReal& x) const { return eval_y_hp(shifted_variable(func_, x)); }

ApproxPolynomial build_poly(TrigFunction func, int m, const CoefficientTable& table) {
  require_degree(m);
  if (m > table.max_j()) throw Error(Errc::invalid_argument, "coefficient table is shorter than the degree");
  const int digits = table.precision_digits();
  const mpfr_prec_t bits = working_bits(digits);
  const ExtReal pi2 = pi_value(digits) * pi_value(digits);
  std::vector<ExtReal> coeffs;
  ExtReal power(1L, bits);
  for (int j = 1; j <= m; ++j) {
    power *= pi2;
    coeffs.push_back(table.at(j).value * power);
  }
  return ApproxPolynomial(func, std::move(coeffs), digits);
}

ApproxPolynomial build_poly(TrigFunction func, int m, int digits) {
  require_degree(m);
  return build_poly(func, m, coefficient_recurrence(m, digits));
}

// --- error bounds -----------------------------------------------------------

ExtReal tail_ratio(int m, int digits) {
  require_degree(m);
  ExtReal pi = pi_value(digits);
  return pi * pi / (4L * (2L * m + 4) * (2L * m + 3));
}

ExtReal error_bound_y(int m, const ExtReal& y) {
  require_degree(m);
  const mpfr_prec_t bits = y.bits();
  ExtReal pi = ExtReal::pi(bits);
  ExtReal pi2 = pi * pi;
  ExtReal q = pi2 / (4L * (2L * m + 4) * (2L * m + 3));
  ExtReal leading = pow(pi2 * y, m + 1) / factorial(2UL * m + 2);
  ExtReal bound = leading / (1L - q);
  // A handful of roundings, each below one ulp; inflate by 64 ulps upward.
  ExtReal slack = add_up(ExtReal(1L, bits), mul_up(ExtReal(64L, bits), unit_roundoff(bits)));
  ExtReal out(bits);
  mpfr_mul(out.raw(), bound.raw(), slack.raw(), MPFR_RNDU);
  return out;
}

ErrorCertificate error_bound(TrigFunction func, int m, double x) {
  require_degree(m);
  const Domain domain = certified_domain(func);
  if (!domain.contains_open(x)) {
    throw Error(Errc::domain, "x = " + std::to_string(x) + " is outside the certified domain of " + to_string(func));
  }
  const mpfr_prec_t bits = working_bits(kDefaultDigits);
  ExtReal y = shifted_variable(func, ExtReal(x, bits));
  ExtReal pi = ExtReal::pi(bits);
  ExtReal pi2 = pi * pi;
  ExtReal q = pi2 / (4L * (2L * m + 4) * (2L * m + 3));
  ExtReal leading = pow(pi2 * y, m + 1) / factorial(2UL * m + 2);
  ExtReal tail = 1L / (1L - q);
  ExtReal bound = error_bound_y(m, y);
  return ErrorCertificate{func,
                          m,
                          x,
                          leading.to_double(),
                          tail.to_double(),
                          q.to_double(),
                          bound.to_double(MPFR_RNDU),
                          domain};
}

int select_degree(TrigFunction /*func*/, double tol, int max_m) {
  // The supremum over the domain sits at y = 1/4 for both functions.
  if (!(tol > 0.0)) throw Error(Errc::invalid_argument, "tolerance must be positive");
  const ExtReal quarter(0.25, working_bits(kDefaultDigits));
  for (int m = 1; m <= max_m; ++m) {
    if (error_bound_y(m, quarter) <= tol) return m;
  }
  throw Error(Errc::limit_exceeded, "no degree up to " + std::to_string(max_m) + " reaches the tolerance");
}

// --- Maclaurin --------------------------------------------------------------

MaclaurinPoly::MaclaurinPoly(int m, int digits) : m_(m) {
  require_degree(m);
  const mpfr_prec_t bits = working_bits(digits);
  const ExtReal pi = ExtReal::pi(bits);
  for (int j = 1; j <= m; ++j) {
    ExtReal c = pow(pi, 2 * j - 1) / factorial(2UL * j - 1);
    if (j % 2 == 0) c = -c;
    coeffs_.push_back(c.to_double());
    hp_coeffs_.push_back(std::move(c));
  }
}

double MaclaurinPoly::operator()(double x) const {
  const double x2 = x * x;
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x2 + *it;
  return acc * x;
}

ExtReal MaclaurinPoly::eval_hp(const ExtReal& x) const {
  const mpfr_prec_t bits = std::max(x.bits(), hp_coeffs_.front().bits());
  const ExtReal xw = x.rounded(bits);
  const ExtReal x2 = xw * xw;
  ExtReal acc(bits);
  for (auto it = hp_coeffs_.rbegin(); it != hp_coeffs_.rend(); ++it) acc = acc * x2 + *it;
  return acc * xw;
}

double maclaurin_eval(int m, double x) { return MaclaurinPoly(m)(x); }

ExtReal maclaurin_eval_hp(int m, const ExtReal& x) {
  return MaclaurinPoly(m, std::max(kMinDigits, x.digits() - kGuardDigits)).eval_hp(x);
}

// --- monomial expansion -----------------------------------------------------

std::vector<ExtReal> taylor_coeffs_at_zero(const ApproxPolynomial& p) {
  if (p.func() != TrigFunction::sin_pi_x) {
    throw Error(Errc::invalid_argument, "monomial expansion at 0 is defined for the sine polynomial");
  }
  const int m = p.degree_m();
  const mpfr_prec_t bits = p.hp_coeffs().front().bits();
  std::vector<ExtReal> out(static_cast<std::size_t>(2 * m + 1), ExtReal(bits));
  // (x(1-x))^j = sum_i C(j,i) (-1)^i x^{j+i}
  for (int j = 1; j <= m; ++j) {
    const ExtReal& c = p.hp_coeffs()[static_cast<std::size_t>(j - 1)];
    for (int i = 0; i <= j; ++i) {
      ExtReal term = c * binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(i));
      if (i % 2 == 1) term = -term;
      out[static_cast<std::size_t>(j + i)] += term;
    }
  }
  return out;
}

}  // namespace trigpoly
