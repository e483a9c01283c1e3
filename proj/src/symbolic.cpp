#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "trigpoly/coeffs.hpp"
#include "trigpoly/errors.hpp"

namespace trigpoly {

namespace {

using Poly = std::vector<mpq_class>;  // coefficients of (pi^2)^k

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// R_j with t_j = R_j(pi^2) / pi^{2j-1}. Substituting into the recurrence gives
//   R_j = (2(2j-3)/j) R_{j-1} - s R_{j-2} / (j(j-1)),  R_0 = 0, R_1 = 1.
std::vector<Poly> reduced_numerators(int j_max) {
  std::vector<Poly> r(static_cast<std::size_t>(j_max) + 1);
  r[1] = {mpq_class(1)};
  for (int j = 2; j <= j_max; ++j) {
    const Poly& p1 = r[static_cast<std::size_t>(j - 1)];
    const Poly& p2 = r[static_cast<std::size_t>(j - 2)];
    Poly out(std::max(p1.size(), p2.size() + 1));
    mpq_class a(2 * (2 * j - 3), j);
    a.canonicalize();
    mpq_class b(1, static_cast<long>(j) * (j - 1));
    b.canonicalize();
    for (std::size_t k = 0; k < p1.size(); ++k) out[k] += a * p1[k];
    for (std::size_t k = 0; k < p2.size(); ++k) out[k + 1] -= b * p2[k];
    trim(out);
    r[static_cast<std::size_t>(j)] = std::move(out);
  }
  return r;
}

std::string pi_power_string(int power) { return power == 1 ? "pi" : "pi^" + std::to_string(power); }

std::string polynomial_string(const std::vector<mpz_class>& coeffs) {
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const mpz_class& c = coeffs[k];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += pi_power_string(static_cast<int>(2 * k));
    }
  }
  return first ? "0" : out;
}

}  // namespace

std::vector<SymbolicCoefficient> coefficient_symbolic(int j_max) {
  if (j_max < 1) throw Error(Errc::invalid_argument, "coefficient_symbolic requires j_max >= 1");
  std::vector<Poly> r = reduced_numerators(j_max);
  std::vector<SymbolicCoefficient> out;
  out.reserve(static_cast<std::size_t>(j_max));
  for (int j = 1; j <= j_max; ++j) {
    const Poly& p = r[static_cast<std::size_t>(j)];
    // Clear denominators, then divide out the integer content.
    mpz_class lcm = 1, content = 0;
    for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& c : p) {
      mpz_class v = c.get_num() * (lcm / c.get_den());
      ints.push_back(v);
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    }
    SymbolicCoefficient sc;
    sc.j = j;
    for (const auto& v : ints) sc.numerator.emplace_back(v / content);
    sc.denominator_rational = mpq_class(lcm, content);
    sc.denominator_rational.canonicalize();
    sc.pi_power = 2 * j - 1;
    out.push_back(std::move(sc));
  }
  return out;
}

std::string SymbolicCoefficient::to_string() const {
  // t = num(D)^-1 den(D) N / pi^p
  const mpz_class den_num = denominator_rational.get_num();
  const mpz_class den_den = denominator_rational.get_den();
  std::vector<mpz_class> ints;
  std::size_t nonzero = 0;
  for (const auto& c : numerator) {
    ints.push_back(c.get_num() * den_den);
    if (c != 0) ++nonzero;
  }
  std::string num = polynomial_string(ints);
  if (nonzero > 1) num = "(" + num + ")";
  std::string den = pi_power_string(pi_power);
  if (den_num != 1) den = "(" + den_num.get_str() + "*" + den + ")";
  return "t_" + std::to_string(j) + " = " + num + "/" + den;
}

CertifiedValue SymbolicCoefficient::evaluate(int digits) const {
  require_digits(digits);
  const mpfr_prec_t base = working_bits(digits);
  const ExtReal target = ten_to_minus(digits, 64);
  for (mpfr_prec_t bits = base;; bits *= 2) {
    ExtReal pi = ExtReal::pi(bits);
    ExtReal s = pi * pi;
    // Horner in s, tracking the magnitude sum for the cancellation bound.
    ExtReal acc(bits);
    ExtReal magnitude(64);
    ExtReal s_pow(1L, bits);
    for (std::size_t k = numerator.size(); k-- > 0;) {
      acc = acc * s + ExtReal(numerator[k], bits);
    }
    for (const auto& c : numerator) {
      magnitude = add_up(magnitude, mul_up(abs_up(ExtReal(c, bits)), abs_up(s_pow)));
      s_pow *= s;
    }
    ExtReal denom = ExtReal(denominator_rational, bits) * pow(pi, pi_power);
    ExtReal value = acc / denom;
    // Horner with an inexact s: each step contributes a few roundings, and s
    // itself carries about 3 ulps, entering with weight k.
    long steps = static_cast<long>(numerator.size()) + 2;
    ExtReal bound = mul_up(mul_up(ExtReal(4L * steps * steps + 8, 64), unit_roundoff(bits)), magnitude);
    bound = div_up(bound, abs_up(denom));
    bound = add_up(bound, mul_up(mul_up(ExtReal(2L * pi_power + 8, 64), unit_roundoff(bits)), abs_up(value)));
    if (bound < target * abs(value) || bits > (mpfr_prec_t{1} << 16)) {
      ExtReal rounded = value.rounded(base);
      bound = add_up(bound, mul_up(unit_roundoff(base), abs_up(value)));
      return {std::move(rounded), std::move(bound)};
    }
  }
}

}  // namespace trigpoly
