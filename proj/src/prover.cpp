#include "trigpoly/prover.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "trigpoly/coeffs.hpp"
#include "trigpoly/errors.hpp"

namespace trigpoly {

const char* to_string(ProofStatus status) { return status == ProofStatus::proved ? "PROVED" : "INCONCLUSIVE"; }

namespace {

mpfr_prec_t poly_bits(const IntervalPolynomial& p) {
  mpfr_prec_t bits = 64;
  for (const auto& c : p) bits = std::max(bits, c.bits());
  return bits;
}

}  // namespace

IntervalPolynomial add(const IntervalPolynomial& a, const IntervalPolynomial& b) {
  const IntervalPolynomial& longer = a.size() >= b.size() ? a : b;
  const IntervalPolynomial& shorter = a.size() >= b.size() ? b : a;
  IntervalPolynomial out = longer;
  for (std::size_t k = 0; k < shorter.size(); ++k) out[k] += shorter[k];
  return out;
}

IntervalPolynomial multiply(const IntervalPolynomial& a, const IntervalPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  const mpfr_prec_t bits = std::max(poly_bits(a), poly_bits(b));
  IntervalPolynomial out(a.size() + b.size() - 1, IntervalValue(bits));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) out[i + k] += a[i] * b[k];
  }
  return out;
}

IntervalPolynomial scale(const IntervalPolynomial& p, const IntervalValue& s) {
  IntervalPolynomial out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(c * s);
  return out;
}

IntervalPolynomial derivative(const IntervalPolynomial& p) {
  IntervalPolynomial out;
  for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k] * static_cast<long>(k));
  if (out.empty()) out.emplace_back(poly_bits(p));
  return out;
}

IntervalPolynomial dilate_by_two(const IntervalPolynomial& p) {
  IntervalPolynomial out;
  long factor = 1;
  for (const auto& c : p) {
    out.push_back(c * factor);
    factor *= 2;
  }
  return out;
}

IntervalValue horner(const IntervalPolynomial& p, const IntervalValue& x) {
  IntervalValue acc(std::max(poly_bits(p), x.bits()));
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntervalValue enclose(const IntervalPolynomial& p, const IntervalPolynomial& dp, const IntervalValue& x) {
  IntervalValue naive = horner(p, x);
  IntervalValue c(x.midpoint(), x.bits() + 2);
  IntervalValue centered = horner(p, c) + horner(dp, x) * (x - c);
  return intersect(naive, centered);
}

ExtReal PositivityProof::min_lower_bound() const {
  if (subintervals.empty()) throw Error(Errc::invalid_argument, "proof has no accepted subintervals");
  ExtReal out = subintervals.front().lower_bound;
  for (const auto& t : subintervals) out = min(out, t.lower_bound);
  return out;
}

PositivityProof prove_positive(const IntervalPolynomial& p, const ExtReal& lo, const ExtReal& hi, int max_depth) {
  if (max_depth < 0) throw Error(Errc::invalid_argument, "max_depth must be >= 0");
  PositivityProof proof;
  proof.target = p;
  proof.domain = IntervalValue(lo, hi);
  const IntervalPolynomial dp = derivative(p);
  const mpfr_prec_t bits = std::max(poly_bits(p), lo.bits()) + max_depth + 2;

  struct Pending {
    ExtReal a;
    ExtReal b;
    int depth;
  };
  // Depth-first with the right half pushed first, so tiles come out in order.
  std::vector<Pending> stack;
  stack.push_back({lo.rounded(bits), hi.rounded(bits), 0});
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    IntervalValue x(cur.a, cur.b);
    IntervalValue value = enclose(p, dp, x);
    if (value.positive()) {
      proof.max_depth_used = std::max(proof.max_depth_used, cur.depth);
      proof.subintervals.push_back({std::move(x), value.lo(), cur.depth});
      continue;
    }
    ExtReal mid = x.midpoint();
    // A non-positive point value settles the question; so does exhausting depth.
    if (!horner(p, IntervalValue(mid, bits)).positive() || cur.depth >= max_depth) {
      proof.unresolved = std::move(x);
      proof.status = ProofStatus::inconclusive;
      return proof;
    }
    stack.push_back({mid, cur.b, cur.depth + 1});
    stack.push_back({cur.a, mid, cur.depth + 1});
  }
  proof.status = ProofStatus::proved;
  return proof;
}

// --- the worked example -----------------------------------------------------

namespace {

// Interval coefficients of Q_4 in powers of x, from certified t_j and an
// enclosure of pi.
IntervalPolynomial sine_envelope(int digits) {
  const mpfr_prec_t bits = working_bits(digits);
  constexpr int kDegree = 4;
  CoefficientTable table = coefficient_recurrence(kDegree, digits);
  const IntervalValue pi_sq = IntervalValue::pi(bits) * IntervalValue::pi(bits);
  // y = x - x^2
  const IntervalPolynomial y = {IntervalValue::from_long(0, bits), IntervalValue::from_long(1, bits),
                                IntervalValue::from_long(-1, bits)};
  IntervalPolynomial q = {IntervalValue(bits)};
  IntervalPolynomial y_pow = {IntervalValue::from_long(1, bits)};
  IntervalValue pi_pow = IntervalValue::from_long(1, bits);
  for (int j = 1; j <= kDegree; ++j) {
    const auto& e = table.at(j);
    pi_pow = pi_pow * pi_sq;
    IntervalValue c = IntervalValue::from_certified({e.value, e.trunc_bound}) * pi_pow;
    y_pow = multiply(y_pow, y);
    q = add(q, scale(y_pow, c));
  }
  return q;
}

// Q_4 >= 0 on [0, 1]: y = x(1-x) encloses to [0, 1] there and every y-basis
// coefficient is positive.
bool envelope_nonnegative(int digits) {
  const mpfr_prec_t bits = working_bits(digits);
  CoefficientTable table = coefficient_recurrence(4, digits);
  const IntervalValue unit(ExtReal(0L, bits), ExtReal(1L, bits));
  const IntervalValue y = unit * (IntervalValue::from_long(1, bits) - unit);
  const IntervalValue pi_sq = IntervalValue::pi(bits) * IntervalValue::pi(bits);
  IntervalValue pi_pow = IntervalValue::from_long(1, bits);
  IntervalValue total(bits);
  for (int j = 1; j <= 4; ++j) {
    const auto& e = table.at(j);
    pi_pow = pi_pow * pi_sq;
    IntervalValue c = IntervalValue::from_certified({e.value, e.trunc_bound}) * pi_pow;
    if (!c.positive()) return false;
    total += c * pow(y, static_cast<unsigned>(j));
  }
  return total.lo().sign() >= 0;
}

}  // namespace

IntervalPolynomial example_envelope_polynomial(int digits, double shift) {
  require_digits(digits);
  const mpfr_prec_t bits = working_bits(digits);
  IntervalPolynomial q = sine_envelope(digits);
  IntervalPolynomial sines = add(scale(multiply(q, q), IntervalValue::from_long(2, bits)),
                                 [&] {
                                   IntervalPolynomial q2 = dilate_by_two(q);
                                   return multiply(q2, q2);
                                 }());
  const IntervalValue pi_sq = IntervalValue::pi(bits) * IntervalValue::pi(bits);
  IntervalPolynomial f4 = scale(sines, IntervalValue::from_long(4, bits) * pi_sq.reciprocal());
  IntervalPolynomial base = {IntervalValue::from_ratio(4, 9, bits) - IntervalValue(ExtReal(shift, bits), bits),
                             IntervalValue::from_long(-8, bits), IntervalValue::from_long(15, bits)};
  return add(f4, base);
}

ExampleProof prove_example_inequality(int max_depth, int digits, double shift) {
  if (max_depth < 8) throw Error(Errc::invalid_argument, "max_depth must be >= 8");
  require_digits(digits);
  ExampleProof out;
  out.shift = shift;
  out.envelope = sine_envelope(digits);
  out.envelope_nonnegative = envelope_nonnegative(digits);
  const mpfr_prec_t bits = working_bits(digits);
  IntervalPolynomial target = example_envelope_polynomial(digits, shift);
  out.proof = prove_positive(target, ExtReal(0L, bits), ExtReal(0.5, bits), max_depth);
  if (!out.envelope_nonnegative) {
    // The reduction f >= f_4 needs 0 <= Q_4; without it nothing is proved.
    out.proof.status = ProofStatus::inconclusive;
  }
  return out;
}

ExtReal example_function(const ExtReal& x) {
  const mpfr_prec_t bits = x.bits();
  ExtReal pi = ExtReal::pi(bits);
  ExtReal s1 = sin_pi(x);
  ExtReal s2 = sin_pi(x * 2L);
  ExtReal poly = ExtReal(4L, bits) / 9L + x * x * 15L - x * 8L;
  return poly + (s1 * s1 * 2L + s2 * s2) * 4L / (pi * pi);
}

ExtReal example_lower_envelope(const ExtReal& x, const ApproxPolynomial& q4) {
  const mpfr_prec_t bits = x.bits();
  ExtReal pi = ExtReal::pi(bits);
  ExtReal s1 = q4.eval_hp(x);
  ExtReal s2 = q4.eval_hp(x * 2L);
  ExtReal poly = ExtReal(4L, bits) / 9L + x * x * 15L - x * 8L;
  return poly + (s1 * s1 * 2L + s2 * s2) * 4L / (pi * pi);
}

std::vector<CurveSample> example_curves(int points, int digits) {
  if (points < 2) throw Error(Errc::invalid_argument, "curve grid needs at least 2 points");
  const mpfr_prec_t bits = working_bits(digits);
  ApproxPolynomial q4 = build_poly(TrigFunction::sin_pi_x, 4, digits);
  std::vector<CurveSample> out;
  out.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    double x = 0.5 * i / (points - 1);
    ExtReal xe(x, bits);
    ExtReal f = example_function(xe);
    ExtReal diff = f - example_lower_envelope(xe, q4);
    out.push_back({x, std::move(f), std::move(diff)});
  }
  return out;
}

}  // namespace trigpoly
