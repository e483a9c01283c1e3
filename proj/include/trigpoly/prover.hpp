#pragma once

// Rigorous positivity of a polynomial on an interval by interval evaluation
// and bisection, and its application to
//
//   f(x) = 4/9 + 15x^2 - 8x + (4/pi^2)(2 sin^2(pi x) + sin^2(2 pi x)) > 0
//
// on [0, 1/2]. Replacing sin(pi u) by the sine polynomial Q_4, which satisfies
// 0 <= Q_4(u) <= sin(pi u) on [0, 1], gives a polynomial f_4 <= f, and
// f_4 > 0 is established with outward-rounded arithmetic.

#include <optional>
#include <vector>

#include "trigpoly/approx.hpp"
#include "trigpoly/interval.hpp"

namespace trigpoly {

/// Entry k multiplies x^k.
using IntervalPolynomial = std::vector<IntervalValue>;

IntervalPolynomial add(const IntervalPolynomial& a, const IntervalPolynomial& b);
IntervalPolynomial multiply(const IntervalPolynomial& a, const IntervalPolynomial& b);
IntervalPolynomial scale(const IntervalPolynomial& p, const IntervalValue& s);
IntervalPolynomial derivative(const IntervalPolynomial& p);
/// p(2x): coefficient k is multiplied by 2^k.
IntervalPolynomial dilate_by_two(const IntervalPolynomial& p);

/// Interval Horner evaluation.
IntervalValue horner(const IntervalPolynomial& p, const IntervalValue& x);
/// Intersection of the Horner enclosure and the centered form
/// p(c) + p'(X)(X - c) at the midpoint c.
IntervalValue enclose(const IntervalPolynomial& p, const IntervalPolynomial& dp, const IntervalValue& x);

enum class ProofStatus { proved, inconclusive };
const char* to_string(ProofStatus status);

struct ProofTile {
  IntervalValue x;
  ExtReal lower_bound;
  int depth;
};

struct PositivityProof {
  ProofStatus status = ProofStatus::inconclusive;
  IntervalPolynomial target;
  IntervalValue domain;
  /// Left-to-right tiles, each with an established lower bound > 0. When
  /// proved they tile the domain exactly.
  std::vector<ProofTile> subintervals;
  int max_depth_used = 0;
  /// Interval at which the search gave up, when inconclusive.
  std::optional<IntervalValue> unresolved;

  bool proved() const { return status == ProofStatus::proved; }
  /// Smallest recorded lower bound; throws when no tile was accepted.
  ExtReal min_lower_bound() const;
};

/// Proves p > 0 on [lo, hi] or reports where it could not. Never reports
/// proved unless every tile has an interval lower bound > 0.
PositivityProof prove_positive(const IntervalPolynomial& p, const ExtReal& lo, const ExtReal& hi, int max_depth);

inline constexpr int kDefaultProofDepth = 24;

struct ExampleProof {
  PositivityProof proof;
  /// Interval coefficients of Q_4 in powers of x.
  IntervalPolynomial envelope;
  /// Q_4 >= 0 on [0, 1], checked by interval evaluation.
  bool envelope_nonnegative = false;
  /// Constant subtracted from f_4 before proving (0 for the actual claim).
  double shift = 0.0;
};

/// Builds f_4 - shift with interval coefficients (pi enters via its
/// enclosure) and proves it positive on [0, 1/2]. Requires max_depth >= 8.
ExampleProof prove_example_inequality(int max_depth = kDefaultProofDepth, int digits = kDefaultDigits,
                                      double shift = 0.0);

/// The polynomial f_4 - shift as used by the prover.
IntervalPolynomial example_envelope_polynomial(int digits = kDefaultDigits, double shift = 0.0);

/// f and f_4 in extended precision at the precision of x.
ExtReal example_function(const ExtReal& x);
ExtReal example_lower_envelope(const ExtReal& x, const ApproxPolynomial& q4);

struct CurveSample {
  double x;
  ExtReal f;
  ExtReal f_minus_f4;
};

/// Samples of f and f - f_4 on `points` uniform points of [0, 1/2], endpoints included.
std::vector<CurveSample> example_curves(int points, int digits = kDefaultDigits);

}  // namespace trigpoly
