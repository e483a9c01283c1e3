#include "trigpoly/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <utility>

#include "trigpoly/errors.hpp"

namespace trigpoly {

const char* to_string(PropertyStatus status) { return status == PropertyStatus::pass ? "pass" : "fail"; }

namespace {

constexpr const char* kGridEvidence = "grid evidence in extended precision (not a formal proof)";
constexpr const char* kCertified = "certified bounds";

// Tracks the smallest margin seen; a check passes while every margin exceeds
// the threshold.
class MarginTracker {
 public:
  explicit MarginTracker(ExtReal threshold) : threshold_(std::move(threshold)) {}

  void observe(const ExtReal& margin, const std::function<std::string()>& describe) {
    ++checks_;
    if (!(margin > threshold_)) ++failures_;
    if (margin.sign() > 0) ++strict_;
    if (!has_worst_ || margin < worst_) {
      worst_ = margin;
      input_ = describe();
      has_worst_ = true;
    }
  }

  bool passed() const { return failures_ == 0 && checks_ > 0; }
  long checks() const { return checks_; }

  void finish(PropertyReport& report) const {
    report.status = passed() ? PropertyStatus::pass : PropertyStatus::fail;
    report.worst_case = WorstCase{input_, has_worst_ ? worst_ : ExtReal(64)};
    report.metadata["checks"] = std::to_string(checks_);
    report.metadata["failures"] = std::to_string(failures_);
    report.metadata["strictly_positive"] = std::to_string(strict_);
  }

 private:
  ExtReal threshold_;
  ExtReal worst_{64};
  std::string input_ = "none";
  bool has_worst_ = false;
  long checks_ = 0;
  long failures_ = 0;
  long strict_ = 0;
};

ExtReal negative_slack(const VerifyOptions& options) {
  return -ten_to_minus(options.slack_digits, working_bits(options.digits));
}

std::string fmt(const ExtReal& x) { return x.str(17); }

// Relative agreement margin: 10^-slack - |a - b| / |b|.
ExtReal agreement_margin(const ExtReal& a, const ExtReal& b, const VerifyOptions& options) {
  return ten_to_minus(options.slack_digits, a.bits()) - abs(a - b) / abs(b);
}

void require_range(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::invalid_argument, what);
}

std::vector<ApproxPolynomial> polynomial_family(TrigFunction func, int m_max, int digits) {
  CoefficientTable table = coefficient_recurrence(m_max, digits);
  std::vector<ApproxPolynomial> out;
  for (int m = 1; m <= m_max; ++m) out.push_back(build_poly(func, m, table));
  return out;
}

}  // namespace

std::vector<ExtReal> open_grid(Domain domain, int size, const VerifyOptions& options) {
  require_range(size >= 1, "grid size must be >= 1");
  const mpfr_prec_t bits = working_bits(options.digits);
  const double span = domain.hi - domain.lo;
  const double step = span / (size + 1);
  std::vector<double> points;
  std::mt19937_64 rng(options.seed.value_or(0));
  // 53 random bits mapped to [-0.25, 0.25); unlike the standard
  // distributions this is the same on every platform.
  auto jitter = [](std::mt19937_64& g) { return std::ldexp(static_cast<double>(g() >> 11), -53) * 0.5 - 0.25; };
  for (int i = 1; i <= size; ++i) {
    double x = domain.lo + span * i / (size + 1);
    if (options.seed) x += step * jitter(rng);
    points.push_back(x);
  }
  for (int k = 1; k <= options.endpoint_points; ++k) {
    double offset = options.endpoint_width * k / options.endpoint_points;
    points.push_back(domain.lo + offset);
    points.push_back(domain.hi - offset);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<ExtReal> out;
  out.reserve(points.size());
  for (double x : points) {
    if (domain.contains_open(x)) out.emplace_back(x, bits);
  }
  return out;
}

// --- coefficients -----------------------------------------------------------

PropertyReport check_coefficient_bounds(const CoefficientTable& table) {
  PropertyReport report;
  report.property_id = "coeff_bounds";
  MarginTracker tracker(ExtReal(0L, 64));
  const mpfr_prec_t bits = working_bits(table.precision_digits());
  const IntervalValue pi = IntervalValue::pi(bits);
  const IntervalValue pi_sq = pi * pi;
  for (const auto& e : table.entries()) {
    mpz_class fact = factorial(2UL * e.j);
    mpfr_prec_t fbits = std::max<mpfr_prec_t>(bits, static_cast<mpfr_prec_t>(mpz_sizeinbase(fact.get_mpz_t(), 2)));
    // t_j (2j)! enclosed using the certificate.
    IntervalValue scaled = IntervalValue::from_certified({e.value, e.trunc_bound}) * IntervalValue(ExtReal(fact, fbits));
    IntervalValue one = IntervalValue::from_long(1, bits);
    IntervalValue bracket = one - pi_sq * IntervalValue::from_ratio(1, 8L * (2L * e.j + 1), bits);
    ExtReal positivity = scaled.lo();
    ExtReal below_one = (one - scaled).lo();
    ExtReal above_bracket = (scaled - bracket).lo();
    auto where = [&](const char* what) {
      return [&e, what] { return "j=" + std::to_string(e.j) + " (" + what + ")"; };
    };
    tracker.observe(positivity, where("t_j > 0"));
    tracker.observe(below_one, where("t_j (2j)! < 1"));
    tracker.observe(above_bracket, where("t_j (2j)! > 1 - pi^2/(8(2j+1))"));
  }
  tracker.finish(report);
  report.metadata["j_max"] = std::to_string(table.max_j());
  report.metadata["evidence"] = kCertified;
  return report;
}

PropertyReport check_coefficient_bounds(int j_max, const VerifyOptions& options) {
  return check_coefficient_bounds(coefficient_recurrence(j_max, options.digits));
}

PropertyReport check_coefficient_routes(int j_max, const VerifyOptions& options) {
  PropertyReport report;
  report.property_id = "coeff_routes";
  MarginTracker tracker(ExtReal(0L, 64));
  CoefficientTable rec = coefficient_recurrence(j_max, options.digits);
  std::vector<SymbolicCoefficient> sym = coefficient_symbolic(j_max);
  for (int j = 1; j <= j_max; ++j) {
    CertifiedValue direct = coefficient_direct(j, options.digits);
    CertifiedValue bessel = coefficient_bessel(j, options.digits);
    CertifiedValue symbolic = sym[static_cast<std::size_t>(j - 1)].evaluate(options.digits + 10);
    auto where = [j](const char* route) {
      return [j, route] { return "j=" + std::to_string(j) + " (" + route + " vs direct)"; };
    };
    tracker.observe(agreement_margin(rec.at(j).value, direct.value, options), where("recurrence"));
    tracker.observe(agreement_margin(bessel.value, direct.value, options), where("bessel"));
    tracker.observe(agreement_margin(symbolic.value, direct.value, options), where("symbolic"));
  }
  tracker.finish(report);
  report.metadata["j_max"] = std::to_string(j_max);
  report.metadata["relative_tolerance"] = "1e-" + std::to_string(options.slack_digits);
  return report;
}

PropertyReport check_general_recurrence(int j_max, const VerifyOptions& options) {
  PropertyReport report;
  report.property_id = "general_recurrence";
  MarginTracker tracker(ExtReal(0L, 64));
  const mpfr_prec_t bits = working_bits(options.digits);
  ExtReal pi = ExtReal::pi(bits);
  const std::vector<std::pair<std::string, ExtReal>> zs = {
      {"1/2", ExtReal(0.5, bits)}, {"1", ExtReal(1L, bits)}, {"2", ExtReal(2L, bits)}, {"pi^2/4", pi * pi / 4L}};
  for (const auto& [name, z] : zs) {
    std::vector<CertifiedValue> rec = general_recurrence(j_max, z, options.digits);
    for (int j = 1; j <= j_max; ++j) {
      CertifiedValue direct = general_direct(j, z, options.digits);
      tracker.observe(agreement_margin(rec[static_cast<std::size_t>(j - 1)].value, direct.value, options),
                      [&, j] { return "z=" + name + ",j=" + std::to_string(j); });
    }
  }
  tracker.finish(report);
  report.metadata["j_max"] = std::to_string(j_max);
  return report;
}

// --- approximants -----------------------------------------------------------

PropertyReport check_bracketing(TrigFunction func, int m_max, int grid_size, const VerifyOptions& options) {
  require_range(m_max >= 2, "bracketing check requires m_max >= 2");
  PropertyReport report;
  report.property_id = std::string("bracketing_") + to_string(func);
  MarginTracker tracker(negative_slack(options));
  auto polys = polynomial_family(func, m_max + 1, options.digits);
  for (const ExtReal& x : open_grid(certified_domain(func), grid_size, options)) {
    ExtReal ref = reference_value(func, x);
    ExtReal prev = polys[0].eval_hp(x);
    for (int m = 1; m <= m_max; ++m) {
      ExtReal next = polys[static_cast<std::size_t>(m)].eval_hp(x);
      auto where = [&, m](const char* link) {
        return [&x, m, link] { return "m=" + std::to_string(m) + ",x=" + fmt(x) + " (" + link + ")"; };
      };
      tracker.observe(next - prev, where("approx_m < approx_{m+1}"));
      tracker.observe(ref - next, where("approx_{m+1} < reference"));
      tracker.observe(ref - prev, where("approx_m < reference"));
      prev = std::move(next);
    }
  }
  tracker.finish(report);
  report.metadata["m_max"] = std::to_string(m_max);
  report.metadata["grid_points"] = std::to_string(open_grid(certified_domain(func), grid_size, options).size());
  report.metadata["evidence"] = kGridEvidence;
  return report;
}

PropertyReport check_error_bounds(TrigFunction func, int m_max, int grid_size, const VerifyOptions& options) {
  require_range(m_max >= 1, "error-bound check requires m_max >= 1");
  PropertyReport report;
  report.property_id = std::string("error_bound_") + to_string(func);
  MarginTracker tracker(negative_slack(options));
  auto polys = polynomial_family(func, m_max, options.digits);
  for (const ExtReal& x : open_grid(certified_domain(func), grid_size, options)) {
    ExtReal ref = reference_value(func, x);
    ExtReal y = shifted_variable(func, x);
    for (int m = 1; m <= m_max; ++m) {
      ExtReal delta = ref - polys[static_cast<std::size_t>(m - 1)].eval_hp(x);
      ExtReal bound = error_bound_y(m, y);
      auto where = [&, m](const char* link) {
        return [&x, m, link] { return "m=" + std::to_string(m) + ",x=" + fmt(x) + " (" + link + ")"; };
      };
      tracker.observe(delta, where("error > 0"));
      tracker.observe(bound - delta, where("error < bound"));
    }
  }
  tracker.finish(report);
  report.metadata["m_max"] = std::to_string(m_max);
  report.metadata["evidence"] = kGridEvidence;
  return report;
}

PropertyReport check_shift_symmetry(int m_max, int grid_size, const VerifyOptions& options) {
  PropertyReport report;
  report.property_id = "shift_symmetry";
  MarginTracker tracker(negative_slack(options));
  CoefficientTable table = coefficient_recurrence(m_max, options.digits);
  const ExtReal half(0.5, working_bits(options.digits));
  for (int m = 1; m <= m_max; ++m) {
    ApproxPolynomial p = build_poly(TrigFunction::cos_pi_x, m, table);
    ApproxPolynomial q = build_poly(TrigFunction::sin_pi_x, m, table);
    for (const ExtReal& x : open_grid(certified_domain(TrigFunction::sin_pi_x), grid_size, options)) {
      ExtReal qx = q.eval_hp(x);
      auto where = [&, m](const char* what) {
        return [&x, m, what] { return "m=" + std::to_string(m) + ",x=" + fmt(x) + " (" + what + ")"; };
      };
      tracker.observe(-abs(qx - p.eval_hp(x - half)), where("Q_m(x) = P_m(x-1/2)"));
      tracker.observe(-abs(qx - q.eval_hp(1L - x)), where("Q_m(x) = Q_m(1-x)"));
      tracker.observe(-abs(p.eval_hp(x - half) - p.eval_hp(half - x)), where("P_m(x) = P_m(-x)"));
    }
  }
  tracker.finish(report);
  report.metadata["m_max"] = std::to_string(m_max);
  report.metadata["evidence"] = kGridEvidence;
  return report;
}

// --- Bessel -----------------------------------------------------------------

PropertyReport check_bessel_identity(int j_max, const VerifyOptions& options) {
  require_range(j_max >= 1 && j_max <= 50, "Bessel check requires 1 <= j_max <= 50");
  PropertyReport report;
  report.property_id = "bessel_identity";
  MarginTracker tracker(ExtReal(0L, 64));
  for (int j = 1; j <= j_max; ++j) {
    CertifiedValue bessel = coefficient_bessel(j, options.digits);
    CertifiedValue direct = coefficient_direct(j, options.digits);
    tracker.observe(agreement_margin(bessel.value, direct.value, options),
                    [j] { return "j=" + std::to_string(j) + ",z=pi^2/4"; });
  }
  const mpfr_prec_t bits = working_bits(options.digits);
  constexpr int kGeneralJMax = 20;
  for (long z_int : {1L, 2L}) {
    ExtReal z(z_int, bits);
    for (int j = 1; j <= kGeneralJMax; ++j) {
      CertifiedValue bessel = general_bessel(j, z, options.digits);
      CertifiedValue direct = general_direct(j, z, options.digits);
      tracker.observe(agreement_margin(bessel.value, direct.value, options),
                      [j, z_int] { return "j=" + std::to_string(j) + ",z=" + std::to_string(z_int); });
    }
  }
  tracker.finish(report);
  report.metadata["j_max"] = std::to_string(j_max);
  report.metadata["general_j_max"] = std::to_string(kGeneralJMax);
  return report;
}

// --- Maclaurin --------------------------------------------------------------

PropertyReport check_maclaurin_interleaving(int j_max, int grid_size, const VerifyOptions& options) {
  require_range(j_max >= 1, "Maclaurin check requires j_max >= 1");
  require_range(grid_size >= 1, "grid size must be >= 1");
  PropertyReport report;
  report.property_id = "maclaurin_interleaving";
  MarginTracker tracker(negative_slack(options));
  const mpfr_prec_t bits = working_bits(options.digits);

  // (0, 1]: uniform points i/N plus a cluster near 0.
  std::vector<ExtReal> grid;
  for (int k = 1; k <= options.endpoint_points; ++k) {
    grid.emplace_back(options.endpoint_width * k / options.endpoint_points, bits);
  }
  for (int i = 1; i <= grid_size; ++i) grid.emplace_back(static_cast<double>(i) / grid_size, bits);

  std::vector<MaclaurinPoly> sums;
  for (int m = 1; m <= 2 * j_max + 2; ++m) sums.emplace_back(m, options.digits);

  std::vector<long> five_way(static_cast<std::size_t>(j_max) + 1, 0);
  std::vector<long> reversed(static_cast<std::size_t>(j_max) + 1, 0);
  std::vector<std::string> five_way_first(static_cast<std::size_t>(j_max) + 1);
  for (const ExtReal& x : grid) {
    ExtReal ref = sin_pi(x);
    std::vector<ExtReal> s;
    for (const auto& p : sums) s.push_back(p.eval_hp(x));
    auto at = [&s](int m) -> const ExtReal& { return s[static_cast<std::size_t>(m - 1)]; };
    for (int j = 1; j <= j_max; ++j) {
      auto where = [&, j](const char* link) {
        return [&x, j, link] { return "j=" + std::to_string(j) + ",x=" + fmt(x) + " (" + link + ")"; };
      };
      tracker.observe(at(2 * j + 2) - at(2 * j), where("S_2j < S_2j+2"));
      tracker.observe(ref - at(2 * j + 2), where("S_2j+2 < sin"));
      tracker.observe(at(2 * j + 1) - ref, where("sin < S_2j+1"));
      tracker.observe(at(2 * j - 1) - ref, where("sin < S_2j-1"));
      auto idx = static_cast<std::size_t>(j);
      if (at(2 * j - 1) < at(2 * j + 1)) {
        if (five_way[idx]++ == 0) five_way_first[idx] = fmt(x);
      } else {
        ++reversed[idx];
      }
    }
  }
  tracker.finish(report);
  report.metadata["j_max"] = std::to_string(j_max);
  report.metadata["grid_points"] = std::to_string(grid.size());
  report.metadata["evidence"] = kGridEvidence;
  for (int j = 1; j <= j_max; ++j) {
    auto idx = static_cast<std::size_t>(j);
    std::string key = "five_way_chain_j" + std::to_string(j);
    if (five_way[idx] == 0) {
      report.metadata[key] = "S_" + std::to_string(2 * j - 1) + " < S_" + std::to_string(2 * j + 1) +
                             " holds at no grid point of (0,1]; S_" + std::to_string(2 * j + 1) + " < S_" +
                             std::to_string(2 * j - 1) + " at " + std::to_string(reversed[idx]);
    } else {
      report.metadata[key] = "holds at " + std::to_string(five_way[idx]) + " of " + std::to_string(grid.size()) +
                             " grid points, first at x=" + five_way_first[idx];
    }
  }
  return report;
}

// --- Taylor exactness -------------------------------------------------------

PropertyReport check_taylor_exactness(int m_max, const VerifyOptions& options) {
  require_range(m_max >= 1, "Taylor check requires m_max >= 1");
  PropertyReport report;
  report.property_id = "taylor_exactness";
  MarginTracker coeff_tracker(ExtReal(0L, 64));
  MarginTracker decay_tracker(ExtReal(0L, 64));
  const mpfr_prec_t bits = working_bits(options.digits);
  const ExtReal tol = ten_to_minus(options.slack_digits, bits);
  const ExtReal pi = ExtReal::pi(bits);
  CoefficientTable table = coefficient_recurrence(m_max, options.digits);
  for (int m = 1; m <= m_max; ++m) {
    ApproxPolynomial q = build_poly(TrigFunction::sin_pi_x, m, table);
    std::vector<ExtReal> coeffs = taylor_coeffs_at_zero(q);
    for (int k = 0; k <= m; ++k) {
      ExtReal expected(bits);
      if (k % 2 == 1) {
        expected = pow(pi, k) / factorial(static_cast<unsigned long>(k));
        if ((k / 2) % 2 == 1) expected = -expected;
      }
      ExtReal scale = max(ExtReal(1L, bits), abs(expected));
      coeff_tracker.observe(tol * scale - abs(coeffs[static_cast<std::size_t>(k)] - expected),
                            [m, k] { return "m=" + std::to_string(m) + ",k=" + std::to_string(k); });
    }
    // Near x = 1 the error behaves like c h^{m+1}; compare h = 1e-3 and 1e-4.
    auto error_at = [&](double h) {
      ExtReal x = 1L - ExtReal(h, bits);
      return sin_pi(x) - q.eval_hp(x);
    };
    ExtReal ratio = error_at(1e-3) / error_at(1e-4);
    double order = log10(ratio).to_double();
    decay_tracker.observe(ExtReal(0.1 - std::abs(order - (m + 1)), 64),
                          [m, order] { return "m=" + std::to_string(m) + ",decay order " + std::to_string(order); });
  }
  coeff_tracker.finish(report);
  if (!decay_tracker.passed()) {
    // Report the decay counterexample instead of the coefficient margin.
    PropertyReport decay;
    decay_tracker.finish(decay);
    report.status = PropertyStatus::fail;
    report.worst_case = decay.worst_case;
  }
  report.metadata["m_max"] = std::to_string(m_max);
  report.metadata["endpoint_decay_checks"] = std::to_string(decay_tracker.checks());
  report.metadata["endpoint_decay"] = decay_tracker.passed() ? "order m+1 confirmed near x=1" : "mismatch";
  return report;
}

// --- suites -----------------------------------------------------------------

Suite parse_suite(const std::string& name) {
  if (name == "all") return Suite::all;
  if (name == "coeffs") return Suite::coeffs;
  if (name == "bracketing") return Suite::bracketing;
  if (name == "bessel") return Suite::bessel;
  if (name == "maclaurin") return Suite::maclaurin;
  if (name == "taylor") return Suite::taylor;
  throw Error(Errc::invalid_argument, "unknown suite '" + name + "'");
}

std::vector<PropertyReport> run_suite(Suite suite, const SuiteConfig& config, const VerifyOptions& options) {
  std::vector<PropertyReport> out;
  auto want = [suite](Suite s) { return suite == Suite::all || suite == s; };
  if (want(Suite::coeffs)) {
    if (config.inject_fault_j) {
      CoefficientTable table = coefficient_recurrence(config.coeff_j_max, options.digits);
      std::vector<CoefficientEntry> entries = table.entries();
      int j = *config.inject_fault_j;
      require_range(j >= 1 && j <= config.coeff_j_max, "fault index outside the coefficient range");
      entries[static_cast<std::size_t>(j - 1)].value *= 2L;
      out.push_back(check_coefficient_bounds(CoefficientTable::unchecked(std::move(entries), options.digits)));
    } else {
      out.push_back(check_coefficient_bounds(config.coeff_j_max, options));
    }
    out.push_back(check_coefficient_routes(config.route_j_max, options));
    out.push_back(check_general_recurrence(config.general_j_max, options));
  }
  if (want(Suite::bracketing)) {
    for (TrigFunction f : {TrigFunction::cos_pi_x, TrigFunction::sin_pi_x}) {
      out.push_back(check_bracketing(f, config.m_max, config.grid_size, options));
      out.push_back(check_error_bounds(f, config.m_max, config.grid_size, options));
    }
    out.push_back(check_shift_symmetry(config.m_max, config.grid_size, options));
  }
  if (want(Suite::bessel)) out.push_back(check_bessel_identity(config.bessel_j_max, options));
  if (want(Suite::maclaurin)) {
    out.push_back(check_maclaurin_interleaving(config.maclaurin_j_max, config.grid_size, options));
  }
  if (want(Suite::taylor)) out.push_back(check_taylor_exactness(config.taylor_m_max, options));
  return out;
}

}  // namespace trigpoly
