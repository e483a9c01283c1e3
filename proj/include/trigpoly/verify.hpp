#pragma once

// Executable checks of the identities and inequalities satisfied by the
// coefficients and the approximants. Grid-based checks run in extended
// precision and are property evidence, not proofs; the coefficient bounds use
// rigorous certificates.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trigpoly/approx.hpp"
#include "trigpoly/coeffs.hpp"

namespace trigpoly {

enum class PropertyStatus { pass, fail };
const char* to_string(PropertyStatus status);

struct WorstCase {
  std::string input;
  ExtReal margin;
};

struct PropertyReport {
  std::string property_id;
  PropertyStatus status = PropertyStatus::pass;
  /// Input with the smallest margin; the counterexample when status is fail.
  WorstCase worst_case;
  /// Ordered so that serialization is deterministic.
  std::map<std::string, std::string> metadata;

  bool passed() const { return status == PropertyStatus::pass; }
};

struct VerifyOptions {
  int digits = kDefaultDigits;
  /// Strict inequalities hold when the margin exceeds -10^-slack_digits.
  int slack_digits = 40;
  int endpoint_points = 32;
  double endpoint_width = 1e-6;
  /// Jitter of the uniform grid; none when unset.
  std::optional<std::uint64_t> seed;
};

/// Uniform grid of `size` interior points of the open domain plus
/// `endpoint_points` clustered within `endpoint_width` of each endpoint,
/// sorted, as exact extended-precision values.
std::vector<ExtReal> open_grid(Domain domain, int size, const VerifyOptions& options);

PropertyReport check_coefficient_bounds(int j_max, const VerifyOptions& options = {});
PropertyReport check_coefficient_bounds(const CoefficientTable& table);

/// Recurrence, direct, Bessel and symbolic routes agree to 10^-slack relative.
PropertyReport check_coefficient_routes(int j_max, const VerifyOptions& options = {});

/// Recurrence and series for T_j(z) agree for z in {1/2, 1, 2, pi^2/4}.
PropertyReport check_general_recurrence(int j_max, const VerifyOptions& options = {});

/// P_m < P_{m+1} < cos(pi x) (or Q_m < Q_{m+1} < sin(pi x)) for m = 1..m_max
/// on the open grid.
PropertyReport check_bracketing(TrigFunction func, int m_max, int grid_size, const VerifyOptions& options = {});

/// 0 < reference - approximant < certified bound for m = 1..m_max.
PropertyReport check_error_bounds(TrigFunction func, int m_max, int grid_size, const VerifyOptions& options = {});

/// Q_m(x) = P_m(x - 1/2), P_m(x) = P_m(-x) and Q_m(x) = Q_m(1 - x).
PropertyReport check_shift_symmetry(int m_max, int grid_size, const VerifyOptions& options = {});

/// Bessel form of t_j against the direct series for j <= j_max, and of T_j(z)
/// at z in {1, 2} for j <= 20.
PropertyReport check_bessel_identity(int j_max, const VerifyOptions& options = {});

/// S_{2j} < S_{2j+2} < sin(pi x) < S_{2j+1} and sin(pi x) < S_{2j-1} on a grid
/// over (0, 1]. The metadata records where the five-way ordering
/// S_{2j-1} < S_{2j+1} holds; it is reported, never asserted.
PropertyReport check_maclaurin_interleaving(int j_max, int grid_size, const VerifyOptions& options = {});

/// The monomial coefficients of Q_m through order m match sin(pi x), and the
/// error near x = 1 decays with order m + 1.
PropertyReport check_taylor_exactness(int m_max, const VerifyOptions& options = {});

enum class Suite { all, coeffs, bracketing, bessel, maclaurin, taylor };
/// Throws Errc::invalid_argument for an unknown name.
Suite parse_suite(const std::string& name);

struct SuiteConfig {
  int coeff_j_max = 100;
  int route_j_max = 50;
  int general_j_max = 20;
  int m_max = 10;
  int grid_size = 2048;
  int bessel_j_max = 50;
  int maclaurin_j_max = 4;
  int taylor_m_max = 8;
  /// When set, t_j at this index is doubled before the bound check, to
  /// exercise the failure path.
  std::optional<int> inject_fault_j;
};

std::vector<PropertyReport> run_suite(Suite suite, const SuiteConfig& config = {}, const VerifyOptions& options = {});

}  // namespace trigpoly
