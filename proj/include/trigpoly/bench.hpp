#pragma once

// Accuracy and cost of the sine polynomials Q_m against the Maclaurin sums
// S_m and std::sin, over a uniform grid.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "trigpoly/approx.hpp"

namespace trigpoly {

struct BenchConfig {
  int grid_size = 2048;             ///< >= 1000, endpoints included
  std::vector<int> m_list = {1, 2, 3, 4};
  int repetitions = 5;              ///< >= 3; the median is reported
  Domain domain = {0.0, 1.0};
};

struct BenchRow {
  std::string method;  ///< "Q", "S" or "native"
  std::optional<int> m;
  double ns_per_eval = 0.0;
  double max_abs_err = 0.0;
  double mean_abs_err = 0.0;
  /// For Q rows on a domain inside [0, 1]: the supremum of the truncation
  /// bound plus the rounding error of double evaluation and of the reference.
  std::optional<double> certified_bound;
};

/// Throws Errc::invalid_argument for a config that violates the limits above.
void validate(const BenchConfig& cfg);

std::vector<BenchRow> run_bench(const BenchConfig& cfg);

/// Rounding error of evaluating Q_m in double at any x in [0, 1], including
/// the rounding of the coefficients, of y = x(1 - x), and of the reference.
double evaluation_error_bound(const ApproxPolynomial& q);

inline constexpr const char* kBenchHeader = "method,m,ns_per_eval,max_abs_err,mean_abs_err,certified_bound";

/// Shortest decimal that round-trips to `value`; locale independent.
std::string format_shortest(double value);
/// `significant` significant digits; locale independent.
std::string format_significant(double value, int significant);

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace trigpoly
