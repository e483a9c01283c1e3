#include "trigpoly/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "trigpoly/errors.hpp"

namespace trigpoly {

namespace {

// Minimum wall time of one timed batch.
constexpr double kMinBatchNs = 2e5;

std::vector<double> uniform_grid(const BenchConfig& cfg) {
  std::vector<double> grid(static_cast<std::size_t>(cfg.grid_size));
  const double span = cfg.domain.hi - cfg.domain.lo;
  for (int i = 0; i < cfg.grid_size; ++i) {
    grid[static_cast<std::size_t>(i)] =
        i + 1 == cfg.grid_size ? cfg.domain.hi : cfg.domain.lo + span * i / (cfg.grid_size - 1);
  }
  return grid;
}

double time_per_eval(const std::vector<double>& grid, int repetitions, const std::function<double(double)>& f) {
  using clock = std::chrono::steady_clock;
  volatile double sink = 0.0;
  auto run = [&](long batches) {
    auto t0 = clock::now();
    double acc = 0.0;
    for (long b = 0; b < batches; ++b) {
      for (double x : grid) acc += f(x);
    }
    sink = sink + acc;
    return std::chrono::duration<double, std::nano>(clock::now() - t0).count();
  };
  // Grow the batch until one timed run is well above timer resolution.
  long batches = 1;
  while (run(batches) < kMinBatchNs && batches < (1L << 20)) batches *= 2;
  std::vector<double> samples;
  for (int r = 0; r < repetitions; ++r) samples.push_back(run(batches) / (static_cast<double>(batches) * grid.size()));
  std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
  return samples[samples.size() / 2];
}

void measure_errors(BenchRow& row, const std::vector<double>& grid, const std::vector<double>& reference,
                    const std::function<double(double)>& f) {
  double max_err = 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double err = std::fabs(f(grid[i]) - reference[i]);
    max_err = std::max(max_err, err);
    sum += err;
  }
  row.max_abs_err = max_err;
  row.mean_abs_err = sum / static_cast<double>(grid.size());
}

}  // namespace

void validate(const BenchConfig& cfg) {
  if (cfg.grid_size < 1000) throw Error(Errc::invalid_argument, "bench grid must have at least 1000 points");
  if (cfg.repetitions < 3) throw Error(Errc::invalid_argument, "bench needs at least 3 repetitions");
  if (cfg.m_list.empty()) throw Error(Errc::invalid_argument, "bench m list is empty");
  for (int m : cfg.m_list) {
    if (m < 1) throw Error(Errc::invalid_argument, "bench degrees must be >= 1");
  }
  if (!(cfg.domain.lo < cfg.domain.hi) || !std::isfinite(cfg.domain.lo) || !std::isfinite(cfg.domain.hi)) {
    throw Error(Errc::invalid_argument, "bench domain must be a finite interval with lo < hi");
  }
}

double evaluation_error_bound(const ApproxPolynomial& q) {
  // Horner in y with m steps, y = x(1 - x) with two roundings, coefficients
  // rounded once: each term c_j y^j carries at most (2m + 2j + 2) roundings.
  // The reference, rounded to double, adds half an ulp of a value <= 1.
  const double u = std::numeric_limits<double>::epsilon() / 2;
  const int m = q.degree_m();
  double sum = 0.0;
  double y_pow = 1.0;
  for (int j = 1; j <= m; ++j) {
    y_pow *= 0.25;
    double n = 2.0 * m + 2.0 * j + 2.0;
    double gamma = n * u / (1 - n * u);
    sum += gamma * q.hp_coeffs()[static_cast<std::size_t>(j - 1)].to_double(MPFR_RNDU) * y_pow;
  }
  // Generous slack for the double arithmetic in this sum itself.
  return (sum + u) * (1 + 1e-10);
}

std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
  validate(cfg);
  const std::vector<double> grid = uniform_grid(cfg);
  const mpfr_prec_t bits = working_bits(kDefaultDigits);
  std::vector<double> reference;
  reference.reserve(grid.size());
  for (double x : grid) reference.push_back(sin_pi(ExtReal(x, bits)).to_double());

  const bool certified = cfg.domain.lo >= 0.0 && cfg.domain.hi <= 1.0;
  const int max_m = *std::max_element(cfg.m_list.begin(), cfg.m_list.end());
  CoefficientTable table = coefficient_recurrence(max_m, kDefaultDigits);
  const ExtReal quarter = ExtReal(1L, bits) / 4L;

  std::vector<BenchRow> rows;
  for (int m : cfg.m_list) {
    ApproxPolynomial q = build_poly(TrigFunction::sin_pi_x, m, table);
    auto f = [&q](double x) { return q(x); };
    BenchRow row;
    row.method = "Q";
    row.m = m;
    row.ns_per_eval = time_per_eval(grid, cfg.repetitions, f);
    measure_errors(row, grid, reference, f);
    if (certified) {
      double sup = error_bound_y(m, quarter).to_double(MPFR_RNDU);
      row.certified_bound = std::nextafter(sup + evaluation_error_bound(q), 1.0);
    }
    rows.push_back(row);
  }
  for (int m : cfg.m_list) {
    MaclaurinPoly s(m);
    auto f = [&s](double x) { return s(x); };
    BenchRow row;
    row.method = "S";
    row.m = m;
    row.ns_per_eval = time_per_eval(grid, cfg.repetitions, f);
    measure_errors(row, grid, reference, f);
    rows.push_back(row);
  }
  auto native = [](double x) { return std::sin(std::numbers::pi * x); };
  BenchRow row;
  row.method = "native";
  row.ns_per_eval = time_per_eval(grid, cfg.repetitions, native);
  measure_errors(row, grid, reference, native);
  rows.push_back(row);
  return rows;
}

std::string format_shortest(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string format_significant(double value, int significant) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, significant);
  return std::string(buf, res.ptr);
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << kBenchHeader << '\n';
  for (const auto& r : rows) {
    out << r.method << ',' << (r.m ? std::to_string(*r.m) : "") << ',' << format_significant(r.ns_per_eval, 6) << ','
        << format_shortest(r.max_abs_err) << ',' << format_shortest(r.mean_abs_err) << ','
        << (r.certified_bound ? format_shortest(*r.certified_bound) : "") << '\n';
  }
}

}  // namespace trigpoly
