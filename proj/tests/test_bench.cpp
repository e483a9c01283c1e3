#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "support.hpp"
#include "trigpoly/bench.hpp"

using namespace trigpoly;

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

TEST_CASE("config validation") {
  BenchConfig cfg;
  CHECK_NOTHROW(validate(cfg));
  cfg.grid_size = 999;
  CHECK_THROWS_CODE(validate(cfg), Errc::invalid_argument);
  cfg = {};
  cfg.repetitions = 2;
  CHECK_THROWS_CODE(validate(cfg), Errc::invalid_argument);
  cfg = {};
  cfg.m_list = {};
  CHECK_THROWS_CODE(validate(cfg), Errc::invalid_argument);
  cfg = {};
  cfg.m_list = {0};
  CHECK_THROWS_CODE(validate(cfg), Errc::invalid_argument);
  cfg = {};
  cfg.domain = {1.0, 0.0};
  CHECK_THROWS_CODE(validate(cfg), Errc::invalid_argument);
}

TEST_CASE("rows and error columns") {
  BenchConfig cfg;
  cfg.grid_size = 1001;
  cfg.m_list = {1, 4, 10};
  cfg.repetitions = 3;
  auto rows = run_bench(cfg);
  REQUIRE(rows.size() == 7);
  CHECK(rows[0].method == "Q");
  CHECK(rows[3].method == "S");
  CHECK(rows[6].method == "native");
  CHECK_FALSE(rows[6].m.has_value());
  for (const auto& r : rows) {
    CHECK(r.ns_per_eval > 0);
    CHECK(r.mean_abs_err <= r.max_abs_err);
    if (r.method == "Q") {
      REQUIRE(r.certified_bound.has_value());
      CHECK(r.max_abs_err <= *r.certified_bound);
    } else {
      CHECK_FALSE(r.certified_bound.has_value());
    }
  }
  // Q_1 attains 1 - pi/4 at x = 1/2, which is on the 1001-point grid.
  CHECK(rows[0].max_abs_err == doctest::Approx(1 - std::numbers::pi / 4).epsilon(1e-14));
  // Q_4 stays below the bound at y = 1/4.
  CHECK(rows[1].max_abs_err <= 2.57e-5);
  // S_1 is worst at x = 1 where |pi - sin pi| = pi.
  CHECK(rows[3].max_abs_err == std::numbers::pi);
  // Errors are deterministic given the grid.
  auto again = run_bench(cfg);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(again[i].max_abs_err == rows[i].max_abs_err);
    CHECK(again[i].mean_abs_err == rows[i].mean_abs_err);
  }
}

TEST_CASE("the evaluation allowance dominates the rounding error at high degree") {
  ApproxPolynomial q = build_poly(TrigFunction::sin_pi_x, 12);
  double allowance = evaluation_error_bound(q);
  CHECK(allowance > 1.1e-16);
  CHECK(allowance < 1e-14);
}

TEST_CASE("no certified bound outside [0, 1]") {
  BenchConfig cfg;
  cfg.grid_size = 1000;
  cfg.m_list = {2};
  cfg.repetitions = 3;
  cfg.domain = {-0.5, 1.5};
  auto rows = run_bench(cfg);
  CHECK_FALSE(rows[0].certified_bound.has_value());
}

TEST_CASE("CSV schema") {
  BenchConfig cfg;
  cfg.grid_size = 1000;
  cfg.m_list = {3};
  cfg.repetitions = 3;
  std::ostringstream out;
  write_bench_csv(out, run_bench(cfg));
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "method,m,ns_per_eval,max_abs_err,mean_abs_err,certified_bound");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(line.find('\r') == std::string::npos);
    auto fields = split(line);
    REQUIRE(fields.size() == 6);
    CHECK(std::stod(fields[3]) >= 0);
    if (fields[0] == "Q") {
      CHECK(std::stod(fields[3]) <= std::stod(fields[5]));
    } else {
      CHECK(fields[5].empty());
    }
  }
  CHECK(rows == 3);
}

TEST_CASE("number formatting") {
  CHECK(format_shortest(0.1) == "0.1");
  CHECK(format_shortest(2.5e-7) == "2.5e-07");
  CHECK(std::stod(format_shortest(1.0 / 3)) == 1.0 / 3);
  CHECK(format_significant(3.14159265, 6) == "3.14159");
  CHECK(format_significant(12.0, 6) == "12");
}
