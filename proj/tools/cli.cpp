#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <locale>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trigpoly/bench.hpp"
#include "trigpoly/errors.hpp"
#include "trigpoly/report.hpp"

namespace trigpoly::cli {

namespace {

constexpr int kMaxDigits = 100000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int default_digits() {
  const char* env = std::getenv("TRIGPOLY_DIGITS");
  if (env == nullptr) return kDefaultDigits;
  std::string_view text(env);
  int value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
    throw UsageError("TRIGPOLY_DIGITS must be an integer, got '" + std::string(text) + "'");
  }
  return value;
}

void check_digits(int digits) {
  require_digits(digits);
  if (digits > kMaxDigits) throw UsageError("--digits must be at most " + std::to_string(kMaxDigits));
}

TrigFunction parse_func(const std::string& name) {
  return name == "cos" ? TrigFunction::cos_pi_x : TrigFunction::sin_pi_x;
}

/// Writes to a file when a path is given, otherwise to the fallback stream.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : path_(path), stream_(&fallback) {
    if (path.empty() || path == "-") return;
    file_.open(path, std::ios::out | std::ios::binary | std::ios::trunc);
    if (!file_) throw Error(Errc::io, "cannot open '" + path + "' for writing");
    stream_ = &file_;
  }

  std::ostream& stream() { return *stream_; }

  void close() {
    stream_->flush();
    if (!*stream_) throw Error(Errc::io, "write to '" + (path_.empty() ? std::string("stdout") : path_) + "' failed");
    if (file_.is_open()) file_.close();
  }

 private:
  std::string path_;
  std::ofstream file_;
  std::ostream* stream_;
};

// --- subcommands ------------------------------------------------------------

struct CoeffsArgs {
  int max_j = 10;
  int digits = kDefaultDigits;
  std::string format = "table";
  std::string route = "recurrence";
};

int cmd_coeffs(const CoeffsArgs& a, std::ostream& out) {
  check_digits(a.digits);
  if (a.format == "symbolic") {
    for (const auto& s : coefficient_symbolic(a.max_j)) out << s.to_string() << '\n';
    return kOk;
  }
  Route route = a.route == "direct" ? Route::direct : a.route == "bessel" ? Route::bessel : Route::recurrence;
  CoefficientTable table = coefficient_table(route, a.max_j, a.digits);
  if (a.format == "csv") {
    for (const auto& e : table.entries()) {
      out << e.j << ',' << e.value.str(a.digits) << ',' << e.trunc_bound.sci(6, MPFR_RNDU) << '\n';
    }
    return kOk;
  }
  const int width = a.digits + 8;
  out << std::left << std::setw(5) << "j" << std::setw(width) << "t_j" << std::setw(16) << "trunc_bound"
      << "route" << '\n';
  for (const auto& e : table.entries()) {
    out << std::setw(5) << e.j << std::setw(width) << e.value.str(a.digits) << std::setw(16)
        << e.trunc_bound.sci(6, MPFR_RNDU) << to_string(e.route) << '\n';
  }
  out << std::right;
  return kOk;
}

struct EvalArgs {
  std::string func = "sin";
  int m = 4;
  double x = 0.5;
  int digits = kDefaultDigits;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  check_digits(a.digits);
  if (!std::isfinite(a.x)) throw UsageError("--x must be finite");
  const TrigFunction func = parse_func(a.func);
  ApproxPolynomial p = build_poly(func, a.m, a.digits);
  const double value = p(a.x);
  const mpfr_prec_t bits = working_bits(a.digits);
  const ExtReal reference = reference_value(func, ExtReal(a.x, bits));
  const ExtReal error = reference - ExtReal(value, bits);
  const Domain domain = certified_domain(func);

  out << "func: " << a.func << '\n';
  out << "m: " << a.m << '\n';
  out << "x: " << format_shortest(a.x) << '\n';
  out << "value: " << format_shortest(value) << '\n';
  out << "reference: " << reference.str(20) << '\n';
  out << "error: " << error.sci(6) << '\n';
  if (domain.contains_open(a.x)) {
    out << "bound: " << format_shortest(error_bound(func, a.m, a.x).bound) << '\n';
  } else if (a.x == domain.lo || a.x == domain.hi) {
    out << "bound: 0 (endpoint of the certified domain, where y = 0)\n";
  } else {
    out << "bound: none (outside certified domain)\n";
  }
  return kOk;
}

struct BoundArgs {
  std::string func = "sin";
  int m = 4;
  double x = 0.5;
};

int cmd_bound(const BoundArgs& a, std::ostream& out) {
  ErrorCertificate c = error_bound(parse_func(a.func), a.m, a.x);
  out << "func: " << a.func << '\n';
  out << "m: " << c.m << '\n';
  out << "x: " << format_shortest(c.x) << '\n';
  out << "y: " << format_shortest(shifted_variable(c.func, c.x)) << '\n';
  out << "leading_term: " << format_shortest(c.leading_term) << '\n';
  out << "q_m: " << format_shortest(c.q_m) << '\n';
  out << "tail_factor: " << format_shortest(c.tail_factor) << '\n';
  out << "bound: " << format_shortest(c.bound) << '\n';
  out << "domain: (" << format_shortest(c.domain.lo) << ", " << format_shortest(c.domain.hi) << ")\n";
  return kOk;
}

struct SelectArgs {
  std::string func = "sin";
  double tol = 1e-6;
};

int cmd_select(const SelectArgs& a, std::ostream& out) {
  out << select_degree(parse_func(a.func), a.tol) << '\n';
  return kOk;
}

struct CompareArgs {
  std::string func = "sin";
  std::vector<int> m_list = {1, 2, 3, 4};
  int grid = 2048;
  std::string out_path;
  int digits = kDefaultDigits;
};

int cmd_compare(const CompareArgs& a, std::ostream& fallback) {
  check_digits(a.digits);
  const TrigFunction func = parse_func(a.func);
  const bool is_sin = func == TrigFunction::sin_pi_x;
  const Domain domain = certified_domain(func);
  const int max_m = *std::max_element(a.m_list.begin(), a.m_list.end());
  CoefficientTable table = coefficient_recurrence(max_m, a.digits);
  std::vector<ApproxPolynomial> polys;
  std::vector<MaclaurinPoly> sums;
  for (int m : a.m_list) {
    polys.push_back(build_poly(func, m, table));
    sums.emplace_back(m, a.digits);
  }
  const mpfr_prec_t bits = working_bits(a.digits);

  Output output(a.out_path, fallback);
  std::ostream& out = output.stream();
  out << "x,reference";
  for (int m : a.m_list) out << ',' << (is_sin ? "Q_" : "P_") << m;
  for (int m : a.m_list) out << ",S_" << m;
  out << '\n';
  const double span = domain.hi - domain.lo;
  for (int i = 0; i < a.grid; ++i) {
    const double x = i + 1 == a.grid ? domain.hi : domain.lo + span * i / (a.grid - 1);
    out << format_shortest(x) << ',' << format_shortest(reference_value(func, ExtReal(x, bits)).to_double());
    for (const auto& p : polys) out << ',' << format_shortest(p(x));
    // cos(pi x) = sin(pi (x + 1/2)), so the cosine comparator is S_m(x + 1/2).
    for (const auto& s : sums) out << ',' << format_shortest(s(is_sin ? x : x + 0.5));
    out << '\n';
  }
  output.close();
  return kOk;
}

struct ProveArgs {
  int max_depth = kDefaultProofDepth;
  int digits = kDefaultDigits;
  double shift = 0.0;
  std::string curves_path;
  int curve_points = 257;
  std::string proof_path;
};

int cmd_prove(const ProveArgs& a, std::ostream& out) {
  check_digits(a.digits);
  ExampleProof example = prove_example_inequality(a.max_depth, a.digits, a.shift);
  const PositivityProof& proof = example.proof;
  out << "status: " << to_string(proof.status) << '\n';
  out << "subintervals: " << proof.subintervals.size() << '\n';
  out << "max_depth_used: " << proof.max_depth_used << '\n';
  if (!proof.subintervals.empty()) out << "min_lower_bound: " << proof.min_lower_bound().sci(6, MPFR_RNDD) << '\n';
  out << "envelope_nonnegative: " << (example.envelope_nonnegative ? "yes" : "no") << '\n';
  if (proof.unresolved) out << "unresolved: " << proof.unresolved->str(17) << '\n';

  if (!a.curves_path.empty()) {
    Output output(a.curves_path, out);
    std::ostream& csv = output.stream();
    csv << "x,f,f_minus_f4\n";
    for (const auto& s : example_curves(a.curve_points, a.digits)) {
      csv << format_shortest(s.x) << ',' << format_shortest(s.f.to_double()) << ','
          << format_shortest(s.f_minus_f4.to_double()) << '\n';
    }
    output.close();
  }
  if (!a.proof_path.empty()) {
    Output output(a.proof_path, out);
    output.stream() << proof_json(example).dump(2) << '\n';
    output.close();
  }
  return proof.proved() ? kOk : kInconclusive;
}

struct VerifyArgs {
  std::string suite = "all";
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  std::optional<int> inject_fault;
  int grid = 2048;
  int digits = kDefaultDigits;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  check_digits(a.digits);
  VerifyOptions options;
  options.digits = a.digits;
  options.seed = a.seed;
  SuiteConfig config;
  config.grid_size = a.grid;
  config.inject_fault_j = a.inject_fault;
  std::vector<PropertyReport> reports = run_suite(parse_suite(a.suite), config, options);
  if (a.format == "json") {
    out << suite_json(reports).dump(2) << '\n';
  } else {
    for (const auto& r : reports) out << report_line(r) << '\n';
  }
  for (const auto& r : reports) {
    if (!r.passed()) return kPropertyFailure;
  }
  return kOk;
}

struct BenchArgs {
  BenchConfig config;
  std::string out_path;
};

int cmd_bench(const BenchArgs& a, std::ostream& fallback, std::ostream& err) {
  std::vector<BenchRow> rows = run_bench(a.config);
  Output output(a.out_path, fallback);
  write_bench_csv(output.stream(), rows);
  output.close();
  for (const auto& r : rows) {
    if (r.certified_bound && !(r.max_abs_err <= *r.certified_bound)) {
      err << "error: Q_" << *r.m << " exceeds its certified bound\n";
      return kPropertyFailure;
    }
  }
  return kOk;
}

const std::vector<std::string> kFuncs = {"sin", "cos"};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  // Numbers are written the same way whatever locale the caller's streams use.
  struct LocaleGuard {
    std::ostream& stream;
    std::locale saved;
    explicit LocaleGuard(std::ostream& s) : stream(s), saved(s.imbue(std::locale::classic())) {}
    ~LocaleGuard() { stream.imbue(saved); }
  } out_guard(out), err_guard(err);

  int digits = kDefaultDigits;
  try {
    digits = default_digits();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  CLI::App app("Polynomial approximations of sin(pi x) and cos(pi x) with certified error bounds", "trigpoly");
  app.require_subcommand(1);

  CoeffsArgs coeffs;
  coeffs.digits = digits;
  auto* sc_coeffs = app.add_subcommand("coeffs", "Print the coefficients t_j");
  sc_coeffs->add_option("--max-j", coeffs.max_j, "Largest index j")->check(CLI::Range(1, kDefaultMaxJ));
  sc_coeffs->add_option("--digits", coeffs.digits, "Significant decimal digits (>= 30)");
  sc_coeffs->add_option("--format", coeffs.format, "table, csv or symbolic")
      ->check(CLI::IsMember({"table", "csv", "symbolic"}));
  sc_coeffs->add_option("--route", coeffs.route, "recurrence, direct or bessel")
      ->check(CLI::IsMember({"recurrence", "direct", "bessel"}));

  EvalArgs eval_args;
  eval_args.digits = digits;
  auto* sc_eval = app.add_subcommand("eval", "Evaluate P_m or Q_m at a point");
  sc_eval->add_option("--func", eval_args.func, "sin or cos")->check(CLI::IsMember(kFuncs));
  sc_eval->add_option("--m", eval_args.m, "Degree in y")->check(CLI::Range(1, kDefaultMaxJ));
  sc_eval->add_option("--x", eval_args.x, "Point")->required();
  sc_eval->add_option("--digits", eval_args.digits, "Precision of the reference value");

  BoundArgs bound;
  auto* sc_bound = app.add_subcommand("bound", "Print the error certificate at a point");
  sc_bound->add_option("--func", bound.func, "sin or cos")->check(CLI::IsMember(kFuncs));
  sc_bound->add_option("--m", bound.m, "Degree in y")->check(CLI::Range(1, kDefaultMaxJ));
  sc_bound->add_option("--x", bound.x, "Point in the open certified domain")->required();

  SelectArgs select;
  auto* sc_select = app.add_subcommand("select", "Smallest degree meeting a uniform tolerance");
  sc_select->add_option("--func", select.func, "sin or cos")->check(CLI::IsMember(kFuncs));
  sc_select->add_option("--tol", select.tol, "Tolerance (> 0)")->required()->check(CLI::PositiveNumber);

  CompareArgs compare;
  compare.digits = digits;
  auto* sc_compare = app.add_subcommand("compare", "Write approximants and Maclaurin sums over a grid as CSV");
  sc_compare->add_option("--func", compare.func, "sin or cos")->check(CLI::IsMember(kFuncs));
  sc_compare->add_option("--m-list", compare.m_list, "Comma-separated degrees")
      ->delimiter(',')
      ->check(CLI::Range(1, kDefaultMaxJ));
  sc_compare->add_option("--grid", compare.grid, "Number of grid points (>= 2)")->check(CLI::Range(2, 10000000));
  sc_compare->add_option("--out", compare.out_path, "Output path (default stdout)");
  sc_compare->add_option("--digits", compare.digits, "Precision of the reference values");

  ProveArgs prove;
  prove.digits = digits;
  auto* sc_prove = app.add_subcommand("prove-example", "Prove f > 0 on [0, 1/2] through the envelope f_4");
  sc_prove->add_option("--max-depth", prove.max_depth, "Bisection depth limit (>= 8)")->check(CLI::Range(8, 60));
  sc_prove->add_option("--emit-curves", prove.curves_path, "Write x,f,f_minus_f4 over [0, 1/2] to this path");
  sc_prove->add_option("--curve-points", prove.curve_points, "Points in the curve CSV")->check(CLI::Range(2, 1000000));
  sc_prove->add_option("--proof-json", prove.proof_path, "Write the full proof record as JSON");
  sc_prove->add_option("--digits", prove.digits, "Precision of the interval coefficients");
  sc_prove->add_option("--shift", prove.shift, "Prove f_4 - shift > 0 instead")->group("");

  VerifyArgs verify;
  verify.digits = digits;
  auto* sc_verify = app.add_subcommand("verify", "Run the property suites");
  sc_verify->add_option("--suite", verify.suite, "all, coeffs, bracketing, bessel, maclaurin or taylor")
      ->check(CLI::IsMember({"all", "coeffs", "bracketing", "bessel", "maclaurin", "taylor"}));
  sc_verify->add_option("--format", verify.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sc_verify->add_option("--seed", verify.seed, "Jitter the grids with this seed");
  sc_verify->add_option("--grid", verify.grid, "Uniform grid size")->check(CLI::Range(1, 1000000));
  sc_verify->add_option("--digits", verify.digits, "Working precision");
  sc_verify->add_option("--inject-fault", verify.inject_fault, "Corrupt t_J before the bound check")
      ->check(CLI::Range(1, kDefaultMaxJ))
      ->group("");

  BenchArgs bench;
  auto* sc_bench = app.add_subcommand("bench", "Accuracy and cost of Q_m, S_m and std::sin as CSV");
  sc_bench->add_option("--grid", bench.config.grid_size, "Grid size (>= 1000)")->check(CLI::Range(1000, 100000000));
  sc_bench->add_option("--m-list", bench.config.m_list, "Comma-separated degrees")
      ->delimiter(',')
      ->check(CLI::Range(1, kDefaultMaxJ));
  sc_bench->add_option("--repetitions", bench.config.repetitions, "Timed repetitions (>= 3)")
      ->check(CLI::Range(3, 1000));
  sc_bench->add_option("--out", bench.out_path, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (sc_coeffs->parsed()) return cmd_coeffs(coeffs, out);
    if (sc_eval->parsed()) return cmd_eval(eval_args, out);
    if (sc_bound->parsed()) return cmd_bound(bound, out);
    if (sc_select->parsed()) return cmd_select(select, out);
    if (sc_compare->parsed()) return cmd_compare(compare, out);
    if (sc_prove->parsed()) return cmd_prove(prove, out);
    if (sc_verify->parsed()) return cmd_verify(verify, out);
    if (sc_bench->parsed()) return cmd_bench(bench, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case Errc::precision_too_low: return kPrecision;
      case Errc::io: return kIo;
      default: return kUsage;
    }
  }
  return kUsage;
}

}  // namespace trigpoly::cli
