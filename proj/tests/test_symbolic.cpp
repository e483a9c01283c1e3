#include "oracle.hpp"
#include "support.hpp"
#include "trigpoly/coeffs.hpp"

using namespace trigpoly;

TEST_CASE("displayed closed forms") {
  auto forms = coefficient_symbolic(5);
  REQUIRE(forms.size() == 5);
  CHECK(forms[0].to_string() == "t_1 = 1/pi");
  CHECK(forms[1].to_string() == "t_2 = 1/pi^3");
  CHECK(forms[2].to_string() == "t_3 = (12 - pi^2)/(6*pi^5)");
  CHECK(forms[3].to_string() == "t_4 = (10 - pi^2)/(2*pi^7)");
  CHECK(forms[4].to_string() == "t_5 = (1680 - 180*pi^2 + pi^4)/(120*pi^9)");
}

TEST_CASE("structure of the symbolic coefficients") {
  auto forms = coefficient_symbolic(30);
  for (const auto& s : forms) {
    CHECK(s.pi_power == 2 * s.j - 1);
    CHECK(s.denominator_rational > 0);
    // Integer numerator with no common factor.
    mpz_class g = 0;
    for (const auto& c : s.numerator) {
      CHECK(c.get_den() == 1);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    }
    CHECK(g == 1);
  }
  CHECK(forms[0].numerator.size() == 1);
  CHECK(forms[0].numerator[0] == 1);
}

TEST_CASE("symbolic values agree with the numeric routes") {
  auto forms = coefficient_symbolic(100);
  CoefficientTable table = coefficient_recurrence(100, 50);
  for (const auto& s : forms) {
    CertifiedValue v = s.evaluate(60);
    CHECK(oracle::rel_err(v.value, oracle::from(table.at(s.j).value)) < 1e-40);
  }
  for (int j : {1, 7, 40}) {
    CHECK(oracle::rel_err(forms[j - 1].evaluate(50).value, oracle::t(j)) < 1e-50);
  }
}
