#include <doctest.h>

#include "qord/angular.hpp"

#include <stdexcept>
#include <vector>

using namespace qord;

namespace {

Rational rat(long long num, long long den = 1) { return Rational(Int(num), Int(den)); }

Coefficient hbar_sq_times(const Rational& r) {
  return Coefficient::monomial(GaussianRational(r), 2, 0);
}

OperatorPolynomial map_tau(const OperatorPolynomial& a, const Coefficient& value) {
  OperatorPolynomial out;
  for (const auto& [w, c] : a.terms()) out.add_term(w, c.substitute_tau(value));
  return out;
}

bool reports_equal(const ShiftReport& a, const ShiftReport& b) {
  return a.dimension == b.dimension && a.scheme.to_string() == b.scheme.to_string() &&
         a.shift == b.shift && a.conjecture_value == b.conjecture_value &&
         a.matches_conjecture == b.matches_conjecture;
}

}  // namespace

TEST_CASE("component constructors reject bad indices") {
  CHECK_THROWS_AS(l_component(1, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(l_component(0, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(l_component(2, 5, 4), std::invalid_argument);
  CHECK_THROWS_AS(l_component(2, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(l_hat_component(3, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(l_squared_classical(1), std::invalid_argument);
  CHECK_THROWS_AS(l_hat_squared(0), std::invalid_argument);
  CHECK_THROWS_AS(ordering_shift(QuantizationScheme::weyl(), 1), std::invalid_argument);
}

TEST_CASE("angular momentum components") {
  CHECK(l_component(1, 2, 3).to_string() == "x1*p2 - x2*p1");
  CHECK(l_hat_component(1, 2, 2).to_string() == "X1*P2 - X2*P1");

  // Components close under the Poisson bracket.
  CHECK(poisson_bracket(l_component(1, 2, 3), l_component(1, 3, 3)) == l_component(2, 3, 3));

  // One square per unordered pair, three monomials each, no collisions.
  CHECK(l_squared_classical(4).terms().size() == 18);

  const OperatorPolynomial l12 = l_hat_component(1, 2, 2);
  CHECK(l_hat_squared(2) == op_mul(l12, l12));
  CHECK(adjoint(l12) == l12);
  CHECK(adjoint(l_hat_squared(3)) == l_hat_squared(3));
}

TEST_CASE("shift goldens in three and four dimensions") {
  const ShiftReport w3 = ordering_shift(QuantizationScheme::weyl(), 3);
  CHECK(w3.shift == hbar_sq_times(rat(3, 2)));
  CHECK(w3.conjecture_value == hbar_sq_times(rat(2)));
  CHECK(!w3.matches_conjecture);

  const ShiftReport b3 = ordering_shift(QuantizationScheme::born_jordan(), 3);
  CHECK(b3.shift == hbar_sq_times(rat(2)));
  CHECK(b3.matches_conjecture);

  CHECK(ordering_shift(QuantizationScheme::weyl(), 4).shift == hbar_sq_times(rat(3)));

  const ShiftReport b4 = ordering_shift(QuantizationScheme::born_jordan(), 4);
  CHECK(b4.shift == hbar_sq_times(rat(4)));
  CHECK(b4.matches_conjecture);
}

TEST_CASE("shift grows as one constant per component") {
  for (std::uint32_t n = 2; n <= 6; ++n) {
    const long long pairs = static_cast<long long>(n) * (n - 1) / 2;

    const ShiftReport w = ordering_shift(QuantizationScheme::weyl(), n);
    CHECK(w.shift == hbar_sq_times(rat(n * (n - 1), 4)));
    CHECK(w.shift == hbar_sq_times(rat(1, 2) * rat(pairs)));
    CHECK(!w.matches_conjecture);

    const ShiftReport b = ordering_shift(QuantizationScheme::born_jordan(), n);
    CHECK(b.shift == hbar_sq_times(rat(n * (n - 1), 3)));
    CHECK(b.shift == hbar_sq_times(rat(2, 3) * rat(pairs)));
    CHECK(b.conjecture_value == hbar_sq_times(rat(2 * (static_cast<long long>(n) - 2))));
    CHECK(b.matches_conjecture == (n == 3 || n == 4));

    // tau = 1/2 rides along with the symmetric rule.
    CHECK(ordering_shift(QuantizationScheme::shubin(rat(1, 2)), n).shift == w.shift);

    // Both constructions of the uniform rule see the same shift.
    CHECK(ordering_shift(QuantizationScheme::born_jordan(BornJordanMode::Integral), n).shift ==
          b.shift);
  }
}

TEST_CASE("asymmetric orders leave a non-scalar remainder") {
  CHECK_THROWS_AS(ordering_shift(QuantizationScheme::shubin(rat(1, 3)), 3),
                  NonScalarShiftError);
  CHECK_THROWS_AS(ordering_shift(QuantizationScheme::shubin(rat(0)), 2), NonScalarShiftError);

  try {
    ordering_shift(QuantizationScheme::shubin_symbolic(), 3);
    FAIL("expected a non-scalar remainder");
  } catch (const NonScalarShiftError& e) {
    const OperatorPolynomial& rem = e.remainder();
    CHECK(!rem.is_zero());
    CHECK(!rem.as_scalar().has_value());

    // Conjugation flips the ordering parameter; l^2 is real, so the
    // remainder must satisfy the same symmetry.
    CHECK(adjoint(rem) == map_tau(rem, Coefficient::one_minus_tau()));

    // At tau = 1/2 the remainder collapses to the symmetric scalar shift.
    CHECK(map_tau(rem, Coefficient(rat(1, 2))) ==
          OperatorPolynomial(hbar_sq_times(rat(3, 2))));
  }
}

TEST_CASE("scan rows reproduce the per-dimension shifts in either execution mode") {
  for (const QuantizationScheme& scheme :
       {QuantizationScheme::born_jordan(), QuantizationScheme::weyl()}) {
    const std::vector<ShiftReport> par = conjecture_scan(scheme, 2, 6, true);
    const std::vector<ShiftReport> ser = conjecture_scan(scheme, 2, 6, false);
    REQUIRE(par.size() == 5);
    REQUIRE(ser.size() == 5);
    for (std::size_t k = 0; k < par.size(); ++k) {
      CHECK(reports_equal(par[k], ser[k]));
      CHECK(par[k].dimension == 2 + k);
      CHECK(reports_equal(par[k], ordering_shift(scheme, par[k].dimension)));
    }
  }

  CHECK_THROWS_AS(conjecture_scan(QuantizationScheme::weyl(), 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(conjecture_scan(QuantizationScheme::weyl(), 5, 4), std::invalid_argument);

  // Failures inside the parallel region surface as the same exception.
  CHECK_THROWS_AS(conjecture_scan(QuantizationScheme::shubin(rat(1, 3)), 2, 5, true),
                  NonScalarShiftError);
  CHECK_THROWS_AS(conjecture_scan(QuantizationScheme::shubin(rat(1, 3)), 2, 5, false),
                  NonScalarShiftError);
}
