#include <doctest.h>

#include "qord/errors.hpp"
#include "qord/parser.hpp"
#include "support/generators.hpp"

#include <string>
#include <vector>

using namespace qord;
using qord::testsupport::Rng;

namespace {

ClassicalPolynomial classical(std::string_view text) {
  return parse_observable(text, ParseMode::Classical).classical();
}

OperatorPolynomial op(std::string_view text) {
  return parse_observable(text, ParseMode::Operator).op();
}

void expect_error(std::string_view text, ParseMode mode, const std::string& message,
                  std::size_t pos) {
  try {
    parse_observable(text, mode);
    FAIL("no error on \"" << std::string(text) << "\"");
  } catch (const ParseError& e) {
    CHECK(e.what() == message);
    CHECK(e.position() == pos);
  }
}

}  // namespace

TEST_CASE("classical expressions") {
  CHECK(classical("x1^2*p1").to_string() == "x1^2*p1");
  CHECK(classical("x1 + p2") == ClassicalPolynomial::x(1) + ClassicalPolynomial::p(2));
  CHECK(classical("-x1") == -ClassicalPolynomial::x(1));
  CHECK(classical("2/3*hbar*x1") ==
        ClassicalPolynomial::x(1).scaled(Coefficient::monomial(
            GaussianRational(Rational(Int(2), Int(3))), 1, 0)));
  CHECK(classical("(x1 + p1)^2").to_string() == "x1^2 + 2*x1*p1 + p1^2");
  CHECK(classical("i*hbar") == ClassicalPolynomial(
                                   Coefficient::monomial(GaussianRational::i(), 1, 0)));

  // '*' binds tighter than '+'; '^' tighter than '*'; unary minus is outermost.
  CHECK(classical("x1 + p1*x2") ==
        ClassicalPolynomial::x(1) + ClassicalPolynomial::p(1) * ClassicalPolynomial::x(2));
  CHECK(classical("2*x1^2") == ClassicalPolynomial::x(1, 2).scaled(Coefficient(2)));
  CHECK(classical("-x1^2") == -ClassicalPolynomial::x(1, 2));
  CHECK(classical("  x1\t*\n p1 ") == classical("x1*p1"));
  CHECK(classical("x1^0") == ClassicalPolynomial::one());
  CHECK(classical("7/2 - 1/2") == ClassicalPolynomial(Coefficient(3)));
}

TEST_CASE("operator expressions multiply through the commutation algebra") {
  const std::vector<Generator> px = {momentum(1), position(1)};
  CHECK(op("P1*X1") == normal_order_word(px));
  CHECK(op("X1*P1 - i*hbar") == normal_order_word(px));
  CHECK(op("(X1*P1)^2").to_string() == "X1^2*P1^2 - i*hbar*X1*P1");
  CHECK(op("X1*X2") == op("X2*X1"));
  CHECK(op("P1*X1 - X1*P1").to_string() == "-i*hbar");

  const ObservableExpression parsed = parse_observable("X1", ParseMode::Operator);
  CHECK(parsed.mode == ParseMode::Operator);
  CHECK(parsed.op() == OperatorPolynomial::generator(position(1)));
  CHECK(parse_observable("x1", ParseMode::Classical).mode == ParseMode::Classical);
}

TEST_CASE("parse errors carry the offending position") {
  expect_error("x1 $ p1", ParseMode::Classical, "unexpected character '$'", 4);
  expect_error("x1^-2", ParseMode::Classical, "negative exponent", 4);
  expect_error("x1^p1", ParseMode::Classical, "expected integer exponent", 4);
  expect_error("x1^1/2", ParseMode::Classical, "fractional exponent", 5);
  expect_error("x0", ParseMode::Classical, "variable index must be >= 1", 1);
  expect_error("1/0", ParseMode::Classical, "zero denominator", 3);
  expect_error("", ParseMode::Classical, "empty expression", 1);
  expect_error("   ", ParseMode::Classical, "empty expression", 1);
  expect_error("x1 x2", ParseMode::Classical, "unexpected 'x2'", 4);
  expect_error("(x1", ParseMode::Classical, "expected ')'", 4);
  expect_error("x1*", ParseMode::Classical, "unexpected end of expression", 4);
  expect_error("x1^10001", ParseMode::Classical, "exponent too large", 4);
  expect_error("x12345678", ParseMode::Classical, "variable index too large", 1);
  expect_error("y1", ParseMode::Classical, "unknown identifier 'y1'", 1);
  expect_error("tau", ParseMode::Classical, "unknown identifier 'tau'", 1);

  // Wrong-case variables get a pointed hint instead of a generic unknown.
  expect_error("X1*p1", ParseMode::Classical,
               "unknown identifier 'X1' (classical variables are lowercase: x1)", 1);
  expect_error("x1 + p2", ParseMode::Operator,
               "unknown identifier 'x1' (operator variables are uppercase: X1)", 1);
  expect_error("X1*p2", ParseMode::Operator,
               "unknown identifier 'p2' (operator variables are uppercase: P2)", 4);
}

TEST_CASE("canonical text round trips") {
  Rng rng(140825);
  for (int trial = 0; trial < 200; ++trial) {
    const ClassicalPolynomial f = testsupport::random_classical(rng, 4, 3, 3);
    CHECK(classical(f.to_string()) == f);

    const OperatorPolynomial a = testsupport::random_operator(rng, 4, 3, 3);
    CHECK(op(a.to_string()) == a);
  }
  CHECK(classical("0") == ClassicalPolynomial());
  CHECK(op("0") == OperatorPolynomial());
}
