#include "qord/parser.hpp"

#include "qord/detail/parser_impl.hpp"

namespace qord {

namespace {

struct ClassicalAlgebra {
  using Poly = ClassicalPolynomial;
  static constexpr bool operator_mode = false;
  static Poly scalar(const Coefficient& c) { return ClassicalPolynomial(c); }
  static Poly variable(GeneratorKind kind, std::uint32_t index) {
    return kind == GeneratorKind::Position ? ClassicalPolynomial::x(index)
                                           : ClassicalPolynomial::p(index);
  }
  static Poly add(const Poly& a, const Poly& b) { return a + b; }
  static Poly sub(const Poly& a, const Poly& b) { return a - b; }
  static Poly mul(const Poly& a, const Poly& b) { return a * b; }
  static Poly neg(const Poly& a) { return -a; }
};

struct OperatorAlgebra {
  using Poly = OperatorPolynomial;
  static constexpr bool operator_mode = true;
  static Poly scalar(const Coefficient& c) { return OperatorPolynomial(c); }
  static Poly variable(GeneratorKind kind, std::uint32_t index) {
    return OperatorPolynomial::generator(Generator{kind, index});
  }
  static Poly add(const Poly& a, const Poly& b) { return a + b; }
  static Poly sub(const Poly& a, const Poly& b) { return a - b; }
  static Poly mul(const Poly& a, const Poly& b) { return op_mul(a, b); }
  static Poly neg(const Poly& a) { return -a; }
};

}  // namespace

ObservableExpression parse_observable(std::string_view text, ParseMode mode) {
  ObservableExpression out;
  out.mode = mode;
  if (mode == ParseMode::Classical) {
    out.value = detail::parse_with_algebra<ClassicalAlgebra>(text);
  } else {
    out.value = detail::parse_with_algebra<OperatorAlgebra>(text);
  }
  return out;
}

}  // namespace qord
