#pragma once

#include "qord/phase_space.hpp"
#include "qord/weyl_algebra.hpp"

#include <string_view>
#include <variant>

namespace qord {

enum class ParseMode { Classical, Operator };

/// Result of parsing one observable. Classical expressions evaluate to
/// commuting polynomials; operator expressions multiply through the
/// commutation algebra, so the stored value is already in normal form.
struct ObservableExpression {
  ParseMode mode = ParseMode::Classical;
  std::variant<ClassicalPolynomial, OperatorPolynomial> value;

  const ClassicalPolynomial& classical() const { return std::get<ClassicalPolynomial>(value); }
  const OperatorPolynomial& op() const { return std::get<OperatorPolynomial>(value); }
};

/// Grammar, with explicit '*' everywhere and whitespace ignored:
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)?
///   atom   := variable | 'i' | 'hbar' | rational | '(' expr ')'
///   rational := uint ('/' uint)?
/// Classical variables are x<k> and p<k>, operator variables X<k> and P<k>,
/// k >= 1. Throws ParseError with a 1-based character position.
ObservableExpression parse_observable(std::string_view text, ParseMode mode);

}  // namespace qord
