#pragma once

#include "qord/phase_space.hpp"
#include "qord/weyl_algebra.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qord {

/// Operator layout used by the tau-ordering family: split the position block
/// around the momenta (x-sandwich), or split the momentum block around the
/// positions (p-sandwich). Both layouts give the same operator for every tau;
/// keeping them separate lets tests assert that.
enum class ShubinForm { XSandwich, PSandwich };

/// Two equivalent constructions of the Born-Jordan rule: Direct emits the
/// uniform-weight words with exact factorial weights, Integral averages the
/// symbolic tau family over [0, 1]. Their agreement is a test surface, so
/// they share no arithmetic.
enum class BornJordanMode { Direct, Integral };

struct QuantizationScheme {
  enum class Kind { Weyl, Shubin, BornJordan };

  Kind kind = Kind::Weyl;
  /// Shubin only; empty keeps tau symbolic.
  std::optional<Rational> tau;
  ShubinForm form = ShubinForm::XSandwich;
  BornJordanMode bj_mode = BornJordanMode::Direct;

  static QuantizationScheme weyl() { return QuantizationScheme{}; }
  static QuantizationScheme shubin(const Rational& tau_value,
                                   ShubinForm form = ShubinForm::XSandwich) {
    return QuantizationScheme{Kind::Shubin, tau_value, form, BornJordanMode::Direct};
  }
  static QuantizationScheme shubin_symbolic(ShubinForm form = ShubinForm::XSandwich) {
    return QuantizationScheme{Kind::Shubin, std::nullopt, form, BornJordanMode::Direct};
  }
  static QuantizationScheme born_jordan(BornJordanMode mode = BornJordanMode::Direct) {
    return QuantizationScheme{Kind::BornJordan, std::nullopt, ShubinForm::XSandwich, mode};
  }

  /// "weyl", "bj", "shubin:1/2", "shubin:sym".
  std::string to_string() const;
  static std::optional<QuantizationScheme> parse(std::string_view text);
};

/// One summand of a quantization rule: a scalar weight and a generator word,
/// still unordered.
struct WeightedWord {
  Coefficient weight;
  std::vector<Generator> word;
};

/// The raw rule: the weighted operator words a scheme assigns to a classical
/// monomial. Every quantizer below folds this list through the rewriting
/// engine; the representation oracle replays the same list letter by letter,
/// which is what makes verification independent.
std::vector<WeightedWord> quantization_words(const QuantizationScheme& scheme,
                                             const ClassicalMonomial& m);

OperatorPolynomial quantize(const QuantizationScheme& scheme, const ClassicalPolynomial& f);

OperatorPolynomial weyl_quantize(const ClassicalPolynomial& f);
OperatorPolynomial shubin_quantize(const ClassicalPolynomial& f,
                                   const std::optional<Rational>& tau,
                                   ShubinForm form = ShubinForm::XSandwich);
OperatorPolynomial bj_quantize(const ClassicalPolynomial& f,
                               BornJordanMode mode = BornJordanMode::Direct);

/// Inverse of weyl_quantize on polynomials, by triangular elimination down
/// the degree filtration.
ClassicalPolynomial weyl_symbol(const OperatorPolynomial& a);

/// Q({f,g}) - [Q(f), Q(g)] / (i*hbar): how far the scheme is from sending
/// Poisson brackets to commutators. The division is always exact; a failed
/// division would be an engine bug and raises InternalError.
OperatorPolynomial dirac_defect(const QuantizationScheme& scheme, const ClassicalPolynomial& f,
                                const ClassicalPolynomial& g);

}  // namespace qord
