#pragma once

#include "qord/angular.hpp"
#include "qord/oracle.hpp"
#include "qord/quantize.hpp"

#include <cstdint>
#include <span>

namespace qord {

/// Oracle-side replays of the engine's claims. Each check rebuilds the
/// left-hand side in the Schrodinger representation, bypassing the binomial
/// rewriting engine, and compares images on a monomial box large enough to
/// separate the operators involved.

/// word acted letter by letter equals the claimed normal form.
bool verify_normal_order(std::span<const Generator> word, const OperatorPolynomial& result);

/// The scheme's rule words for f, replayed letterwise, act like `result`.
bool verify_quantization(const QuantizationScheme& scheme, const ClassicalPolynomial& f,
                         const OperatorPolynomial& result);

/// apply(product) == apply(a) after apply(b).
bool verify_product(const OperatorPolynomial& a, const OperatorPolynomial& b,
                    const OperatorPolynomial& product);

/// apply(result) == apply(a)apply(b) - apply(b)apply(a).
bool verify_commutator(const OperatorPolynomial& a, const OperatorPolynomial& b,
                       const OperatorPolynomial& result);

/// i*hbar * (Q({f,g}) - defect) acts like the commutator [Q(f), Q(g)],
/// with Q({f,g}) replayed through rule words and the commutator composed in
/// the representation.
bool verify_defect(const QuantizationScheme& scheme, const ClassicalPolynomial& f,
                   const ClassicalPolynomial& g, const OperatorPolynomial& defect);

/// The claimed symbol quantizes back to the input operator.
bool verify_weyl_symbol(const OperatorPolynomial& input, const ClassicalPolynomial& symbol);

/// Q(l^2) acts like L^2 + shift in the given dimension.
bool verify_shift(const QuantizationScheme& scheme, std::uint32_t dimension,
                  const Coefficient& shift);

/// Op_W(star) acts like Op_W(f) composed with Op_W(g); valid only for the
/// untruncated star product.
bool verify_star_compatibility(const ClassicalPolynomial& f, const ClassicalPolynomial& g,
                               const ClassicalPolynomial& star);

/// The bracket is the hbar-free part of (f*g - g*f)/(i*hbar), with the star
/// products computed by the deformation engine.
bool verify_poisson_bracket(const ClassicalPolynomial& f, const ClassicalPolynomial& g,
                            const ClassicalPolynomial& bracket);

}  // namespace qord
