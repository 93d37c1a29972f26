#pragma once

#include "qord/coefficient.hpp"
#include "qord/exponents.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qord {

enum class GeneratorKind : std::uint8_t { Position, Momentum };

/// One canonical generator, a position or momentum operator with a 1-based
/// coordinate index.
struct Generator {
  GeneratorKind kind;
  std::uint32_t index;
  bool operator==(const Generator&) const = default;
};

inline Generator position(std::uint32_t index) {
  return Generator{GeneratorKind::Position, index};
}
inline Generator momentum(std::uint32_t index) {
  return Generator{GeneratorKind::Momentum, index};
}

/// Monomial word x^a p^b in normal form: every position factor stands to the
/// left of every momentum factor, indices ascending within each block.
struct NormalWord {
  ExpVec x;
  ExpVec p;

  Exp total_degree() const { return x.total() + p.total(); }
  bool is_identity() const { return x.empty() && p.empty(); }
  /// Highest 1-based variable index that occurs; 0 for the identity.
  std::uint32_t variable_span() const {
    return static_cast<std::uint32_t>(std::max(x.size(), p.size()));
  }

  bool operator==(const NormalWord&) const = default;
};

/// Graded order: total degree first, then x block lexicographically, then p
/// block. Term maps iterate ascending; renderers walk them backwards so the
/// highest-degree term prints first.
bool operator<(const NormalWord& a, const NormalWord& b);

/// Polynomial in the canonical commutation algebra [x_j, p_k] = i*hbar*d_jk,
/// kept in normal form with coefficients in Q(i)[hbar, tau]. Zero
/// coefficients are never stored, so operator== is exact algebra equality.
class OperatorPolynomial {
 public:
  using TermMap = std::map<NormalWord, Coefficient>;

  OperatorPolynomial() = default;
  explicit OperatorPolynomial(const Coefficient& scalar) { add_term(NormalWord{}, scalar); }
  OperatorPolynomial(const NormalWord& w, const Coefficient& c) { add_term(w, c); }

  static OperatorPolynomial identity() { return OperatorPolynomial(Coefficient(1)); }
  static OperatorPolynomial generator(Generator g);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Exp max_total_degree() const;
  std::uint32_t variable_span() const;
  /// The scalar c with *this == c * identity; empty when any proper word
  /// occurs. The zero polynomial yields c = 0.
  std::optional<Coefficient> as_scalar() const;

  void add_term(const NormalWord& w, const Coefficient& c);

  OperatorPolynomial& operator+=(const OperatorPolynomial& o);
  OperatorPolynomial& operator-=(const OperatorPolynomial& o);
  friend OperatorPolynomial operator+(OperatorPolynomial a, const OperatorPolynomial& b) {
    return a += b;
  }
  friend OperatorPolynomial operator-(OperatorPolynomial a, const OperatorPolynomial& b) {
    return a -= b;
  }
  OperatorPolynomial operator-() const;
  OperatorPolynomial scaled(const Coefficient& c) const;

  bool operator==(const OperatorPolynomial&) const = default;

  /// Canonical text, e.g. "X1^2*P1^2 - 2*i*hbar*X1*P1 - 2/3*hbar^2".
  std::string to_string() const;

 private:
  TermMap terms_;
};

/// Product in the commutation algebra, result in normal form.
OperatorPolynomial op_mul(const OperatorPolynomial& a, const OperatorPolynomial& b);
inline OperatorPolynomial operator*(const OperatorPolynomial& a, const OperatorPolynomial& b) {
  return op_mul(a, b);
}

/// Normal form of an arbitrary generator word (left-to-right operator order).
OperatorPolynomial normal_order_word(std::span<const Generator> word);

OperatorPolynomial commutator(const OperatorPolynomial& a, const OperatorPolynomial& b);

/// Formal adjoint: conjugate coefficients, reverse each word, re-normal-order.
/// Positions and momenta are self-adjoint; hbar and tau are real.
OperatorPolynomial adjoint(const OperatorPolynomial& a);

/// Exact division by i*hbar; empty when some coefficient summand carries no
/// hbar factor.
std::optional<OperatorPolynomial> divided_by_i_hbar(const OperatorPolynomial& a);

}  // namespace qord
