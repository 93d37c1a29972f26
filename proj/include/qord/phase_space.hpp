#pragma once

#include "qord/coefficient.hpp"
#include "qord/exponents.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace qord {

/// Commutative monomial x^a p^b on phase space.
struct ClassicalMonomial {
  ExpVec x;
  ExpVec p;

  Exp total_degree() const { return x.total() + p.total(); }
  bool is_identity() const { return x.empty() && p.empty(); }
  std::uint32_t variable_span() const {
    return static_cast<std::uint32_t>(std::max(x.size(), p.size()));
  }

  bool operator==(const ClassicalMonomial&) const = default;
};

/// Same graded order as the operator words: total degree, then x, then p.
bool operator<(const ClassicalMonomial& a, const ClassicalMonomial& b);

/// Polynomial observable on phase space with coefficients in Q(i)[hbar, tau].
class ClassicalPolynomial {
 public:
  using TermMap = std::map<ClassicalMonomial, Coefficient>;

  ClassicalPolynomial() = default;
  explicit ClassicalPolynomial(const Coefficient& scalar) { add_term(ClassicalMonomial{}, scalar); }
  ClassicalPolynomial(const ClassicalMonomial& m, const Coefficient& c) { add_term(m, c); }

  static ClassicalPolynomial one() { return ClassicalPolynomial(Coefficient(1)); }
  static ClassicalPolynomial x(std::uint32_t index, Exp e = 1);
  static ClassicalPolynomial p(std::uint32_t index, Exp e = 1);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Exp max_total_degree() const;
  std::uint32_t variable_span() const;
  std::optional<Coefficient> as_scalar() const;

  void add_term(const ClassicalMonomial& m, const Coefficient& c);

  ClassicalPolynomial& operator+=(const ClassicalPolynomial& o);
  ClassicalPolynomial& operator-=(const ClassicalPolynomial& o);
  friend ClassicalPolynomial operator+(ClassicalPolynomial a, const ClassicalPolynomial& b) {
    return a += b;
  }
  friend ClassicalPolynomial operator-(ClassicalPolynomial a, const ClassicalPolynomial& b) {
    return a -= b;
  }
  friend ClassicalPolynomial operator*(const ClassicalPolynomial& a, const ClassicalPolynomial& b);
  ClassicalPolynomial operator-() const;
  ClassicalPolynomial scaled(const Coefficient& c) const;
  ClassicalPolynomial pow(std::uint32_t e) const;

  bool operator==(const ClassicalPolynomial&) const = default;

  /// Canonical text, e.g. "x1^2*p1^2 - 1/2*hbar^2".
  std::string to_string() const;

 private:
  TermMap terms_;
};

/// d/dx_index (1-based).
ClassicalPolynomial derivative_x(const ClassicalPolynomial& f, std::uint32_t index);
/// d/dp_index (1-based).
ClassicalPolynomial derivative_p(const ClassicalPolynomial& f, std::uint32_t index);

/// {f, g} = sum_i (df/dx_i dg/dp_i - df/dp_i dg/dx_i).
ClassicalPolynomial poisson_bracket(const ClassicalPolynomial& f, const ClassicalPolynomial& g);

/// Moyal star product on polynomials, evaluated through the closed form
///
///   f * g = sum_{a,b} (i*hbar/2)^(|a|+|b|) (-1)^|b| / (a! b!)
///           (d_x^a d_p^b f) (d_p^a d_x^b g).
///
/// The sum terminates on polynomials. `truncate` keeps only the orders
/// j = |a|+|b| <= truncate; leave it empty for the full product.
ClassicalPolynomial moyal_star(const ClassicalPolynomial& f, const ClassicalPolynomial& g,
                               std::optional<Exp> truncate = std::nullopt);

}  // namespace qord
