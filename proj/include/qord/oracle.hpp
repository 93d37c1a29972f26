#pragma once

#include "qord/coefficient.hpp"
#include "qord/exponents.hpp"
#include "qord/weyl_algebra.hpp"

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace qord {

/// Polynomial wavefunction in the position variables, coefficients in
/// Q(i)[hbar, tau]. This is the carrier space of the Schrodinger
/// representation that the oracle checks operators against.
class Wavefunction {
 public:
  using TermMap = std::map<ExpVec, Coefficient>;

  Wavefunction() = default;
  explicit Wavefunction(const Coefficient& scalar) { add_term(ExpVec{}, scalar); }
  Wavefunction(const ExpVec& exps, const Coefficient& c) { add_term(exps, c); }

  static Wavefunction monomial(const ExpVec& exps) {
    return Wavefunction(exps, Coefficient(1));
  }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const ExpVec& exps, const Coefficient& c);
  Wavefunction& operator+=(const Wavefunction& o);
  Wavefunction& operator-=(const Wavefunction& o);
  friend Wavefunction operator+(Wavefunction a, const Wavefunction& b) { return a += b; }
  friend Wavefunction operator-(Wavefunction a, const Wavefunction& b) { return a -= b; }
  Wavefunction scaled(const Coefficient& c) const;

  bool operator==(const Wavefunction&) const = default;

  std::string to_string() const;

 private:
  TermMap terms_;
};

/// One generator acting on a wavefunction: positions multiply, momenta apply
/// -i*hbar d/dx. This is the whole representation; everything else folds it.
Wavefunction apply_generator(Generator g, const Wavefunction& psi);

/// A word acts letter by letter, rightmost letter first (operator order).
Wavefunction apply_word(std::span<const Generator> word, const Wavefunction& psi);

Wavefunction apply_operator(const OperatorPolynomial& op, const Wavefunction& psi);

/// Decides a == b by acting on finitely many monomials. The test box is
/// derived from the difference a - b: for each variable occurring there, the
/// exponent range [0, max p-degree of that variable in a - b] suffices,
/// because the lowest-derivative part of any nonzero difference survives on
/// some monomial inside that box.
bool operators_agree(const OperatorPolynomial& a, const OperatorPolynomial& b);

/// Same check on an explicit box: all monomials x^g with g <= per_var_max
/// componentwise. Runs the box in parallel when OpenMP is available.
bool operators_agree_on_box(const OperatorPolynomial& a, const OperatorPolynomial& b,
                            const std::vector<Exp>& per_var_max);

/// Per-variable maximum momentum degree; the box bound the agreement checks
/// are built from.
std::vector<Exp> momentum_degrees(const OperatorPolynomial& a);

/// Calls fn on the monomial wavefunction x^g for every g <= box
/// componentwise, in a fixed order.
void for_each_box_monomial(const std::vector<Exp>& box,
                           const std::function<void(const Wavefunction&)>& fn);

}  // namespace qord
