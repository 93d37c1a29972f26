#pragma once

#include "qord/gaussian.hpp"
#include "qord/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace qord {

/// Key of one coefficient summand: the hbar and tau exponents.
struct HbarTau {
  std::uint32_t hbar = 0;
  std::uint32_t tau = 0;
  auto operator<=>(const HbarTau&) const = default;
};

/// Element of Q(i)[hbar, tau]. Stored as a map from (hbar, tau) exponents to
/// Gaussian-rational summands; zero summands are never kept, so structural
/// equality is exact equality in the ring.
class Coefficient {
 public:
  using TermMap = std::map<HbarTau, GaussianRational>;

  Coefficient() = default;
  Coefficient(long long n) { add(HbarTau{}, GaussianRational(n)); }
  Coefficient(const Rational& r) { add(HbarTau{}, GaussianRational(r)); }
  Coefficient(const GaussianRational& g) { add(HbarTau{}, g); }

  static Coefficient i() { return Coefficient(GaussianRational::i()); }
  static Coefficient hbar(std::uint32_t exp = 1) {
    return monomial(GaussianRational(1), exp, 0);
  }
  static Coefficient tau(std::uint32_t exp = 1) {
    return monomial(GaussianRational(1), 0, exp);
  }
  static Coefficient one_minus_tau() {
    Coefficient c(1);
    c.add(HbarTau{0, 1}, GaussianRational(-1));
    return c;
  }
  static Coefficient monomial(const GaussianRational& g, std::uint32_t hbar_exp,
                              std::uint32_t tau_exp) {
    Coefficient c;
    c.add(HbarTau{hbar_exp, tau_exp}, g);
    return c;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// True when the value lies in Q(i), i.e. has no hbar or tau content.
  bool is_constant() const;
  bool depends_on_tau() const;

  const TermMap& terms() const { return terms_; }

  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  Coefficient& operator*=(const Coefficient& o) { return *this = *this * o; }
  Coefficient operator-() const;

  /// Complex conjugation: i -> -i; hbar and tau are real and fixed.
  Coefficient conjugate() const;
  Coefficient pow(std::uint32_t e) const;

  /// Definite integral of the tau variable over [0, 1]: tau^e -> 1/(e+1).
  Coefficient integrate_tau_unit() const;
  /// Substitute a rational value for tau.
  Coefficient eval_tau(const Rational& value) const;
  /// Substitute an arbitrary coefficient (e.g. 1 - tau) for tau.
  Coefficient substitute_tau(const Coefficient& value) const;

  /// Exact division by i*hbar; empty when some summand carries no hbar.
  std::optional<Coefficient> divided_by_i_hbar() const;

  /// The constant g with *this == g * hbar^2 exactly (zero counts, with
  /// g = 0); empty for any other shape.
  std::optional<GaussianRational> as_hbar_square_multiple() const;

  bool operator==(const Coefficient&) const = default;

  /// Sum of summands in ascending (hbar, tau) order, e.g.
  /// "1/2 + 2*hbar^2 - 1/3*i*hbar*tau^2".
  std::string to_string() const;

 private:
  void add(const HbarTau& key, const GaussianRational& g);

  TermMap terms_;
};

/// True when the coefficient is a single summand whose leading Gaussian part
/// renders with a minus sign (negative real, or zero real and negative
/// imaginary). Polynomial renderers use this to pull the sign out of a term.
bool coefficient_display_negative(const Coefficient& c);

/// Render a nonzero coefficient as one factor of a product: single summands
/// inline ("2/3", "i*hbar", "hbar^2"), sums parenthesized ("(1 - tau)").
/// A unit Gaussian part is dropped when hbar/tau factors remain.
std::string coefficient_factor(const Coefficient& c);

}  // namespace qord
