#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace qord {

using Int = boost::multiprecision::cpp_int;

Int factorial_int(std::uint32_t n);
Int binomial_int(std::uint32_t n, std::uint32_t k);

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : value_(n) {}
  Rational(const Int& n) : value_(n) {}
  Rational(const Int& numerator, const Int& denominator);

  static Rational factorial(std::uint32_t n) { return Rational(factorial_int(n)); }
  static Rational binomial(std::uint32_t n, std::uint32_t k) {
    return Rational(binomial_int(n, k));
  }

  Int numerator() const { return boost::multiprecision::numerator(value_); }
  Int denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_.is_zero(); }
  bool is_one() const { return value_ == 1; }
  bool is_negative() const { return value_ < 0; }
  bool is_integer() const { return denominator() == 1; }

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  Rational operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
  }

  Rational pow(std::uint32_t e) const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const;
  /// Always "n/d", even for integers; used by the JSON encoding.
  std::string json_string() const;

 private:
  boost::multiprecision::cpp_rational value_;
};

}  // namespace qord
