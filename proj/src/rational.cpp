#include "qord/rational.hpp"

#include <stdexcept>

namespace qord {

Int factorial_int(std::uint32_t n) {
  Int out = 1;
  for (std::uint32_t k = 2; k <= n; ++k) out *= k;
  return out;
}

Int binomial_int(std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0;
  return factorial_int(n) / (factorial_int(k) * factorial_int(n - k));
}

Rational::Rational(const Int& numerator, const Int& denominator) {
  if (denominator.is_zero()) throw std::invalid_argument("rational with zero denominator");
  if (denominator < 0) {
    value_ = boost::multiprecision::cpp_rational(-numerator, -denominator);
  } else {
    value_ = boost::multiprecision::cpp_rational(numerator, denominator);
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("division by zero rational");
  value_ /= o.value_;
  return *this;
}

Rational Rational::pow(std::uint32_t e) const {
  Rational out = 1;
  Rational base = *this;
  while (e > 0) {
    if (e & 1u) out *= base;
    base *= base;
    e >>= 1u;
  }
  return out;
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

std::string Rational::json_string() const {
  return numerator().str() + "/" + denominator().str();
}

}  // namespace qord
