#pragma once

#include "qord/rational.hpp"

#include <string>

namespace qord {

/// Element of Q(i): re + im*i with exact rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}
  GaussianRational(long long re) : re_(re) {}
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }
  /// i^k, used for the phases that reordering and star products produce.
  static GaussianRational i_power(std::uint32_t k);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    const Rational re = re_ * o.re_ - im_ * o.im_;
    const Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = re;
    im_ = im;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }

  GaussianRational operator-() const { return GaussianRational(-re_, -im_); }
  GaussianRational conjugate() const { return GaussianRational(re_, -im_); }

  bool operator==(const GaussianRational&) const = default;

  /// "a/b + c/d*i" with the pure-real, pure-imaginary, and unit cases
  /// collapsed ("3", "i", "-2/3*i", "1/2 - i", ...).
  std::string to_string() const;

 private:
  Rational re_;
  Rational im_;
};

}  // namespace qord
