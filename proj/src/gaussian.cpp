#include "qord/gaussian.hpp"

namespace qord {

GaussianRational GaussianRational::i_power(std::uint32_t k) {
  switch (k % 4u) {
    case 0: return GaussianRational(Rational(1));
    case 1: return GaussianRational(Rational(0), Rational(1));
    case 2: return GaussianRational(Rational(-1));
    default: return GaussianRational(Rational(0), Rational(-1));
  }
}

namespace {

// Magnitude text of a pure-imaginary part: "i", "2/3*i", ...
std::string imaginary_magnitude(const Rational& im) {
  if (im.is_one()) return "i";
  return im.to_string() + "*i";
}

}  // namespace

std::string GaussianRational::to_string() const {
  if (is_zero()) return "0";
  if (im_.is_zero()) return re_.to_string();
  if (re_.is_zero()) {
    if (im_.is_negative()) return "-" + imaginary_magnitude(-im_);
    return imaginary_magnitude(im_);
  }
  std::string out = re_.to_string();
  if (im_.is_negative()) {
    out += " - " + imaginary_magnitude(-im_);
  } else {
    out += " + " + imaginary_magnitude(im_);
  }
  return out;
}

}  // namespace qord
