#include "qord/coefficient.hpp"

namespace qord {

namespace {

bool gaussian_display_negative(const GaussianRational& g) {
  if (!g.re().is_zero()) return g.re().is_negative();
  return g.im().is_negative();
}

// One summand with a positive-leading Gaussian part, as '*'-joined factors.
std::string summand_magnitude(const GaussianRational& g, std::uint32_t h, std::uint32_t t) {
  std::string out;
  const bool has_ht = h > 0 || t > 0;
  if (!(g.is_one() && has_ht)) {
    if (!g.re().is_zero() && !g.im().is_zero()) {
      out = "(" + g.to_string() + ")";
    } else {
      out = g.to_string();
    }
  }
  auto append = [&out](const std::string& piece) {
    if (!out.empty()) out += "*";
    out += piece;
  };
  if (h > 0) append(h == 1 ? "hbar" : "hbar^" + std::to_string(h));
  if (t > 0) append(t == 1 ? "tau" : "tau^" + std::to_string(t));
  if (out.empty()) out = "1";
  return out;
}

GaussianRational scale(const GaussianRational& g, const Rational& r) {
  return GaussianRational(g.re() * r, g.im() * r);
}

}  // namespace

void Coefficient::add(const HbarTau& key, const GaussianRational& g) {
  if (g.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, g);
  if (!inserted) {
    it->second += g;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Coefficient::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == HbarTau{} &&
         terms_.begin()->second.is_one();
}

bool Coefficient::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == HbarTau{});
}

bool Coefficient::depends_on_tau() const {
  for (const auto& [key, g] : terms_) {
    if (key.tau > 0) return true;
  }
  return false;
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  for (const auto& [key, g] : o.terms_) add(key, g);
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  for (const auto& [key, g] : o.terms_) add(key, -g);
  return *this;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  Coefficient out;
  for (const auto& [ka, ga] : a.terms_) {
    for (const auto& [kb, gb] : b.terms_) {
      out.add(HbarTau{ka.hbar + kb.hbar, ka.tau + kb.tau}, ga * gb);
    }
  }
  return out;
}

Coefficient Coefficient::operator-() const {
  Coefficient out;
  for (const auto& [key, g] : terms_) out.terms_.emplace(key, -g);
  return out;
}

Coefficient Coefficient::conjugate() const {
  Coefficient out;
  for (const auto& [key, g] : terms_) out.terms_.emplace(key, g.conjugate());
  return out;
}

Coefficient Coefficient::pow(std::uint32_t e) const {
  Coefficient out(1);
  Coefficient base = *this;
  while (e > 0) {
    if (e & 1u) out *= base;
    base *= base;
    e >>= 1u;
  }
  return out;
}

Coefficient Coefficient::integrate_tau_unit() const {
  Coefficient out;
  for (const auto& [key, g] : terms_) {
    out.add(HbarTau{key.hbar, 0}, scale(g, Rational(1, key.tau + 1)));
  }
  return out;
}

Coefficient Coefficient::eval_tau(const Rational& value) const {
  Coefficient out;
  for (const auto& [key, g] : terms_) {
    out.add(HbarTau{key.hbar, 0}, scale(g, value.pow(key.tau)));
  }
  return out;
}

Coefficient Coefficient::substitute_tau(const Coefficient& value) const {
  Coefficient out;
  for (const auto& [key, g] : terms_) {
    out += monomial(g, key.hbar, 0) * value.pow(key.tau);
  }
  return out;
}

std::optional<Coefficient> Coefficient::divided_by_i_hbar() const {
  Coefficient out;
  for (const auto& [key, g] : terms_) {
    if (key.hbar == 0) return std::nullopt;
    // 1/i = -i.
    out.add(HbarTau{key.hbar - 1, key.tau}, g * GaussianRational(Rational(0), Rational(-1)));
  }
  return out;
}

std::optional<GaussianRational> Coefficient::as_hbar_square_multiple() const {
  if (terms_.empty()) return GaussianRational(0);
  if (terms_.size() == 1 && terms_.begin()->first == HbarTau{2, 0}) {
    return terms_.begin()->second;
  }
  return std::nullopt;
}

std::string Coefficient::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, g] : terms_) {
    const bool neg = gaussian_display_negative(g);
    const std::string mag = summand_magnitude(neg ? -g : g, key.hbar, key.tau);
    if (first) {
      out = (neg ? "-" : "") + mag;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + mag;
    }
  }
  return out;
}

bool coefficient_display_negative(const Coefficient& c) {
  return c.terms().size() == 1 && gaussian_display_negative(c.terms().begin()->second);
}

std::string coefficient_factor(const Coefficient& c) {
  if (c.terms().size() == 1) {
    const auto& [key, g] = *c.terms().begin();
    if (!gaussian_display_negative(g)) {
      return summand_magnitude(g, key.hbar, key.tau);
    }
  }
  return "(" + c.to_string() + ")";
}

}  // namespace qord
