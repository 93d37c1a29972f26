#include "qord/phase_space.hpp"

#include "qord/detail/render_terms.hpp"

#include <stdexcept>
#include <vector>

namespace qord {

bool operator<(const ClassicalMonomial& a, const ClassicalMonomial& b) {
  const Exp da = a.total_degree();
  const Exp db = b.total_degree();
  if (da != db) return da < db;
  if (a.x != b.x) return lex_less(a.x, b.x);
  return lex_less(a.p, b.p);
}

ClassicalPolynomial ClassicalPolynomial::x(std::uint32_t index, Exp e) {
  if (index == 0) throw std::invalid_argument("variable index must be >= 1");
  return ClassicalPolynomial(ClassicalMonomial{ExpVec::unit(index - 1, e), ExpVec{}},
                             Coefficient(1));
}

ClassicalPolynomial ClassicalPolynomial::p(std::uint32_t index, Exp e) {
  if (index == 0) throw std::invalid_argument("variable index must be >= 1");
  return ClassicalPolynomial(ClassicalMonomial{ExpVec{}, ExpVec::unit(index - 1, e)},
                             Coefficient(1));
}

Exp ClassicalPolynomial::max_total_degree() const {
  Exp out = 0;
  for (const auto& [m, c] : terms_) out = std::max(out, m.total_degree());
  return out;
}

std::uint32_t ClassicalPolynomial::variable_span() const {
  std::uint32_t out = 0;
  for (const auto& [m, c] : terms_) out = std::max(out, m.variable_span());
  return out;
}

std::optional<Coefficient> ClassicalPolynomial::as_scalar() const {
  if (terms_.empty()) return Coefficient();
  if (terms_.size() == 1 && terms_.begin()->first.is_identity()) {
    return terms_.begin()->second;
  }
  return std::nullopt;
}

void ClassicalPolynomial::add_term(const ClassicalMonomial& m, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ClassicalPolynomial& ClassicalPolynomial::operator+=(const ClassicalPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ClassicalPolynomial& ClassicalPolynomial::operator-=(const ClassicalPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ClassicalPolynomial operator*(const ClassicalPolynomial& a, const ClassicalPolynomial& b) {
  ClassicalPolynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term(ClassicalMonomial{ma.x.plus(mb.x), ma.p.plus(mb.p)}, ca * cb);
    }
  }
  return out;
}

ClassicalPolynomial ClassicalPolynomial::operator-() const {
  ClassicalPolynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

ClassicalPolynomial ClassicalPolynomial::scaled(const Coefficient& c) const {
  ClassicalPolynomial out;
  for (const auto& [m, tc] : terms_) out.add_term(m, tc * c);
  return out;
}

ClassicalPolynomial ClassicalPolynomial::pow(std::uint32_t e) const {
  ClassicalPolynomial out = ClassicalPolynomial::one();
  ClassicalPolynomial base = *this;
  while (e > 0) {
    if (e & 1u) out = out * base;
    base = base * base;
    e >>= 1u;
  }
  return out;
}

std::string ClassicalPolynomial::to_string() const {
  return detail::render_polynomial(terms_, 'x', 'p');
}

namespace {

enum class VarKind { X, P };

ClassicalPolynomial derivative(const ClassicalPolynomial& f, std::uint32_t index, VarKind kind) {
  if (index == 0) throw std::invalid_argument("variable index must be >= 1");
  const std::size_t slot = index - 1;
  ClassicalPolynomial out;
  for (const auto& [m, c] : f.terms()) {
    const ExpVec& exps = (kind == VarKind::X) ? m.x : m.p;
    const Exp e = exps.get(slot);
    if (e == 0) continue;
    ClassicalMonomial lowered = m;
    if (kind == VarKind::X) {
      lowered.x.set(slot, e - 1);
    } else {
      lowered.p.set(slot, e - 1);
    }
    out.add_term(lowered, c * Coefficient(Rational((long long)e)));
  }
  return out;
}

// m (m-1) ... (m-a+1), the coefficient produced by a repeated derivatives.
Int falling_factorial(Exp m, Exp a) { return factorial_int(m) / factorial_int(m - a); }

}  // namespace

ClassicalPolynomial derivative_x(const ClassicalPolynomial& f, std::uint32_t index) {
  return derivative(f, index, VarKind::X);
}

ClassicalPolynomial derivative_p(const ClassicalPolynomial& f, std::uint32_t index) {
  return derivative(f, index, VarKind::P);
}

ClassicalPolynomial poisson_bracket(const ClassicalPolynomial& f, const ClassicalPolynomial& g) {
  ClassicalPolynomial out;
  const std::uint32_t span = std::max(f.variable_span(), g.variable_span());
  for (std::uint32_t v = 1; v <= span; ++v) {
    out += derivative_x(f, v) * derivative_p(g, v);
    out -= derivative_p(f, v) * derivative_x(g, v);
  }
  return out;
}

ClassicalPolynomial moyal_star(const ClassicalPolynomial& f, const ClassicalPolynomial& g,
                               std::optional<Exp> truncate) {
  ClassicalPolynomial out;
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) {
      // a differentiates f in x and g in p; b differentiates f in p and g
      // in x. Both are bounded componentwise by the exponents present.
      std::vector<std::pair<std::size_t, Exp>> abox;
      std::vector<std::pair<std::size_t, Exp>> bbox;
      const std::size_t span =
          std::max(std::max(mf.x.size(), mf.p.size()), std::max(mg.x.size(), mg.p.size()));
      for (std::size_t v = 0; v < span; ++v) {
        const Exp amax = std::min(mf.x.get(v), mg.p.get(v));
        const Exp bmax = std::min(mf.p.get(v), mg.x.get(v));
        if (amax > 0) abox.emplace_back(v, amax);
        if (bmax > 0) bbox.emplace_back(v, bmax);
      }

      const Coefficient cfg = cf * cg;
      std::vector<Exp> a(abox.size(), 0);
      std::vector<Exp> b(bbox.size(), 0);
      for (;;) {
        Exp ja = 0, jb = 0;
        for (Exp e : a) ja += e;
        for (Exp e : b) jb += e;
        const Exp j = ja + jb;
        if (!truncate || j <= *truncate) {
          Rational weight = 1;
          ExpVec fx = mf.x, fp = mf.p, gx = mg.x, gp = mg.p;
          for (std::size_t k = 0; k < abox.size(); ++k) {
            const std::size_t v = abox[k].first;
            weight *= Rational(falling_factorial(mf.x.get(v), a[k]) *
                                   falling_factorial(mg.p.get(v), a[k]),
                               factorial_int(a[k]));
            fx.set(v, fx.get(v) - a[k]);
            gp.set(v, gp.get(v) - a[k]);
          }
          for (std::size_t k = 0; k < bbox.size(); ++k) {
            const std::size_t v = bbox[k].first;
            weight *= Rational(falling_factorial(mf.p.get(v), b[k]) *
                                   falling_factorial(mg.x.get(v), b[k]),
                               factorial_int(b[k]));
            fp.set(v, fp.get(v) - b[k]);
            gx.set(v, gx.get(v) - b[k]);
          }
          // (i/2)^j with the antisymmetric sign on the b block.
          GaussianRational phase = GaussianRational::i_power(j);
          if (jb % 2 == 1) phase = -phase;
          const Coefficient factor = Coefficient::monomial(
              phase * GaussianRational(weight * Rational(Int(1), Int(1) << j)), j, 0);
          out.add_term(ClassicalMonomial{fx.plus(gx), fp.plus(gp)}, cfg * factor);
        }

        std::size_t k = 0;
        for (; k < a.size(); ++k) {
          if (a[k] < abox[k].second) {
            ++a[k];
            break;
          }
          a[k] = 0;
        }
        if (k < a.size()) continue;
        std::size_t l = 0;
        for (; l < b.size(); ++l) {
          if (b[l] < bbox[l].second) {
            ++b[l];
            break;
          }
          b[l] = 0;
        }
        if (l == b.size()) break;
      }
    }
  }
  return out;
}

}  // namespace qord
