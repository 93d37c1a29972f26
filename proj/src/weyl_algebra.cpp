#include "qord/weyl_algebra.hpp"

#include "qord/detail/render_terms.hpp"

namespace qord {

bool operator<(const NormalWord& a, const NormalWord& b) {
  const Exp da = a.total_degree();
  const Exp db = b.total_degree();
  if (da != db) return da < db;
  if (a.x != b.x) return lex_less(a.x, b.x);
  return lex_less(a.p, b.p);
}

OperatorPolynomial OperatorPolynomial::generator(Generator g) {
  if (g.index == 0) throw std::invalid_argument("generator index must be >= 1");
  NormalWord w;
  if (g.kind == GeneratorKind::Position) {
    w.x = ExpVec::unit(g.index - 1);
  } else {
    w.p = ExpVec::unit(g.index - 1);
  }
  return OperatorPolynomial(w, Coefficient(1));
}

Exp OperatorPolynomial::max_total_degree() const {
  Exp out = 0;
  for (const auto& [w, c] : terms_) out = std::max(out, w.total_degree());
  return out;
}

std::uint32_t OperatorPolynomial::variable_span() const {
  std::uint32_t out = 0;
  for (const auto& [w, c] : terms_) out = std::max(out, w.variable_span());
  return out;
}

std::optional<Coefficient> OperatorPolynomial::as_scalar() const {
  if (terms_.empty()) return Coefficient();
  if (terms_.size() == 1 && terms_.begin()->first.is_identity()) {
    return terms_.begin()->second;
  }
  return std::nullopt;
}

void OperatorPolynomial::add_term(const NormalWord& w, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OperatorPolynomial& OperatorPolynomial::operator+=(const OperatorPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

OperatorPolynomial& OperatorPolynomial::operator-=(const OperatorPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

OperatorPolynomial OperatorPolynomial::operator-() const {
  OperatorPolynomial out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

OperatorPolynomial OperatorPolynomial::scaled(const Coefficient& c) const {
  OperatorPolynomial out;
  for (const auto& [w, tc] : terms_) out.add_term(w, tc * c);
  return out;
}

std::string OperatorPolynomial::to_string() const {
  return detail::render_polynomial(terms_, 'X', 'P');
}

namespace {

// Core rewriting step, derived from [x_j, p_k] = i*hbar*d_jk by induction:
//
//   p^b x^g = sum_k  k! C(b,k) C(g,k) (-i*hbar)^k  x^(g-k) p^(b-k)
//
// with k running componentwise over the shared indices; generators with
// distinct indices commute outright.
OperatorPolynomial expand_momentum_position(const ExpVec& b, const ExpVec& g) {
  std::vector<std::size_t> shared;
  const std::size_t span = std::min(b.size(), g.size());
  for (std::size_t v = 0; v < span; ++v) {
    if (b.get(v) > 0 && g.get(v) > 0) shared.push_back(v);
  }

  OperatorPolynomial out;
  std::vector<Exp> k(shared.size(), 0);
  for (;;) {
    Rational weight = 1;
    Exp total_k = 0;
    ExpVec xw = g;
    ExpVec pw = b;
    for (std::size_t j = 0; j < shared.size(); ++j) {
      const std::size_t v = shared[j];
      weight *= Rational(factorial_int(k[j]) * binomial_int(b.get(v), k[j]) *
                         binomial_int(g.get(v), k[j]));
      total_k += k[j];
      xw.set(v, g.get(v) - k[j]);
      pw.set(v, b.get(v) - k[j]);
    }
    // (-i)^k phase for the k transferred contractions.
    const GaussianRational phase = GaussianRational::i_power(3u * total_k);
    out.add_term(NormalWord{xw, pw},
                 Coefficient::monomial(phase * GaussianRational(weight), total_k, 0));

    // Odometer over 0 <= k[j] <= min(b_j, g_j).
    std::size_t j = 0;
    for (; j < shared.size(); ++j) {
      const std::size_t v = shared[j];
      if (k[j] < std::min(b.get(v), g.get(v))) {
        ++k[j];
        break;
      }
      k[j] = 0;
    }
    if (j == shared.size()) break;
  }
  return out;
}

}  // namespace

OperatorPolynomial op_mul(const OperatorPolynomial& a, const OperatorPolynomial& b) {
  OperatorPolynomial out;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      const Coefficient c = ca * cb;
      // (x^wa.x p^wa.p)(x^wb.x p^wb.p): only the inner p^wa.p x^wb.x block
      // needs reordering.
      const OperatorPolynomial inner = expand_momentum_position(wa.p, wb.x);
      for (const auto& [wi, ci] : inner.terms()) {
        out.add_term(NormalWord{wa.x.plus(wi.x), wi.p.plus(wb.p)}, c * ci);
      }
    }
  }
  return out;
}

OperatorPolynomial normal_order_word(std::span<const Generator> word) {
  OperatorPolynomial out = OperatorPolynomial::identity();
  for (const Generator& g : word) {
    out = op_mul(out, OperatorPolynomial::generator(g));
  }
  return out;
}

OperatorPolynomial commutator(const OperatorPolynomial& a, const OperatorPolynomial& b) {
  return op_mul(a, b) - op_mul(b, a);
}

OperatorPolynomial adjoint(const OperatorPolynomial& a) {
  OperatorPolynomial out;
  for (const auto& [w, c] : a.terms()) {
    // (x^a p^b)* = p^b x^a, then back to normal form.
    const OperatorPolynomial reordered = expand_momentum_position(w.p, w.x);
    out += reordered.scaled(c.conjugate());
  }
  return out;
}

std::optional<OperatorPolynomial> divided_by_i_hbar(const OperatorPolynomial& a) {
  OperatorPolynomial out;
  for (const auto& [w, c] : a.terms()) {
    auto divided = c.divided_by_i_hbar();
    if (!divided) return std::nullopt;
    out.add_term(w, *divided);
  }
  return out;
}

}  // namespace qord
