#include "qord/oracle.hpp"

#include "qord/detail/render_terms.hpp"

#include <stdexcept>

namespace qord {

void Wavefunction::add_term(const ExpVec& exps, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Wavefunction& Wavefunction::operator+=(const Wavefunction& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Wavefunction& Wavefunction::operator-=(const Wavefunction& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Wavefunction Wavefunction::scaled(const Coefficient& c) const {
  Wavefunction out;
  for (const auto& [e, tc] : terms_) out.add_term(e, tc * c);
  return out;
}

std::string Wavefunction::to_string() const {
  std::map<NormalWord, Coefficient> view;
  for (const auto& [e, c] : terms_) view.emplace(NormalWord{e, ExpVec{}}, c);
  return detail::render_polynomial(view, 'x', 'p');
}

Wavefunction apply_generator(Generator g, const Wavefunction& psi) {
  if (g.index == 0) throw std::invalid_argument("generator index must be >= 1");
  const std::size_t slot = g.index - 1;
  Wavefunction out;
  if (g.kind == GeneratorKind::Position) {
    for (const auto& [e, c] : psi.terms()) {
      ExpVec bumped = e;
      bumped.set(slot, e.get(slot) + 1);
      out.add_term(bumped, c);
    }
  } else {
    // -i*hbar d/dx_slot.
    for (const auto& [e, c] : psi.terms()) {
      const Exp deg = e.get(slot);
      if (deg == 0) continue;
      ExpVec lowered = e;
      lowered.set(slot, deg - 1);
      const Coefficient factor =
          Coefficient::monomial(GaussianRational(Rational(0), Rational(-(long long)deg)), 1, 0);
      out.add_term(lowered, c * factor);
    }
  }
  return out;
}

Wavefunction apply_word(std::span<const Generator> word, const Wavefunction& psi) {
  Wavefunction out = psi;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    out = apply_generator(*it, out);
  }
  return out;
}

Wavefunction apply_operator(const OperatorPolynomial& op, const Wavefunction& psi) {
  Wavefunction out;
  for (const auto& [w, c] : op.terms()) {
    // Normal form reads x^a p^b; the momenta act first.
    Wavefunction image = psi;
    for (std::size_t v = 0; v < w.p.size(); ++v) {
      for (Exp k = 0; k < w.p.get(v); ++k) {
        image = apply_generator(momentum(static_cast<std::uint32_t>(v + 1)), image);
      }
    }
    for (std::size_t v = 0; v < w.x.size(); ++v) {
      for (Exp k = 0; k < w.x.get(v); ++k) {
        image = apply_generator(position(static_cast<std::uint32_t>(v + 1)), image);
      }
    }
    out += image.scaled(c);
  }
  return out;
}

namespace {

// Enumerates the box as mixed-radix numbers so it can be split across
// threads by flat index.
std::size_t box_size(const std::vector<Exp>& per_var_max) {
  std::size_t n = 1;
  for (Exp m : per_var_max) n *= static_cast<std::size_t>(m) + 1;
  return n;
}

ExpVec box_monomial(const std::vector<Exp>& per_var_max, std::size_t flat) {
  std::vector<Exp> exps(per_var_max.size(), 0);
  for (std::size_t v = 0; v < per_var_max.size(); ++v) {
    const std::size_t radix = static_cast<std::size_t>(per_var_max[v]) + 1;
    exps[v] = static_cast<Exp>(flat % radix);
    flat /= radix;
  }
  return ExpVec(std::move(exps));
}

}  // namespace

bool operators_agree_on_box(const OperatorPolynomial& a, const OperatorPolynomial& b,
                            const std::vector<Exp>& per_var_max) {
  const std::size_t n = box_size(per_var_max);
  bool agree = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : agree)
  for (std::size_t flat = 0; flat < n; ++flat) {
    if (!agree) continue;
    const Wavefunction psi = Wavefunction::monomial(box_monomial(per_var_max, flat));
    if (!(apply_operator(a, psi) == apply_operator(b, psi))) agree = false;
  }
  return agree;
}

std::vector<Exp> momentum_degrees(const OperatorPolynomial& a) {
  std::vector<Exp> out(a.variable_span(), 0);
  for (const auto& [w, c] : a.terms()) {
    for (std::size_t v = 0; v < out.size(); ++v) {
      out[v] = std::max(out[v], w.p.get(v));
    }
  }
  return out;
}

void for_each_box_monomial(const std::vector<Exp>& box,
                           const std::function<void(const Wavefunction&)>& fn) {
  const std::size_t n = box_size(box);
  for (std::size_t flat = 0; flat < n; ++flat) {
    fn(Wavefunction::monomial(box_monomial(box, flat)));
  }
}

bool operators_agree(const OperatorPolynomial& a, const OperatorPolynomial& b) {
  const OperatorPolynomial diff = a - b;
  if (diff.is_zero()) return true;
  return operators_agree_on_box(a, b, momentum_degrees(diff));
}

}  // namespace qord
