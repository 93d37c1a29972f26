#include "qord/verify.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace qord {

namespace {

// Weighted rule words flattened across the classical terms of f.
struct FlatRule {
  std::vector<std::pair<Coefficient, std::vector<Generator>>> words;
  std::uint32_t span = 0;
  std::vector<Exp> p_letter_max;  // per variable, max momentum letters in a word

  void add(const Coefficient& c, std::vector<Generator> word) {
    std::vector<Exp> counts;
    for (const Generator& g : word) {
      span = std::max(span, g.index);
      if (g.kind == GeneratorKind::Momentum) {
        if (counts.size() < g.index) counts.resize(g.index, 0);
        ++counts[g.index - 1];
      }
    }
    if (p_letter_max.size() < counts.size()) p_letter_max.resize(counts.size(), 0);
    for (std::size_t v = 0; v < counts.size(); ++v) {
      p_letter_max[v] = std::max(p_letter_max[v], counts[v]);
    }
    words.emplace_back(c, std::move(word));
  }

  Wavefunction apply(const Wavefunction& psi) const {
    Wavefunction out;
    for (const auto& [c, word] : words) {
      out += apply_word(word, psi).scaled(c);
    }
    return out;
  }
};

FlatRule flatten_rule(const QuantizationScheme& scheme, const ClassicalPolynomial& f) {
  FlatRule rule;
  for (const auto& [mono, c] : f.terms()) {
    for (WeightedWord& ww : quantization_words(scheme, mono)) {
      rule.add(c * ww.weight, std::move(ww.word));
    }
  }
  return rule;
}

std::vector<Exp> envelope(std::vector<Exp> a, const std::vector<Exp>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t v = 0; v < b.size(); ++v) a[v] = std::max(a[v], b[v]);
  return a;
}

std::vector<Exp> sum_box(std::vector<Exp> a, const std::vector<Exp>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t v = 0; v < b.size(); ++v) a[v] += b[v];
  return a;
}

std::size_t box_size(const std::vector<Exp>& box) {
  std::size_t n = 1;
  for (Exp m : box) n *= static_cast<std::size_t>(m) + 1;
  return n;
}

ExpVec box_monomial(const std::vector<Exp>& box, std::size_t flat) {
  std::vector<Exp> exps(box.size(), 0);
  for (std::size_t v = 0; v < box.size(); ++v) {
    const std::size_t radix = static_cast<std::size_t>(box[v]) + 1;
    exps[v] = static_cast<Exp>(flat % radix);
    flat /= radix;
  }
  return ExpVec(std::move(exps));
}

// Compares two linear maps on every monomial of the box. The box must bound
// the momentum degree of the difference of the maps per variable; then a
// vanishing difference on the box forces the zero operator, by acting on a
// lowest monomial not annihilated by the leading derivatives.
template <class LHS, class RHS>
bool agree_on_box(const std::vector<Exp>& box, const LHS& lhs, const RHS& rhs) {
  const std::size_t n = box_size(box);
  bool agree = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : agree)
  for (std::size_t flat = 0; flat < n; ++flat) {
    if (!agree) continue;
    const Wavefunction psi = Wavefunction::monomial(box_monomial(box, flat));
    if (!(lhs(psi) == rhs(psi))) agree = false;
  }
  return agree;
}

}  // namespace

bool verify_normal_order(std::span<const Generator> word, const OperatorPolynomial& result) {
  FlatRule rule;
  rule.add(Coefficient(1), std::vector<Generator>(word.begin(), word.end()));
  const std::vector<Exp> box = envelope(momentum_degrees(result), rule.p_letter_max);
  return agree_on_box(
      box, [&](const Wavefunction& psi) { return rule.apply(psi); },
      [&](const Wavefunction& psi) { return apply_operator(result, psi); });
}

bool verify_quantization(const QuantizationScheme& scheme, const ClassicalPolynomial& f,
                         const OperatorPolynomial& result) {
  const FlatRule rule = flatten_rule(scheme, f);
  const std::vector<Exp> box = envelope(momentum_degrees(result), rule.p_letter_max);
  return agree_on_box(
      box, [&](const Wavefunction& psi) { return rule.apply(psi); },
      [&](const Wavefunction& psi) { return apply_operator(result, psi); });
}

bool verify_product(const OperatorPolynomial& a, const OperatorPolynomial& b,
                    const OperatorPolynomial& product) {
  const std::vector<Exp> box =
      envelope(momentum_degrees(product), sum_box(momentum_degrees(a), momentum_degrees(b)));
  return agree_on_box(
      box, [&](const Wavefunction& psi) { return apply_operator(product, psi); },
      [&](const Wavefunction& psi) { return apply_operator(a, apply_operator(b, psi)); });
}

bool verify_commutator(const OperatorPolynomial& a, const OperatorPolynomial& b,
                       const OperatorPolynomial& result) {
  const std::vector<Exp> box =
      envelope(momentum_degrees(result), sum_box(momentum_degrees(a), momentum_degrees(b)));
  return agree_on_box(
      box, [&](const Wavefunction& psi) { return apply_operator(result, psi); },
      [&](const Wavefunction& psi) {
        return apply_operator(a, apply_operator(b, psi)) -
               apply_operator(b, apply_operator(a, psi));
      });
}

bool verify_defect(const QuantizationScheme& scheme, const ClassicalPolynomial& f,
                   const ClassicalPolynomial& g, const OperatorPolynomial& defect) {
  const OperatorPolynomial qf = quantize(scheme, f);
  const OperatorPolynomial qg = quantize(scheme, g);
  const FlatRule bracket_rule = flatten_rule(scheme, poisson_bracket(f, g));
  const Coefficient i_hbar = Coefficient::i() * Coefficient::hbar();

  std::vector<Exp> box = envelope(momentum_degrees(defect), bracket_rule.p_letter_max);
  box = envelope(std::move(box), sum_box(momentum_degrees(qf), momentum_degrees(qg)));

  return agree_on_box(
      box,
      [&](const Wavefunction& psi) {
        return (bracket_rule.apply(psi) - apply_operator(defect, psi)).scaled(i_hbar);
      },
      [&](const Wavefunction& psi) {
        return apply_operator(qf, apply_operator(qg, psi)) -
               apply_operator(qg, apply_operator(qf, psi));
      });
}

bool verify_weyl_symbol(const OperatorPolynomial& input, const ClassicalPolynomial& symbol) {
  return verify_quantization(QuantizationScheme::weyl(), symbol, input);
}

bool verify_shift(const QuantizationScheme& scheme, std::uint32_t dimension,
                  const Coefficient& shift) {
  OperatorPolynomial claimed = l_hat_squared(dimension);
  claimed += OperatorPolynomial(shift);
  return verify_quantization(scheme, l_squared_classical(dimension), claimed);
}

bool verify_star_compatibility(const ClassicalPolynomial& f, const ClassicalPolynomial& g,
                               const ClassicalPolynomial& star) {
  const OperatorPolynomial wf = weyl_quantize(f);
  const OperatorPolynomial wg = weyl_quantize(g);
  const OperatorPolynomial wstar = weyl_quantize(star);
  return verify_product(wf, wg, wstar);
}

bool verify_poisson_bracket(const ClassicalPolynomial& f, const ClassicalPolynomial& g,
                            const ClassicalPolynomial& bracket) {
  const ClassicalPolynomial defect = moyal_star(f, g) - moyal_star(g, f);
  ClassicalPolynomial leading;
  for (const auto& [mono, c] : defect.terms()) {
    const auto divided = c.divided_by_i_hbar();
    if (!divided) return false;  // the star commutator always carries hbar
    Coefficient hbar_free;
    for (const auto& [key, gauss] : divided->terms()) {
      if (key.hbar == 0) hbar_free += Coefficient::monomial(gauss, 0, key.tau);
    }
    leading.add_term(mono, hbar_free);
  }
  return leading == bracket;
}

}  // namespace qord
