#include "qord/quantize.hpp"

#include "qord/errors.hpp"

namespace qord {

std::string QuantizationScheme::to_string() const {
  switch (kind) {
    case Kind::Weyl:
      return "weyl";
    case Kind::BornJordan:
      return "bj";
    case Kind::Shubin:
      return tau ? "shubin:" + tau->to_string() : "shubin:sym";
  }
  return "weyl";
}

namespace {

std::optional<Rational> parse_rational_text(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  if (num_text.empty() || num_text.find_first_not_of("0123456789") != std::string_view::npos) {
    return std::nullopt;
  }
  Int num{std::string(num_text)};
  Int den = 1;
  if (slash != std::string_view::npos) {
    const std::string_view den_text = text.substr(slash + 1);
    if (den_text.empty() || den_text.find_first_not_of("0123456789") != std::string_view::npos) {
      return std::nullopt;
    }
    den = Int(std::string(den_text));
    if (den.is_zero()) return std::nullopt;
  }
  if (negative) num = -num;
  return Rational(num, den);
}

}  // namespace

std::optional<QuantizationScheme> QuantizationScheme::parse(std::string_view text) {
  if (text == "weyl") return weyl();
  if (text == "bj") return born_jordan();
  constexpr std::string_view prefix = "shubin:";
  if (text.substr(0, prefix.size()) == prefix) {
    const std::string_view rest = text.substr(prefix.size());
    if (rest == "sym") return shubin_symbolic();
    if (auto tau_value = parse_rational_text(rest)) return shubin(*tau_value);
    return std::nullopt;
  }
  return std::nullopt;
}

namespace {

void append_letters(std::vector<Generator>& word, GeneratorKind kind, std::uint32_t index,
                    Exp count) {
  for (Exp k = 0; k < count; ++k) word.push_back(Generator{kind, index});
}

// Exponents of one conjugate pair inside a monomial.
struct Pair {
  std::uint32_t index = 0;  // 1-based
  Exp m = 0;                // x exponent
  Exp n = 0;                // p exponent
};

std::vector<Pair> active_pairs(const ClassicalMonomial& mono) {
  std::vector<Pair> out;
  const std::size_t span = std::max(mono.x.size(), mono.p.size());
  for (std::size_t v = 0; v < span; ++v) {
    const Exp m = mono.x.get(v);
    const Exp n = mono.p.get(v);
    if (m > 0 || n > 0) {
      out.push_back(Pair{static_cast<std::uint32_t>(v + 1), m, n});
    }
  }
  return out;
}

// Per-pair word family of the symmetric rule:
//   2^-m sum_k C(m,k) X^k P^n X^(m-k).
std::vector<WeightedWord> weyl_pair_words(const Pair& pr) {
  std::vector<WeightedWord> out;
  const Rational norm(Int(1), Int(1) << pr.m);
  for (Exp k = 0; k <= pr.m; ++k) {
    WeightedWord ww;
    ww.weight = Coefficient(Rational(binomial_int(pr.m, k)) * norm);
    append_letters(ww.word, GeneratorKind::Position, pr.index, k);
    append_letters(ww.word, GeneratorKind::Momentum, pr.index, pr.n);
    append_letters(ww.word, GeneratorKind::Position, pr.index, pr.m - k);
    out.push_back(std::move(ww));
  }
  return out;
}

// Per-pair word family of the tau rule, weights kept symbolic in tau:
//   x-sandwich: sum_k C(m,k) tau^k (1-tau)^(m-k) X^k P^n X^(m-k)
//   p-sandwich: sum_k C(n,k) tau^(n-k) (1-tau)^k P^k X^m P^(n-k)
std::vector<WeightedWord> shubin_pair_words(const Pair& pr, ShubinForm form) {
  std::vector<WeightedWord> out;
  if (form == ShubinForm::XSandwich) {
    for (Exp k = 0; k <= pr.m; ++k) {
      WeightedWord ww;
      ww.weight = Coefficient(Rational(binomial_int(pr.m, k))) * Coefficient::tau().pow(k) *
                  Coefficient::one_minus_tau().pow(pr.m - k);
      append_letters(ww.word, GeneratorKind::Position, pr.index, k);
      append_letters(ww.word, GeneratorKind::Momentum, pr.index, pr.n);
      append_letters(ww.word, GeneratorKind::Position, pr.index, pr.m - k);
      out.push_back(std::move(ww));
    }
  } else {
    for (Exp k = 0; k <= pr.n; ++k) {
      WeightedWord ww;
      ww.weight = Coefficient(Rational(binomial_int(pr.n, k))) *
                  Coefficient::tau().pow(pr.n - k) * Coefficient::one_minus_tau().pow(k);
      append_letters(ww.word, GeneratorKind::Momentum, pr.index, k);
      append_letters(ww.word, GeneratorKind::Position, pr.index, pr.m);
      append_letters(ww.word, GeneratorKind::Momentum, pr.index, pr.n - k);
      out.push_back(std::move(ww));
    }
  }
  return out;
}

// Cartesian product across pairs: words concatenate (ascending variable
// index), weights multiply. Generators of distinct pairs commute, so the
// concatenation order is immaterial up to normal ordering.
std::vector<WeightedWord> combine_pairs(const std::vector<std::vector<WeightedWord>>& per_pair) {
  std::vector<WeightedWord> acc = {WeightedWord{Coefficient(1), {}}};
  for (const auto& family : per_pair) {
    std::vector<WeightedWord> next;
    next.reserve(acc.size() * family.size());
    for (const auto& head : acc) {
      for (const auto& tail : family) {
        WeightedWord ww;
        ww.weight = head.weight * tail.weight;
        ww.word = head.word;
        ww.word.insert(ww.word.end(), tail.word.begin(), tail.word.end());
        next.push_back(std::move(ww));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

// Direct Born-Jordan words. The multi-pair weights come from averaging the
// shared-tau family, which evaluates to beta integrals:
//
//   sum_{k} prod_i C(m_i, k_i) * |k|! (|m|-|k|)! / (|m|+1)!
//           prod_i X_i^(m_i-k_i) P_i^(n_i) X_i^(k_i)
//
// On a single pair this collapses to the uniform 1/(m+1) rule.
std::vector<WeightedWord> bj_direct_words(const std::vector<Pair>& pairs) {
  Exp total_m = 0;
  for (const Pair& pr : pairs) total_m += pr.m;
  const Rational norm(Int(1), factorial_int(total_m + 1));

  std::vector<WeightedWord> out;
  std::vector<Exp> k(pairs.size(), 0);
  for (;;) {
    Exp total_k = 0;
    Int choose = 1;
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      total_k += k[j];
      choose *= binomial_int(pairs[j].m, k[j]);
    }
    WeightedWord ww;
    ww.weight = Coefficient(
        Rational(choose * factorial_int(total_k) * factorial_int(total_m - total_k)) * norm);
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      const Pair& pr = pairs[j];
      append_letters(ww.word, GeneratorKind::Position, pr.index, pr.m - k[j]);
      append_letters(ww.word, GeneratorKind::Momentum, pr.index, pr.n);
      append_letters(ww.word, GeneratorKind::Position, pr.index, k[j]);
    }
    out.push_back(std::move(ww));

    std::size_t j = 0;
    for (; j < pairs.size(); ++j) {
      if (k[j] < pairs[j].m) {
        ++k[j];
        break;
      }
      k[j] = 0;
    }
    if (j == pairs.size()) break;
  }
  return out;
}

}  // namespace

std::vector<WeightedWord> quantization_words(const QuantizationScheme& scheme,
                                             const ClassicalMonomial& m) {
  const std::vector<Pair> pairs = active_pairs(m);

  if (scheme.kind == QuantizationScheme::Kind::BornJordan &&
      scheme.bj_mode == BornJordanMode::Direct) {
    return bj_direct_words(pairs);
  }

  std::vector<std::vector<WeightedWord>> per_pair;
  per_pair.reserve(pairs.size());
  for (const Pair& pr : pairs) {
    if (scheme.kind == QuantizationScheme::Kind::Weyl) {
      per_pair.push_back(weyl_pair_words(pr));
    } else {
      // Shubin, and Born-Jordan via the tau average, build on the symbolic
      // tau family; a single tau is shared by all pairs.
      per_pair.push_back(shubin_pair_words(pr, scheme.form));
    }
  }
  std::vector<WeightedWord> words = combine_pairs(per_pair);

  if (scheme.kind == QuantizationScheme::Kind::Shubin && scheme.tau) {
    for (WeightedWord& ww : words) ww.weight = ww.weight.eval_tau(*scheme.tau);
  } else if (scheme.kind == QuantizationScheme::Kind::BornJordan) {
    for (WeightedWord& ww : words) ww.weight = ww.weight.integrate_tau_unit();
  }
  return words;
}

OperatorPolynomial quantize(const QuantizationScheme& scheme, const ClassicalPolynomial& f) {
  OperatorPolynomial out;
  for (const auto& [mono, c] : f.terms()) {
    for (const WeightedWord& ww : quantization_words(scheme, mono)) {
      out += normal_order_word(ww.word).scaled(c * ww.weight);
    }
  }
  return out;
}

OperatorPolynomial weyl_quantize(const ClassicalPolynomial& f) {
  return quantize(QuantizationScheme::weyl(), f);
}

OperatorPolynomial shubin_quantize(const ClassicalPolynomial& f,
                                   const std::optional<Rational>& tau, ShubinForm form) {
  QuantizationScheme scheme =
      tau ? QuantizationScheme::shubin(*tau, form) : QuantizationScheme::shubin_symbolic(form);
  return quantize(scheme, f);
}

OperatorPolynomial bj_quantize(const ClassicalPolynomial& f, BornJordanMode mode) {
  return quantize(QuantizationScheme::born_jordan(mode), f);
}

ClassicalPolynomial weyl_symbol(const OperatorPolynomial& a) {
  // The symmetric rule sends x^a p^b to X^a P^b plus words of total degree
  // lower by at least two, so eliminating the top word never disturbs the
  // part already peeled off.
  ClassicalPolynomial symbol;
  OperatorPolynomial rest = a;
  while (!rest.is_zero()) {
    const auto& [top, c] = *rest.terms().rbegin();
    const ClassicalPolynomial piece(ClassicalMonomial{top.x, top.p}, c);
    symbol += piece;
    rest -= weyl_quantize(piece);
  }
  return symbol;
}

OperatorPolynomial dirac_defect(const QuantizationScheme& scheme, const ClassicalPolynomial& f,
                                const ClassicalPolynomial& g) {
  const OperatorPolynomial bracket_image = quantize(scheme, poisson_bracket(f, g));
  const OperatorPolynomial comm = commutator(quantize(scheme, f), quantize(scheme, g));
  const auto scaled = divided_by_i_hbar(comm);
  if (!scaled) {
    throw InternalError("operator commutator is not divisible by i*hbar");
  }
  return bracket_image - *scaled;
}

}  // namespace qord
