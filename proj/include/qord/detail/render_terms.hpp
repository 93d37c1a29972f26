#pragma once

#include "qord/coefficient.hpp"
#include "qord/exponents.hpp"

#include <string>
#include <vector>

namespace qord::detail {

inline void append_variable_factors(std::vector<std::string>& pieces, const ExpVec& exps,
                                    char letter) {
  for (std::size_t slot = 0; slot < exps.size(); ++slot) {
    const Exp e = exps.get(slot);
    if (e == 0) continue;
    std::string piece(1, letter);
    piece += std::to_string(slot + 1);
    if (e > 1) piece += "^" + std::to_string(e);
    pieces.push_back(std::move(piece));
  }
}

/// Renders a term map (key has .x/.p exponent vectors, value is a
/// Coefficient) in descending key order. The variable letters are the only
/// difference between the classical and the operator form.
template <class TermMap>
std::string render_polynomial(const TermMap& terms, char xletter, char pletter) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& key = it->first;
    const Coefficient& c = it->second;
    const bool neg = coefficient_display_negative(c);
    const Coefficient mag = neg ? -c : c;

    std::vector<std::string> pieces;
    const bool has_vars = !(key.x.empty() && key.p.empty());
    if (!(mag.is_one() && has_vars)) pieces.push_back(coefficient_factor(mag));
    append_variable_factors(pieces, key.x, xletter);
    append_variable_factors(pieces, key.p, pletter);

    std::string term;
    for (const auto& piece : pieces) {
      if (!term.empty()) term += "*";
      term += piece;
    }

    if (first) {
      out = (neg ? "-" : "") + term;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out;
}

}  // namespace qord::detail
