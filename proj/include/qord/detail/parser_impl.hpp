#pragma once

#include "qord/coefficient.hpp"
#include "qord/errors.hpp"
#include "qord/weyl_algebra.hpp"

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qord::detail {

constexpr std::uint64_t kMaxVariableIndex = 1000000;
constexpr std::uint64_t kMaxExponent = 10000;

struct Token {
  enum class Kind { Plus, Minus, Star, Caret, Slash, LParen, RParen, Integer, Ident, End };
  Kind kind;
  std::string text;
  std::size_t pos;  // 1-based offset in the source
};

inline std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < src.size()) {
    const char c = src[k];
    const std::size_t pos = k + 1;
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++k;
      continue;
    }
    switch (c) {
      case '+': out.push_back({Token::Kind::Plus, "+", pos}); ++k; continue;
      case '-': out.push_back({Token::Kind::Minus, "-", pos}); ++k; continue;
      case '*': out.push_back({Token::Kind::Star, "*", pos}); ++k; continue;
      case '^': out.push_back({Token::Kind::Caret, "^", pos}); ++k; continue;
      case '/': out.push_back({Token::Kind::Slash, "/", pos}); ++k; continue;
      case '(': out.push_back({Token::Kind::LParen, "(", pos}); ++k; continue;
      case ')': out.push_back({Token::Kind::RParen, ")", pos}); ++k; continue;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = k;
      while (end < src.size() && std::isdigit(static_cast<unsigned char>(src[end]))) ++end;
      out.push_back({Token::Kind::Integer, std::string(src.substr(k, end - k)), pos});
      k = end;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = k;
      while (end < src.size() &&
             std::isalnum(static_cast<unsigned char>(src[end]))) ++end;
      out.push_back({Token::Kind::Ident, std::string(src.substr(k, end - k)), pos});
      k = end;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }
  out.push_back({Token::Kind::End, "", src.size() + 1});
  return out;
}

/// Recursive-descent evaluator over an algebra A, which provides:
///   using Poly;
///   static constexpr bool operator_mode;
///   static Poly scalar(const Coefficient&);
///   static Poly variable(GeneratorKind, std::uint32_t index);
///   static Poly add/sub/mul(const Poly&, const Poly&);
///   static Poly neg(const Poly&);
/// Powers are expanded by repeated multiplication, which keeps the operator
/// case correct.
template <class A>
class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(lex(src)) {}

  typename A::Poly run() {
    if (peek().kind == Token::Kind::End) throw ParseError("empty expression", 1);
    typename A::Poly value = parse_expr();
    if (peek().kind != Token::Kind::End) {
      throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    }
    return value;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t k = std::min(next_ + ahead, tokens_.size() - 1);
    return tokens_[k];
  }
  const Token& take() { return tokens_[std::min(next_++, tokens_.size() - 1)]; }
  bool accept(typename Token::Kind kind) {
    if (peek().kind == kind) {
      ++next_;
      return true;
    }
    return false;
  }

  typename A::Poly parse_expr() {
    const bool lead_minus = accept(Token::Kind::Minus);
    typename A::Poly value = parse_term();
    if (lead_minus) value = A::neg(value);
    for (;;) {
      if (accept(Token::Kind::Plus)) {
        value = A::add(value, parse_term());
      } else if (accept(Token::Kind::Minus)) {
        value = A::sub(value, parse_term());
      } else {
        return value;
      }
    }
  }

  typename A::Poly parse_term() {
    typename A::Poly value = parse_factor();
    while (accept(Token::Kind::Star)) value = A::mul(value, parse_factor());
    return value;
  }

  typename A::Poly parse_factor() {
    typename A::Poly value = parse_atom();
    if (!accept(Token::Kind::Caret)) return value;
    const Token& t = peek();
    if (t.kind == Token::Kind::Minus) throw ParseError("negative exponent", t.pos);
    if (t.kind != Token::Kind::Integer) {
      throw ParseError("expected integer exponent", t.pos);
    }
    take();
    if (peek().kind == Token::Kind::Slash && peek(1).kind == Token::Kind::Integer) {
      throw ParseError("fractional exponent", peek().pos);
    }
    const std::uint64_t e = parse_uint(t, kMaxExponent, "exponent too large");
    typename A::Poly out = A::scalar(Coefficient(1));
    for (std::uint64_t k = 0; k < e; ++k) out = A::mul(out, value);
    return out;
  }

  typename A::Poly parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::LParen: {
        take();
        typename A::Poly value = parse_expr();
        if (!accept(Token::Kind::RParen)) {
          throw ParseError("expected ')'", peek().pos);
        }
        return value;
      }
      case Token::Kind::Integer:
        return A::scalar(Coefficient(parse_rational()));
      case Token::Kind::Ident:
        return parse_ident();
      default:
        throw ParseError(t.kind == Token::Kind::End
                             ? "unexpected end of expression"
                             : "unexpected '" + t.text + "'",
                         t.pos);
    }
  }

  Rational parse_rational() {
    const Token& num = take();
    Int numerator{num.text};
    if (peek().kind == Token::Kind::Slash && peek(1).kind == Token::Kind::Integer) {
      take();
      const Token& den = take();
      Int denominator{den.text};
      if (denominator.is_zero()) throw ParseError("zero denominator", den.pos);
      return Rational(numerator, denominator);
    }
    return Rational(numerator);
  }

  typename A::Poly parse_ident() {
    const Token& t = take();
    const std::string& s = t.text;
    if (s == "i") return A::scalar(Coefficient::i());
    if (s == "hbar") return A::scalar(Coefficient::hbar());

    const char head = s[0];
    const bool digits_tail =
        s.size() > 1 && s.find_first_not_of("0123456789", 1) == std::string::npos;
    const char xletter = A::operator_mode ? 'X' : 'x';
    const char pletter = A::operator_mode ? 'P' : 'p';
    if (digits_tail && (head == xletter || head == pletter)) {
      const std::uint64_t index =
          parse_uint_text(s.substr(1), t.pos, kMaxVariableIndex, "variable index too large");
      if (index == 0) throw ParseError("variable index must be >= 1", t.pos);
      const GeneratorKind kind =
          (head == xletter) ? GeneratorKind::Position : GeneratorKind::Momentum;
      return A::variable(kind, static_cast<std::uint32_t>(index));
    }
    // Case hints for the most common slip: the other mode's variables.
    if (digits_tail && (head == 'x' || head == 'p') && A::operator_mode) {
      throw ParseError("unknown identifier '" + s + "' (operator variables are uppercase: " +
                           std::string(1, std::toupper(static_cast<unsigned char>(head))) +
                           s.substr(1) + ")",
                       t.pos);
    }
    if (digits_tail && (head == 'X' || head == 'P') && !A::operator_mode) {
      throw ParseError("unknown identifier '" + s + "' (classical variables are lowercase: " +
                           std::string(1, std::tolower(static_cast<unsigned char>(head))) +
                           s.substr(1) + ")",
                       t.pos);
    }
    throw ParseError("unknown identifier '" + s + "'", t.pos);
  }

  std::uint64_t parse_uint(const Token& t, std::uint64_t cap, const char* too_large) {
    return parse_uint_text(t.text, t.pos, cap, too_large);
  }

  std::uint64_t parse_uint_text(const std::string& text, std::size_t pos, std::uint64_t cap,
                                const char* too_large) {
    if (text.size() > 7) throw ParseError(too_large, pos);
    std::uint64_t value = 0;
    for (char c : text) value = value * 10 + static_cast<std::uint64_t>(c - '0');
    if (value > cap) throw ParseError(too_large, pos);
    return value;
  }

  std::vector<Token> tokens_;
  std::size_t next_ = 0;
};

template <class A>
typename A::Poly parse_with_algebra(std::string_view text) {
  return Parser<A>(text).run();
}

}  // namespace qord::detail
