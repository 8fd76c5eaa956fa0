#pragma once

// Recursive-descent parser for the canonical text renderings. The grammar is
// shared by LaurentU, TracePoly and YElement; only atoms differ:
//
//   expr    := ['+'|'-'] term { ('+'|'-') term }
//   term    := power { '*' power }
//   power   := primary [ '^' ['-'] integer ]
//   primary := integer [ '/' integer ] | identifier | '(' expr ')'
//
// An identifier is [A-Za-z][A-Za-z0-9_]* optionally followed by "[...]".

#include <cctype>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>

#include "yh/coeff.hpp"
#include "yh/error.hpp"

namespace yh::detail {

template <class Ring>
struct ExprHooks {
  // Embeds a scalar (integer or fraction literal).
  std::function<Ring(const Rational&)> scalar;
  // Resolves an identifier; column is 1-based, for error messages.
  std::function<Ring(std::string_view, std::size_t column)> atom;
  // Ring multiplication (may be noncommutative; applied left to right).
  std::function<Ring(const Ring&, const Ring&)> mul;
  // Raises to a negative power; may throw ParseError when unsupported.
  std::function<Ring(const Ring&, int, std::size_t column)> negative_power;
};

template <class Ring>
class ExprParser {
public:
  ExprParser(std::string_view text, ExprHooks<Ring> hooks)
      : text_(text), hooks_(std::move(hooks)) {}

  Ring parse() {
    Ring value = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_ + 1); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Ring expr() {
    skip_ws();
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Ring acc = term();
    if (negate) acc = hooks_.mul(hooks_.scalar(Rational(-1)), acc);
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Ring term() {
    Ring acc = power();
    while (accept('*')) acc = hooks_.mul(acc, power());
    return acc;
  }

  Ring power() {
    Ring base = primary();
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t column = pos_ + 1;
    bool negative = accept('-');
    skip_ws();
    const std::string digits = read_digits();
    if (digits.empty()) fail("expected exponent");
    const int e = std::stoi(digits);
    if (negative) return hooks_.negative_power(base, e, column);
    Ring acc = hooks_.scalar(Rational(1));
    for (int k = 0; k < e; ++k) acc = hooks_.mul(acc, base);
    return acc;
  }

  std::string read_digits() {
    std::string out;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      out.push_back(text_[pos_++]);
    }
    return out;
  }

  Ring primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Ring inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string num = read_digits();
      if (accept('/')) {
        skip_ws();
        const std::string den = read_digits();
        if (den.empty() || den.find_first_not_of('0') == std::string::npos) fail("bad denominator");
        return hooks_.scalar(Rational(mpq_class(num + "/" + den)));
      }
      return hooks_.scalar(Rational(mpq_class(num)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      if (pos_ < text_.size() && text_[pos_] == '[') {
        const auto close = text_.find(']', pos_);
        if (close == std::string_view::npos) fail("unterminated '['");
        pos_ = close + 1;
      }
      return hooks_.atom(text_.substr(start, pos_ - start), start + 1);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  ExprHooks<Ring> hooks_;
  std::size_t pos_ = 0;
};

}  // namespace yh::detail
