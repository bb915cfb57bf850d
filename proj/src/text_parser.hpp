#pragma once

// Recursive-descent reader for the polynomial text format shared by ParamPoly
// and XYPoly:
//
//   expr   := ['+'|'-'] term { ('+'|'-') term }
//   term   := factor { '*' factor }
//   factor := integer | ident [ '^' ['-'] integer ] | '(' expr ')' [ '^' integer ]
//
// Identifiers are resolved by a callback so the same reader serves both rings.

#include <cctype>
#include <functional>
#include <string>
#include <string_view>

#include "asc/param_poly.hpp"

namespace asc::detail {

template <class Poly>
class TextParser {
 public:
  /// resolve(name, exponent, position) returns name^exponent or throws ParseError.
  using Resolver = std::function<Poly(std::string_view, int, std::size_t)>;

  TextParser(std::string_view text, Resolver resolve)
      : text_(text), resolve_(std::move(resolve)) {}

  Poly parse() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty input", pos_);
    Poly result = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected character", pos_);
    return result;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  Poly expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Poly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Integer integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  int exponent() {
    bool negative = accept('-');
    const std::size_t at = pos_;
    Integer e = integer();
    if (!e.fits_sint_p()) throw ParseError("exponent out of range", at);
    return negative ? -static_cast<int>(e.get_si()) : static_cast<int>(e.get_si());
  }

  Poly factor() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      if (!accept('^')) return inner;
      const std::size_t at = pos_;
      const int e = exponent();
      if (e < 0 || e > 64) throw ParseError("exponent of a parenthesized expression must be in 0..64", at);
      Poly result(1L);
      for (int i = 0; i < e; ++i) result *= inner;
      return result;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly(integer());
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      int e = 1;
      if (accept('^')) e = exponent();
      return resolve_(name, e, start);
    }
    throw ParseError("unexpected character", pos_);
  }

  std::string_view text_;
  Resolver resolve_;
  std::size_t pos_ = 0;
};

}  // namespace asc::detail
