#pragma once

#include "logaq/poly.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace logaq::io {

/// Parse failure with a 1-based column inside the polynomial text.
class PolyParseError : public std::runtime_error {
 public:
  PolyParseError(const std::string& msg, std::size_t column)
      : std::runtime_error(msg + " at column " + std::to_string(column)), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ['^' integer]
///   atom   := integer ['/' integer] | identifier | '(' expr ')'
/// Whitespace is ignored. Identifiers must be variables of the ring.
class PolyParser {
 public:
  PolyParser(const PolyRing& ring, std::string text) : ring_(ring), text_(std::move(text)) {}

  Poly parse() {
    skip();
    if (pos_ == text_.size()) throw PolyParseError("empty polynomial", 1);
    Poly p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw PolyParseError(msg, pos_ + 1); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc;
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    Poly t = term();
    acc = negative ? ring_.negate(t) : t;
    while (true) {
      if (accept('+'))
        acc = ring_.add(acc, term());
      else if (accept('-'))
        acc = ring_.sub(acc, term());
      else
        break;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc = ring_.mul(acc, factor());
    return acc;
  }

  Poly factor() {
    Poly base = atom();
    if (accept('^')) {
      skip();
      std::string digits = read_digits();
      if (digits.empty()) fail("expected exponent");
      unsigned long e = std::stoul(digits);
      base = ring_.pow(base, static_cast<unsigned>(e));
    }
    return base;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Poly atom() {
    skip();
    if (pos_ == text_.size()) fail("unexpected end of polynomial");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(read_digits());
      Integer den(1);
      if (accept('/')) {
        skip();
        std::string d = read_digits();
        if (d.empty()) fail("expected denominator");
        den = Integer(d);
        if (den == 0) fail("zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      return ring_.constant(q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '\''))
        ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      auto idx = ring_.index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable \"" + name + "\"");
      }
      return ring_.variable(*idx);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  const PolyRing& ring_;
  std::string text_;
  std::size_t pos_ = 0;
};

inline Poly parse_poly(const PolyRing& ring, const std::string& text) { return PolyParser(ring, text).parse(); }

}  // namespace logaq::io
