#include <cctype>
#include <string>

#include "polygcd/errors.hpp"
#include "polygcd/poly.hpp"

namespace polygcd {

namespace {

// Exponents above this would produce polynomials far beyond desk scale.
constexpr unsigned long kMaxExponent = 1u << 16;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  IntPoly parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty input", pos_);
    IntPoly p = expr();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  IntPoly expr() {
    IntPoly acc = term();
    for (;;) {
      skip_ws();
      if (consume('+')) {
        acc = acc + term();
      } else if (consume('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  IntPoly term() {
    IntPoly acc = factor();
    for (;;) {
      skip_ws();
      if (!consume('*')) return acc;
      acc = acc * factor();
    }
  }

  IntPoly factor() {
    IntPoly b = base();
    skip_ws();
    if (!consume('^')) return b;
    skip_ws();
    const std::size_t start = pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("exponent must be a nonnegative integer literal", start);
    }
    Integer e = digits();
    if (e > kMaxExponent) {
      throw ParseError("exponent " + to_decimal(e) + " exceeds " + std::to_string(kMaxExponent), start);
    }
    return b.pow(static_cast<unsigned>(e.get_ui()));
  }

  IntPoly base() {
    skip_ws();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return IntPoly::constant(digits());
    if (c == 'x') {
      ++pos_;
      return IntPoly::monomial(1, 1);
    }
    if (c == '(') {
      const std::size_t open = pos_++;
      IntPoly inner = expr();
      skip_ws();
      if (!consume(')')) {
        throw ParseError("missing ')' for '(' at position " + std::to_string(open), pos_);
      }
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  bool consume(char c) {
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace polygcd
