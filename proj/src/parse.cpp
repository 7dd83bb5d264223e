#include "leibniz/parse.hpp"

#include <cctype>
#include <climits>

#include "leibniz/errors.hpp"

namespace leibniz {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  FieldElement parse() {
    FieldElement value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  FieldElement expr() {
    FieldElement value = term();
    while (true) {
      skip_space();
      if (accept('+'))
        value += term();
      else if (accept('-'))
        value -= term();
      else
        return value;
    }
  }

  FieldElement term() {
    FieldElement value = factor();
    while (true) {
      skip_space();
      if (accept('*')) {
        value *= factor();
      } else if (accept('/')) {
        value /= factor();  // DivisionByZero for a zero divisor
      } else {
        return value;
      }
    }
  }

  FieldElement factor() {
    FieldElement value = base();
    skip_space();
    if (!accept('^')) return value;
    skip_space();
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer exponent");
    long exponent = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      exponent = exponent * 10 + (text_[pos_++] - '0');
      if (exponent > INT_MAX) fail("exponent too large");
    }
    return value.pow(negative ? -exponent : exponent);
  }

  FieldElement base() {
    skip_space();
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      FieldElement inner = expr();
      skip_space();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return FieldElement(ring_, Rational(mpz_class(std::string(text_.substr(start, pos_ - start)), 10)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      const int index = ring_->index_of(name);
      if (index < 0) throw ParseError("unknown identifier '" + name + "'", start);
      return FieldElement::generator(ring_, static_cast<std::size_t>(index));
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldElement parse_expr(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse(); }

FieldElement parse_expr(std::string_view text, const std::vector<std::string>& generators) {
  return parse_expr(text, Ring::make(generators));
}

}  // namespace leibniz
