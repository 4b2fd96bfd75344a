#include <hilb/errors.hpp>
#include <hilb/polynomial.hpp>

#include <cctype>

namespace hilb {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError(pos_, "empty expression");
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    Polynomial acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      const unsigned e = exponent();
      base = base.pow(e);
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '^') throw ParseError(pos_, "chained exponent; use parentheses");
    }
    return base;
  }

  unsigned exponent() {
    skip_space();
    const std::size_t start = pos_;
    const bool paren = accept('(');
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '-') throw ParseError(pos_, "negative exponent");
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError(pos_, "expected a nonnegative integer exponent");
    }
    unsigned long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (value > 1'000'000) throw ParseError(start, "exponent too large");
      ++pos_;
    }
    if (paren && !accept(')')) throw ParseError(pos_, "expected ')'");
    return static_cast<unsigned>(value);
  }

  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  Polynomial number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    Integer num(std::string(text_.substr(start, pos_ - start)));
    Integer den = 1;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      const std::size_t slash = pos_++;
      const std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (dstart == pos_) throw ParseError(slash, "rational literal needs a denominator");
      den = Integer(std::string(text_.substr(dstart, pos_ - dstart)));
      if (den == 0) throw ParseError(dstart, "zero denominator");
    }
    check_no_juxtaposition();
    return Polynomial::constant(ring_, make_rational(num, den));
  }

  Polynomial identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = text_.substr(start, pos_ - start);
    auto idx = ring_->index_of(name);
    if (!idx) throw ParseError(start, "unknown variable '" + std::string(name) + "'");
    return Polynomial::variable(ring_, *idx);
  }

  // "2x" would otherwise be read as literal 2 followed by garbage; report the
  // missing operator explicitly.
  void check_no_juxtaposition() {
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '(')) {
      throw ParseError(pos_, "missing '*' (implicit multiplication is not supported)");
    }
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse(); }

}  // namespace hilb
