#include <bezout/error.hpp>
#include <bezout/parse.hpp>

#include <cctype>
#include <string>

namespace bezout {

namespace {

constexpr int kMaxExponent = 256;

BivarPoly tighten(const BivarPoly& p) { return p.with_bound(std::max(p.degree(), 0)); }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  BivarPoly parse() {
    BivarPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return tighten(p);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

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

  BivarPoly expr() {
    BivarPoly acc = term();
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

  BivarPoly term() {
    BivarPoly acc = unary();
    while (accept('*')) acc = tighten(acc * unary());
    return acc;
  }

  BivarPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  BivarPoly power() {
    BivarPoly base = primary();
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t at = pos_;
    Integer e = integer_literal();
    if (e > kMaxExponent) {
      pos_ = at;
      fail("exponent too large");
    }
    return tighten(base.pow(static_cast<int>(e.get_si())));
  }

  Integer integer_literal() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  BivarPoly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      BivarPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = integer_literal();
      Integer den(1);
      if (accept('/')) {
        const std::size_t at = pos_;
        den = integer_literal();
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
      }
      return BivarPoly::constant(make_rational(num, den));
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      return c == 'x' ? BivarPoly::x1() : BivarPoly::x2();
    }
    if (c == 'X' && pos_ + 1 < text_.size() && (text_[pos_ + 1] == '1' || text_[pos_ + 1] == '2')) {
      const bool first = text_[pos_ + 1] == '1';
      pos_ += 2;
      return first ? BivarPoly::x1() : BivarPoly::x2();
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BivarPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

BivarPoly parse_poly(std::string_view text, int dbound) {
  BivarPoly p = parse_poly(text);
  if (p.degree() > dbound)
    throw Error(Errc::degree_overflow,
                "polynomial '" + std::string(text) + "' has degree " + std::to_string(p.degree()) + " > bound " + std::to_string(dbound));
  return p.with_bound(dbound);
}

}  // namespace bezout
