#include "exfactor/parse.hpp"

#include <cctype>
#include <string>

namespace exfactor {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  BivarPolyZ parse() {
    skip();
    if (pos_ == s_.size()) fail("expected an expression");
    BivarPolyZ r = expr();
    skip();
    if (pos_ != s_.size()) fail("expected '+', '-', '*' or end of input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_ + 1, msg); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BigInt integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  BivarPolyZ expr() {
    BivarPolyZ acc = term();
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

  BivarPolyZ term() {
    BivarPolyZ acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  BivarPolyZ unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  BivarPolyZ power() {
    BivarPolyZ base = atom();
    if (!accept('^')) return base;
    skip();
    const BigInt e = integer();
    if (!e.fits_uint_p() || e > 4096) fail("exponent too large");
    return pow(base, static_cast<unsigned>(e.get_ui()));
  }

  BivarPolyZ atom() {
    skip();
    if (pos_ == s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return BivarPolyZ::constant(integer());
    if (c == 'x') {
      ++pos_;
      return BivarPolyZ::x();
    }
    if (c == 'y') {
      ++pos_;
      return BivarPolyZ::y();
    }
    if (c == '(') {
      ++pos_;
      BivarPolyZ inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

BivarPolyZ parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace exfactor
