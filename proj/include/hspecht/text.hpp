#pragma once

// Parsing of the canonical polynomial text form (and a little more: brackets
// and arbitrary products), e.g. `3/2*x1^2*x2 - (x1 + ξ^1*x3)^2`.

#include <cctype>
#include <string>

#include "hspecht/errors.hpp"
#include "hspecht/polynomial.hpp"

namespace hspecht {

namespace detail {

class PolyParser {
 public:
  PolyParser(const std::string& text, std::size_t nvars, int r) : s_(text), n_(nvars), r_(r) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidArgument("cannot parse polynomial '" + s_ + "' at offset " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(const std::string& tok) {
    skip();
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      if (eat("+")) {
        acc += term();
      } else if (eat("-")) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }
  MultiPoly term() {
    MultiPoly acc = unary();
    while (eat("*")) acc *= unary();
    return acc;
  }
  MultiPoly unary() {
    if (eat("-")) return -unary();
    return power();
  }
  MultiPoly power() {
    MultiPoly base = atom();
    if (eat("^")) base = base.pow(static_cast<int>(integer()));
    return base;
  }
  MultiPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (eat("(")) {
      MultiPoly p = expr();
      if (!eat(")")) fail("missing ')'");
      return p;
    }
    if (eat("ξ") || eat("xi")) return MultiPoly::constant(n_, Scalar::xi_power(r_, 1));
    if (eat("x")) {
      long i = integer();
      if (i < 1 || static_cast<std::size_t>(i) > n_) fail("variable x" + std::to_string(i) + " out of range");
      return MultiPoly::variable(n_, r_, static_cast<std::size_t>(i));
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      Rational q(integer());
      std::size_t save = pos_;
      if (eat("/")) {
        skip();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          long den = integer();
          if (den == 0) fail("zero denominator");
          q /= Rational(den);
        } else {
          pos_ = save;
        }
      }
      q.canonicalize();
      return MultiPoly::constant(n_, r_, q);
    }
    fail("unexpected character");
  }

  std::string s_;
  std::size_t pos_ = 0;
  std::size_t n_;
  int r_;
};

}  // namespace detail

/// Polynomial in x1..x{nvars} over Q(xi_r) from text.
inline MultiPoly parse_poly(const std::string& text, std::size_t nvars, int r = 1) {
  return detail::PolyParser(text, nvars, r).parse();
}

}  // namespace hspecht
