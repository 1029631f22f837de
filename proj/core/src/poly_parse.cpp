// Copyright 2026 The demikit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cctype>
#include <string>

#include "demikit/poly.hpp"

namespace demikit {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LaurentPoly run() {
    LaurentPoly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw MalformedInput("polynomial parse error at offset " + std::to_string(pos_) + ": " +
                         why + " in \"" + std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  int peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : -1;
  }

  bool starts_factor() {
    const int c = peek();
    return c == '(' || std::isdigit(c) || c == 'x' || c == 'y' || c == 't' || c == 'q';
  }

  LaurentPoly expr() {
    LaurentPoly acc = term();
    for (int c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      if (c == '+') {
        acc += term();
      } else {
        acc -= term();
      }
    }
    return acc;
  }

  LaurentPoly term() {
    LaurentPoly acc = unary();
    while (true) {
      const int c = peek();
      if (c == '*') {
        ++pos_;
        acc *= unary();
      } else if (c == '/') {
        ++pos_;
        const LaurentPoly d = unary();
        if (d.is_zero()) fail("division by zero");
        if (!d.is_monomial()) fail("division by a non-monomial");
        acc *= d.pow(-1);
      } else if (starts_factor()) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  LaurentPoly unary() {
    const int c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  LaurentPoly power() {
    LaurentPoly base = atom();
    if (peek() != '^') return base;
    ++pos_;
    int e = 0;
    if (peek() == '(') {
      ++pos_;
      e = signed_int();
      if (peek() != ')') fail("expected ')' after exponent");
      ++pos_;
    } else {
      e = signed_int();
    }
    if (e < 0 && !base.is_monomial()) fail("negative power of a non-monomial");
    return base.pow(e);
  }

  int signed_int() {
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    if (!std::isdigit(peek())) fail("expected an integer exponent");
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1'000'000) fail("exponent too large");
    }
    return static_cast<int>(negative ? -v : v);
  }

  LaurentPoly atom() {
    const int c = peek();
    if (c == '(') {
      ++pos_;
      LaurentPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return LaurentPoly(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    switch (c) {
      case 'x':
        ++pos_;
        return LaurentPoly::variable(Var::x);
      case 'y':
        ++pos_;
        return LaurentPoly::variable(Var::y);
      case 't':
        ++pos_;
        return LaurentPoly::variable(Var::t);
      case 'q':
        ++pos_;
        return LaurentPoly::variable(Var::q);
      default:
        fail(c < 0 ? "unexpected end of input" : "unexpected character");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) { return Parser(text).run(); }

}  // namespace demikit
