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

#pragma once

#include <array>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "demikit/errors.hpp"

namespace demikit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Var : int { x = 0, y = 1, t = 2, q = 3 };
inline constexpr int kVarCount = 4;

char var_name(Var v);

using Exponents = std::array<int, kVarCount>;

// Display order of monomials: compare the exponent of q, then t, then y,
// then x, ascending. Prints Tutte polynomials the way they are usually
// written, e.g. "x - 2*x^2 + y - 3*x*y + 3*x^2*y".
struct MonomialOrder {
  bool operator()(const Exponents& a, const Exponents& b) const {
    for (int v = kVarCount - 1; v >= 0; --v) {
      if (a[v] != b[v]) return a[v] < b[v];
    }
    return false;
  }
};

class LaurentPoly;

// Thrown by divide_exact when the remainder is nonzero.
class InexactDivision : public Error {
 public:
  InexactDivision(const std::string& what, std::string remainder)
      : Error(what), remainder_(std::move(remainder)) {}
  const std::string& remainder() const { return remainder_; }

 private:
  std::string remainder_;
};

// Sparse Laurent polynomial in x, y, t, q with exact rational coefficients.
// Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<Exponents, Rational, MonomialOrder>;

  LaurentPoly() = default;
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}  // NOLINT(implicit)
  LaurentPoly(long long c) : LaurentPoly(Rational(c)) {}  // NOLINT(implicit)
  explicit LaurentPoly(const Rational& c);

  static LaurentPoly variable(Var v, int power = 1);
  static LaurentPoly monomial(const Rational& c, const Exponents& e);

  // Reads the canonical text form and ordinary infix expressions over
  // integers, rationals, x, y, t, q with + - * / ^ and parentheses.
  // Division is only allowed by monomials. Throws MalformedInput.
  static LaurentPoly parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  bool is_integral() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  bool has_negative_exponents() const;
  bool depends_on(Var v) const;

  Rational coefficient(const Exponents& e) const;
  // Coefficient of v^power, as a polynomial in the remaining variables.
  LaurentPoly coefficient_of(Var v, int power) const;
  // Requires a nonzero polynomial.
  int max_degree(Var v) const;
  int min_degree(Var v) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  // Adds c * monomial(e) in place.
  void add_term(const Exponents& e, const Rational& c);

  // Negative powers need a monomial base.
  LaurentPoly pow(int e) const;

  // Simultaneous substitution. Variables not in the map are kept. A negative
  // exponent of a substituted variable requires a monomial image; anything
  // else throws UnsupportedSubstitution.
  LaurentPoly substitute(const std::map<Var, LaurentPoly>& images) const;

  LaurentPoly swap(Var a, Var b) const;

  // Exact evaluation; throws InvalidArgument on 0 raised to a negative power.
  Rational evaluate(const std::array<Rational, kVarCount>& point) const;

  // Canonical text, e.g. "x - 2*x^2 + y - 3*x*y + 3*x^2*y", "x^-1", "0".
  std::string str() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

inline LaurentPoly operator""_poly(const char* text, std::size_t len) {
  return LaurentPoly::parse(std::string_view(text, len));
}

// p / d for a divisor that involves at most one variable. Monomial divisors
// always divide; otherwise the quotient must be exact in the Laurent ring or
// InexactDivision is thrown carrying the remainder.
LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& d);

// Throws InvariantViolation naming `what` unless p has integer coefficients.
const LaurentPoly& require_integral(const LaurentPoly& p, std::string_view what);

// --- q-analogues ----------------------------------------------------------

// [m]_q = 1 + q + ... + q^(m-1); [0]_q = 0.
LaurentPoly q_integer(int m, Var q = Var::q);
// [m]_q! = [1]_q [2]_q ... [m]_q; [0]_q! = 1.
LaurentPoly q_bracket_factorial(int m, Var q = Var::q);
// Gaussian binomial via [m, j] = [m-1, j] + q^(m-j) [m-1, j-1]; requires
// 0 <= j <= m.
LaurentPoly q_binomial(int m, int j, Var q = Var::q);
// <m>_q = (q^m - 1)(q^m - q)...(q^m - q^(m-1)); <0>_q = 1.
LaurentPoly angle(int m, Var q = Var::q);

}  // namespace demikit
