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

#include "demikit/poly.hpp"

#include <sstream>

namespace demikit {

namespace {

Rational rational_pow(const Rational& base, int e) {
  if (e < 0) {
    if (base == 0) throw InvalidArgument("zero raised to a negative power");
    return rational_pow(Rational(1) / base, -e);
  }
  Rational out = 1;
  Rational b = base;
  while (e > 0) {
    if (e & 1) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

Exponents unit_exponent(Var v, int power) {
  Exponents e{};
  e[static_cast<int>(v)] = power;
  return e;
}

}  // namespace

char var_name(Var v) {
  static constexpr char kNames[kVarCount] = {'x', 'y', 't', 'q'};
  return kNames[static_cast<int>(v)];
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

LaurentPoly LaurentPoly::variable(Var v, int power) {
  return monomial(Rational(1), unit_exponent(v, power));
}

LaurentPoly LaurentPoly::monomial(const Rational& c, const Exponents& e) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

bool LaurentPoly::is_integral() const {
  for (const auto& [e, c] : terms_) {
    if (denominator(c) != 1) return false;
  }
  return true;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

bool LaurentPoly::has_negative_exponents() const {
  for (const auto& [e, c] : terms_) {
    for (int v : e) {
      if (v < 0) return true;
    }
  }
  return false;
}

bool LaurentPoly::depends_on(Var v) const {
  for (const auto& [e, c] : terms_) {
    if (e[static_cast<int>(v)] != 0) return true;
  }
  return false;
}

Rational LaurentPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

LaurentPoly LaurentPoly::coefficient_of(Var v, int power) const {
  const int i = static_cast<int>(v);
  LaurentPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[i] != power) continue;
    Exponents rest = e;
    rest[i] = 0;
    out.add_term(rest, c);
  }
  return out;
}

int LaurentPoly::max_degree(Var v) const {
  if (terms_.empty()) throw InvalidArgument("degree of the zero polynomial");
  const int i = static_cast<int>(v);
  int best = terms_.begin()->first[i];
  for (const auto& [e, c] : terms_) best = std::max(best, e[i]);
  return best;
}

int LaurentPoly::min_degree(Var v) const {
  if (terms_.empty()) throw InvalidArgument("degree of the zero polynomial");
  const int i = static_cast<int>(v);
  int best = terms_.begin()->first[i];
  for (const auto& [e, c] : terms_) best = std::min(best, e[i]);
  return best;
}

void LaurentPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (int v = 0; v < kVarCount; ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) {
    if (!is_monomial()) {
      throw UnsupportedSubstitution("negative power of a non-monomial: " + str());
    }
    const auto& [mono, c] = *terms_.begin();
    Exponents inv;
    for (int v = 0; v < kVarCount; ++v) inv[v] = mono[v] * e;
    return monomial(rational_pow(c, e), inv);
  }
  LaurentPoly out(1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) out *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return out;
}

LaurentPoly LaurentPoly::substitute(const std::map<Var, LaurentPoly>& images) const {
  std::map<std::pair<int, int>, LaurentPoly> power_cache;
  auto power = [&](Var v, int e) -> const LaurentPoly& {
    const auto key = std::make_pair(static_cast<int>(v), e);
    auto it = power_cache.find(key);
    if (it != power_cache.end()) return it->second;
    const LaurentPoly& image = images.at(v);
    if (e < 0 && !image.is_monomial()) {
      throw UnsupportedSubstitution(std::string("substituting ") + var_name(v) + " -> " +
                                    image.str() + " into a term with " + var_name(v) + "^" +
                                    std::to_string(e));
    }
    return power_cache.emplace(key, image.pow(e)).first->second;
  };

  LaurentPoly out;
  for (const auto& [e, c] : terms_) {
    Exponents kept{};
    LaurentPoly term(c);
    for (int i = 0; i < kVarCount; ++i) {
      const Var v = static_cast<Var>(i);
      if (e[i] != 0 && images.count(v)) {
        term *= power(v, e[i]);
      } else {
        kept[i] = e[i];
      }
    }
    out += term * monomial(Rational(1), kept);
  }
  return out;
}

LaurentPoly LaurentPoly::swap(Var a, Var b) const {
  LaurentPoly out;
  const int i = static_cast<int>(a);
  const int j = static_cast<int>(b);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    std::swap(f[i], f[j]);
    out.add_term(f, c);
  }
  return out;
}

Rational LaurentPoly::evaluate(const std::array<Rational, kVarCount>& point) const {
  Rational out = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int v = 0; v < kVarCount; ++v) {
      if (e[v] != 0) term *= rational_pow(point[v], e[v]);
    }
    out += term;
  }
  return out;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;

    std::string vars;
    for (int v = 0; v < kVarCount; ++v) {
      if (e[v] == 0) continue;
      if (!vars.empty()) vars += '*';
      vars += var_name(static_cast<Var>(v));
      if (e[v] != 1) vars += "^" + std::to_string(e[v]);
    }
    if (vars.empty()) {
      os << magnitude.str();
    } else if (magnitude == 1) {
      os << vars;
    } else {
      os << magnitude.str() << '*' << vars;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (d.is_monomial()) return p * d.pow(-1);

  int var = -1;
  for (int i = 0; i < kVarCount; ++i) {
    if (!d.depends_on(static_cast<Var>(i))) continue;
    if (var >= 0) throw InvalidArgument("divisor must involve a single variable: " + d.str());
    var = i;
  }
  const Var v = static_cast<Var>(var);

  // Strip the power of v from the divisor so it has a nonzero constant term;
  // then divisibility in the Laurent ring is divisibility of polynomials.
  const int d_low = d.min_degree(v);
  const LaurentPoly divisor = d * LaurentPoly::variable(v, -d_low);
  const int top = divisor.max_degree(v);
  const Rational lead = divisor.coefficient(unit_exponent(v, top));

  if (p.is_zero()) return p;
  const int p_low = p.min_degree(v);
  LaurentPoly rem = p * LaurentPoly::variable(v, -p_low);
  LaurentPoly quotient;
  while (!rem.is_zero() && rem.max_degree(v) >= top) {
    const int deg = rem.max_degree(v);
    LaurentPoly step = rem.coefficient_of(v, deg) * LaurentPoly::variable(v, deg - top) *
                       LaurentPoly(Rational(1) / lead);
    rem -= step * divisor;
    quotient += step;
  }
  if (!rem.is_zero()) {
    const LaurentPoly shown = rem * LaurentPoly::variable(v, p_low);
    throw InexactDivision("(" + p.str() + ") is not divisible by (" + d.str() + ")",
                          shown.str());
  }
  return quotient * LaurentPoly::variable(v, p_low - d_low);
}

const LaurentPoly& require_integral(const LaurentPoly& p, std::string_view what) {
  if (!p.is_integral()) {
    throw InvariantViolation(std::string(what) + " has non-integer coefficients: " + p.str());
  }
  return p;
}

}  // namespace demikit
