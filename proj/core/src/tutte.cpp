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

#include "demikit/tutte.hpp"

#include <string>

#include "demikit/constructions.hpp"
#include "demikit/errors.hpp"
#include "demikit/ops.hpp"

namespace demikit {

namespace {

const LaurentPoly kX = LaurentPoly::variable(Var::x);
const LaurentPoly kY = LaurentPoly::variable(Var::y);
const LaurentPoly kT = LaurentPoly::variable(Var::t);

// Powers of a fixed polynomial, computed on demand.
class PowerCache {
 public:
  explicit PowerCache(LaurentPoly base) : powers_{LaurentPoly(1)}, base_(std::move(base)) {}

  const LaurentPoly& operator()(int e) {
    while (static_cast<int>(powers_.size()) <= e) powers_.push_back(powers_.back() * base_);
    return powers_[e];
  }

 private:
  std::vector<LaurentPoly> powers_;
  LaurentPoly base_;
};

void require_nonnegative(int exponent, const char* factor) {
  if (exponent < 0) {
    throw UnsupportedSubstitution(std::string(factor) + " raised to " + std::to_string(exponent) +
                                  " is not a Laurent polynomial");
  }
}

Mask last_element(const RankTable& m) { return element_bit(m.n()); }

}  // namespace

std::map<std::pair<int, int>, Integer> corank_nullity_counts(const RankTable& m) {
  std::map<std::pair<int, int>, Integer> counts;
  const int top = m.total_rank();
  for (Mask a = 0; a < m.size(); ++a) ++counts[{top - m(a), m.nullity(a)}];
  return counts;
}

LaurentPoly whitney_f(const RankTable& m) {
  LaurentPoly f;
  for (const auto& [key, count] : corank_nullity_counts(m)) {
    f.add_term({key.first, key.second, 0, 0}, Rational(count));
  }
  return f;
}

LaurentPoly tutte(const RankTable& m) {
  PowerCache xm1(kX - 1);
  PowerCache ym1(kY - 1);
  LaurentPoly t;
  for (const auto& [key, count] : corank_nullity_counts(m)) {
    require_nonnegative(key.first, "(x-1)");
    require_nonnegative(key.second, "(y-1)");
    t += LaurentPoly(Rational(count)) * xm1(key.first) * ym1(key.second);
  }
  return t;
}

bool tutte_dual_check(const RankTable& m) {
  try {
    return tutte(dual(m)) == tutte(m).swap(Var::x, Var::y);
  } catch (const UnsupportedSubstitution&) {
    return whitney_f(dual(m)) == whitney_f(m).swap(Var::x, Var::y);
  }
}

LaurentPoly tutte_recurrence(const RankTable& m, int p) {
  if (p < 1 || p > m.n()) throw InvalidArgument("element " + std::to_string(p) + " out of range");
  const Mask bit = element_bit(p);
  const int corank = m.total_rank() - m(m.ground() & ~bit);
  const int loop = 1 - m(bit);
  require_nonnegative(corank, "(x-1)");
  require_nonnegative(loop, "(y-1)");
  return (kX - 1).pow(corank) * tutte(deletion(m, bit).table) +
         (kY - 1).pow(loop) * tutte(contraction(m, bit).table);
}

LaurentPoly tutte_by_deletion_contraction(const RankTable& m) {
  if (m.n() == 0) return LaurentPoly(1);
  const Mask bit = last_element(m);
  const int corank = m.total_rank() - m(m.ground() & ~bit);
  const int loop = 1 - m(bit);
  require_nonnegative(corank, "(x-1)");
  require_nonnegative(loop, "(y-1)");
  return (kX - 1).pow(corank) * tutte_by_deletion_contraction(deletion(m, bit).table) +
         (kY - 1).pow(loop) * tutte_by_deletion_contraction(contraction(m, bit).table);
}

LaurentPoly whitney_recurrence(const RankTable& m, int p) {
  if (p < 1 || p > m.n()) throw InvalidArgument("element " + std::to_string(p) + " out of range");
  const Mask bit = element_bit(p);
  const int corank = m.total_rank() - m(m.ground() & ~bit);
  return LaurentPoly::variable(Var::x, corank) * whitney_f(deletion(m, bit).table) +
         LaurentPoly::variable(Var::y, 1 - m(bit)) * whitney_f(contraction(m, bit).table);
}

LaurentPoly characteristic(const RankTable& m) {
  require_demimatroid(m, "characteristic polynomial");
  LaurentPoly p;
  for (Mask x = 0; x < m.size(); ++x) {
    p.add_term({0, 0, m.total_rank() - m(x), 0}, Rational(cardinality(x) % 2 ? -1 : 1));
  }
  const LaurentPoly sign(m.total_rank() % 2 ? -1 : 1);
  const LaurentPoly check = sign * tutte(m).substitute({{Var::x, 1 - kT}, {Var::y, LaurentPoly()}});
  if (check != p) {
    throw InvariantViolation("characteristic polynomial " + p.str() +
                             " disagrees with (-1)^k T(1-t, 0) = " + check.str());
  }
  return p;
}

LaurentPoly tutte_uniform_closed_form(int n, int k) {
  if (k < 0 || k > n) throw InvalidArgument("uniform rank outside [0, n]");
  LaurentPoly t;
  Integer binom = 1;  // C(n, i)
  for (int i = 0; i <= n; ++i) {
    const LaurentPoly c{Rational(binom)};
    if (i < k) {
      t += c * (kX - 1).pow(k - i);
    } else if (i == k) {
      t += c;
    } else {
      t += c * (kY - 1).pow(i - k);
    }
    binom = binom * (n - i) / (i + 1);
  }
  return t;
}

LaurentPoly f_polynomial(const Complex& delta) {
  const int top = delta.dimension() + 1;
  const std::vector<std::int64_t> counts = delta.face_counts();
  LaurentPoly f;
  for (int i = 0; i <= top; ++i) f.add_term({0, 0, top - i, 0}, Rational(counts[i]));
  const LaurentPoly check = tutte(complex_to_demimatroid(delta))
                                .substitute({{Var::x, kT + 1}, {Var::y, LaurentPoly(1)}});
  if (check != f) {
    throw InvariantViolation("f-polynomial " + f.str() + " disagrees with T(t+1, 1) = " +
                             check.str());
  }
  return f;
}

LaurentPoly h_polynomial(const Complex& delta) {
  return f_polynomial(delta).substitute({{Var::t, kT - 1}});
}

}  // namespace demikit
