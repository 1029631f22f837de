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

#include <gtest/gtest.h>

#include "demikit/constructions.hpp"
#include "demikit/errors.hpp"
#include "demikit/ops.hpp"
#include "demikit/tutte.hpp"
#include "examples.hpp"
#include "oracles.hpp"
#include "reference_values.hpp"

namespace demikit {
namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

namespace pv = testing::reference;

TEST(Tutte, ReferenceValues) {
  EXPECT_EQ(tutte(testing::contra_full()), P(pv::contra_full::kTutte));
  EXPECT_EQ(tutte(complex_to_demimatroid(testing::casi_wheel_complex())),
            P(pv::casi_wheel::kTutte));
  EXPECT_EQ(tutte(complex_to_demimatroid(testing::casi_wheel_independence())),
            P(pv::independence::kTutte));
  EXPECT_EQ(tutte(testing::vamos()), P(pv::vamos::kTutte));
  EXPECT_EQ(tutte(complex_to_demimatroid(testing::projective_plane())),
            P(pv::projective_plane::kTutte));
  EXPECT_EQ(tutte(complex_to_demimatroid(testing::f_polynomial_complex())),
            P(pv::f_complex::kTutte));
  EXPECT_EQ(tutte(nullity_operator(testing::contra_full())), P(pv::contra_full::kNullityTutte));
  EXPECT_EQ(tutte(free_matroid(4)), P("x^4"));
}

TEST(Tutte, AgreesWithPointEvaluationOracle) {
  const RankTable m = testing::vamos();
  const LaurentPoly t = tutte(m);
  for (int a = -2; a <= 3; ++a) {
    for (int b = -1; b <= 2; ++b) {
      EXPECT_EQ(t.evaluate({Rational(a), Rational(b), 0, 0}),
                testing::tutte_at(m, Rational(a), Rational(b)));
    }
  }
}

TEST(Tutte, NegativeExponentsNeedWhitney) {
  const RankTable c = RankTable::from_values(1, {0, 2});
  EXPECT_THROW(tutte(c), UnsupportedSubstitution);
  EXPECT_EQ(whitney_f(c), P("x^2 + y^-1"));
  EXPECT_TRUE(tutte_dual_check(c));
}

TEST(Tutte, DualSwap) {
  EXPECT_TRUE(tutte_dual_check(testing::contraex()));
  EXPECT_TRUE(tutte_dual_check(free_matroid(3)));
  EXPECT_EQ(tutte(dual(free_matroid(3))), P("y^3"));
}

TEST(Tutte, DeletionContractionExample) {
  const RankTable m = testing::contra_full();
  const Minor del = deletion(m, element_bit(3));
  const Minor con = contraction(m, element_bit(3));
  EXPECT_EQ(tutte(del.table), P(pv::contra_full::kTutteDeletion));
  EXPECT_EQ(tutte(con.table), P(pv::contra_full::kTutteContraction));
  EXPECT_EQ(P("(x-1)") * tutte(del.table) + P("(y-1)") * tutte(con.table), tutte(m));
  EXPECT_EQ(tutte_recurrence(m, 3), tutte(m));
  EXPECT_EQ(tutte_by_deletion_contraction(m), tutte(m));
  EXPECT_EQ(tutte_recurrence(RankTable::from_values(1, {0, 1}), 1), P("x"));
  EXPECT_THROW(tutte_recurrence(m, 4), InvalidArgument);
}

TEST(Whitney, Examples) {
  // Every subset of a free matroid is independent: sum_A x^(3-|A|).
  EXPECT_EQ(whitney_f(free_matroid(3)), P("(1 + x)^3"));
  const RankTable m = testing::contraex();
  EXPECT_EQ(whitney_f(dual(m)), whitney_f(m).swap(Var::x, Var::y));
  const RankTable full = testing::contra_full();
  for (int p = 1; p <= 3; ++p) EXPECT_EQ(whitney_recurrence(full, p), whitney_f(full));
  EXPECT_EQ(whitney_f(full).substitute({{Var::x, P("x-1")}, {Var::y, P("y-1")}}), tutte(full));
}

TEST(Characteristic, Examples) {
  EXPECT_EQ(characteristic(uniform(1, 1)), P("t - 1"));
  EXPECT_EQ(characteristic(uniform(3, 1)), P("t - 1"));
  EXPECT_EQ(characteristic(trivial(1)), LaurentPoly());
  EXPECT_EQ(characteristic(uniform(3, 2)), P("t^2 - 3*t + 2"));
}

TEST(UniformClosedForm, MatchesSubsetSum) {
  EXPECT_EQ(tutte_uniform_closed_form(3, 1), P(pv::contra_full::kNullityTutte));
  EXPECT_EQ(tutte_uniform_closed_form(4, 2), P(pv::uniform_2_4::kTutte));
  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(tutte_uniform_closed_form(n, k), tutte(uniform(n, k))) << n << "," << k;
    }
  }
  EXPECT_THROW(tutte_uniform_closed_form(2, 3), InvalidArgument);
}

TEST(FPolynomial, ReferenceComplex) {
  const Complex d = testing::f_polynomial_complex();
  EXPECT_EQ(f_polynomial(d), P(pv::f_complex::kF));
  EXPECT_EQ(h_polynomial(d), P(pv::f_complex::kF).substitute({{Var::t, P("t - 1")}}));
  EXPECT_EQ(f_polynomial(Complex::empty_face(3)), LaurentPoly(1));
  EXPECT_EQ(f_polynomial(Complex::full_simplex(2)), P("t^2 + 2*t + 1"));
  EXPECT_THROW(f_polynomial(Complex::void_complex(2)), InvalidArgument);
}

}  // namespace
}  // namespace demikit
