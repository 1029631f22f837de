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

#include <map>
#include <utility>

#include "demikit/complex.hpp"
#include "demikit/poly.hpp"
#include "demikit/rank_table.hpp"

namespace demikit {

// Number of subsets A with (rho(E) - rho(A), |A| - rho(A)) = key.
std::map<std::pair<int, int>, Integer> corank_nullity_counts(const RankTable& m);

// f(M; x, y) = sum_A x^(rho(E)-rho(A)) y^(|A|-rho(A)). Laurent for
// combinatroids whose ranks leave [0, |X|].
LaurentPoly whitney_f(const RankTable& m);

// T_M(x, y) = sum_A (x-1)^(rho(E)-rho(A)) (y-1)^(|A|-rho(A)). Throws
// UnsupportedSubstitution when an exponent is negative: (x-1)^-1 is not a
// Laurent polynomial. whitney_f covers that case.
LaurentPoly tutte(const RankTable& m);

// T_{M*}(x, y) == T_M(y, x); compares Whitney functions when T itself is not
// a Laurent polynomial.
bool tutte_dual_check(const RankTable& m);

// One deletion-contraction step on the 1-based element p:
// (x-1)^eta*(p) T_{M\p} + (y-1)^(1-rho(p)) T_{M/p}.
LaurentPoly tutte_recurrence(const RankTable& m, int p);

// T by recursing deletion-contraction down to the empty ground set.
LaurentPoly tutte_by_deletion_contraction(const RankTable& m);

// x^eta*(p) f(M\p) + y^(1-rho(p)) f(M/p).
LaurentPoly whitney_recurrence(const RankTable& m, int p);

// p(M; t) = sum_X (-1)^|X| t^(rho(E)-rho(X)), checked against
// (-1)^rho(E) T_M(1-t, 0). Requires a demimatroid.
LaurentPoly characteristic(const RankTable& m);

// Closed form of T for the uniform matroid U(k, n).
LaurentPoly tutte_uniform_closed_form(int n, int k);

// f(Delta, t) = sum_i f_i t^(d+1-i) where f_i counts faces of cardinality i
// (f_0 = 1 for the empty face). Checked against T_{Delta-up}(t+1, 1).
LaurentPoly f_polynomial(const Complex& delta);
// h(Delta, t) = f(Delta, t - 1).
LaurentPoly h_polynomial(const Complex& delta);

}  // namespace demikit
