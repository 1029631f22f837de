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

#include <string>
#include <vector>

#include "demikit/complex.hpp"
#include "demikit/poly.hpp"
#include "demikit/rank_table.hpp"

namespace demikit {

// W_M(x, y, t) = sum_sigma (x-y)^(n-|sigma|) y^|sigma| t^eta(sigma).
LaurentPoly hamming_subset_sum(const RankTable& m);

// (x-y)^eta(M) y^rho(M) T_M(x/y, (x+(t-1)y)/(x-y)), expanded monomial by
// monomial of T so no fraction is ever formed.
// Requires a demimatroid; throws InvariantViolation if the result differs
// from the subset sum.
LaurentPoly hamming_via_tutte(const RankTable& m);

// P_{M,sigma}(t) = sum_{gamma in sigma} (-1)^|sigma\gamma| t^eta(gamma).
LaurentPoly p_sigma(const RankTable& m, Mask sigma);
// P_{M,j}(t) = sum_{|sigma| = j} P_{M,sigma}(t); P_{M,0} = 1.
LaurentPoly p_j(const RankTable& m, int j);
// sum_j P_{M,j}(t) x^(n-j) y^j.
LaurentPoly hamming_from_p(const RankTable& m);

// W_{M*}(x,y,t) = t^-eta(M) W_M(x + (t-1)y, x - y, t) applied to any W.
LaurentPoly macwilliams_transform(const LaurentPoly& w, int eta);

// W_{M*} via the MacWilliams transform of W_M, checked against the subset
// sum of dual(M). Requires a demimatroid.
LaurentPoly macwilliams(const RankTable& m);

// (x-1)^-eta(E) x^n W_M(1, x^-1, (x-1)(y-1)), checked against tutte(m).
LaurentPoly tutte_from_hamming(const RankTable& m);

// (x-y) W_{M\p} + t^(1-rho(p)) y W_{M/p} for the 1-based element p.
LaurentPoly hamming_recurrence(const RankTable& m, int p);

struct HammingCoefficients {
  int delta = 0;  // formal minimum distance d_1(M°)
  int c = 0;      // # subsets of size delta with nullity 1
  // a[j] = A_j(t) for j = 0..n; a[0] = 1 and a[j] = 0 for 0 < j < delta.
  std::vector<LaurentPoly> a;
};

// Reads A_j off W and checks P_{M,delta} = c(t-1); for uniform matroids also
// checks the closed form of A_i. Requires eta(E) >= 1.
HammingCoefficients a_coefficients(const RankTable& m);

// The closed form of A_i(t) for the uniform matroid U(k, n).
LaurentPoly uniform_a_closed_form(int n, int k, int i);

// W^(r)(x, y, t) = <r>_t^-1 sum_j [r, j]_t (-1)^(r-j) t^C(r-j, 2) W(x, y, t^j),
// with W the subset sum. Throws InexactDivision when <r>_t does not divide.
LaurentPoly generalized_w(const RankTable& m, int r);

// Same combination with W(x, y, t^j) taken from the Tutte route, the form
// the enumerator is defined by.
LaurentPoly generalized_w_from_tutte(const RankTable& m, int r);

struct ConjectureReport {
  bool supported = true;  // false when (x-1)^(n-k) does not divide the sum
  bool holds = false;
  LaurentPoly rhs;        // the recovered polynomial when supported
  LaurentPoly residual;   // rhs - T_M
  std::string note;
};

// T_M =? x^n (x-1)^(k-n) sum_{r=0}^{n-k} prod_{j<r}((x-1)(y-1) - t^j)
//        W^(r)(1, 1/x, t).
ConjectureReport conjecture_check(const RankTable& m);

// (t+1)^n t^-eta(E) W_{Delta-up}(1, (t+1)^-1, 0), the f-polynomial through
// the Hamming polynomial. Requires a nonvoid complex.
LaurentPoly f_polynomial_via_hamming(const Complex& delta);

}  // namespace demikit
