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

// Slow, independent reference implementations used only by tests. They work
// straight from definitions and share no code paths with the library beyond
// the RankTable/Complex/PrimeMatrix containers.

#include <cstdint>
#include <vector>

#include "demikit/codes.hpp"
#include "demikit/complex.hpp"
#include "demikit/poly.hpp"
#include "demikit/rank_table.hpp"

namespace demikit::testing {

// b^e for any integer e; b must be nonzero when e < 0.
Rational rational_pow(const Rational& b, int e);

// sum_A (x-1)^(rho(E)-rho(A)) (y-1)^(|A|-rho(A)) evaluated at a point.
Rational tutte_at(const RankTable& m, const Rational& x, const Rational& y);

// (x-y)^eta(E) y^rho(E) T(x/y, (x+(t-1)y)/(x-y)) evaluated at a point with
// y != 0 and x != y.
Rational hamming_at(const RankTable& m, const Rational& x, const Rational& y,
                    const Rational& t);

// Pairwise checks of every axiom.
bool naive_is_demimatroid(const RankTable& m);
bool naive_is_submodular(const RankTable& m);

// Rank of a rational matrix by plain Gaussian elimination over fractions;
// p > 0 reduces entries mod p and eliminates over F_p instead.
int naive_rank(std::vector<std::vector<Rational>> rows, int p = 0);

// dim H~_i for i = -1..dim, from boundary matrices built independently.
std::vector<int> naive_reduced_homology(const Complex& delta, int p);

// Hochster's formula evaluated with naive_reduced_homology.
LaurentPoly naive_betti_polynomial(const Complex& delta, int p);

// All codewords of ker H.
std::vector<std::vector<int>> codewords(const PrimeMatrix& h);

// d_r(C) = min{|S| : the subcode supported inside S has at least p^r words}.
int naive_ghw(const PrimeMatrix& h, int r);

// sum_{c in C} x^(n-wt c) y^(wt c).
LaurentPoly code_weight_enumerator(const PrimeMatrix& h);

// sum over r-dimensional subcodes D of x^(n-|supp D|) y^|supp D|, by
// enumerating ordered bases.
LaurentPoly code_generalized_enumerator(const PrimeMatrix& h, int r);

// Number of r-dimensional subspaces of F_p^m, counted from ordered
// independent r-tuples of vectors.
std::int64_t count_subspaces(int p, int m, int r);

}  // namespace demikit::testing
