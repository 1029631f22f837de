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

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "demikit/complex.hpp"
#include "demikit/poly.hpp"
#include "demikit/rank_table.hpp"

namespace demikit {

// Coefficient field for homology: the rationals or F_p.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(0); }
  // Throws InvalidArgument unless p is prime.
  static FieldSpec prime(int p);
  // "Q", "0" or a prime such as "2".
  static FieldSpec parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  int characteristic() const { return p_; }
  std::string name() const;

  friend bool operator==(FieldSpec, FieldSpec) = default;

 private:
  explicit FieldSpec(int p) : p_(p) {}
  int p_;
};

// dims[i + 1] = dim H~_i(Delta; K) for i = -1..dim Delta. Empty for the void
// complex; {1} for {empty}.
std::vector<int> reduced_homology_dims(const Complex& delta, FieldSpec field);

// Rank of a dense integer matrix over K (boundary matrices have entries in
// {-1, 0, 1}). Over Q uses fraction-free elimination and never rounds.
int matrix_rank(std::vector<std::vector<std::int64_t>> rows, FieldSpec field);

// Graded Betti numbers beta_{i,j} of K[Delta].
struct BettiTable {
  std::map<std::pair<int, int>, std::int64_t> beta;

  std::int64_t at(int i, int j) const;
  // B(x, y) = sum beta_{ij} x^i y^j.
  LaurentPoly polynomial() const;
  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

// beta_{ij} = sum_{|sigma| = j} dim H~_{j-i-1}(Delta_sigma; K). Requires
// n <= limits.max_homology.
BettiTable hochster_betti(const Complex& delta, FieldSpec field,
                          const Limits& limits = {});

// beta_{i,sigma} = dim H~_{|sigma|-i-1}(Delta_sigma; K).
std::int64_t hochster_betti_multigraded(const Complex& delta, Mask sigma, int i,
                                        FieldSpec field);

// Reduced Euler characteristic, by homology and by -1 + f_0 - f_1 + ...;
// throws InvariantViolation if they differ. Requires a nonvoid complex.
std::int64_t euler_characteristic(const Complex& delta, FieldSpec field);

// Inclusion-minimal non-faces: the squarefree generators of I_Delta.
std::vector<Mask> stanley_reisner_generators(const Complex& delta);

// Betti tables of the independence complexes of M[0], ..., M[eta(E)].
std::vector<BettiTable> betti_of_elongations(const RankTable& m, FieldSpec field,
                                             const Limits& limits = {});

// x^n sum_r (B_{M[r]}(-1, y/x) - B_{M[r-1]}(-1, y/x)) t^r with B_{M[-1]} = 0.
LaurentPoly w_from_betti(const std::vector<BettiTable>& tables, int n);

// The Betti route to W_M. Throws InvariantViolation naming the first
// differing (r, j) when it disagrees with the subset sum.
LaurentPoly w_via_betti(const RankTable& m, FieldSpec field = FieldSpec::rationals(),
                        const Limits& limits = {});

}  // namespace demikit
