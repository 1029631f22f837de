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

#include "demikit/rank_table.hpp"

namespace demikit {

// Wei numbers of a demimatroid, by exhaustive subset scan.
struct WeiProfile {
  int n = 0;
  int k = 0;
  // d_1 < ... < d_k with d_r = min{|X| : rho(X) = r}. Empty when k = 0.
  std::vector<int> lower;
  // d^0 < ... < d^k with d^r = max{|X| : rho(X) = r}; d^k = n.
  std::vector<int> upper;
};

WeiProfile wei_hierarchy(const RankTable& m);

// Generalized Singleton bounds k + d_r <= n + r and k + d^r <= n + r.
bool singleton_bounds_hold(const WeiProfile& w);

struct WeiDualityReport {
  bool lower = false;
  bool upper = false;
  bool holds() const { return lower && upper; }
};

// {d_r(M)} = [n] \ {n + 1 - d_s(M*)} and
// {d^r(M) + 1 : r < k} = [n] \ {n - d^s(M*) : s < n - k}.
WeiDualityReport check_wei_duality(const RankTable& m);

// d_1(M) = n - k + 1. Also checks the closed forms a full demimatroid must
// have for rho, rho*, rho° and rho◇ and throws InvariantViolation if a full
// table breaks them. Trivial demimatroids are not full.
bool is_full(const RankTable& m);

// M° is full.
bool is_uniform_demimatroid(const RankTable& m);

struct DistancePair {
  int nullity_side = 0;     // d_{r+1}(M°)
  int elongation_side = 0;  // d_1(M[r]°)
  bool equal() const { return nullity_side == elongation_side; }
};

// Both sides of d_{r+1}(M°) = d_1(M[r]°), each by its own scan. Requires
// 0 <= r < eta(E).
DistancePair elongation_distance_check(const RankTable& m, int r);

// min{|X| : eta(X) = r} + max{|Y| : rho*(E) - rho*(Y) = r}; equals n for
// 1 <= r <= eta(E).
int nullity_corank_sum(const RankTable& m, int r);

// d_r(M°), the r-th generalized Hamming weight, r = 1..eta(E).
std::vector<int> generalized_hamming_weights(const RankTable& m);

}  // namespace demikit
