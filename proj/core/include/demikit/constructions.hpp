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
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "demikit/complex.hpp"
#include "demikit/rank_table.hpp"

namespace demikit {

// rho == 0.
RankTable trivial(int n);
// rho(X) = |X|, the maximum demimatroid.
RankTable free_matroid(int n);

// rho(X) = max over bases B of |X n B|. The basis-exchange axiom is not
// checked; validate() certifies what the family actually gives.
RankTable from_matroid_bases(int n, std::span<const Mask> bases);

// rho(X) = min(|X|, k).
RankTable uniform(int n, int k);

// Delta-up: rho(X) = size of the largest face inside X.
RankTable complex_to_demimatroid(const Complex& delta);

// M-down: {X : rho(X) = |X|}. Requires a demimatroid.
Complex independence_complex(const RankTable& m);

// Delta-sharp: rho(X) = |X| on faces and |X| - 1 elsewhere.
RankTable sharp_demimatroid(const Complex& delta);

// M_(r) = {X : rho(X) <= r}. Requires a demimatroid.
Complex level_complex(const RankTable& m, int r);

// rho(empty) = 0, rho(X) = 1 for a nonempty independent vertex set, 2
// otherwise. Edges are 1-based pairs. The three-valued rule is applied as
// written even when the graph has isolated vertices, where it no longer
// coincides with Delta-up of the edge complex.
RankTable graph_demimatroid(int n, std::span<const std::pair<int, int>> edges);

// rho(X) = i when d_i <= |X| < d_{i+1} (d_0 = 0, d_{k+1} = n + 1), a
// demimatroid whose Wei numbers are exactly d.
RankTable from_wei_sequence(int n, std::span<const int> d);

struct GaloisItem {
  std::string name;
  bool passed = false;
  // Informational items describe M rather than a law; they do not affect
  // all_passed().
  bool informational = false;
};

struct GaloisReport {
  std::vector<GaloisItem> items;
  bool all_passed() const;
};

// Checks the Galois-connection laws between Delta-up and M-down on the pair.
GaloisReport galois_check(const Complex& delta, const RankTable& m);

// Uniformly chooses rho(X) from [max_x rho(X\x), min_x rho(X\x) + 1], in
// order of increasing |X|. The interval is never empty, so every draw is a
// demimatroid.
RankTable random_demimatroid(int n, std::mt19937_64& rng);

// rho(empty) = 0 and every other value uniform in [lo, hi].
RankTable random_combinatroid(int n, int lo, int hi, std::mt19937_64& rng);

}  // namespace demikit
