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
#include <string_view>
#include <vector>

#include "demikit/rank_table.hpp"

namespace demikit {

// rho*(X) = |X| + rho(E\X) - rho(E).
RankTable dual(const RankTable& m);
// rho°(X) = |X| - rho(X).
RankTable nullity_operator(const RankTable& m);
// rho◇(X) = rho(E) - rho(E\X).
RankTable supplement(const RankTable& m);

// The four duality operators. Encoded so that composition is XOR of the
// underlying values: they form the Klein four-group.
enum class Operator : unsigned { id = 0, dual = 1, nullity = 2, supplement = 3 };

inline constexpr std::array<Operator, 4> kOperators = {
    Operator::id, Operator::dual, Operator::nullity, Operator::supplement};

std::string_view to_string(Operator op);

RankTable apply(Operator op, const RankTable& m);

// Group-table entry for "apply a, then b".
constexpr Operator compose(Operator a, Operator b) {
  return static_cast<Operator>(static_cast<unsigned>(a) ^
                               static_cast<unsigned>(b));
}

// Applies a then b to m and confirms the table equals the group-table entry
// applied to m. Returns that entry; throws InvariantViolation otherwise.
Operator compose_check(Operator a, Operator b, const RankTable& m);

// A minor on E\A. Surviving elements are renumbered 1..n-|A| in increasing
// order; labels[i] is the original label of new element i+1.
struct Minor {
  RankTable table;
  std::vector<int> labels;
};

// M\A: rho restricted to E\A.
Minor deletion(const RankTable& m, Mask removed);
// M/A: rho(X u A) - rho(A).
Minor contraction(const RankTable& m, Mask removed);

// Pointwise max / min. Demimatroid inputs give demimatroids.
RankTable join(const RankTable& a, const RankTable& b);
RankTable meet(const RankTable& a, const RankTable& b);

// rho^[i](X) = min(|X|, rho(X) + i), for 0 <= i <= eta(E).
RankTable elongate(const RankTable& m, int i);

// M[0], ..., M[eta(E)].
std::vector<RankTable> elongations(const RankTable& m);

}  // namespace demikit
