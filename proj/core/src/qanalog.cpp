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

#include <string>

namespace demikit {

LaurentPoly q_integer(int m, Var q) {
  if (m < 0) throw InvalidArgument("[m]_q needs m >= 0");
  LaurentPoly out;
  for (int i = 0; i < m; ++i) out += LaurentPoly::variable(q, i);
  return out;
}

LaurentPoly q_bracket_factorial(int m, Var q) {
  if (m < 0) throw InvalidArgument("[m]_q! needs m >= 0");
  LaurentPoly out(1);
  for (int i = 1; i <= m; ++i) out *= q_integer(i, q);
  return out;
}

LaurentPoly q_binomial(int m, int j, Var q) {
  if (m < 0 || j < 0 || j > m) throw InvalidArgument("q-binomial needs 0 <= j <= m");
  // Row by row of the q-Pascal triangle.
  std::vector<LaurentPoly> row{LaurentPoly(1)};
  for (int r = 1; r <= m; ++r) {
    std::vector<LaurentPoly> next(r + 1);
    next[0] = LaurentPoly(1);
    next[r] = LaurentPoly(1);
    for (int i = 1; i < r; ++i) next[i] = row[i] + LaurentPoly::variable(q, r - i) * row[i - 1];
    row = std::move(next);
  }
  return row[j];
}

LaurentPoly angle(int m, Var q) {
  if (m < 0) throw InvalidArgument("<m>_q needs m >= 0");
  LaurentPoly out(1);
  const LaurentPoly top = LaurentPoly::variable(q, m);
  for (int i = 0; i < m; ++i) out *= top - LaurentPoly::variable(q, i);
  return out;
}

}  // namespace demikit
