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

#include <optional>
#include <string>
#include <vector>

#include "demikit/codes.hpp"
#include "demikit/complex.hpp"
#include "demikit/rank_table.hpp"
#include "demikit/simplicial.hpp"
#include "json.hpp"

namespace demikit::cli {

using Json = nlohmann::ordered_json;

// A parsed input file. Every form is turned into a rank table; complexes and
// matrices are kept when the input supplied one.
struct Input {
  std::string construction;  // rank_table, bases, facets, nonfaces, graph, wei, code
  RankTable table;
  std::optional<Complex> complex;
  std::optional<PrimeMatrix> matrix;
};

// Accepted forms, optionally wrapped as {"input": {...}}:
//   {"n": 3, "ranks": [...]}           ranks in mask order
//   {"n": 4, "bases": [[1,2], ...]}    matroid bases
//   {"n": 5, "facets": [[1,2], ...]}   complex, turned into Delta-up
//   {"n": 5, "nonfaces": [[1,2], ...]} complex by minimal non-faces
//   {"n": 6, "edges": [[1,2], ...]}    graph demimatroid
//   {"n": 3, "d": [2, 3]}              demimatroid from Wei numbers
//   {"p": 2, "rows": [[...], ...]}     parity matroid M[H]
// Throws MalformedInput on anything else.
Input parse_input(const Json& j);
Input read_input(const std::string& path);

// Subsets as sorted 1-based element lists.
Json subset_json(Mask m);
Mask subset_from_json(const Json& j, int n);

// {"n", "ranks", "kind"}; parse_input reads it back.
Json table_json(const RankTable& m);
// Graded Betti numbers keyed "i,j".
Json betti_json(const BettiTable& b);
Json int_list(const std::vector<int>& v);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace demikit::cli
