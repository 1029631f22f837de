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
#include <optional>
#include <string>
#include <vector>

#include "demikit/rank_table.hpp"
#include "demikit/simplicial.hpp"
#include "json_io.hpp"

namespace demikit::cli {

// Everything that determines a run; serialized into every report.
struct RunManifest {
  std::string command;
  std::string input;
  std::string construction;
  std::vector<std::string> invariants;
  std::string field = "Q";
  std::string output;
  std::optional<std::uint64_t> seed;
  std::optional<int> n;
  std::optional<int> samples;

  Json to_json() const;
};

inline const std::vector<std::string> kInvariantNames = {
    "tutte", "whitney", "hamming", "wei", "betti", "charpoly", "ghwe", "fpoly"};

// The invariants --all computes for this input: everything for
// demimatroids (fpoly only for complexes), the Whitney and Tutte functions
// otherwise.
std::vector<std::string> applicable_invariants(const Input& input);

// Report with one entry per requested invariant. Multi-route quantities
// carry an "agreement" object.
Json compute(const Input& input, const std::vector<std::string>& invariants, FieldSpec field);

struct VerifyResult {
  Json report;
  bool ok = false;
};

// Largest ground set the random identity battery accepts.
inline constexpr int kMaxVerifyN = 8;

// Runs every identity on `samples` random demimatroids on n elements.
VerifyResult verify_random(std::uint64_t seed, int n, int samples);

// Recomputes the "expected" block of every *.json file in dir and compares
// the values exactly.
VerifyResult verify_fixtures(const std::string& dir);

// The values an "expected" block asks for, computed from the input.
Json fixture_actual(const Input& input, const Json& expected);

// dual | nullity | supplement | delete | contract | elongate.
RankTable apply_op(const std::string& verb, const RankTable& m, Mask elements, int i);

}  // namespace demikit::cli
