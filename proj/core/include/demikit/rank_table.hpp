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

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "demikit/subset.hpp"

namespace demikit {

// Strongest structure a rank table certifies under validate().
enum class Kind { combinatroid, demimatroid, matroid };

std::string_view to_string(Kind kind);

// An integer-valued set function rho on 2^E with rho(empty) = 0, tabulated on
// all 2^n subsets and indexed by mask value. This single type carries
// combinatroids, demimatroids and matroids; which one a table is gets
// certified by validate().
class RankTable {
 public:
  // The combinatroid on the empty ground set.
  RankTable() : n_(0), ranks_{0} {}

  // Throws MalformedInput when ranks.size() != 2^n or ranks[0] != 0, and
  // InvalidArgument when n exceeds limits.max_ground.
  static RankTable from_values(int n, std::vector<int> ranks,
                               const Limits& limits = {});

  template <typename F>
  static RankTable tabulate(int n, F&& rank_of, const Limits& limits = {}) {
    check_ground_size(n, limits);
    std::vector<int> ranks(std::size_t{1} << n);
    for (Mask m = 0; m < ranks.size(); ++m) ranks[m] = rank_of(m);
    return from_values(n, std::move(ranks), limits);
  }

  int n() const { return n_; }
  Mask ground() const { return full_mask(n_); }
  std::size_t size() const { return ranks_.size(); }

  int rank(Mask m) const { return ranks_[m]; }
  int operator()(Mask m) const { return ranks_[m]; }
  int nullity(Mask m) const { return cardinality(m) - ranks_[m]; }

  // rho(E) and eta(E).
  int total_rank() const { return ranks_.back(); }
  int total_nullity() const { return n_ - ranks_.back(); }

  std::span<const int> values() const { return ranks_; }

  friend bool operator==(const RankTable&, const RankTable&) = default;

  static void check_ground_size(int n, const Limits& limits);

 private:
  RankTable(int n, std::vector<int> ranks) : n_(n), ranks_(std::move(ranks)) {}

  int n_;
  std::vector<int> ranks_;
};

// rho <= tau pointwise; throws InvalidArgument on mismatched ground sets.
bool pointwise_leq(const RankTable& a, const RankTable& b);

enum class Axiom {
  // (R1) lower half: rho(X) <= rho(X u x).
  monotone,
  // (R1) upper half: rho(X u x) <= rho(X) + 1.
  unit_step,
  // (R2) submodularity.
  submodular,
};

std::string_view to_string(Axiom axiom);

struct Violation {
  Axiom axiom;
  // For (R1): {X, X u x}. For (R2): {X u Y, X n Y, X, Y}.
  std::vector<Mask> witnesses;
  std::string detail;
};

struct ValidationReport {
  Kind kind = Kind::combinatroid;
  // First witness of each violated axiom, in axiom order. Empty exactly when
  // the table is a matroid.
  std::vector<Violation> violations;

  bool violates(Axiom axiom) const;
};

ValidationReport validate(const RankTable& m);

// Cheap (R1)-only check used as a precondition by most operations.
bool is_demimatroid(const RankTable& m);

// Throws InvalidArgument naming `operation` when m is not a demimatroid.
void require_demimatroid(const RankTable& m, std::string_view operation);

// Rank row in subsets_by_size() order, the layout of tabulated rank rows.
std::vector<int> ranks_by_size(const RankTable& m);

// Inverse of ranks_by_size().
RankTable from_ranks_by_size(int n, std::span<const int> row);

}  // namespace demikit
