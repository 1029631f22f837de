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
#include <utility>
#include <vector>

#include "demikit/rank_table.hpp"

namespace demikit {

bool is_prime(int p);

// Dense matrix over F_p; entries are kept reduced into [0, p).
class PrimeMatrix {
 public:
  PrimeMatrix(int p, int rows, int cols);
  // Entries may be any integers; they are reduced mod p. Throws
  // InvalidArgument for non-prime p and MalformedInput for ragged rows.
  static PrimeMatrix from_rows(int p, const std::vector<std::vector<std::int64_t>>& rows);

  int p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::uint32_t at(int r, int c) const { return data_[r * cols_ + c]; }
  void set(int r, int c, std::int64_t v);

  int rank() const;
  // rank(H_X): the submatrix of the columns in X (bit c-1 for column c).
  int column_rank(Mask columns) const;
  // Reduced row echelon form with zero rows dropped.
  PrimeMatrix row_reduced() const;
  // Basis of {v : H v = 0} as rows.
  PrimeMatrix null_space() const;

  std::vector<std::vector<std::int64_t>> to_rows() const;

  friend bool operator==(const PrimeMatrix&, const PrimeMatrix&) = default;

 private:
  int p_;
  int rows_;
  int cols_;
  std::vector<std::uint32_t> data_;
};

// M[H]: rho(X) = rank(H_X).
RankTable parity_matroid(const PrimeMatrix& h);

// A linear code C = ker H described by both matrices.
class LinearCodeView {
 public:
  static LinearCodeView from_parity_check(const PrimeMatrix& h);

  int p() const { return generator_.p(); }
  int length() const { return parity_check_.cols(); }
  int dimension() const { return generator_.rows(); }
  const PrimeMatrix& generator() const { return generator_; }
  const PrimeMatrix& parity_check() const { return parity_check_; }

 private:
  LinearCodeView(PrimeMatrix g, PrimeMatrix h)
      : generator_(std::move(g)), parity_check_(std::move(h)) {}
  PrimeMatrix generator_;
  PrimeMatrix parity_check_;
};

// Cap on p^k and on the number of subspaces one enumeration visits.
inline constexpr std::uint64_t kMaxCodeSize = std::uint64_t{1} << 20;

// d_r(C) = min |supp(D)| over r-dimensional subspaces D of C, by enumerating
// every reduced-row-echelon basis. Requires 1 <= r <= k, p^k <= 2^20 and at
// most 2^20 subspaces of dimension r.
int code_ghw_bruteforce(const LinearCodeView& code, int r);

struct HierarchyComparison {
  std::vector<int> code;     // d_1(C), ..., d_k(C)
  std::vector<int> matroid;  // d_1(M[H]°), ..., d_k(M[H]°)
  bool agree() const { return code == matroid; }
};

HierarchyComparison weight_hierarchy_agreement(const LinearCodeView& code);

// H with a random invertible row operation sequence applied; same row space.
PrimeMatrix random_row_equivalent(const PrimeMatrix& h, std::mt19937_64& rng);

}  // namespace demikit
