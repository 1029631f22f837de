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

#include "demikit/codes.hpp"

#include <algorithm>
#include <string>

#include "demikit/errors.hpp"
#include "demikit/weights.hpp"

namespace demikit {

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = a;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// In-place reduced row echelon form; returns the pivot column of each
// nonzero row, in order.
std::vector<int> reduce(std::vector<std::vector<std::uint32_t>>& m, std::uint32_t p, int cols) {
  std::vector<int> pivots;
  const int rows = static_cast<int>(m.size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot_row = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][c] != 0) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) continue;
    std::swap(m[rank], m[pivot_row]);
    const std::uint64_t inv = inverse_mod(m[rank][c], p);
    for (auto& v : m[rank]) v = static_cast<std::uint32_t>(v * inv % p);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const std::uint64_t factor = m[r][c];
      for (int k = 0; k < cols; ++k) {
        m[r][k] = static_cast<std::uint32_t>((m[r][k] + (p - factor) * m[rank][k]) % p);
      }
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

}  // namespace

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

PrimeMatrix::PrimeMatrix(int p, int rows, int cols) : p_(p), rows_(rows), cols_(cols) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (p > 65521) throw InvalidArgument("primes above 65521 are not supported");
  if (rows < 0 || cols < 0) throw InvalidArgument("negative matrix dimension");
  data_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

PrimeMatrix PrimeMatrix::from_rows(int p, const std::vector<std::vector<std::int64_t>>& rows) {
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  PrimeMatrix m(p, static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != cols) throw MalformedInput("ragged matrix rows");
    for (int c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void PrimeMatrix::set(int r, int c, std::int64_t v) {
  const std::int64_t reduced = ((v % p_) + p_) % p_;
  data_[static_cast<std::size_t>(r) * cols_ + c] = static_cast<std::uint32_t>(reduced);
}

int PrimeMatrix::rank() const { return column_rank(full_mask(cols_)); }

int PrimeMatrix::column_rank(Mask columns) const {
  std::vector<int> picked;
  for (int c = 0; c < cols_; ++c) {
    if (columns & (Mask{1} << c)) picked.push_back(c);
  }
  std::vector<std::vector<std::uint32_t>> m(rows_, std::vector<std::uint32_t>(picked.size()));
  for (int r = 0; r < rows_; ++r) {
    for (std::size_t i = 0; i < picked.size(); ++i) m[r][i] = at(r, picked[i]);
  }
  return static_cast<int>(reduce(m, p_, static_cast<int>(picked.size())).size());
}

PrimeMatrix PrimeMatrix::row_reduced() const {
  std::vector<std::vector<std::uint32_t>> m(rows_, std::vector<std::uint32_t>(cols_));
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) m[r][c] = at(r, c);
  }
  const int rank = static_cast<int>(reduce(m, p_, cols_).size());
  PrimeMatrix out(p_, rank, cols_);
  for (int r = 0; r < rank; ++r) {
    for (int c = 0; c < cols_; ++c) out.set(r, c, m[r][c]);
  }
  return out;
}

PrimeMatrix PrimeMatrix::null_space() const {
  std::vector<std::vector<std::uint32_t>> m(rows_, std::vector<std::uint32_t>(cols_));
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) m[r][c] = at(r, c);
  }
  const std::vector<int> pivots = reduce(m, p_, cols_);
  std::vector<int> free_cols;
  for (int c = 0; c < cols_; ++c) {
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_cols.push_back(c);
  }
  PrimeMatrix out(p_, static_cast<int>(free_cols.size()), cols_);
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    const int f = free_cols[i];
    out.set(static_cast<int>(i), f, 1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      out.set(static_cast<int>(i), pivots[r], -static_cast<std::int64_t>(m[r][f]));
    }
  }
  return out;
}

std::vector<std::vector<std::int64_t>> PrimeMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out[r][c] = at(r, c);
  }
  return out;
}

RankTable parity_matroid(const PrimeMatrix& h) {
  return RankTable::tabulate(h.cols(), [&](Mask x) { return h.column_rank(x); });
}

LinearCodeView LinearCodeView::from_parity_check(const PrimeMatrix& h) {
  return LinearCodeView(h.null_space(), h);
}

int code_ghw_bruteforce(const LinearCodeView& code, int r) {
  const int k = code.dimension();
  const int n = code.length();
  const std::uint64_t p = static_cast<std::uint64_t>(code.p());
  if (r < 1 || r > k) {
    throw InvalidArgument("r = " + std::to_string(r) + " outside [1, " + std::to_string(k) + "]");
  }
  std::uint64_t size = 1;
  for (int i = 0; i < k; ++i) {
    size *= p;
    if (size > kMaxCodeSize) throw InvalidArgument("code too large to enumerate (p^k > 2^20)");
  }

  const PrimeMatrix& g = code.generator();
  // Support of sum_j coeff[j] * g_j.
  auto support = [&](const std::vector<std::uint32_t>& coeff) {
    Mask s = 0;
    for (int c = 0; c < n; ++c) {
      std::uint64_t v = 0;
      for (int j = 0; j < k; ++j) v += static_cast<std::uint64_t>(coeff[j]) * g.at(j, c);
      if (v % p) s |= Mask{1} << c;
    }
    return s;
  };

  // Pivot column sets of r x k echelon forms, as increasing index lists.
  std::vector<std::vector<int>> pivot_sets;
  std::vector<int> combo(r);
  for (int i = 0; i < r; ++i) combo[i] = i;
  std::uint64_t total = 0;
  while (true) {
    // Free positions: row i, columns after combo[i] that are not pivots.
    int free_count = 0;
    for (int i = 0; i < r; ++i) free_count += (k - 1 - combo[i]) - (r - 1 - i);
    std::uint64_t count = 1;
    for (int f = 0; f < free_count && count <= kMaxCodeSize; ++f) count *= p;
    total += count;
    if (total > kMaxCodeSize) {
      throw InvalidArgument("too many subspaces to enumerate for r = " + std::to_string(r));
    }
    pivot_sets.push_back(combo);
    int i = r - 1;
    while (i >= 0 && combo[i] == k - r + i) --i;
    if (i < 0) break;
    ++combo[i];
    for (int j = i + 1; j < r; ++j) combo[j] = combo[j - 1] + 1;
  }

  int best = n + 1;
  for (const auto& pivots : pivot_sets) {
    std::vector<std::pair<int, int>> slots;  // (row, column) of free entries
    for (int i = 0; i < r; ++i) {
      for (int c = pivots[i] + 1; c < k; ++c) {
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) slots.emplace_back(i, c);
      }
    }
    std::vector<std::uint32_t> values(slots.size(), 0);
    while (true) {
      Mask s = 0;
      for (int i = 0; i < r; ++i) {
        std::vector<std::uint32_t> coeff(k, 0);
        coeff[pivots[i]] = 1;
        for (std::size_t f = 0; f < slots.size(); ++f) {
          if (slots[f].first == i) coeff[slots[f].second] = values[f];
        }
        s |= support(coeff);
      }
      best = std::min(best, cardinality(s));
      std::size_t f = 0;
      while (f < values.size() && ++values[f] == p) values[f++] = 0;
      if (f == values.size()) break;
    }
  }
  return best;
}

HierarchyComparison weight_hierarchy_agreement(const LinearCodeView& code) {
  HierarchyComparison out;
  for (int r = 1; r <= code.dimension(); ++r) out.code.push_back(code_ghw_bruteforce(code, r));
  out.matroid = generalized_hamming_weights(parity_matroid(code.parity_check()));
  return out;
}

PrimeMatrix random_row_equivalent(const PrimeMatrix& h, std::mt19937_64& rng) {
  auto rows = h.to_rows();
  const int m = h.rows();
  if (m == 0) return h;
  const std::int64_t p = h.p();
  std::uniform_int_distribution<int> pick_row(0, m - 1);
  std::uniform_int_distribution<std::int64_t> pick_scalar(1, p - 1);
  for (int step = 0; step < 4 * m * m + 4; ++step) {
    const int a = pick_row(rng);
    const int b = pick_row(rng);
    const std::int64_t s = pick_scalar(rng);
    if (a == b) {
      for (auto& v : rows[a]) v = v * s % p;
    } else {
      for (std::size_t c = 0; c < rows[a].size(); ++c) rows[a][c] = (rows[a][c] + s * rows[b][c]) % p;
    }
  }
  if (rng() % 2 && m > 1) std::swap(rows[0], rows[m - 1]);
  return PrimeMatrix::from_rows(static_cast<int>(p), rows);
}

}  // namespace demikit
