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

#include "demikit/simplicial.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "demikit/codes.hpp"
#include "demikit/constructions.hpp"
#include "demikit/errors.hpp"
#include "demikit/hamming.hpp"
#include "demikit/ops.hpp"

namespace demikit {

namespace {

struct Overflow {};

// Checked int64 arithmetic for the fast Bareiss pass; any overflow in the
// intermediate products sends the whole elimination to big integers.
struct FastOps {
  using T = std::int64_t;
  static T step(T pivot, T a, T b, T c, T prev) {
    T left = 0;
    T right = 0;
    T num = 0;
    if (__builtin_mul_overflow(pivot, a, &left) || __builtin_mul_overflow(b, c, &right) ||
        __builtin_sub_overflow(left, right, &num)) {
      throw Overflow{};
    }
    return num / prev;
  }
};

struct BigOps {
  using T = Integer;
  static T step(const T& pivot, const T& a, const T& b, const T& c, const T& prev) {
    return (pivot * a - b * c) / prev;
  }
};

// Fraction-free Gaussian elimination; every division is exact.
template <typename Ops>
int bareiss_rank(std::vector<std::vector<typename Ops::T>> m) {
  using T = typename Ops::T;
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  T prev = 1;
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
    const T pivot = m[rank][c];
    for (int r = rank + 1; r < rows; ++r) {
      const T lead = m[r][c];
      for (int k = c + 1; k < cols; ++k) {
        m[r][k] = Ops::step(pivot, m[r][k], lead, m[rank][k], prev);
      }
      m[r][c] = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

int rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  for (auto& row : m) {
    for (auto& v : row) v = ((v % p) + p) % p;
  }
  auto inverse = [p](std::int64_t a) {
    std::int64_t result = 1;
    std::int64_t e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return result;
  };
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
    const std::int64_t inv = inverse(m[rank][c]);
    for (int r = rank + 1; r < rows; ++r) {
      const std::int64_t factor = m[r][c] * inv % p;
      if (factor == 0) continue;
      for (int k = c; k < cols; ++k) {
        m[r][k] = ((m[r][k] - factor * m[rank][k]) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

// Faces grouped by cardinality: by_size[c] lists faces with c elements.
std::vector<std::vector<Mask>> faces_by_size(const Complex& delta) {
  std::vector<std::vector<Mask>> by_size(delta.n() + 1);
  for (Mask f : delta.faces()) by_size[cardinality(f)].push_back(f);
  while (!by_size.empty() && by_size.back().empty()) by_size.pop_back();
  return by_size;
}

// Matrix of the boundary map from faces of size c to faces of size c - 1.
std::vector<std::vector<std::int64_t>> boundary(const std::vector<Mask>& lower,
                                                const std::vector<Mask>& upper) {
  std::vector<std::vector<std::int64_t>> mat(lower.size(),
                                             std::vector<std::int64_t>(upper.size(), 0));
  for (std::size_t col = 0; col < upper.size(); ++col) {
    const Mask face = upper[col];
    int position = 0;
    for (Mask rest = face; rest != 0; rest &= rest - 1) {
      const Mask bit = rest & (~rest + 1);
      const Mask sub = face & ~bit;
      const auto it = std::lower_bound(lower.begin(), lower.end(), sub);
      mat[it - lower.begin()][col] = position % 2 ? -1 : 1;
      ++position;
    }
  }
  return mat;
}

std::int64_t face_count_alternating_sum(const Complex& delta) {
  const std::vector<std::int64_t> counts = delta.face_counts();
  std::int64_t chi = 0;
  for (std::size_t c = 0; c < counts.size(); ++c) chi += (c % 2 ? 1 : -1) * counts[c];
  return chi;
}

}  // namespace

FieldSpec FieldSpec::prime(int p) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q" || text == "0") return rationals();
  int p = 0;
  for (char c : text) {
    if (c < '0' || c > '9' || p > 100'000'000) {
      throw InvalidArgument("unknown field \"" + std::string(text) + "\"; use Q or a prime");
    }
    p = p * 10 + (c - '0');
  }
  if (text.empty()) throw InvalidArgument("empty field name");
  return prime(p);
}

std::string FieldSpec::name() const { return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")"; }

int matrix_rank(std::vector<std::vector<std::int64_t>> rows, FieldSpec field) {
  for (const auto& row : rows) {
    if (row.size() != rows[0].size()) throw MalformedInput("ragged matrix");
  }
  if (!field.is_rational()) return rank_mod_p(std::move(rows), field.characteristic());
  try {
    return bareiss_rank<FastOps>(rows);
  } catch (const Overflow&) {
    std::vector<std::vector<Integer>> big;
    for (const auto& row : rows) big.emplace_back(row.begin(), row.end());
    return bareiss_rank<BigOps>(std::move(big));
  }
}

std::vector<int> reduced_homology_dims(const Complex& delta, FieldSpec field) {
  if (delta.is_void()) return {};
  const auto by_size = faces_by_size(delta);
  const int sizes = static_cast<int>(by_size.size());
  // ranks[c] = rank of the boundary from size c to size c - 1 (0 for c = 0).
  std::vector<int> ranks(sizes + 1, 0);
  for (int c = 1; c < sizes; ++c) {
    ranks[c] = matrix_rank(boundary(by_size[c - 1], by_size[c]), field);
  }
  std::vector<int> dims(sizes);
  for (int c = 0; c < sizes; ++c) {
    dims[c] = static_cast<int>(by_size[c].size()) - ranks[c] - ranks[c + 1];
  }
  return dims;
}

std::int64_t BettiTable::at(int i, int j) const {
  auto it = beta.find({i, j});
  return it == beta.end() ? 0 : it->second;
}

LaurentPoly BettiTable::polynomial() const {
  LaurentPoly b;
  for (const auto& [key, value] : beta) b.add_term({key.first, key.second, 0, 0}, Rational(value));
  return b;
}

BettiTable hochster_betti(const Complex& delta, FieldSpec field, const Limits& limits) {
  if (delta.n() > limits.max_homology) {
    throw InvalidArgument("homology is capped at " + std::to_string(limits.max_homology) +
                          " vertices; got " + std::to_string(delta.n()));
  }
  if (delta.is_void()) throw InvalidArgument("the void complex has no Stanley-Reisner ring");
  BettiTable table;
  for (std::size_t s = 0; s < (std::size_t{1} << delta.n()); ++s) {
    const Mask sigma = static_cast<Mask>(s);
    const int j = cardinality(sigma);
    const std::vector<int> dims = reduced_homology_dims(delta.restrict_to(sigma), field);
    for (std::size_t k = 0; k < dims.size(); ++k) {
      if (dims[k] == 0) continue;
      const int degree = static_cast<int>(k) - 1;
      table.beta[{j - degree - 1, j}] += dims[k];
    }
  }
  return table;
}

std::int64_t hochster_betti_multigraded(const Complex& delta, Mask sigma, int i, FieldSpec field) {
  const std::vector<int> dims = reduced_homology_dims(delta.restrict_to(sigma), field);
  const int index = cardinality(sigma) - i;  // degree |sigma| - i - 1, shifted by one
  if (index < 0 || index >= static_cast<int>(dims.size())) return 0;
  return dims[index];
}

std::int64_t euler_characteristic(const Complex& delta, FieldSpec field) {
  if (delta.is_void()) throw InvalidArgument("Euler characteristic of the void complex");
  const std::vector<int> dims = reduced_homology_dims(delta, field);
  std::int64_t by_homology = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) by_homology += (k % 2 ? 1 : -1) * dims[k];
  const std::int64_t by_faces = face_count_alternating_sum(delta);
  if (by_homology != by_faces) {
    throw InvariantViolation("Euler characteristic " + std::to_string(by_homology) +
                             " from homology but " + std::to_string(by_faces) + " from faces");
  }
  return by_faces;
}

std::vector<Mask> stanley_reisner_generators(const Complex& delta) {
  std::vector<Mask> out;
  for (std::size_t s = 0; s < (std::size_t{1} << delta.n()); ++s) {
    const Mask x = static_cast<Mask>(s);
    if (delta.contains(x)) continue;
    bool minimal = true;
    for (Mask rest = x; rest != 0 && minimal; rest &= rest - 1) {
      minimal = delta.contains(x & ~(rest & (~rest + 1)));
    }
    if (minimal) out.push_back(x);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](Mask a, Mask b) { return cardinality(a) < cardinality(b); });
  return out;
}

std::vector<BettiTable> betti_of_elongations(const RankTable& m, FieldSpec field,
                                             const Limits& limits) {
  require_demimatroid(m, "Betti numbers of elongations");
  std::vector<BettiTable> tables;
  for (const RankTable& e : elongations(m)) {
    tables.push_back(hochster_betti(independence_complex(e), field, limits));
  }
  return tables;
}

LaurentPoly w_from_betti(const std::vector<BettiTable>& tables, int n) {
  LaurentPoly w;
  for (std::size_t r = 0; r < tables.size(); ++r) {
    const int tr = static_cast<int>(r);
    for (const auto& [key, value] : tables[r].beta) {
      const auto [i, j] = key;
      w.add_term({n - j, j, tr, 0}, Rational(i % 2 ? -value : value));
    }
    if (r == 0) continue;
    for (const auto& [key, value] : tables[r - 1].beta) {
      const auto [i, j] = key;
      w.add_term({n - j, j, tr, 0}, Rational(i % 2 ? value : -value));
    }
  }
  return w;
}

LaurentPoly w_via_betti(const RankTable& m, FieldSpec field, const Limits& limits) {
  const LaurentPoly w = w_from_betti(betti_of_elongations(m, field, limits), m.n());
  const LaurentPoly expected = hamming_subset_sum(m);
  if (w == expected) return w;
  const int n = m.n();
  for (int r = 0; r <= m.total_nullity(); ++r) {
    for (int j = 0; j <= n; ++j) {
      const Exponents e{n - j, j, r, 0};
      if (w.coefficient(e) != expected.coefficient(e)) {
        throw InvariantViolation("Betti route differs from the subset sum at t^" +
                                 std::to_string(r) + " x^" + std::to_string(n - j) + " y^" +
                                 std::to_string(j));
      }
    }
  }
  throw InvariantViolation("Betti route differs from the subset sum: " + w.str() + " vs " +
                           expected.str());
}

}  // namespace demikit
