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

#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace demikit::testing {

namespace {

int popcount(Mask m) { return std::popcount(m); }

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Vectors of F_p^len indexed by their base-p digits.
std::vector<int> digits(std::int64_t index, int p, int len) {
  std::vector<int> v(len);
  for (int i = 0; i < len; ++i) {
    v[i] = static_cast<int>(index % p);
    index /= p;
  }
  return v;
}

int rank_of_vectors(const std::vector<std::vector<int>>& vs, int p) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& v : vs) rows.emplace_back(v.begin(), v.end());
  return naive_rank(rows, p);
}

Rational mod_inverse(const Rational& a, int p) {
  const long long v = static_cast<long long>(numerator(a)) % p;
  long long r = 1;
  long long b = (v + p) % p;
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return Rational(r);
}

Rational mod_reduce(const Rational& a, int p) {
  Integer v = numerator(a) % p;
  if (v < 0) v += p;
  return Rational(v);
}

}  // namespace

Rational rational_pow(const Rational& b, int e) {
  Rational r = 1;
  const Rational base = e < 0 ? Rational(1) / b : b;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
  return r;
}

Rational tutte_at(const RankTable& m, const Rational& x, const Rational& y) {
  Rational sum = 0;
  const int k = m.total_rank();
  for (Mask a = 0; a < m.size(); ++a) {
    sum += rational_pow(x - 1, k - m(a)) * rational_pow(y - 1, popcount(a) - m(a));
  }
  return sum;
}

Rational hamming_at(const RankTable& m, const Rational& x, const Rational& y,
                    const Rational& t) {
  const Rational tx = x / y;
  const Rational ty = (x + (t - 1) * y) / (x - y);
  return rational_pow(x - y, m.total_nullity()) * rational_pow(y, m.total_rank()) *
         tutte_at(m, tx, ty);
}

bool naive_is_demimatroid(const RankTable& m) {
  for (Mask a = 0; a < m.size(); ++a) {
    for (Mask b = 0; b < m.size(); ++b) {
      if ((a & b) != a) continue;
      const int diff = m(b) - m(a);
      if (diff < 0 || diff > popcount(b) - popcount(a)) return false;
    }
  }
  return true;
}

bool naive_is_submodular(const RankTable& m) {
  for (Mask a = 0; a < m.size(); ++a) {
    for (Mask b = 0; b < m.size(); ++b) {
      if (m(a | b) + m(a & b) > m(a) + m(b)) return false;
    }
  }
  return true;
}

int naive_rank(std::vector<std::vector<Rational>> rows, int p) {
  if (rows.empty()) return 0;
  if (p > 0) {
    for (auto& row : rows) {
      for (auto& v : row) v = mod_reduce(v, p);
    }
  }
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const Rational inv = p > 0 ? mod_inverse(rows[r][c], p) : Rational(1) / rows[r][c];
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational f = rows[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j) {
        rows[i][j] -= f * rows[r][j];
        if (p > 0) rows[i][j] = mod_reduce(rows[i][j], p);
      }
    }
    ++r;
  }
  return static_cast<int>(r);
}

std::vector<int> naive_reduced_homology(const Complex& delta, int p) {
  if (delta.is_void()) return {};
  // Faces grouped by cardinality, each list sorted by mask value.
  std::map<int, std::vector<Mask>> by_size;
  for (Mask f = 0; f < (Mask{1} << delta.n()); ++f) {
    if (delta.contains(f)) by_size[popcount(f)].push_back(f);
  }
  const int top = by_size.rbegin()->first;
  // rank of the boundary map from size s faces to size s-1 faces.
  std::vector<int> rank(top + 2, 0);
  for (int s = 1; s <= top; ++s) {
    const auto& lower = by_size[s - 1];
    const auto& upper = by_size[s];
    std::vector<std::vector<Rational>> mat(lower.size(),
                                           std::vector<Rational>(upper.size(), 0));
    for (std::size_t j = 0; j < upper.size(); ++j) {
      int pos = 0;
      for (int v = 0; v < delta.n(); ++v) {
        if (!(upper[j] >> v & 1)) continue;
        const Mask face = upper[j] & ~(Mask{1} << v);
        const auto it = std::lower_bound(lower.begin(), lower.end(), face);
        mat[it - lower.begin()][j] = pos % 2 == 0 ? 1 : -1;
        ++pos;
      }
    }
    rank[s] = naive_rank(mat, p);
  }
  std::vector<int> dims;
  for (int s = 0; s <= top; ++s) {
    const int faces = static_cast<int>(by_size[s].size());
    dims.push_back(faces - rank[s] - rank[s + 1]);
  }
  return dims;
}

LaurentPoly naive_betti_polynomial(const Complex& delta, int p) {
  std::map<std::pair<int, int>, int> beta;
  for (Mask sigma = 0; sigma < (Mask{1} << delta.n()); ++sigma) {
    std::vector<Mask> faces;
    for (Mask f = 0; f < (Mask{1} << delta.n()); ++f) {
      if ((f & sigma) == f && delta.contains(f)) faces.push_back(f);
    }
    const Complex restricted = Complex::from_faces(delta.n(), faces);
    const auto dims = naive_reduced_homology(restricted, p);
    const int j = popcount(sigma);
    for (std::size_t d = 0; d < dims.size(); ++d) {
      // dims[d] is H~ in dimension d-1; i = j - (d-1) - 1.
      const int i = j - static_cast<int>(d);
      if (dims[d] != 0) beta[{i, j}] += dims[d];
    }
  }
  LaurentPoly b;
  for (const auto& [ij, v] : beta) {
    b.add_term({ij.first, ij.second, 0, 0}, Rational(v));
  }
  return b;
}

std::vector<std::vector<int>> codewords(const PrimeMatrix& h) {
  const int p = h.p();
  const int n = h.cols();
  std::vector<std::vector<int>> words;
  const std::int64_t total = ipow(p, n);
  for (std::int64_t idx = 0; idx < total; ++idx) {
    const auto v = digits(idx, p, n);
    bool ok = true;
    for (int r = 0; r < h.rows() && ok; ++r) {
      std::int64_t s = 0;
      for (int c = 0; c < n; ++c) s += static_cast<std::int64_t>(h.at(r, c)) * v[c];
      ok = s % p == 0;
    }
    if (ok) words.push_back(v);
  }
  return words;
}

int naive_ghw(const PrimeMatrix& h, int r) {
  const auto words = codewords(h);
  const int n = h.cols();
  const std::int64_t need = ipow(h.p(), r);
  int best = -1;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    std::int64_t inside = 0;
    for (const auto& w : words) {
      bool fits = true;
      for (int c = 0; c < n; ++c) fits = fits && (w[c] == 0 || (s >> c & 1));
      if (fits) ++inside;
    }
    if (inside >= need && (best < 0 || popcount(s) < best)) best = popcount(s);
  }
  return best;
}

LaurentPoly code_weight_enumerator(const PrimeMatrix& h) {
  LaurentPoly w;
  const int n = h.cols();
  for (const auto& c : codewords(h)) {
    int wt = 0;
    for (int v : c) wt += v != 0;
    w.add_term({n - wt, wt, 0, 0}, 1);
  }
  return w;
}

LaurentPoly code_generalized_enumerator(const PrimeMatrix& h, int r) {
  const int n = h.cols();
  const int p = h.p();
  if (r == 0) return LaurentPoly::variable(Var::x, n);
  const auto words = codewords(h);
  std::map<int, std::int64_t> ordered;  // support size -> ordered bases
  std::vector<std::size_t> pick(r, 0);
  const std::size_t count = words.size();
  while (true) {
    std::vector<std::vector<int>> basis;
    for (std::size_t i : pick) basis.push_back(words[i]);
    if (rank_of_vectors(basis, p) == r) {
      int support = 0;
      for (int c = 0; c < n; ++c) {
        bool any = false;
        for (const auto& b : basis) any = any || b[c] != 0;
        support += any;
      }
      ++ordered[support];
    }
    int pos = 0;
    while (pos < r && ++pick[pos] == count) pick[pos++] = 0;
    if (pos == r) break;
  }
  std::int64_t bases = 1;
  for (int i = 0; i < r; ++i) bases *= ipow(p, r) - ipow(p, i);
  LaurentPoly w;
  for (const auto& [support, k] : ordered) {
    w.add_term({n - support, support, 0, 0}, Rational(k, bases));
  }
  return w;
}

std::int64_t count_subspaces(int p, int m, int r) {
  const std::int64_t vectors = ipow(p, m);
  std::int64_t ordered = 0;
  std::vector<std::int64_t> pick(r, 0);
  while (true) {
    std::vector<std::vector<int>> vs;
    for (auto i : pick) vs.push_back(digits(i, p, m));
    if (rank_of_vectors(vs, p) == r) ++ordered;
    int pos = 0;
    while (pos < r && ++pick[pos] == vectors) pick[pos++] = 0;
    if (pos == r) break;
  }
  std::int64_t bases = 1;
  for (int i = 0; i < r; ++i) bases *= ipow(p, r) - ipow(p, i);
  return ordered / bases;
}

}  // namespace demikit::testing
