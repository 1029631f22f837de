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

#include "demikit/weights.hpp"

#include <algorithm>
#include <cstddef>
#include <set>

#include "demikit/errors.hpp"
#include "demikit/ops.hpp"

namespace demikit {

namespace {

// Smallest |X| with f(X) = r, or -1 when no such X exists.
template <typename F>
int min_size_at(int n, int r, F&& f) {
  int best = -1;
  for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) {
    const Mask x = static_cast<Mask>(i);
    if (f(x) == r && (best < 0 || cardinality(x) < best)) best = cardinality(x);
  }
  return best;
}

template <typename F>
int max_size_at(int n, int r, F&& f) {
  int best = -1;
  for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) {
    const Mask x = static_cast<Mask>(i);
    if (f(x) == r) best = std::max(best, cardinality(x));
  }
  return best;
}

}  // namespace

WeiProfile wei_hierarchy(const RankTable& m) {
  require_demimatroid(m, "Wei hierarchy");
  WeiProfile w;
  w.n = m.n();
  w.k = m.total_rank();
  w.lower.assign(w.k, -1);
  w.upper.assign(w.k + 1, -1);
  for (Mask x = 0; x < m.size(); ++x) {
    const int r = m(x);
    const int size = cardinality(x);
    if (r >= 1 && (w.lower[r - 1] < 0 || size < w.lower[r - 1])) w.lower[r - 1] = size;
    w.upper[r] = std::max(w.upper[r], size);
  }
  return w;
}

bool singleton_bounds_hold(const WeiProfile& w) {
  for (int r = 1; r <= w.k; ++r) {
    if (w.k + w.lower[r - 1] > w.n + r) return false;
  }
  for (int r = 0; r <= w.k; ++r) {
    if (w.k + w.upper[r] > w.n + r) return false;
  }
  return true;
}

WeiDualityReport check_wei_duality(const RankTable& m) {
  const WeiProfile w = wei_hierarchy(m);
  const WeiProfile wd = wei_hierarchy(dual(m));
  const int n = w.n;

  WeiDualityReport report;
  std::set<int> lower_lhs(w.lower.begin(), w.lower.end());
  std::set<int> lower_rhs;
  for (int e = 1; e <= n; ++e) lower_rhs.insert(e);
  for (int d : wd.lower) lower_rhs.erase(n + 1 - d);
  report.lower = lower_lhs == lower_rhs && static_cast<int>(w.lower.size()) == w.k;

  std::set<int> upper_lhs;
  for (int r = 0; r < w.k; ++r) upper_lhs.insert(w.upper[r] + 1);
  std::set<int> upper_rhs;
  for (int e = 1; e <= n; ++e) upper_rhs.insert(e);
  for (int s = 0; s < wd.k; ++s) upper_rhs.erase(n - wd.upper[s]);
  report.upper = upper_lhs == upper_rhs;
  return report;
}

bool is_full(const RankTable& m) {
  require_demimatroid(m, "fullness test");
  const int n = m.n();
  const int k = m.total_rank();
  if (k == 0) return false;
  const WeiProfile w = wei_hierarchy(m);
  if (w.lower[0] != n - k + 1) return false;

  const RankTable d = dual(m);
  const RankTable nu = nullity_operator(m);
  const RankTable sup = supplement(m);
  for (Mask x = 0; x < m.size(); ++x) {
    const int s = cardinality(x);
    const bool ok = m(x) == std::max(0, s - (n - k)) && d(x) == std::max(0, s - k) &&
                    nu(x) == std::min(s, n - k) && sup(x) == std::min(s, k);
    if (!ok) {
      throw InvariantViolation("full demimatroid breaks the closed form at " + subset_label(x));
    }
  }
  return true;
}

bool is_uniform_demimatroid(const RankTable& m) { return is_full(nullity_operator(m)); }

DistancePair elongation_distance_check(const RankTable& m, int r) {
  require_demimatroid(m, "elongation distance check");
  if (r < 0 || r >= m.total_nullity()) {
    throw InvalidArgument("r must lie in [0, eta(E))");
  }
  const int n = m.n();
  DistancePair pair;
  pair.nullity_side = min_size_at(n, r + 1, [&](Mask x) { return m.nullity(x); });
  const RankTable elongated = elongate(m, r);
  pair.elongation_side = min_size_at(n, 1, [&](Mask x) { return elongated.nullity(x); });
  return pair;
}

int nullity_corank_sum(const RankTable& m, int r) {
  require_demimatroid(m, "nullity/corank sum");
  if (r < 1 || r > m.total_nullity()) throw InvalidArgument("r must lie in [1, eta(E)]");
  const RankTable d = dual(m);
  const int a = min_size_at(m.n(), r, [&](Mask x) { return m.nullity(x); });
  const int b = max_size_at(m.n(), r, [&](Mask y) { return d.total_rank() - d(y); });
  return a + b;
}

std::vector<int> generalized_hamming_weights(const RankTable& m) {
  return wei_hierarchy(nullity_operator(m)).lower;
}

}  // namespace demikit
