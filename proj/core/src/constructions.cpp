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

#include "demikit/constructions.hpp"

#include <algorithm>
#include <string>

#include "demikit/errors.hpp"

namespace demikit {

namespace {

void require_nonvoid(const Complex& delta, std::string_view what) {
  if (delta.is_void()) {
    throw InvalidArgument(std::string(what) + " is undefined for the void complex");
  }
}

}  // namespace

RankTable trivial(int n) {
  return RankTable::tabulate(n, [](Mask) { return 0; });
}

RankTable free_matroid(int n) {
  return RankTable::tabulate(n, [](Mask m) { return cardinality(m); });
}

RankTable from_matroid_bases(int n, std::span<const Mask> bases) {
  if (bases.empty()) throw InvalidArgument("a matroid needs at least one basis");
  for (Mask b : bases) check_mask(b, n);
  return RankTable::tabulate(n, [&](Mask m) {
    int best = 0;
    for (Mask b : bases) best = std::max(best, cardinality(m & b));
    return best;
  });
}

RankTable uniform(int n, int k) {
  if (k < 0 || k > n) {
    throw InvalidArgument("uniform rank " + std::to_string(k) + " outside [0, " +
                          std::to_string(n) + "]");
  }
  return RankTable::tabulate(n, [k](Mask m) { return std::min(cardinality(m), k); });
}

RankTable complex_to_demimatroid(const Complex& delta) {
  require_nonvoid(delta, "Delta-up");
  // rho(X) = max(contains(X) ? |X| : 0, max_x rho(X\x)), filled by mask order.
  const int n = delta.n();
  std::vector<int> ranks(std::size_t{1} << n, 0);
  for (std::size_t m = 1; m < ranks.size(); ++m) {
    const Mask x = static_cast<Mask>(m);
    if (delta.contains(x)) {
      ranks[m] = cardinality(x);
      continue;
    }
    int best = 0;
    for (Mask rest = x; rest != 0; rest &= rest - 1) {
      best = std::max(best, ranks[x & ~(rest & (~rest + 1))]);
    }
    ranks[m] = best;
  }
  return RankTable::from_values(n, std::move(ranks));
}

Complex independence_complex(const RankTable& m) {
  require_demimatroid(m, "M-down");
  return Complex::from_predicate(m.n(), [&](Mask x) { return m(x) == cardinality(x); });
}

RankTable sharp_demimatroid(const Complex& delta) {
  require_nonvoid(delta, "Delta-sharp");
  return RankTable::tabulate(delta.n(), [&](Mask m) {
    return delta.contains(m) ? cardinality(m) : cardinality(m) - 1;
  });
}

Complex level_complex(const RankTable& m, int r) {
  require_demimatroid(m, "level complex");
  if (r < 0) throw InvalidArgument("level complex needs r >= 0");
  return Complex::from_predicate(m.n(), [&](Mask x) { return m(x) <= r; });
}

RankTable graph_demimatroid(int n, std::span<const std::pair<int, int>> edges) {
  std::vector<Mask> edge_masks;
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw InvalidArgument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                            "} has an endpoint outside 1.." + std::to_string(n));
    }
    if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
    edge_masks.push_back(element_bit(u) | element_bit(v));
  }
  return RankTable::tabulate(n, [&](Mask m) {
    if (m == 0) return 0;
    for (Mask e : edge_masks) {
      if (is_subset(e, m)) return 2;
    }
    return 1;
  });
}

RankTable from_wei_sequence(int n, std::span<const int> d) {
  int prev = 0;
  for (int v : d) {
    if (v <= prev || v > n) {
      throw InvalidArgument("Wei sequence must be strictly increasing inside [1, " +
                            std::to_string(n) + "]");
    }
    prev = v;
  }
  return RankTable::tabulate(n, [&](Mask m) {
    const int size = cardinality(m);
    return static_cast<int>(std::upper_bound(d.begin(), d.end(), size) - d.begin());
  });
}

bool GaloisReport::all_passed() const {
  return std::all_of(items.begin(), items.end(),
                     [](const GaloisItem& item) { return item.informational || item.passed; });
}

GaloisReport galois_check(const Complex& delta, const RankTable& m) {
  if (delta.n() != m.n()) throw InvalidArgument("complex and demimatroid on different ground sets");
  require_demimatroid(m, "Galois check");
  require_nonvoid(delta, "Galois check");
  const int n = m.n();
  const RankTable up = complex_to_demimatroid(delta);
  const Complex down = independence_complex(m);
  const RankTable down_up = complex_to_demimatroid(down);

  GaloisReport report;
  report.items.push_back({"(Delta-up)-down = Delta", independence_complex(up) == delta, false});
  report.items.push_back({"(M-down)-up <= M", pointwise_leq(down_up, m), false});

  const bool left = pointwise_leq(up, m);
  const bool right = delta.is_subcomplex_of(down);
  report.items.push_back({"Delta-up <= M iff Delta <= M-down", left == right, false});

  const Complex common = Complex::from_predicate(
      n, [&](Mask x) { return delta.contains(x) && down.contains(x); });
  report.items.push_back(
      {"up preserves order", pointwise_leq(complex_to_demimatroid(common), up), false});
  const RankTable lower = RankTable::tabulate(n, [&](Mask x) { return std::min(m(x), up(x)); });
  report.items.push_back(
      {"down preserves order", independence_complex(lower).is_subcomplex_of(down), false});

  report.items.push_back({"(M-down)-up = M", down_up == m, true});
  return report;
}

RankTable random_demimatroid(int n, std::mt19937_64& rng) {
  RankTable::check_ground_size(n, {});
  std::vector<int> ranks(std::size_t{1} << n, 0);
  for (Mask m : subsets_by_size(n)) {
    if (m == 0) continue;
    int lo = 0;
    int hi = n;
    for (Mask rest = m; rest != 0; rest &= rest - 1) {
      const int below = ranks[m & ~(rest & (~rest + 1))];
      lo = std::max(lo, below);
      hi = std::min(hi, below + 1);
    }
    ranks[m] = std::uniform_int_distribution<int>(lo, hi)(rng);
  }
  return RankTable::from_values(n, std::move(ranks));
}

RankTable random_combinatroid(int n, int lo, int hi, std::mt19937_64& rng) {
  if (lo > hi) throw InvalidArgument("empty rank range");
  std::uniform_int_distribution<int> dist(lo, hi);
  return RankTable::tabulate(n, [&](Mask m) { return m == 0 ? 0 : dist(rng); });
}

}  // namespace demikit
