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

#include "demikit/rank_table.hpp"

#include <string>

#include "demikit/errors.hpp"

namespace demikit {

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::combinatroid: return "combinatroid";
    case Kind::demimatroid: return "demimatroid";
    case Kind::matroid: return "matroid";
  }
  return "?";
}

std::string_view to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::monotone: return "R1-monotone";
    case Axiom::unit_step: return "R1-unit-step";
    case Axiom::submodular: return "R2-submodular";
  }
  return "?";
}

void RankTable::check_ground_size(int n, const Limits& limits) {
  if (n < 0) throw MalformedInput("negative ground-set size");
  if (n > limits.max_ground) {
    throw InvalidArgument("ground set of size " + std::to_string(n) + " exceeds the cap of " +
                          std::to_string(limits.max_ground));
  }
}

RankTable RankTable::from_values(int n, std::vector<int> ranks, const Limits& limits) {
  check_ground_size(n, limits);
  if (ranks.size() != (std::size_t{1} << n)) {
    throw MalformedInput("rank table for n = " + std::to_string(n) + " needs " +
                         std::to_string(std::size_t{1} << n) + " entries, got " +
                         std::to_string(ranks.size()));
  }
  if (ranks[0] != 0) throw MalformedInput("rank of the empty set must be 0");
  return RankTable(n, std::move(ranks));
}

bool pointwise_leq(const RankTable& a, const RankTable& b) {
  if (a.n() != b.n()) throw InvalidArgument("rank tables on different ground sets");
  for (std::size_t m = 0; m < a.size(); ++m) {
    if (a.rank(m) > b.rank(m)) return false;
  }
  return true;
}

bool ValidationReport::violates(Axiom axiom) const {
  for (const auto& v : violations) {
    if (v.axiom == axiom) return true;
  }
  return false;
}

namespace {

std::string describe(const char* what, Mask a, int ra, Mask b, int rb) {
  return std::string(what) + ": rho" + subset_label(a) + " = " + std::to_string(ra) + ", rho" +
         subset_label(b) + " = " + std::to_string(rb);
}

}  // namespace

ValidationReport validate(const RankTable& m) {
  ValidationReport report;
  const int n = m.n();
  bool seen_monotone = false;
  bool seen_step = false;
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (int e = 0; e < n; ++e) {
      const Mask bit = Mask{1} << e;
      if (x & bit) continue;
      const Mask up = static_cast<Mask>(x) | bit;
      if (!seen_monotone && m(up) < m(x)) {
        seen_monotone = true;
        report.violations.push_back({Axiom::monotone, {static_cast<Mask>(x), up},
                                     describe("rank decreases", x, m(x), up, m(up))});
      }
      if (!seen_step && m(up) > m(x) + 1) {
        seen_step = true;
        report.violations.push_back({Axiom::unit_step, {static_cast<Mask>(x), up},
                                     describe("rank jumps by more than one", x, m(x), up, m(up))});
      }
    }
  }
  // Local form of submodularity: rho(X+a) + rho(X+b) >= rho(X+a+b) + rho(X)
  // for all X and a, b outside X. Equivalent to (R2) for any set function.
  bool found = false;
  for (std::size_t x = 0; x < m.size() && !found; ++x) {
    for (int a = 0; a < n && !found; ++a) {
      const Mask ba = Mask{1} << a;
      if (x & ba) continue;
      for (int b = a + 1; b < n && !found; ++b) {
        const Mask bb = Mask{1} << b;
        if (x & bb) continue;
        const Mask xa = static_cast<Mask>(x) | ba;
        const Mask xb = static_cast<Mask>(x) | bb;
        const Mask xab = xa | bb;
        if (m(xa) + m(xb) < m(xab) + m(x)) {
          found = true;
          report.violations.push_back(
              {Axiom::submodular,
               {xab, static_cast<Mask>(x), xa, xb},
               "rho" + subset_label(xab) + " + rho" + subset_label(x) + " = " +
                   std::to_string(m(xab) + m(x)) + " > rho" + subset_label(xa) + " + rho" +
                   subset_label(xb) + " = " + std::to_string(m(xa) + m(xb))});
        }
      }
    }
  }
  if (seen_monotone || seen_step) {
    report.kind = Kind::combinatroid;
  } else if (found) {
    report.kind = Kind::demimatroid;
  } else {
    report.kind = Kind::matroid;
  }
  return report;
}

bool is_demimatroid(const RankTable& m) {
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (int e = 0; e < m.n(); ++e) {
      const Mask bit = Mask{1} << e;
      if (x & bit) continue;
      const int d = m(static_cast<Mask>(x) | bit) - m(x);
      if (d < 0 || d > 1) return false;
    }
  }
  return true;
}

void require_demimatroid(const RankTable& m, std::string_view operation) {
  if (!is_demimatroid(m)) {
    throw InvalidArgument(std::string(operation) + " requires a demimatroid");
  }
}

std::vector<int> ranks_by_size(const RankTable& m) {
  std::vector<int> row;
  for (Mask s : subsets_by_size(m.n())) row.push_back(m(s));
  return row;
}

RankTable from_ranks_by_size(int n, std::span<const int> row) {
  const auto order = subsets_by_size(n);
  if (row.size() != order.size()) {
    throw MalformedInput("rank row has " + std::to_string(row.size()) + " entries, expected " +
                         std::to_string(order.size()));
  }
  std::vector<int> ranks(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) ranks[order[i]] = row[i];
  return RankTable::from_values(n, std::move(ranks));
}

}  // namespace demikit
