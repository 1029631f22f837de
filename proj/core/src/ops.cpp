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

#include "demikit/ops.hpp"

#include <algorithm>
#include <string>

#include "demikit/errors.hpp"

namespace demikit {

namespace {

void require_same_ground(const RankTable& a, const RankTable& b) {
  if (a.n() != b.n()) {
    throw InvalidArgument("ground sets differ: " + std::to_string(a.n()) + " vs " +
                          std::to_string(b.n()));
  }
}

// Maps a mask on the surviving elements (renumbered) back to the original
// ground set.
Mask spread(Mask compact, const std::vector<int>& labels) {
  Mask out = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (compact & (Mask{1} << i)) out |= element_bit(labels[i]);
  }
  return out;
}

std::vector<int> surviving_labels(const RankTable& m, Mask removed) {
  check_mask(removed, m.n());
  std::vector<int> labels;
  for (int e = 1; e <= m.n(); ++e) {
    if (!(removed & element_bit(e))) labels.push_back(e);
  }
  return labels;
}

}  // namespace

RankTable dual(const RankTable& m) {
  const Mask e = m.ground();
  return RankTable::tabulate(
      m.n(), [&](Mask x) { return cardinality(x) + m(e & ~x) - m.total_rank(); });
}

RankTable nullity_operator(const RankTable& m) {
  return RankTable::tabulate(m.n(), [&](Mask x) { return cardinality(x) - m(x); });
}

RankTable supplement(const RankTable& m) {
  const Mask e = m.ground();
  return RankTable::tabulate(m.n(), [&](Mask x) { return m.total_rank() - m(e & ~x); });
}

std::string_view to_string(Operator op) {
  switch (op) {
    case Operator::id:
      return "id";
    case Operator::dual:
      return "dual";
    case Operator::nullity:
      return "nullity";
    case Operator::supplement:
      return "supplement";
  }
  return "?";
}

RankTable apply(Operator op, const RankTable& m) {
  switch (op) {
    case Operator::id:
      return m;
    case Operator::dual:
      return dual(m);
    case Operator::nullity:
      return nullity_operator(m);
    case Operator::supplement:
      return supplement(m);
  }
  throw InvalidArgument("unknown operator");
}

Operator compose_check(Operator a, Operator b, const RankTable& m) {
  const Operator expected = compose(a, b);
  if (apply(b, apply(a, m)) != apply(expected, m)) {
    throw InvariantViolation(std::string(to_string(a)) + " then " + std::string(to_string(b)) +
                             " differs from " + std::string(to_string(expected)));
  }
  return expected;
}

Minor deletion(const RankTable& m, Mask removed) {
  std::vector<int> labels = surviving_labels(m, removed);
  const int k = static_cast<int>(labels.size());
  RankTable table = RankTable::tabulate(k, [&](Mask x) { return m(spread(x, labels)); });
  return {std::move(table), std::move(labels)};
}

Minor contraction(const RankTable& m, Mask removed) {
  std::vector<int> labels = surviving_labels(m, removed);
  const int k = static_cast<int>(labels.size());
  const int base = m(removed);
  RankTable table =
      RankTable::tabulate(k, [&](Mask x) { return m(spread(x, labels) | removed) - base; });
  return {std::move(table), std::move(labels)};
}

RankTable join(const RankTable& a, const RankTable& b) {
  require_same_ground(a, b);
  return RankTable::tabulate(a.n(), [&](Mask x) { return std::max(a(x), b(x)); });
}

RankTable meet(const RankTable& a, const RankTable& b) {
  require_same_ground(a, b);
  return RankTable::tabulate(a.n(), [&](Mask x) { return std::min(a(x), b(x)); });
}

RankTable elongate(const RankTable& m, int i) {
  if (i < 0 || i > m.total_nullity()) {
    throw InvalidArgument("elongation index " + std::to_string(i) + " outside [0, " +
                          std::to_string(m.total_nullity()) + "]");
  }
  return RankTable::tabulate(m.n(),
                             [&](Mask x) { return std::min(cardinality(x), m(x) + i); });
}

std::vector<RankTable> elongations(const RankTable& m) {
  std::vector<RankTable> out;
  for (int i = 0; i <= m.total_nullity(); ++i) out.push_back(elongate(m, i));
  return out;
}

}  // namespace demikit
