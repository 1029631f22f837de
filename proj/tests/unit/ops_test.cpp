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

#include <iterator>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "demikit/constructions.hpp"
#include "demikit/errors.hpp"
#include "demikit/ops.hpp"
#include "examples.hpp"
#include "reference_values.hpp"

namespace demikit {
namespace {

template <std::size_t N>
std::vector<int> vec(const int (&a)[N]) {
  return std::vector<int>(std::begin(a), std::end(a));
}

TEST(Operators, ThreeElementMatroidRows) {
  namespace p = testing::reference::contraex;
  const RankTable m = testing::contraex();
  EXPECT_EQ(ranks_by_size(dual(m)), vec(p::kDual));
  EXPECT_EQ(ranks_by_size(nullity_operator(m)), vec(p::kNullity));
  EXPECT_EQ(ranks_by_size(supplement(m)), vec(p::kSupplement));
  EXPECT_EQ(validate(supplement(m)).kind, Kind::demimatroid);
}

TEST(Operators, FourElementMatroidRows) {
  namespace p = testing::reference::contra;
  const RankTable m = testing::contra();
  EXPECT_EQ(ranks_by_size(dual(m)), vec(p::kDual));
  EXPECT_EQ(ranks_by_size(nullity_operator(m)), vec(p::kNullity));
  EXPECT_EQ(ranks_by_size(supplement(m)), vec(p::kSupplement));
}

TEST(Operators, FullDemimatroidRows) {
  namespace p = testing::reference::contra_full;
  const RankTable m = testing::contra_full();
  EXPECT_EQ(ranks_by_size(m), vec(p::kRho));
  EXPECT_EQ(ranks_by_size(dual(m)), vec(p::kDual));
  EXPECT_EQ(ranks_by_size(nullity_operator(m)), vec(p::kNullity));
  EXPECT_EQ(ranks_by_size(supplement(m)), vec(p::kSupplement));
}

TEST(Operators, FreeMatroid) {
  const RankTable f = free_matroid(4);
  EXPECT_EQ(dual(f), trivial(4));
  EXPECT_EQ(nullity_operator(f), trivial(4));
  EXPECT_EQ(supplement(f), f);
}

TEST(Operators, GroupTable) {
  EXPECT_EQ(compose(Operator::dual, Operator::nullity), Operator::supplement);
  EXPECT_EQ(compose_check(Operator::dual, Operator::nullity, testing::contraex()),
            Operator::supplement);
  for (Operator a : kOperators) {
    EXPECT_EQ(compose(a, a), Operator::id);
    EXPECT_EQ(compose(Operator::id, a), a);
    for (Operator b : kOperators) {
      EXPECT_EQ(compose(a, b), compose(b, a));
      EXPECT_EQ(compose_check(a, b, testing::contra()), compose(a, b));
    }
  }
  EXPECT_EQ(to_string(Operator::supplement), "supplement");
  EXPECT_EQ(apply(Operator::nullity, testing::contra()), nullity_operator(testing::contra()));
}

TEST(Minors, ReferenceDeletionAndContraction) {
  namespace p = testing::reference::contra_full;
  const RankTable m = testing::contra_full();
  const Minor del = deletion(m, element_bit(3));
  const Minor con = contraction(m, element_bit(3));
  EXPECT_EQ(del.table, RankTable::from_values(2, vec(p::kDeletionRho)));
  EXPECT_EQ(con.table, RankTable::from_values(2, vec(p::kContractionRho)));
  EXPECT_EQ(del.labels, (std::vector<int>{1, 2}));
}

TEST(Minors, Degenerate) {
  const RankTable m = testing::contra();
  EXPECT_EQ(contraction(m, 0).table, m);
  EXPECT_EQ(deletion(m, 0).table, m);
  const Minor all = deletion(m, m.ground());
  EXPECT_EQ(all.table.n(), 0);
  EXPECT_EQ(all.table(0), 0);
  EXPECT_TRUE(all.labels.empty());
  const Minor mid = deletion(m, mask_from_label("2"));
  EXPECT_EQ(mid.labels, (std::vector<int>{1, 3, 4}));
  EXPECT_EQ(mid.table(0b011), m(mask_from_label("13")));
  EXPECT_THROW(deletion(m, 1u << 5), MalformedInput);
}

TEST(Lattice, BoundsAndExamples) {
  const RankTable m = testing::contra_full();
  EXPECT_EQ(join(m, trivial(3)), m);
  EXPECT_EQ(meet(m, free_matroid(3)), m);
  EXPECT_EQ(join(m, dual(m)), m);
  const RankTable atom = from_wei_sequence(3, std::vector<int>{3});
  EXPECT_EQ(join(atom, atom), atom);
  EXPECT_THROW(join(trivial(2), trivial(3)), InvalidArgument);
}

TEST(Elongation, Endpoints) {
  const RankTable m = complex_to_demimatroid(testing::casi_wheel_complex());
  EXPECT_EQ(m.total_nullity(), 4);
  EXPECT_EQ(elongate(m, 0), m);
  EXPECT_EQ(elongate(m, 4), free_matroid(6));
  EXPECT_EQ(elongate(m, 2).total_rank(), m.total_rank() + 2);
  EXPECT_THROW(elongate(m, 5), InvalidArgument);
  EXPECT_THROW(elongate(m, -1), InvalidArgument);
  const auto all = elongations(m);
  ASSERT_EQ(all.size(), 5u);
  EXPECT_EQ(all[3], elongate(m, 3));
}

}  // namespace
}  // namespace demikit
