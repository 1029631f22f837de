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

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "demikit/constructions.hpp"
#include "demikit/errors.hpp"
#include "demikit/weights.hpp"
#include "examples.hpp"
#include "oracles.hpp"
#include "reference_values.hpp"

namespace demikit {
namespace {

RankTable row(int n, std::vector<int> values) { return RankTable::from_values(n, values); }

TEST(FromBases, MatchesReferenceRows) {
  EXPECT_EQ(ranks_by_size(testing::contra()),
            std::vector<int>(std::begin(testing::reference::contra::kRho),
                             std::end(testing::reference::contra::kRho)));
  EXPECT_EQ(ranks_by_size(testing::contraex()),
            std::vector<int>(std::begin(testing::reference::contraex::kRho),
                             std::end(testing::reference::contraex::kRho)));
  const std::vector<Mask> singles = {1, 2};
  EXPECT_EQ(from_matroid_bases(2, singles), row(2, {0, 1, 1, 1}));
  EXPECT_THROW(from_matroid_bases(2, std::vector<Mask>{}), InvalidArgument);
}

TEST(Uniform, ClosedFormAndMatroid) {
  EXPECT_EQ(uniform(3, 1), row(3, {0, 1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(uniform(5, 0), trivial(5));
  EXPECT_THROW(uniform(3, 4), InvalidArgument);
  EXPECT_THROW(uniform(3, -1), InvalidArgument);
  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) EXPECT_EQ(validate(uniform(n, k)).kind, Kind::matroid);
  }
}

TEST(Trivial, IsDemimatroidNotMoreNotLess) {
  EXPECT_NE(validate(trivial(4)).kind, Kind::combinatroid);
  EXPECT_EQ(free_matroid(3), uniform(3, 3));
}

TEST(ComplexToDemimatroid, Examples) {
  EXPECT_EQ(complex_to_demimatroid(Complex::full_simplex(4)), free_matroid(4));
  EXPECT_EQ(complex_to_demimatroid(Complex::empty_face(3)), trivial(3));
  EXPECT_THROW(complex_to_demimatroid(Complex::void_complex(3)), InvalidArgument);
  const RankTable up = complex_to_demimatroid(testing::f_polynomial_complex());
  EXPECT_EQ(up(mask_from_label("1345")), 3);
  EXPECT_EQ(up(mask_from_label("15")), 1);
  EXPECT_TRUE(is_demimatroid(up));
}

TEST(ComplexToDemimatroid, WheelCircuits) {
  // Minimal dependent sets of the edge complex, by definition.
  const RankTable up = complex_to_demimatroid(testing::casi_wheel_complex());
  std::vector<Mask> circuits;
  for (Mask x = 1; x < up.size(); ++x) {
    if (up.nullity(x) == 0) continue;
    bool minimal = true;
    for (int e = 0; e < 6 && minimal; ++e) {
      if ((x >> e & 1) && up.nullity(x & ~(Mask{1} << e)) != 0) minimal = false;
    }
    if (minimal) circuits.push_back(x);
  }
  std::vector<Mask> expected;
  for (int c : testing::reference::casi_wheel::kCircuits) {
    expected.push_back(mask_from_label(std::to_string(c)));
  }
  std::sort(circuits.begin(), circuits.end());
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(circuits, expected);
}

TEST(IndependenceComplex, Examples) {
  EXPECT_EQ(independence_complex(testing::contra_full()), Complex::empty_face(3));
  const Complex u = independence_complex(uniform(4, 2));
  EXPECT_EQ(u.face_counts(), (std::vector<std::int64_t>{1, 4, 6, 0, 0}));
  EXPECT_THROW(independence_complex(row(2, {0, 2, 0, 1})), InvalidArgument);
  const Complex d = testing::casi_wheel_independence();
  EXPECT_EQ(independence_complex(complex_to_demimatroid(d)), d);
}

TEST(SharpDemimatroid, Examples) {
  EXPECT_EQ(sharp_demimatroid(Complex::empty_face(1)), row(1, {0, 0}));
  EXPECT_EQ(sharp_demimatroid(Complex::full_simplex(2)), free_matroid(2));
  const Complex points = Complex::from_facets(2, {1, 2});
  EXPECT_EQ(sharp_demimatroid(points), row(2, {0, 1, 1, 1}));
  EXPECT_THROW(sharp_demimatroid(Complex::void_complex(2)), InvalidArgument);
}

TEST(LevelComplex, Examples) {
  const Complex zero = level_complex(testing::contra_full(), 0);
  EXPECT_EQ(zero, Complex::from_facets(3, {1, 2, 4}));
  EXPECT_EQ(level_complex(testing::contra_full(), 2), Complex::full_simplex(3));
  EXPECT_EQ(level_complex(uniform(3, 1), 1), Complex::full_simplex(3));
  EXPECT_THROW(level_complex(testing::contra_full(), -1), InvalidArgument);
}

TEST(GraphDemimatroid, Examples) {
  const std::vector<std::pair<int, int>> edge = {{1, 2}};
  EXPECT_EQ(graph_demimatroid(2, edge), row(2, {0, 1, 1, 2}));
  EXPECT_EQ(graph_demimatroid(2, std::vector<std::pair<int, int>>{}), row(2, {0, 1, 1, 1}));
  const auto wheel = testing::casi_wheel_edges();
  EXPECT_EQ(graph_demimatroid(6, wheel), complex_to_demimatroid(testing::casi_wheel_complex()));
  const std::vector<std::pair<int, int>> loop = {{2, 2}};
  EXPECT_THROW(graph_demimatroid(2, loop), InvalidArgument);
  const std::vector<std::pair<int, int>> outside = {{1, 3}};
  EXPECT_THROW(graph_demimatroid(2, outside), InvalidArgument);
}

TEST(FromWeiSequence, Examples) {
  EXPECT_EQ(from_wei_sequence(3, std::vector<int>{2, 3}), testing::contra_full());
  EXPECT_EQ(from_wei_sequence(4, std::vector<int>{1, 2, 3, 4}), free_matroid(4));
  const RankTable atom = from_wei_sequence(5, std::vector<int>{5});
  for (Mask x = 0; x < 31; ++x) EXPECT_EQ(atom(x), 0);
  EXPECT_EQ(atom(31), 1);
  EXPECT_THROW(from_wei_sequence(3, std::vector<int>{2, 2}), InvalidArgument);
  EXPECT_THROW(from_wei_sequence(3, std::vector<int>{0, 2}), InvalidArgument);
  EXPECT_THROW(from_wei_sequence(3, std::vector<int>{4}), InvalidArgument);
}

TEST(FromWeiSequence, RoundTripsEverySequence) {
  for (int n = 1; n <= 7; ++n) {
    for (Mask chosen = 0; chosen < (Mask{1} << n); ++chosen) {
      const std::vector<int> d = elements_of(chosen);
      const RankTable m = from_wei_sequence(n, d);
      EXPECT_TRUE(testing::naive_is_demimatroid(m));
      EXPECT_EQ(wei_hierarchy(m).lower, d);
    }
  }
}

TEST(Galois, Examples) {
  const Complex d = testing::f_polynomial_complex();
  const auto report = galois_check(d, complex_to_demimatroid(d));
  EXPECT_TRUE(report.all_passed());
  for (const auto& item : report.items) EXPECT_TRUE(item.passed) << item.name;

  const auto full = galois_check(Complex::empty_face(3), testing::contra_full());
  EXPECT_TRUE(full.all_passed());
  bool saw_equality = false;
  for (const auto& item : full.items) {
    if (item.informational) {
      saw_equality = true;
      EXPECT_FALSE(item.passed);
    }
  }
  EXPECT_TRUE(saw_equality);
  EXPECT_TRUE(galois_check(Complex::empty_face(2), trivial(2)).all_passed());
}

TEST(Random, GeneratorsStayInTheirClass) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const int n = static_cast<int>(rng() % 7);
    EXPECT_TRUE(testing::naive_is_demimatroid(random_demimatroid(n, rng)));
    const RankTable c = random_combinatroid(n, -2, 2, rng);
    EXPECT_EQ(c(0), 0);
    for (int v : c.values()) {
      EXPECT_GE(v, -2);
      EXPECT_LE(v, 2);
    }
  }
}

}  // namespace
}  // namespace demikit
