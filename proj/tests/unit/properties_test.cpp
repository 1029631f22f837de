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

// Randomized law checks over small demimatroids and complexes. Every sample
// stream uses a fixed seed so failures reproduce.

#include <algorithm>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "demikit/constructions.hpp"
#include "demikit/hamming.hpp"
#include "demikit/ops.hpp"
#include "demikit/simplicial.hpp"
#include "demikit/tutte.hpp"
#include "demikit/weights.hpp"
#include "oracles.hpp"

namespace demikit {
namespace {

constexpr int kSamples = 120;

std::vector<RankTable> samples(std::uint64_t seed, int count, int max_n = 6) {
  std::mt19937_64 rng(seed);
  std::vector<RankTable> out;
  for (int i = 0; i < count; ++i) out.push_back(random_demimatroid(1 + i % max_n, rng));
  return out;
}

Mask random_mask(int n, std::mt19937_64& rng) {
  return std::uniform_int_distribution<Mask>(0, full_mask(n))(rng);
}

TEST(Properties, SamplesAreDemimatroids) {
  for (const RankTable& m : samples(1, kSamples)) {
    EXPECT_TRUE(is_demimatroid(m));
    EXPECT_TRUE(testing::naive_is_demimatroid(m));
    EXPECT_TRUE(is_demimatroid(dual(m)));
  }
}

TEST(Properties, OperatorGroupLaw) {
  for (const RankTable& m : samples(2, kSamples)) {
    for (Operator a : kOperators) {
      for (Operator b : kOperators) EXPECT_EQ(compose_check(a, b, m), compose(a, b));
    }
    EXPECT_EQ(m.total_rank() + dual(m).total_rank(), m.n());
    EXPECT_EQ(dual(nullity_operator(m)), supplement(m));
    EXPECT_EQ(nullity_operator(dual(m)), supplement(m));
    EXPECT_EQ(dual(dual(m)), m);
  }
}

TEST(Properties, MinorDuality) {
  std::mt19937_64 rng(3);
  for (const RankTable& m : samples(3, kSamples)) {
    const Mask a = random_mask(m.n(), rng);
    EXPECT_EQ(dual(deletion(m, a).table), contraction(dual(m), a).table);
    EXPECT_EQ(dual(contraction(m, a).table), deletion(dual(m), a).table);
    EXPECT_TRUE(is_demimatroid(deletion(m, a).table));
    EXPECT_TRUE(is_demimatroid(contraction(m, a).table));
  }
}

TEST(Properties, LatticeLaws) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < kSamples; ++i) {
    const int n = 1 + i % 6;
    const RankTable a = random_demimatroid(n, rng);
    const RankTable b = random_demimatroid(n, rng);
    const RankTable j = join(a, b);
    const RankTable m = meet(a, b);
    EXPECT_TRUE(is_demimatroid(j));
    EXPECT_TRUE(is_demimatroid(m));
    EXPECT_EQ(j, join(b, a));
    EXPECT_EQ(m, meet(b, a));
    EXPECT_EQ(join(a, meet(a, b)), a);
    EXPECT_EQ(meet(a, join(a, b)), a);
    EXPECT_TRUE(pointwise_leq(m, a) && pointwise_leq(a, j));
  }
}

TEST(Properties, ElongationLaws) {
  std::mt19937_64 rng(5);
  for (const RankTable& m : samples(5, kSamples)) {
    const int eta = m.total_nullity();
    for (int i = 0; i <= eta; ++i) {
      const RankTable e = elongate(m, i);
      EXPECT_TRUE(is_demimatroid(e));
      EXPECT_EQ(e.total_nullity() == 0, eta <= i);
      if (i >= 1) {
        EXPECT_EQ(e, elongate(elongate(m, 1), i - 1));
      }
      const Mask a = random_mask(m.n(), rng);
      const RankTable restricted = deletion(e, a).table;
      const RankTable base = deletion(m, a).table;
      for (Mask y = 0; y <= restricted.ground(); ++y) {
        EXPECT_EQ(restricted(y), std::min(cardinality(y), base(y) + i));
      }
    }
  }
}

TEST(Properties, WeiDualityAndBounds) {
  for (const RankTable& m : samples(6, kSamples)) {
    EXPECT_TRUE(check_wei_duality(m).holds());
    EXPECT_TRUE(singleton_bounds_hold(wei_hierarchy(m)));
    const int eta = m.total_nullity();
    for (int r = 0; r < eta; ++r) EXPECT_TRUE(elongation_distance_check(m, r).equal());
    for (int r = 1; r <= eta; ++r) EXPECT_EQ(nullity_corank_sum(m, r), m.n());
    EXPECT_EQ(generalized_hamming_weights(m), wei_hierarchy(nullity_operator(m)).lower);
  }
}

TEST(Properties, TutteLaws) {
  for (const RankTable& m : samples(7, kSamples)) {
    const LaurentPoly t = tutte(m);
    for (int p = 1; p <= m.n(); ++p) EXPECT_EQ(tutte_recurrence(m, p), t);
    EXPECT_TRUE(tutte_dual_check(m));
    EXPECT_EQ(tutte(dual(m)), t.swap(Var::x, Var::y));
    EXPECT_EQ(tutte_by_deletion_contraction(m), t);
    EXPECT_EQ(t.evaluate({Rational(3), Rational(-2), 0, 0}),
              testing::tutte_at(m, Rational(3), Rational(-2)));
  }
}

TEST(Properties, WhitneyAndCharacteristic) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < kSamples; ++i) {
    const RankTable c = random_combinatroid(1 + i % 5, -1, 3, rng);
    const LaurentPoly f = whitney_f(c);
    for (int p = 1; p <= c.n(); ++p) EXPECT_EQ(whitney_recurrence(c, p), f);
  }
  for (const RankTable& m : samples(9, kSamples)) {
    const LaurentPoly chi = characteristic(m);
    for (int t0 : {-2, 0, 3}) {
      const Rational sign = m.total_rank() % 2 ? -1 : 1;
      EXPECT_EQ(chi.evaluate({0, 0, Rational(t0), 0}),
                sign * testing::tutte_at(m, Rational(1 - t0), Rational(0)));
    }
  }
}

TEST(Properties, HammingLaws) {
  for (const RankTable& m : samples(10, kSamples)) {
    const LaurentPoly w = hamming_subset_sum(m);
    EXPECT_EQ(hamming_via_tutte(m), w);
    EXPECT_EQ(hamming_from_p(m), w);
    EXPECT_EQ(tutte_from_hamming(m), tutte(m));
    for (int p = 1; p <= m.n(); ++p) EXPECT_EQ(hamming_recurrence(m, p), w);
    EXPECT_EQ(w.evaluate({Rational(5), Rational(2), Rational(3), 0}),
              testing::hamming_at(m, Rational(5), Rational(2), Rational(3)));
  }
}

TEST(Properties, MacWilliams) {
  for (const RankTable& m : samples(11, 50)) {
    EXPECT_EQ(macwilliams(m), hamming_subset_sum(dual(m)));
  }
}

TEST(Properties, BettiRoute) {
  for (const RankTable& m : samples(12, 50, 5)) {
    EXPECT_EQ(w_via_betti(m, FieldSpec::rationals()), hamming_subset_sum(m));
  }
}

TEST(Properties, EulerPoincareOnRestrictions) {
  std::mt19937_64 rng(13);
  int checked = 0;
  while (checked < 1000) {
    const int n = 3 + checked % 4;
    std::vector<Mask> facets;
    for (int i = 0; i < 3; ++i) facets.push_back(random_mask(n, rng));
    const Complex d = Complex::from_facets(n, facets);
    for (int i = 0; i < 10; ++i, ++checked) {
      const Complex r = d.restrict_to(random_mask(n, rng));
      const std::vector<int> dims = testing::naive_reduced_homology(r, 0);
      std::int64_t alternating = 0;
      for (std::size_t k = 0; k < dims.size(); ++k) {
        alternating += (k % 2 == 0 ? -1 : 1) * dims[k];
      }
      EXPECT_EQ(euler_characteristic(r, FieldSpec::rationals()), alternating);
    }
  }
}

}  // namespace
}  // namespace demikit
