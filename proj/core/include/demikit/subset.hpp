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

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace demikit {

// A subset of the ground set {1..n}; element i lives in bit i-1.
using Mask = std::uint32_t;

// Default ground-set caps. Rank tables hold 2^n entries; the Hochster sweep
// solves one homology problem per subset.
inline constexpr int kMaxGroundSet = 20;
inline constexpr int kMaxHomologyGroundSet = 16;

struct Limits {
  int max_ground = kMaxGroundSet;
  int max_homology = kMaxHomologyGroundSet;
};

constexpr Mask full_mask(int n) {
  return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr int cardinality(Mask m) { return std::popcount(m); }

constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

// Bit for the 1-based element e.
constexpr Mask element_bit(int e) { return Mask{1} << (e - 1); }

Mask mask_of(std::initializer_list<int> elements);
Mask mask_of(std::span<const int> elements);

// Parses the compact label for small ground sets:
// "234" is {2,3,4}. Only single-digit elements are representable.
Mask mask_from_label(std::string_view label);

std::vector<int> elements_of(Mask m);

// "{1,3}" style label; "{}" for the empty set.
std::string subset_label(Mask m);

// Throws MalformedInput when m has a bit at position >= n.
void check_mask(Mask m, int n);

// All 2^n subsets ordered by cardinality and then lexicographically by their
// sorted element lists: the column order of tabulated rank rows
// (empty, 1, 2, 3, 12, 13, 23, 123 for n = 3).
std::vector<Mask> subsets_by_size(int n);

// Visits every submask of m, including 0 and m itself.
template <typename F>
void for_each_submask(Mask m, F&& f) {
  Mask s = m;
  while (true) {
    f(s);
    if (s == 0) break;
    s = (s - 1) & m;
  }
}

}  // namespace demikit
