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

#include "demikit/subset.hpp"

#include <algorithm>
#include <string>

#include "demikit/errors.hpp"

namespace demikit {

Mask mask_of(std::initializer_list<int> elements) {
  return mask_of(std::span<const int>(elements.begin(), elements.size()));
}

Mask mask_of(std::span<const int> elements) {
  Mask m = 0;
  for (int e : elements) {
    if (e < 1 || e > 32) {
      throw MalformedInput("element " + std::to_string(e) + " is not a valid label");
    }
    m |= element_bit(e);
  }
  return m;
}

Mask mask_from_label(std::string_view label) {
  Mask m = 0;
  for (char c : label) {
    if (c < '1' || c > '9') {
      throw MalformedInput("bad subset label '" + std::string(label) + "'");
    }
    m |= element_bit(c - '0');
  }
  return m;
}

std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  for (int i = 0; m != 0; ++i, m >>= 1) {
    if (m & 1) out.push_back(i + 1);
  }
  return out;
}

std::string subset_label(Mask m) {
  std::string s = "{";
  bool first = true;
  for (int e : elements_of(m)) {
    if (!first) s += ',';
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

void check_mask(Mask m, int n) {
  if ((m & ~full_mask(n)) != 0) {
    throw MalformedInput("subset " + subset_label(m) + " is not inside a ground set of size " +
                         std::to_string(n));
  }
}

std::vector<Mask> subsets_by_size(int n) {
  std::vector<Mask> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) out.push_back(static_cast<Mask>(m));
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    if (cardinality(a) != cardinality(b)) return cardinality(a) < cardinality(b);
    return elements_of(a) < elements_of(b);
  });
  return out;
}

}  // namespace demikit
