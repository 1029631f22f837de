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

#include "demikit/complex.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "demikit/errors.hpp"

namespace demikit {

namespace {

void check_vertex_count(int n) {
  if (n < 0 || n > kMaxGroundSet) {
    throw InvalidArgument("complex on " + std::to_string(n) + " vertices is outside [0, " +
                          std::to_string(kMaxGroundSet) + "]");
  }
}

// Keeps masks not strictly contained in another; drops duplicates.
std::vector<Mask> maximal_masks(std::vector<Mask> masks) {
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<Mask> out;
  for (Mask a : masks) {
    bool covered = false;
    for (Mask b : masks) {
      if (a != b && is_subset(a, b)) {
        covered = true;
        break;
      }
    }
    if (!covered) out.push_back(a);
  }
  return out;
}

}  // namespace

Complex::Complex(int n, std::vector<Mask> facets)
    : n_(n), facets_(std::move(facets)), member_(std::size_t{1} << n, 0) {
  for (Mask f : facets_) member_[f] = 1;
  // Downward closure, largest masks first so each level feeds the next.
  for (std::size_t m = member_.size(); m-- > 0;) {
    if (!member_[m]) continue;
    for (Mask rest = static_cast<Mask>(m); rest != 0; rest &= rest - 1) {
      member_[m & ~(rest & -rest)] = 1;
    }
  }
}

Complex Complex::void_complex(int n) {
  check_vertex_count(n);
  return Complex(n, {});
}

Complex Complex::empty_face(int n) {
  check_vertex_count(n);
  return Complex(n, {0});
}

Complex Complex::full_simplex(int n) {
  check_vertex_count(n);
  return Complex(n, {full_mask(n)});
}

Complex Complex::from_facets(int n, std::vector<Mask> facets) {
  check_vertex_count(n);
  for (Mask f : facets) check_mask(f, n);
  return Complex(n, maximal_masks(std::move(facets)));
}

Complex Complex::from_faces(int n, std::span<const Mask> faces) {
  check_vertex_count(n);
  std::vector<std::uint8_t> member(std::size_t{1} << n, 0);
  for (Mask f : faces) {
    check_mask(f, n);
    member[f] = 1;
  }
  std::vector<Mask> facets;
  for (std::size_t m = 0; m < member.size(); ++m) {
    if (!member[m]) continue;
    bool maximal = true;
    for (int e = 0; e < n; ++e) {
      const Mask bit = Mask{1} << e;
      if (m & bit) {
        if (!member[m & ~bit]) {
          throw MalformedInput("face " + subset_label(static_cast<Mask>(m)) +
                               " is listed without its subface " +
                               subset_label(static_cast<Mask>(m & ~bit)));
        }
      } else if (member[m | bit]) {
        maximal = false;
      }
    }
    if (maximal) facets.push_back(static_cast<Mask>(m));
  }
  return Complex(n, std::move(facets));
}

Complex Complex::from_minimal_nonfaces(int n, std::span<const Mask> nonfaces) {
  check_vertex_count(n);
  for (Mask g : nonfaces) check_mask(g, n);
  return from_predicate(n, [&](Mask m) {
    return std::none_of(nonfaces.begin(), nonfaces.end(),
                        [m](Mask g) { return is_subset(g, m); });
  });
}

int Complex::dimension() const {
  if (is_void()) throw InvalidArgument("the void complex has no dimension");
  int best = 0;
  for (Mask f : facets_) best = std::max(best, cardinality(f));
  return best - 1;
}

std::vector<Mask> Complex::faces() const {
  std::vector<Mask> out;
  for (std::size_t m = 0; m < member_.size(); ++m) {
    if (member_[m]) out.push_back(static_cast<Mask>(m));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](Mask a, Mask b) { return cardinality(a) < cardinality(b); });
  return out;
}

std::vector<std::int64_t> Complex::face_counts() const {
  std::vector<std::int64_t> counts(n_ + 1, 0);
  for (std::size_t m = 0; m < member_.size(); ++m) {
    if (member_[m]) ++counts[cardinality(static_cast<Mask>(m))];
  }
  return counts;
}

Complex Complex::restrict_to(Mask sigma) const {
  check_mask(sigma, n_);
  if (is_void()) return *this;
  std::vector<Mask> faces;
  for_each_submask(sigma, [&](Mask s) {
    if (member_[s]) faces.push_back(s);
  });
  return from_faces(n_, faces);
}

bool Complex::is_subcomplex_of(const Complex& other) const {
  if (n_ != other.n_) throw InvalidArgument("complexes on different vertex sets");
  for (std::size_t m = 0; m < member_.size(); ++m) {
    if (member_[m] && !other.member_[m]) return false;
  }
  return true;
}

}  // namespace demikit
