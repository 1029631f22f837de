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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "demikit/subset.hpp"

namespace demikit {

// A simplicial complex on the vertex set {1..n}, stored by its facets plus a
// 2^n membership table. The void complex (no faces) and the complex {empty}
// are distinct values. Vertices need not be faces.
class Complex {
 public:
  Complex() : Complex(0, {}) {}

  static Complex void_complex(int n);
  // {empty}: the single empty face.
  static Complex empty_face(int n);
  static Complex full_simplex(int n);

  // Keeps the inclusion-maximal masks. An empty list gives the void complex.
  static Complex from_facets(int n, std::vector<Mask> facets);

  // Throws MalformedInput when the family is not closed under taking subsets.
  static Complex from_faces(int n, std::span<const Mask> faces);

  // The complex whose faces are the sets containing none of `nonfaces`:
  // the complex with Stanley-Reisner ideal generated by those monomials.
  static Complex from_minimal_nonfaces(int n, std::span<const Mask> nonfaces);

  template <typename Pred>
  static Complex from_predicate(int n, Pred&& is_face) {
    std::vector<Mask> faces;
    for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
      if (is_face(static_cast<Mask>(m))) faces.push_back(static_cast<Mask>(m));
    }
    return from_faces(n, faces);
  }

  int n() const { return n_; }
  bool is_void() const { return facets_.empty(); }
  bool contains(Mask face) const { return member_[face] != 0; }

  // Sorted by mask value.
  const std::vector<Mask>& facets() const { return facets_; }

  // Largest face cardinality minus one; -1 for {empty}. Throws
  // InvalidArgument for the void complex.
  int dimension() const;

  // Faces ordered by cardinality, then mask value.
  std::vector<Mask> faces() const;

  // counts[i] = number of faces with i elements, i = 0..n.
  std::vector<std::int64_t> face_counts() const;

  // Delta_sigma: the faces contained in sigma, on the same vertex labels.
  Complex restrict_to(Mask sigma) const;

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.n_ == b.n_ && a.member_ == b.member_;
  }
  bool is_subcomplex_of(const Complex& other) const;

 private:
  Complex(int n, std::vector<Mask> facets);

  int n_;
  std::vector<Mask> facets_;
  std::vector<std::uint8_t> member_;
};

}  // namespace demikit
