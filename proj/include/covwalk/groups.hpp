// Copyright 2026 The covwalk Authors
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
#include <string>
#include <vector>

#include "covwalk/config.hpp"
#include "covwalk/graph.hpp"

namespace covwalk {

using Element = std::uint32_t;

/// A finite group given by its full multiplication table.
///
/// Elements are the integers [0, order). `names` is optional metadata used by
/// the CLI to parse generators such as "s", "sinv" or "t".
class FiniteGroup {
 public:
  /// Validates the table: Latin square, two-sided identity, inverses, and
  /// associativity on a deterministic sample of triples (all triples when
  /// order^3 is small). Throws std::invalid_argument on failure.
  static FiniteGroup from_table(std::size_t order, std::vector<Element> table,
                                std::vector<std::string> names = {},
                                std::size_t max_order = kDefaultMaxVertices);

  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }
  Element multiply(Element a, Element b) const {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element inverse(Element a) const { return inverse_[a]; }
  const std::vector<std::string>& names() const { return names_; }

  /// Looks `token` up in `names`, else parses it as an element id.
  Element parse_element(const std::string& token) const;

 private:
  std::size_t order_ = 0;
  Element identity_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> names_;
};

/// Z/mZ; element k is the residue k.
FiniteGroup cyclic_group(std::size_t m, std::size_t max_order = kDefaultMaxVertices);

/// D_n = <s, t | s^n = t^2 = e, t s t = s^-1>, order 2n. Element a + n*b is
/// s^a t^b. Named elements: e, s, sinv, t, s<k>, s<k>t.
FiniteGroup dihedral_group(std::size_t n, std::size_t max_order = kDefaultMaxVertices);

/// (Z/2Z)^n; elements are bit masks, e<j> (1-based) is the j-th unit vector.
FiniteGroup elementary_abelian_2(std::size_t n,
                                 std::size_t max_order = kDefaultMaxVertices);

/// Inverse-closed subset not containing the identity.
class GeneratingSet {
 public:
  GeneratingSet(const FiniteGroup& g, std::vector<Element> elements);
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

 private:
  std::vector<Element> elements_;  // sorted, unique
};

class Subgroup {
 public:
  /// Throws std::invalid_argument unless `elements` is a subgroup of `g`.
  Subgroup(const FiniteGroup& g, std::vector<Element> elements);

  /// Closure of `generators` under multiplication.
  static Subgroup generated_by(const FiniteGroup& g,
                               const std::vector<Element>& generators);

  const std::vector<Element>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

 private:
  std::vector<Element> elements_;  // sorted
};

/// w(g, h) = |{s in S : g = s^-1 h}|.
WeightedGraph cayley_graph(const FiniteGroup& g, const GeneratingSet& s);

struct SchreierGraph {
  WeightedGraph graph;
  // coset_of[g] is the index of the vertex gH. Cosets are numbered in order
  // of their smallest element.
  std::vector<std::size_t> coset_of;
  std::vector<std::vector<Element>> cosets;
};

/// Vertices are the left cosets gH. The weight between gH and g'H is
/// (1/|H|) |{(x, s) : x in gH, s in S, s^-1 x in g'H}|, which makes the
/// quotient P A(Cayley) P^T equal to A(Schreier). Loops appear when H is
/// not normal.
SchreierGraph schreier_graph(const FiniteGroup& g, const Subgroup& h,
                             const GeneratingSet& s);

/// Q_n, built directly on bit masks; identical to
/// cayley_graph(elementary_abelian_2(n), {e_1..e_n}).
WeightedGraph hypercube(std::size_t n, std::size_t max_vertices = kDefaultMaxVertices);

/// C_m = X(Z/mZ, {+1, -1}); for m = 2 this is the single edge K_2.
WeightedGraph cycle(std::size_t m, std::size_t max_vertices = kDefaultMaxVertices);

/// m-fold cartesian product of cycle(size).
WeightedGraph torus(std::size_t m, std::size_t size,
                    std::size_t max_vertices = kDefaultMaxVertices);

struct HypercubeQuotient {
  WeightedGraph path;                 // n + 1 vertices
  std::vector<std::size_t> hamming;   // pi: V(Q_n) -> {0..n}
};

/// Weighted path with w(j, j+1) = sqrt((j+1)(n-j)) and the Hamming-weight
/// projection from Q_n.
HypercubeQuotient hypercube_path_quotient(std::size_t n,
                                          std::size_t max_vertices = kDefaultMaxVertices);

/// Paley graph on F_q for prime q = 1 (mod 4): u ~ v iff u - v is a nonzero
/// square mod q.
WeightedGraph paley_graph(std::size_t q, std::size_t max_vertices = kDefaultMaxVertices);

bool is_prime(std::uint64_t n);

}  // namespace covwalk
