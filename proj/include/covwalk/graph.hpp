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
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "covwalk/config.hpp"

namespace covwalk {

using VertexId = std::size_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  double weight = 1.0;
};

/// Dense real symmetric matrix. Every mutation writes both (i,j) and (j,i),
/// so the stored entries are exactly symmetric.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t dim);

  /// Throws std::invalid_argument unless `m` is square and exactly symmetric.
  explicit SymmetricMatrix(Eigen::MatrixXd m);

  /// Averages m and m^T. For matrices that are symmetric up to rounding.
  static SymmetricMatrix symmetrized(const Eigen::MatrixXd& m);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  void set(std::size_t i, std::size_t j, double value);
  void add(std::size_t i, std::size_t j, double value);

  const Eigen::MatrixXd& dense() const { return m_; }

  friend SymmetricMatrix operator-(const SymmetricMatrix& a,
                                   const SymmetricMatrix& b);
  friend SymmetricMatrix operator+(const SymmetricMatrix& a,
                                   const SymmetricMatrix& b);

 private:
  Eigen::MatrixXd m_;
};

/// Finite undirected weighted graph with optional loops.
///
/// Weights live in a map keyed by the canonical (min, max) vertex pair, so an
/// asymmetric weight function cannot be represented. Missing pairs have
/// weight zero. Values are immutable once constructed.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  /// Repeated pairs in `edges` accumulate their weights. Throws
  /// std::invalid_argument on out-of-range endpoints, negative or non-finite
  /// weights, or a label list of the wrong length; std::length_error when
  /// `num_vertices` exceeds `max_vertices`.
  WeightedGraph(std::size_t num_vertices, const std::vector<Edge>& edges,
                std::vector<std::string> labels = {},
                std::size_t max_vertices = kDefaultMaxVertices);

  std::size_t num_vertices() const { return n_; }
  double weight(VertexId u, VertexId v) const;

  /// Nonzero pairs with u <= v, in lexicographic order.
  std::vector<Edge> edges() const;
  std::size_t num_edges() const { return weights_.size(); }

  const std::vector<std::string>& labels() const { return labels_; }

  /// All weights in {0, 1} and no loops.
  bool is_simple() const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::map<std::pair<VertexId, VertexId>, double> weights_;
  std::vector<std::string> labels_;
};

SymmetricMatrix adjacency_matrix(const WeightedGraph& g);
SymmetricMatrix degree_matrix(const WeightedGraph& g);

/// d_v = sum_u w(u, v); a loop contributes its weight once.
double degree(const WeightedGraph& g, VertexId v);
std::vector<double> degrees(const WeightedGraph& g);

/// D - A. The diagonal is d_v - w(v,v), so loops do not appear in it.
SymmetricMatrix laplacian(const WeightedGraph& g);

/// Vertex (i1, i2) is indexed i1 * |V(g2)| + i2, so that
/// A(g1 x g2) = A(g1) (x) I + I (x) A(g2).
WeightedGraph cartesian_product(const WeightedGraph& g1,
                                const WeightedGraph& g2,
                                std::size_t max_vertices = kDefaultMaxVertices);

struct Regularity {
  bool regular = false;
  double degree = 0.0;  // d_0 when regular
};

Regularity is_regular(const WeightedGraph& g);

/// A(g) (x) I + I (x) A(h) computed directly from matrices.
Eigen::MatrixXd kronecker_sum(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// Builds the graph whose adjacency matrix is `a`. Entries must be
/// nonnegative; |a_ij| <= `zero_tol` is treated as absent.
WeightedGraph graph_from_adjacency(const SymmetricMatrix& a,
                                   double zero_tol = 0.0);

}  // namespace covwalk
