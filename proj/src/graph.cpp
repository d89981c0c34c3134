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

#include "covwalk/graph.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace covwalk {

SymmetricMatrix::SymmetricMatrix(std::size_t dim)
    : m_(Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim),
                               static_cast<Eigen::Index>(dim))) {}

SymmetricMatrix::SymmetricMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) {
    throw std::invalid_argument("SymmetricMatrix: matrix is not square");
  }
  for (Eigen::Index i = 0; i < m_.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < m_.cols(); ++j) {
      if (m_(i, j) != m_(j, i)) {
        throw std::invalid_argument("SymmetricMatrix: matrix is not symmetric");
      }
    }
  }
}

SymmetricMatrix SymmetricMatrix::symmetrized(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("SymmetricMatrix: matrix is not square");
  }
  Eigen::MatrixXd s = 0.5 * (m + m.transpose());
  // (a + b) / 2 and (b + a) / 2 round identically, but be explicit.
  for (Eigen::Index i = 0; i < s.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < s.cols(); ++j) s(j, i) = s(i, j);
  }
  return SymmetricMatrix(std::move(s));
}

void SymmetricMatrix::set(std::size_t i, std::size_t j, double value) {
  m_(i, j) = value;
  m_(j, i) = value;
}

void SymmetricMatrix::add(std::size_t i, std::size_t j, double value) {
  m_(i, j) += value;
  if (i != j) m_(j, i) = m_(i, j);
}

SymmetricMatrix operator-(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  return SymmetricMatrix(Eigen::MatrixXd(a.m_ - b.m_));
}

SymmetricMatrix operator+(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  return SymmetricMatrix(Eigen::MatrixXd(a.m_ + b.m_));
}

WeightedGraph::WeightedGraph(std::size_t num_vertices,
                             const std::vector<Edge>& edges,
                             std::vector<std::string> labels,
                             std::size_t max_vertices)
    : n_(num_vertices), labels_(std::move(labels)) {
  if (n_ == 0) throw std::invalid_argument("WeightedGraph: no vertices");
  if (n_ > max_vertices) {
    throw std::length_error("WeightedGraph: " + std::to_string(n_) +
                            " vertices exceeds cap " +
                            std::to_string(max_vertices));
  }
  if (!labels_.empty() && labels_.size() != n_) {
    throw std::invalid_argument("WeightedGraph: label count mismatch");
  }
  for (const Edge& e : edges) {
    if (e.u >= n_ || e.v >= n_) {
      throw std::invalid_argument("WeightedGraph: edge endpoint out of range");
    }
    if (!std::isfinite(e.weight) || e.weight < 0.0) {
      throw std::invalid_argument("WeightedGraph: weights must be finite and >= 0");
    }
    if (e.weight == 0.0) continue;
    weights_[{std::min(e.u, e.v), std::max(e.u, e.v)}] += e.weight;
  }
}

double WeightedGraph::weight(VertexId u, VertexId v) const {
  if (u >= n_ || v >= n_) {
    throw std::out_of_range("WeightedGraph::weight: vertex out of range");
  }
  auto it = weights_.find({std::min(u, v), std::max(u, v)});
  return it == weights_.end() ? 0.0 : it->second;
}

std::vector<Edge> WeightedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(weights_.size());
  for (const auto& [key, w] : weights_) out.push_back({key.first, key.second, w});
  return out;
}

bool WeightedGraph::is_simple() const {
  for (const auto& [key, w] : weights_) {
    if (key.first == key.second || w != 1.0) return false;
  }
  return true;
}

SymmetricMatrix adjacency_matrix(const WeightedGraph& g) {
  SymmetricMatrix a(g.num_vertices());
  for (const Edge& e : g.edges()) a.set(e.u, e.v, e.weight);
  return a;
}

std::vector<double> degrees(const WeightedGraph& g) {
  std::vector<double> d(g.num_vertices(), 0.0);
  for (const Edge& e : g.edges()) {
    d[e.u] += e.weight;
    if (e.u != e.v) d[e.v] += e.weight;
  }
  return d;
}

double degree(const WeightedGraph& g, VertexId v) {
  if (v >= g.num_vertices()) {
    throw std::out_of_range("degree: vertex out of range");
  }
  return degrees(g)[v];
}

SymmetricMatrix degree_matrix(const WeightedGraph& g) {
  SymmetricMatrix d(g.num_vertices());
  const std::vector<double> deg = degrees(g);
  for (std::size_t v = 0; v < deg.size(); ++v) d.set(v, v, deg[v]);
  return d;
}

SymmetricMatrix laplacian(const WeightedGraph& g) {
  return degree_matrix(g) - adjacency_matrix(g);
}

WeightedGraph cartesian_product(const WeightedGraph& g1,
                                const WeightedGraph& g2,
                                std::size_t max_vertices) {
  const std::size_t n1 = g1.num_vertices();
  const std::size_t n2 = g2.num_vertices();
  if (n1 > max_vertices / n2) {
    throw std::length_error("cartesian_product: product exceeds vertex cap");
  }
  std::vector<Edge> edges;
  // A(g1) (x) I: (i1, k) ~ (j1, k)
  for (const Edge& e : g1.edges()) {
    for (std::size_t k = 0; k < n2; ++k) {
      edges.push_back({e.u * n2 + k, e.v * n2 + k, e.weight});
    }
  }
  // I (x) A(g2): (k, i2) ~ (k, j2)
  for (const Edge& e : g2.edges()) {
    for (std::size_t k = 0; k < n1; ++k) {
      edges.push_back({k * n2 + e.u, k * n2 + e.v, e.weight});
    }
  }
  return WeightedGraph(n1 * n2, edges, {}, max_vertices);
}

Regularity is_regular(const WeightedGraph& g) {
  const std::vector<double> d = degrees(g);
  double worst = 0.0;
  for (double dv : d) worst = std::max(worst, std::abs(dv - d[0]));
  return worst <= tol::kRegular ? Regularity{true, d[0]} : Regularity{false, 0.0};
}

Eigen::MatrixXd kronecker_sum(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  const Eigen::Index n1 = a.rows();
  const Eigen::Index n2 = b.rows();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n1 * n2, n1 * n2);
  for (Eigen::Index i = 0; i < n1; ++i) {
    for (Eigen::Index j = 0; j < n1; ++j) {
      out.block(i * n2, j * n2, n2, n2).diagonal().array() += a(i, j);
    }
    out.block(i * n2, i * n2, n2, n2) += b;
  }
  return out;
}

WeightedGraph graph_from_adjacency(const SymmetricMatrix& a, double zero_tol) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i; j < a.dim(); ++j) {
      const double w = a(i, j);
      if (std::abs(w) <= zero_tol) continue;
      if (w < 0.0) {
        throw std::invalid_argument("graph_from_adjacency: negative entry");
      }
      edges.push_back({i, j, w});
    }
  }
  return WeightedGraph(a.dim(), edges);
}

}  // namespace covwalk
