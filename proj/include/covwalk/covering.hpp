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
#include <vector>

#include <Eigen/Dense>

#include "covwalk/graph.hpp"
#include "covwalk/groups.hpp"
#include "covwalk/spectral.hpp"

namespace covwalk {

/// Total surjective map pi: V(Y) -> V(X) with its fibres.
class VertexMap {
 public:
  /// Throws std::invalid_argument if some image is >= target_size or some
  /// target vertex has an empty fibre.
  VertexMap(std::vector<std::size_t> pi, std::size_t target_size);

  static VertexMap identity(std::size_t n);

  std::size_t source_size() const { return pi_.size(); }
  std::size_t target_size() const { return fibres_.size(); }
  std::size_t operator[](std::size_t v) const { return pi_[v]; }
  const std::vector<std::size_t>& images() const { return pi_; }
  /// Fibre members in increasing order.
  const std::vector<std::size_t>& fibre(std::size_t u) const { return fibres_[u]; }
  std::size_t fibre_size(std::size_t u) const { return fibres_[u].size(); }

 private:
  std::vector<std::size_t> pi_;
  std::vector<std::vector<std::size_t>> fibres_;
};

/// P = sum_u sum_{x in pi^-1(u)} |pi^-1(u)|^{-1/2} |u><x|, size |V(X)| x |V(Y)|.
/// P P^T = I and P^T P is the projector onto fibre-constant vectors.
struct PullbackOperator {
  Eigen::MatrixXd matrix;
};

PullbackOperator pullback_operator(const VertexMap& pi);

struct CoverReport {
  bool is_cover = false;
  /// Index from the first nonzero pair of X; 0 when no pair determines it.
  double mu = 0.0;
  /// ||P A(Y) - A(X) P||_max.
  double max_residual = 0.0;
  /// Largest |mu_uv - mu| over nonzero pairs, and the largest fibre-block
  /// weight sum sitting over a zero pair of X.
  double mu_spread = 0.0;
  bool mu_consistent = false;
  /// Equitability: the worst spread of h_v(j) = sum_{x in pi^-1(j)} w(v, x)
  /// over v in one fibre, and where it occurs.
  double equitable_spread = 0.0;
  std::size_t worst_fibre = 0;
  std::size_t worst_target = 0;
};

/// Cover test against a given base graph X: the Godsil-McKay commutation
/// P A(Y) = A(X) P within tol::kStructural, and the weight-sum condition
/// with a single index mu. Never throws for well-formed inputs; size
/// mismatches throw std::invalid_argument.
CoverReport verify_cover(const WeightedGraph& y, const WeightedGraph& x,
                         const VertexMap& pi);

struct QuotientGraph {
  WeightedGraph graph;        // adjacency P A(Y) P^T
  double mu = 1.0;            // fixed by returning P A(Y) P^T itself
  SymmetricMatrix adjacency;  // P A(Y) P^T
  SymmetricMatrix degree;     // P D(Y) P^T (diagonal)

  /// P D(Y) P^T - P A(Y) P^T.
  SymmetricMatrix laplacian() const { return degree - adjacency; }
};

/// Throws std::invalid_argument if the fibres are not an equitable partition.
QuotientGraph quotient_graph(const WeightedGraph& y, const VertexMap& pi);

/// A graph cover Y -> X. Only constructible through verification, so every
/// instance satisfies verify_cover.
class CoveringMap {
 public:
  /// Throws std::invalid_argument when verify_cover rejects the triple.
  static CoveringMap verified(WeightedGraph y, WeightedGraph x, VertexMap pi);
  /// Y over its own quotient P A(Y) P^T.
  static CoveringMap onto_quotient(WeightedGraph y, VertexMap pi);

  const WeightedGraph& source() const { return y_; }
  const WeightedGraph& target() const { return x_; }
  const VertexMap& map() const { return pi_; }
  double mu() const { return report_.mu; }
  const CoverReport& report() const { return report_; }

 private:
  CoveringMap(WeightedGraph y, WeightedGraph x, VertexMap pi, CoverReport report)
      : y_(std::move(y)), x_(std::move(x)), pi_(std::move(pi)), report_(report) {}

  WeightedGraph y_;
  WeightedGraph x_;
  VertexMap pi_;
  CoverReport report_;
};

/// pi(g) = gH from the Cayley graph X(G, S) onto the Schreier graph X(G/H, S).
CoveringMap cayley_to_schreier_map(const FiniteGroup& g, const Subgroup& h,
                                   const GeneratingSet& s);

/// P^T phi: amplitude phi_u / sqrt|pi^-1(u)| on every vertex of the fibre.
QuantumState lift_state(const CoveringMap& cm, const QuantumState& phi);
Eigen::VectorXcd lift_vector(const VertexMap& pi, const Eigen::VectorXcd& phi);

/// ||P^T P psi - psi||_2 <= tol::kFibreConstant.
bool is_fibre_constant(const VertexMap& pi, const QuantumState& psi);
bool is_fibre_constant(const CoveringMap& cm, const QuantumState& psi);

/// P^T f for an eigenpair (f, lambda) of A(X). Throws std::invalid_argument
/// if ||A(X) f - lambda f|| > tol::kStructural.
Eigen::VectorXd lift_eigenvector(const CoveringMap& cm, const Eigen::VectorXd& f,
                                 double lambda);

/// Walks on Y and on the quotient X with cached decompositions.
///
/// The X Hamiltonian is P A(Y) P^T (adjacency) or P D(Y) P^T - P A(Y) P^T
/// (Laplacian), both computed from Y.
class QuotientWalk {
 public:
  QuotientWalk(const CoveringMap& cm, Hamiltonian kind);

  /// Pairs an arbitrary Y with an arbitrary X Hamiltonian; no cover check.
  /// Used for negative controls.
  QuotientWalk(const WeightedGraph& y, VertexMap pi, const SymmetricMatrix& x_hamiltonian,
               Hamiltonian kind);

  /// ||U[Y](t) P^T phi - P^T U[X](t) phi||_2.
  double residual(const QuantumState& phi, double t) const;

  const SpectralDecomposition& source_spectrum() const { return y_; }
  const SpectralDecomposition& target_spectrum() const { return x_; }

 private:
  VertexMap pi_;
  SpectralDecomposition y_;
  SpectralDecomposition x_;
};

/// One-shot form of QuotientWalk::residual.
double quotient_walk_residual(const CoveringMap& cm, const QuantumState& phi, double t,
                              Hamiltonian kind);

/// Largest violation when matching `sub` into `super` as a sub-multiset
/// (both ascending) with tolerance `tol`; +inf when no matching exists.
double submultiset_defect(const Eigen::VectorXd& sub, const Eigen::VectorXd& super,
                          double tol);

}  // namespace covwalk
