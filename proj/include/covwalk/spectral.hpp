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

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "covwalk/config.hpp"
#include "covwalk/graph.hpp"

namespace covwalk {

using Complex = std::complex<double>;

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class EigenMethod {
  kTridiagonalQL,  // Householder reduction + implicit-shift QL
  kJacobi,         // cyclic Jacobi rotations
};

/// Eigenvalues ascending; eigenvectors are the matching orthonormal columns.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;

  std::size_t dimension() const { return static_cast<std::size_t>(eigenvalues.size()); }
  /// Q diag(lambda) Q^T.
  Eigen::MatrixXd reconstruct() const;
};

/// Full decomposition of a symmetric matrix. Deterministic for identical
/// input bits. Throws std::length_error above `max_dim` and
/// ConvergenceError if the iteration stalls.
SpectralDecomposition eigendecompose(const SymmetricMatrix& m,
                                     EigenMethod method = EigenMethod::kTridiagonalQL,
                                     std::size_t max_dim = kDefaultMaxVertices);

/// Replaces each eigenvalue by the Rayleigh quotient v^T M v / v^T v
/// accumulated in extended precision, then restores ascending order. The
/// eigenvalue error drops from O(eps ||M||) to the final rounding, which
/// matters when exp(-i lambda t) is needed for large t.
void refine_eigenvalues(SpectralDecomposition& d, const SymmetricMatrix& m);

/// Index range [begin, end) of one eigenspace in the ascending order.
struct Eigenspace {
  double eigenvalue = 0.0;  // mean of the grouped eigenvalues
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// Chains consecutive eigenvalues closer than `gap` into one eigenspace.
std::vector<Eigenspace> group_eigenvalues(const Eigen::VectorXd& sorted_values,
                                          double gap = tol::kEigenGap);

enum class Hamiltonian { kLaplacian, kAdjacency };

SymmetricMatrix hamiltonian_matrix(const WeightedGraph& g, Hamiltonian kind);

/// Unit vector of complex amplitudes over a vertex set.
class QuantumState {
 public:
  /// Throws std::invalid_argument unless | ||psi|| - 1 | <= tol::kNorm.
  explicit QuantumState(Eigen::VectorXcd amplitudes);

  static QuantumState basis(std::size_t dim, std::size_t index);
  /// Rescales to unit norm; throws on the zero vector.
  static QuantumState normalized(Eigen::VectorXcd amplitudes);

  std::size_t dimension() const { return static_cast<std::size_t>(amp_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amp_; }
  Complex operator[](std::size_t i) const { return amp_(static_cast<Eigen::Index>(i)); }
  std::vector<double> probabilities() const;

 private:
  Eigen::VectorXcd amp_;
};

/// H(tau) = sum_j exp(-lambda_j tau) v_j v_j^T. Throws std::domain_error when
/// |tau| * max|lambda| > 700.
Eigen::MatrixXd heat_kernel(const SpectralDecomposition& d, double tau);

/// Dense unitary exp(-i M t).
class Propagator {
 public:
  explicit Propagator(Eigen::MatrixXcd matrix) : u_(std::move(matrix)) {}
  const Eigen::MatrixXcd& matrix() const { return u_; }
  std::size_t dimension() const { return static_cast<std::size_t>(u_.rows()); }
  /// max |(U^H U - I)_ij|
  double unitarity_defect() const;

 private:
  Eigen::MatrixXcd u_;
};

/// U(t) = sum_j exp(-i lambda_j t) v_j v_j^T.
Propagator propagator(const SpectralDecomposition& d, double t);

/// V diag(exp(-i lambda t)) V^T psi, without forming U.
QuantumState evolve(const QuantumState& state, const SpectralDecomposition& d, double t);

/// Spectrum of the symmetric circulant whose (u, v) entry is row[(v - u) mod m].
///
/// eigenvalues[j] = sum_k row[k] exp(2 pi i j k / m) belongs to the Fourier
/// mode W(j)_k = exp(2 pi i j k / m) / sqrt(m). Computed with an FFT when m
/// is a power of two and by direct summation otherwise.
struct CirculantSpectrum {
  std::vector<double> eigenvalues;  // indexed by Fourier mode j, not sorted

  std::size_t size() const { return eigenvalues.size(); }
  Eigen::VectorXd sorted() const;
};

/// Throws std::invalid_argument unless row[k] == row[m - k] for all k.
CirculantSpectrum circulant_spectrum(const std::vector<double>& first_row);

/// W(j) as a column vector.
Eigen::VectorXcd fourier_mode(std::size_t m, std::size_t j);

/// First row of A(C_m).
std::vector<double> cycle_row(std::size_t m);

/// Kronecker product of the factor propagators, first factor most significant.
Propagator tensor_propagator(
    const std::vector<std::pair<const SpectralDecomposition*, double>>& factors,
    std::size_t max_dim = kDefaultMaxVertices);

}  // namespace covwalk
