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

#include "covwalk/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace covwalk {
namespace {

// exp(-i lambda t) with the product and the range reduction carried out in
// extended precision; for t ~ 1e6 the double product alone loses ~1e-10.
Complex unit_phase(double lambda, double t) {
  const long double angle = -static_cast<long double>(lambda) * static_cast<long double>(t);
  return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

bool is_power_of_two(std::size_t m) { return m != 0 && (m & (m - 1)) == 0; }

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

SymmetricMatrix hamiltonian_matrix(const WeightedGraph& g, Hamiltonian kind) {
  return kind == Hamiltonian::kLaplacian ? laplacian(g) : adjacency_matrix(g);
}

QuantumState::QuantumState(Eigen::VectorXcd amplitudes) : amp_(std::move(amplitudes)) {
  if (amp_.size() == 0) throw std::invalid_argument("QuantumState: empty");
  if (std::abs(amp_.norm() - 1.0) > tol::kNorm) {
    throw std::invalid_argument("QuantumState: amplitudes are not unit norm");
  }
}

QuantumState QuantumState::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::out_of_range("QuantumState::basis: index out of range");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return QuantumState(std::move(v));
}

QuantumState QuantumState::normalized(Eigen::VectorXcd amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("QuantumState::normalized: zero or non-finite vector");
  }
  return QuantumState(amplitudes / norm);
}

std::vector<double> QuantumState::probabilities() const {
  std::vector<double> p(dimension());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(amp_(static_cast<Eigen::Index>(i)));
  return p;
}

Eigen::MatrixXd heat_kernel(const SpectralDecomposition& d, double tau) {
  if (!std::isfinite(tau)) throw std::domain_error("heat_kernel: tau must be finite");
  const double max_abs = d.eigenvalues.cwiseAbs().maxCoeff();
  if (std::abs(tau) * max_abs > 700.0) {
    throw std::domain_error("heat_kernel: |tau| * max|lambda| exceeds 700");
  }
  const Eigen::VectorXd w = (-tau * d.eigenvalues).array().exp();
  return d.eigenvectors * w.asDiagonal() * d.eigenvectors.transpose();
}

double Propagator::unitarity_defect() const {
  const Eigen::MatrixXcd g = u_.adjoint() * u_ -
                             Eigen::MatrixXcd::Identity(u_.rows(), u_.cols());
  return g.cwiseAbs().maxCoeff();
}

Propagator propagator(const SpectralDecomposition& d, double t) {
  if (!std::isfinite(t)) throw std::domain_error("propagator: t must be finite");
  const Eigen::Index n = static_cast<Eigen::Index>(d.dimension());
  Eigen::VectorXcd phase(n);
  for (Eigen::Index j = 0; j < n; ++j) phase(j) = unit_phase(d.eigenvalues(j), t);
  const Eigen::MatrixXcd q = d.eigenvectors.cast<Complex>();
  return Propagator(q * phase.asDiagonal() * q.transpose());
}

QuantumState evolve(const QuantumState& state, const SpectralDecomposition& d, double t) {
  if (state.dimension() != d.dimension()) {
    throw std::invalid_argument("evolve: dimension mismatch");
  }
  const Eigen::Index n = static_cast<Eigen::Index>(d.dimension());
  const Eigen::VectorXcd& psi = state.amplitudes();
  // c = V^T psi, split into real and imaginary parts to stay in real BLAS.
  Eigen::VectorXd re = d.eigenvectors.transpose() * psi.real();
  Eigen::VectorXd im = d.eigenvectors.transpose() * psi.imag();
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex c = Complex(re(j), im(j)) * unit_phase(d.eigenvalues(j), t);
    re(j) = c.real();
    im(j) = c.imag();
  }
  Eigen::VectorXcd out(n);
  out.real() = d.eigenvectors * re;
  out.imag() = d.eigenvectors * im;
  return QuantumState(std::move(out));
}

Eigen::VectorXd CirculantSpectrum::sorted() const {
  Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(
      eigenvalues.data(), static_cast<Eigen::Index>(eigenvalues.size()));
  std::sort(v.data(), v.data() + v.size());
  return v;
}

CirculantSpectrum circulant_spectrum(const std::vector<double>& first_row) {
  const std::size_t m = first_row.size();
  if (m == 0) throw std::invalid_argument("circulant_spectrum: empty row");
  for (std::size_t k = 1; k < m; ++k) {
    if (first_row[k] != first_row[m - k]) {
      throw std::invalid_argument("circulant_spectrum: row is not symmetric (row[k] != row[m-k])");
    }
  }
  CirculantSpectrum out;
  out.eigenvalues.resize(m);
  if (is_power_of_two(m)) {
    // FFTW_BACKWARD computes sum_k x_k exp(+2 pi i j k / m).
    fftw_complex* buf = fftw_alloc_complex(m);
    for (std::size_t k = 0; k < m; ++k) {
      buf[k][0] = first_row[k];
      buf[k][1] = 0.0;
    }
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(m), buf, buf, FFTW_BACKWARD,
                                      FFTW_ESTIMATE);
    fftw_execute(plan);
    for (std::size_t j = 0; j < m; ++j) out.eigenvalues[j] = buf[j][0];
    fftw_destroy_plan(plan);
    fftw_free(buf);
  } else {
    // Imaginary parts cancel pairwise for a symmetric row.
    for (std::size_t j = 0; j < m; ++j) {
      double sum = 0.0;
      for (std::size_t k = 0; k < m; ++k) {
        if (first_row[k] == 0.0) continue;
        const std::size_t jk = (j * k) % m;
        sum += first_row[k] * std::cos(2.0 * std::numbers::pi * static_cast<double>(jk) /
                                       static_cast<double>(m));
      }
      out.eigenvalues[j] = sum;
    }
  }
  return out;
}

Eigen::VectorXcd fourier_mode(std::size_t m, std::size_t j) {
  Eigen::VectorXcd w(static_cast<Eigen::Index>(m));
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  for (std::size_t k = 0; k < m; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * k) % m) /
                         static_cast<double>(m);
    w(static_cast<Eigen::Index>(k)) = std::polar(scale, angle);
  }
  return w;
}

std::vector<double> cycle_row(std::size_t m) {
  if (m < 2) throw std::invalid_argument("cycle_row: need m >= 2");
  std::vector<double> row(m, 0.0);
  row[1] = 1.0;
  row[m - 1] = 1.0;  // same entry when m = 2 (K_2)
  return row;
}

Propagator tensor_propagator(
    const std::vector<std::pair<const SpectralDecomposition*, double>>& factors,
    std::size_t max_dim) {
  if (factors.empty()) throw std::invalid_argument("tensor_propagator: no factors");
  std::size_t dim = 1;
  for (const auto& [d, t] : factors) {
    if (d == nullptr) throw std::invalid_argument("tensor_propagator: null factor");
    if (d->dimension() > max_dim / dim) {
      throw std::length_error("tensor_propagator: total dimension exceeds cap");
    }
    dim *= d->dimension();
  }
  Eigen::MatrixXcd u = propagator(*factors.front().first, factors.front().second).matrix();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    u = kron(u, propagator(*factors[i].first, factors[i].second).matrix());
  }
  return Propagator(std::move(u));
}

}  // namespace covwalk
