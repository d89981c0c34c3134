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
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "covwalk/rng.hpp"
#include "covwalk/spectral.hpp"

namespace covwalk {

/// alpha_j = q^{-1/2} sum_{l<q} |j + l p>, q = n / p. Equal to lift_state of
/// the basis state |j> under pi: C_n -> C_p, pi(k) = k mod p. Throws
/// std::invalid_argument unless p | n and 0 <= j < p.
QuantumState constant_coset_state(std::size_t n, std::size_t p, std::size_t j);

/// Nonzero <W(k)|alpha_j> in increasing k: k = l q for l < p, each of
/// modulus p^{-1/2}.
std::vector<std::pair<std::size_t, Complex>> coset_fourier_support(std::size_t n, std::size_t p,
                                                                   std::size_t j);

/// Emits constant-coset states alpha_j with j uniform in [0, p). The period
/// p is held privately; solvers only see the states.
class CosetOracle {
 public:
  /// Throws std::invalid_argument unless 1 < p <= n and p | n.
  CosetOracle(std::size_t n, std::size_t p, std::uint64_t seed, std::uint64_t stream = 0);

  std::size_t modulus() const { return n_; }
  QuantumState emit();

  /// For test harnesses that score a solver.
  std::size_t hidden_period() const { return p_; }

 private:
  std::size_t n_;
  std::size_t p_;
  CounterRng rng_;
};

/// One eigenspace outcome with its Born probability.
struct Outcome {
  double eigenvalue = 0.0;
  double probability = 0.0;
};

/// ||Pi_lambda psi||^2 for every eigenspace of `d` (grouped at tol::kEigenGap),
/// in ascending eigenvalue order.
std::vector<Outcome> outcome_distribution(const QuantumState& psi, const SpectralDecomposition& d);

/// Same for the circulant with the given spectrum, through the Fourier
/// modes W(k).
std::vector<Outcome> outcome_distribution(const QuantumState& psi, const CirculantSpectrum& c);

struct MeasurementSample {
  double lambda_tilde = 0.0;  // eigenvalue rounded to `bits` fractional bits
  int bits = 0;
};

/// Round-to-nearest on the grid 2^{-bits}.
double round_to_bits(double x, int bits);

/// Draws an outcome by inverse CDF from one uniform of `rng` and rounds it.
/// Throws std::invalid_argument on an empty distribution or bits < 1.
MeasurementSample sample_outcome(const std::vector<Outcome>& distribution, int bits,
                                 CounterRng& rng);

MeasurementSample measure_hamiltonian(const QuantumState& psi, const SpectralDecomposition& d,
                                      int bits, CounterRng& rng);
MeasurementSample measure_hamiltonian(const QuantumState& psi, const CirculantSpectrum& c,
                                      int bits, CounterRng& rng);

struct Rational {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Last convergent of the continued-fraction expansion of x with
/// denominator <= max_denominator. The double is expanded exactly as a
/// dyadic rational. Throws std::invalid_argument for x outside [0, 1] or
/// max_denominator < 1.
Rational continued_fractions(double x, std::int64_t max_denominator);

struct HiddenCoverSample {
  double lambda_tilde = 0.0;
  double x_tilde = 0.0;  // arccos(lambda_tilde / 2) / (2 pi), in [0, 1/2]
  Rational fraction;
  std::uint64_t lcm = 1;  // of the denominators so far
};

struct HiddenCoverResult {
  bool success = false;
  std::uint64_t period = 0;  // recovered p; 0 on failure
  std::uint64_t fibre = 0;   // n / p
  std::vector<HiddenCoverSample> samples;
};

/// Measurement of the adjacency walk of C_n on emitted coset states with
/// continued-fraction recovery. Caches the spectrum of C_n and the outcome
/// distribution of every distinct state it has seen.
class HiddenCycleSolver {
 public:
  /// Throws std::invalid_argument for n < 3 or bits outside [1, 52].
  HiddenCycleSolver(std::size_t n, int bits);

  std::size_t modulus() const { return n_; }

  MeasurementSample measure(const QuantumState& psi, CounterRng& rng);

  /// Stops once the LCM of the recovered denominators exceeds 1, divides n
  /// and has been unchanged over the last 3 samples. Reports failure after
  /// max_samples otherwise.
  HiddenCoverResult solve(CosetOracle& oracle, std::size_t max_samples, CounterRng& rng);

  /// x~ and its convergent for one measured eigenvalue.
  HiddenCoverSample interpret(double lambda_tilde) const;

 private:
  const std::vector<Outcome>& distribution(const QuantumState& psi);

  std::size_t n_;
  int bits_;
  std::vector<double> cos_table_;  // cos(2 pi r / n)
  std::vector<double> sin_table_;
  CirculantSpectrum spectrum_;
  // Fourier modes grouped by eigenvalue, ascending.
  std::vector<std::pair<double, std::vector<std::size_t>>> spaces_;
  // Keyed by the flattened (index, re, im) triples of the state's support.
  std::map<std::vector<double>, std::vector<Outcome>> cache_;
};

/// One-shot form of HiddenCycleSolver::solve.
HiddenCoverResult solve_hidden_cycle_cover(std::size_t n, CosetOracle& oracle, int bits,
                                           std::size_t max_samples, CounterRng& rng);

struct DihedralIsospectralityReport {
  std::size_t n = 0;
  /// Sorted adjacency spectrum of X(D_n / <e, s^j t>, {s, s^-1, t}), j = 0..n-1.
  std::vector<Eigen::VectorXd> spectra;
  double max_pairwise_distance = 0.0;  // max over pairs of the max |difference|
  bool indistinguishable = false;      // max_pairwise_distance <= tol
  /// Sorted spectrum for the rotation subgroup <s>, as a negative control.
  Eigen::VectorXd rotation_control;
  /// Distance from spectra[0] to the control; +inf when the sizes differ.
  double control_distance = 0.0;
};

/// Throws std::invalid_argument for n < 3 and std::length_error above the cap.
DihedralIsospectralityReport dihedral_isospectrality_report(std::size_t n, double tol = 1e-9);

/// max_i |a_i - b_i| for equal sizes, +inf otherwise.
double sorted_spectrum_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

}  // namespace covwalk
