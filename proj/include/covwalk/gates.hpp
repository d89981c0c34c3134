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
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "covwalk/covering.hpp"
#include "covwalk/graph.hpp"
#include "covwalk/spectral.hpp"

namespace covwalk {

/// Register size limit for dense simulation.
inline constexpr std::size_t kMaxSimulatedQubits = 12;

// Qubit 0 is the most significant bit of the basis index.

struct HadamardGate {
  std::size_t target = 0;
};

/// diag(1, 1, 1, e^{i angle}) on (control, target).
struct ControlledPhaseGate {
  std::size_t control = 0;
  std::size_t target = 0;
  double angle = 0.0;
};

struct SwapGate {
  std::size_t a = 0;
  std::size_t b = 0;
};

enum class PhaseFunction {
  kCycle,      // lambda_j = 2 cos(2 pi j / m)
  kCirculant,  // lambda_j from circulant_spectrum(row)
};

/// Describes the diagonal exp(-i theta_j) on a register of m = 2^k basis
/// states, theta_j = (2 pi / 2^b) floor(((mu_j t) mod 2pi) 2^b / (2 pi)),
/// where mu_j = lambda_j for the adjacency walk and degree - lambda_j for
/// the Laplacian walk.
struct PhaseSpec {
  PhaseFunction function = PhaseFunction::kCycle;
  std::size_t modulus = 0;
  std::vector<double> row;  // kCirculant only
  double t = 0.0;
  int bits = 32;
  Hamiltonian kind = Hamiltonian::kAdjacency;
};

/// Eigenvalue lambda_j of the adjacency operator named by `spec`.
std::vector<double> phase_eigenvalues(const PhaseSpec& spec);

/// The dense circulant whose spectrum `spec` encodes, i.e. the Hamiltonian
/// the compiled walk approximates. For kCycle the generators +1 and -1 are
/// counted separately, so modulus 2 gives a doubled edge.
SymmetricMatrix phase_hamiltonian(const PhaseSpec& spec);

/// Rounded phases theta_j in [0, 2 pi), one per basis state. Throws
/// std::invalid_argument for bits outside [1, 62] or an inconsistent spec.
std::vector<double> oracle_phases(const PhaseSpec& spec);

/// exp(-i theta_j) on the basis states of the listed qubits (most
/// significant first).
struct DiagonalOracleGate {
  std::vector<std::size_t> qubits;
  PhaseSpec phases;
};

/// |x> -> |perm[x]> on the whole register.
struct PermutationGate {
  std::vector<std::size_t> perm;
};

using Gate =
    std::variant<HadamardGate, ControlledPhaseGate, SwapGate, DiagonalOracleGate, PermutationGate>;

std::string gate_kind(const Gate& g);

struct GateCounts {
  std::size_t hadamard = 0;
  std::size_t controlled_phase = 0;
  std::size_t swap = 0;
  std::size_t diagonal_oracle = 0;
  std::size_t permutation = 0;

  std::size_t total() const {
    return hadamard + controlled_phase + swap + diagonal_oracle + permutation;
  }
  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

/// Cost of realizing one diagonal oracle by phase kickback, reported next
/// to the elementary gates instead of being simulated.
struct KickbackCost {
  std::size_t ancilla_qubits = 0;
  /// Gates preparing and unpreparing the ancilla Fourier state.
  std::size_t preparation_gates = 0;
};

/// Gates in application order: gates()[0] acts first.
class GateSequence {
 public:
  explicit GateSequence(std::size_t width) : width_(width) {}

  /// Throws std::out_of_range for qubit indices >= width and
  /// std::invalid_argument for non-finite angles, repeated qubits or a
  /// permutation of the wrong length.
  void append(Gate g);
  void append(const GateSequence& other);

  std::size_t width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const GateCounts& counts() const { return counts_; }
  KickbackCost kickback_cost() const;

 private:
  std::size_t width_;
  std::vector<Gate> gates_;
  GateCounts counts_;
};

/// QFT|j> = 2^{-w/2} sum_k exp(2 pi i j k / 2^w) |k> on `qubits`, with
/// qubits.size() Hadamards, w(w-1)/2 controlled phases and floor(w/2) swaps.
GateSequence qft_gates(std::size_t width, const std::vector<std::size_t>& qubits);
/// The adjoint: reversed order and negated angles.
GateSequence inverse_qft_gates(std::size_t width, const std::vector<std::size_t>& qubits);

/// exp(-i A(C_{2^n}) t) as QFT Phi(t) QFT^dagger, i.e. the inverse QFT is
/// applied first. Gate counts depend on n only.
GateSequence compile_cycle_walk(std::size_t n, double t, int bits,
                                Hamiltonian kind = Hamiltonian::kAdjacency);

/// Same shape for a symmetric circulant with power-of-two size. Throws
/// std::invalid_argument otherwise.
GateSequence compile_circulant_walk(const std::vector<double>& first_row, double t, int bits,
                                    Hamiltonian kind = Hamiltonian::kAdjacency);

/// m cycle walks on consecutive blocks of n qubits; factor 0 is most
/// significant, matching cartesian_product and tensor_propagator. Throws
/// std::length_error when m * n exceeds 62 qubits.
GateSequence compile_torus_walk(std::size_t m, std::size_t n, double t, int bits,
                                Hamiltonian kind = Hamiltonian::kAdjacency);

/// Dense product of the gate matrices. Throws std::length_error above
/// kMaxSimulatedQubits.
Eigen::MatrixXcd simulate_gates(const GateSequence& seq);

struct UnitaryDistance {
  double operator_norm = 0.0;  // largest singular value of U - V
  double max_entry = 0.0;      // max |U_ij - V_ij|
};

/// No global phase is removed. Throws std::invalid_argument on shape mismatch.
UnitaryDistance unitary_distance(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v);

enum class Coupling {
  kIdentity,  // C = I_m
  kAllOnes,   // C = J_m / sqrt(m)
};

/// ((exp(-i (A (x) C) t / r)) (exp(-i D t / r)))^r, each factor from its own
/// spectral decomposition. Throws std::invalid_argument on inconsistent
/// dimensions or r == 0.
Propagator trotter_compile(const SymmetricMatrix& a_base, const SymmetricMatrix& d_sparse,
                           std::size_t fibre_size, double t, std::size_t steps,
                           Coupling coupling = Coupling::kIdentity);

/// A(Y) in tower order written as A(X) (x) I_m + D.
struct TowerSplit {
  SymmetricMatrix base;        // A(X)
  SymmetricMatrix correction;  // D
  std::size_t fibre_size = 0;
  /// position[v] = pi(v) * m + (rank of v inside its fibre).
  std::vector<std::size_t> position;

  /// A(Y) relabelled by `position`.
  SymmetricMatrix relabelled_source() const;
};

/// Throws std::invalid_argument unless every fibre has the same size.
TowerSplit tower_split(const WeightedGraph& y, const WeightedGraph& x, const VertexMap& pi);

}  // namespace covwalk
