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

#include "covwalk/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace covwalk {
namespace {

constexpr long double kTwoPi = 2.0L * std::numbers::pi_v<long double>;

bool is_power_of_two(std::size_t m) { return m != 0 && (m & (m - 1)) == 0; }

std::size_t log2_exact(std::size_t m) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < m) ++k;
  return k;
}

std::size_t qft_gate_count(std::size_t w) { return w + w * (w - 1) / 2 + w / 2; }

void check_qubit(std::size_t q, std::size_t width) {
  if (q >= width) {
    throw std::out_of_range("gate qubit " + std::to_string(q) + " outside register of width " +
                            std::to_string(width));
  }
}

std::vector<std::size_t> block(std::size_t first, std::size_t count) {
  std::vector<std::size_t> q(count);
  for (std::size_t i = 0; i < count; ++i) q[i] = first + i;
  return q;
}

GateSequence compile_block_walk(const PhaseSpec& spec, std::size_t width,
                                const std::vector<std::size_t>& qubits) {
  GateSequence seq(width);
  seq.append(inverse_qft_gates(width, qubits));
  seq.append(DiagonalOracleGate{qubits, spec});
  seq.append(qft_gates(width, qubits));
  return seq;
}

}  // namespace

std::vector<double> phase_eigenvalues(const PhaseSpec& spec) {
  if (spec.modulus == 0) throw std::invalid_argument("PhaseSpec: modulus must be positive");
  std::vector<double> lambda(spec.modulus);
  switch (spec.function) {
    case PhaseFunction::kCycle:
      if (spec.modulus < 2) throw std::invalid_argument("PhaseSpec: cycle needs modulus >= 2");
      for (std::size_t j = 0; j < spec.modulus; ++j) {
        lambda[j] = static_cast<double>(
            2.0L * std::cos(kTwoPi * static_cast<long double>(j) /
                            static_cast<long double>(spec.modulus)));
      }
      break;
    case PhaseFunction::kCirculant:
      if (spec.row.size() != spec.modulus) {
        throw std::invalid_argument("PhaseSpec: circulant row length differs from modulus");
      }
      lambda = circulant_spectrum(spec.row).eigenvalues;
      break;
  }
  return lambda;
}

SymmetricMatrix phase_hamiltonian(const PhaseSpec& spec) {
  const std::size_t m = spec.modulus;
  std::vector<double> row;
  if (spec.function == PhaseFunction::kCycle) {
    if (m < 2) throw std::invalid_argument("PhaseSpec: cycle needs modulus >= 2");
    row.assign(m, 0.0);
    row[1] += 1.0;
    row[m - 1] += 1.0;
  } else {
    if (spec.row.size() != m) {
      throw std::invalid_argument("PhaseSpec: circulant row length differs from modulus");
    }
    row = spec.row;
  }
  double degree = 0.0;
  for (double w : row) degree += w;
  SymmetricMatrix h(m);
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = u; v < m; ++v) {
      const double a = row[(v + m - u) % m];
      if (spec.kind == Hamiltonian::kAdjacency) {
        h.set(u, v, a);
      } else {
        h.set(u, v, u == v ? degree - a : -a);
      }
    }
  }
  return h;
}

std::vector<double> oracle_phases(const PhaseSpec& spec) {
  if (spec.bits < 1 || spec.bits > 62) {
    throw std::invalid_argument("PhaseSpec: bits must lie in [1, 62]");
  }
  if (!std::isfinite(spec.t)) throw std::invalid_argument("PhaseSpec: t must be finite");
  std::vector<double> lambda = phase_eigenvalues(spec);
  if (spec.kind == Hamiltonian::kLaplacian) {
    long double degree = 0.0L;
    if (spec.function == PhaseFunction::kCycle) {
      degree = 2.0L;
    } else {
      for (double w : spec.row) degree += w;
    }
    for (double& l : lambda) l = static_cast<double>(degree - l);
  }
  const long double scale = std::ldexp(1.0L, spec.bits);
  std::vector<double> theta(lambda.size());
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    long double phi = std::fmod(static_cast<long double>(lambda[j]) * spec.t, kTwoPi);
    if (phi < 0) phi += kTwoPi;
    long double k = std::floor(phi * scale / kTwoPi);
    if (k >= scale) k = 0;  // phi rounded up to exactly 2 pi
    theta[j] = static_cast<double>(kTwoPi / scale * k);
  }
  return theta;
}

std::string gate_kind(const Gate& g) {
  switch (g.index()) {
    case 0: return "hadamard";
    case 1: return "controlled_phase";
    case 2: return "swap";
    case 3: return "diagonal_oracle";
    default: return "permutation";
  }
}

void GateSequence::append(Gate g) {
  if (const auto* h = std::get_if<HadamardGate>(&g)) {
    check_qubit(h->target, width_);
    ++counts_.hadamard;
  } else if (const auto* cp = std::get_if<ControlledPhaseGate>(&g)) {
    check_qubit(cp->control, width_);
    check_qubit(cp->target, width_);
    if (cp->control == cp->target) throw std::invalid_argument("controlled phase on one qubit");
    if (!std::isfinite(cp->angle)) throw std::invalid_argument("controlled phase angle not finite");
    ++counts_.controlled_phase;
  } else if (const auto* s = std::get_if<SwapGate>(&g)) {
    check_qubit(s->a, width_);
    check_qubit(s->b, width_);
    if (s->a == s->b) throw std::invalid_argument("swap on one qubit");
    ++counts_.swap;
  } else if (const auto* d = std::get_if<DiagonalOracleGate>(&g)) {
    std::vector<std::size_t> sorted = d->qubits;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("diagonal oracle repeats a qubit");
    }
    for (std::size_t q : d->qubits) check_qubit(q, width_);
    if (d->qubits.size() >= 63 || d->phases.modulus != (std::size_t{1} << d->qubits.size())) {
      throw std::invalid_argument("diagonal oracle modulus must be 2^(number of qubits)");
    }
    if (d->phases.bits < 1 || d->phases.bits > 62 || !std::isfinite(d->phases.t)) {
      throw std::invalid_argument("diagonal oracle precision or time invalid");
    }
    ++counts_.diagonal_oracle;
  } else {
    const auto& p = std::get<PermutationGate>(g);
    if (width_ >= 63 || p.perm.size() != (std::size_t{1} << width_)) {
      throw std::invalid_argument("permutation length must be 2^width");
    }
    std::vector<bool> seen(p.perm.size(), false);
    for (std::size_t x : p.perm) {
      if (x >= p.perm.size() || seen[x]) throw std::invalid_argument("not a permutation");
      seen[x] = true;
    }
    ++counts_.permutation;
  }
  gates_.push_back(std::move(g));
}

void GateSequence::append(const GateSequence& other) {
  if (other.width_ != width_) throw std::invalid_argument("GateSequence: width mismatch");
  for (const Gate& g : other.gates_) append(g);
}

KickbackCost GateSequence::kickback_cost() const {
  KickbackCost cost;
  for (const Gate& g : gates_) {
    if (const auto* d = std::get_if<DiagonalOracleGate>(&g)) {
      const auto b = static_cast<std::size_t>(d->phases.bits);
      cost.ancilla_qubits = std::max(cost.ancilla_qubits, b);
      cost.preparation_gates += 2 * qft_gate_count(b);
    }
  }
  return cost;
}

GateSequence qft_gates(std::size_t width, const std::vector<std::size_t>& qubits) {
  GateSequence seq(width);
  const std::size_t w = qubits.size();
  for (std::size_t i = 0; i < w; ++i) {
    seq.append(HadamardGate{qubits[i]});
    for (std::size_t k = i + 1; k < w; ++k) {
      const double angle =
          2.0 * std::numbers::pi / std::ldexp(1.0, static_cast<int>(k - i + 1));
      seq.append(ControlledPhaseGate{qubits[k], qubits[i], angle});
    }
  }
  for (std::size_t i = 0; i < w / 2; ++i) seq.append(SwapGate{qubits[i], qubits[w - 1 - i]});
  return seq;
}

GateSequence inverse_qft_gates(std::size_t width, const std::vector<std::size_t>& qubits) {
  const GateSequence forward = qft_gates(width, qubits);
  GateSequence seq(width);
  for (auto it = forward.gates().rbegin(); it != forward.gates().rend(); ++it) {
    Gate g = *it;
    if (auto* cp = std::get_if<ControlledPhaseGate>(&g)) cp->angle = -cp->angle;
    seq.append(std::move(g));
  }
  return seq;
}

GateSequence compile_cycle_walk(std::size_t n, double t, int bits, Hamiltonian kind) {
  if (n < 1 || n > 62) throw std::invalid_argument("compile_cycle_walk: need 1 <= n <= 62");
  PhaseSpec spec;
  spec.function = PhaseFunction::kCycle;
  spec.modulus = std::size_t{1} << n;
  spec.t = t;
  spec.bits = bits;
  spec.kind = kind;
  return compile_block_walk(spec, n, block(0, n));
}

GateSequence compile_circulant_walk(const std::vector<double>& first_row, double t, int bits,
                                    Hamiltonian kind) {
  const std::size_t m = first_row.size();
  if (m < 2 || !is_power_of_two(m)) {
    throw std::invalid_argument(
        "compile_circulant_walk: size must be a power of two >= 2 (use the dense propagator "
        "otherwise)");
  }
  // Validates the circulant symmetry before any gate is built.
  (void)circulant_spectrum(first_row);
  PhaseSpec spec;
  spec.function = PhaseFunction::kCirculant;
  spec.modulus = m;
  spec.row = first_row;
  spec.t = t;
  spec.bits = bits;
  spec.kind = kind;
  const std::size_t n = log2_exact(m);
  return compile_block_walk(spec, n, block(0, n));
}

GateSequence compile_torus_walk(std::size_t m, std::size_t n, double t, int bits,
                                Hamiltonian kind) {
  if (m < 1 || n < 1) throw std::invalid_argument("compile_torus_walk: need m, n >= 1");
  if (m * n > 62) throw std::length_error("compile_torus_walk: more than 62 qubits");
  const std::size_t width = m * n;
  GateSequence seq(width);
  PhaseSpec spec;
  spec.function = PhaseFunction::kCycle;
  spec.modulus = std::size_t{1} << n;
  spec.t = t;
  spec.bits = bits;
  spec.kind = kind;
  for (std::size_t f = 0; f < m; ++f) seq.append(compile_block_walk(spec, width, block(f * n, n)));
  return seq;
}

Eigen::MatrixXcd simulate_gates(const GateSequence& seq) {
  const std::size_t w = seq.width();
  if (w > kMaxSimulatedQubits) {
    throw std::length_error("simulate_gates: width " + std::to_string(w) + " exceeds " +
                            std::to_string(kMaxSimulatedQubits) + " qubits");
  }
  const std::size_t dim = std::size_t{1} << w;
  const auto mask = [w](std::size_t q) { return std::size_t{1} << (w - 1 - q); };
  // Rows are basis states; each gate acts on the left.
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(dim),
                                                  static_cast<Eigen::Index>(dim));
  const double r = 1.0 / std::sqrt(2.0);

  for (const Gate& g : seq.gates()) {
    if (const auto* h = std::get_if<HadamardGate>(&g)) {
      const std::size_t bit = mask(h->target);
      for (std::size_t x = 0; x < dim; ++x) {
        if (x & bit) continue;
        const auto i0 = static_cast<Eigen::Index>(x);
        const auto i1 = static_cast<Eigen::Index>(x | bit);
        const Eigen::RowVectorXcd a = u.row(i0);
        const Eigen::RowVectorXcd b = u.row(i1);
        u.row(i0) = r * (a + b);
        u.row(i1) = r * (a - b);
      }
    } else if (const auto* cp = std::get_if<ControlledPhaseGate>(&g)) {
      const std::size_t both = mask(cp->control) | mask(cp->target);
      const Complex phase = std::polar(1.0, cp->angle);
      for (std::size_t x = 0; x < dim; ++x) {
        if ((x & both) == both) u.row(static_cast<Eigen::Index>(x)) *= phase;
      }
    } else if (const auto* s = std::get_if<SwapGate>(&g)) {
      const std::size_t ba = mask(s->a);
      const std::size_t bb = mask(s->b);
      for (std::size_t x = 0; x < dim; ++x) {
        if ((x & ba) && !(x & bb)) {
          u.row(static_cast<Eigen::Index>(x)).swap(u.row(static_cast<Eigen::Index>(x ^ ba ^ bb)));
        }
      }
    } else if (const auto* d = std::get_if<DiagonalOracleGate>(&g)) {
      const std::vector<double> theta = oracle_phases(d->phases);
      for (std::size_t x = 0; x < dim; ++x) {
        std::size_t j = 0;
        for (std::size_t q : d->qubits) j = (j << 1) | ((x & mask(q)) ? 1 : 0);
        u.row(static_cast<Eigen::Index>(x)) *= std::polar(1.0, -theta[j]);
      }
    } else {
      const auto& p = std::get<PermutationGate>(g);
      Eigen::MatrixXcd next(u.rows(), u.cols());
      for (std::size_t x = 0; x < dim; ++x) {
        next.row(static_cast<Eigen::Index>(p.perm[x])) = u.row(static_cast<Eigen::Index>(x));
      }
      u = std::move(next);
    }
  }
  return u;
}

UnitaryDistance unitary_distance(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw std::invalid_argument("unitary_distance: shape mismatch");
  }
  const Eigen::MatrixXcd diff = u - v;
  UnitaryDistance out;
  if (diff.size() == 0) return out;
  out.max_entry = diff.cwiseAbs().maxCoeff();
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(diff.adjoint() * diff,
                                                          Eigen::EigenvaluesOnly);
  out.operator_norm = std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
  return out;
}

Propagator trotter_compile(const SymmetricMatrix& a_base, const SymmetricMatrix& d_sparse,
                           std::size_t fibre_size, double t, std::size_t steps,
                           Coupling coupling) {
  if (fibre_size == 0 || steps == 0) {
    throw std::invalid_argument("trotter_compile: fibre size and steps must be positive");
  }
  if (a_base.dim() * fibre_size != d_sparse.dim()) {
    throw std::invalid_argument("trotter_compile: dim(A) * m must equal dim(D)");
  }
  const double tau = t / static_cast<double>(steps);
  const auto m = static_cast<Eigen::Index>(fibre_size);
  const auto na = static_cast<Eigen::Index>(a_base.dim());

  SymmetricMatrix c(fibre_size);
  for (std::size_t i = 0; i < fibre_size; ++i) {
    for (std::size_t j = i; j < fibre_size; ++j) {
      if (coupling == Coupling::kIdentity) {
        if (i == j) c.set(i, i, 1.0);
      } else {
        c.set(i, j, 1.0 / std::sqrt(static_cast<double>(fibre_size)));
      }
    }
  }
  // exp(-i tau A (x) C) = sum_k exp(-i tau c_k A) (x) v_k v_k^T over the
  // eigenpairs (c_k, v_k) of C.
  const SpectralDecomposition da = eigendecompose(a_base);
  const SpectralDecomposition dc = eigendecompose(c);
  Eigen::MatrixXcd step_a = Eigen::MatrixXcd::Zero(na * m, na * m);
  for (Eigen::Index k = 0; k < m; ++k) {
    const Eigen::MatrixXcd ua = propagator(da, tau * dc.eigenvalues(k)).matrix();
    const Eigen::VectorXd vk = dc.eigenvectors.col(k);
    const Eigen::MatrixXcd proj = (vk * vk.transpose()).cast<Complex>();
    for (Eigen::Index i = 0; i < na; ++i)
      for (Eigen::Index j = 0; j < na; ++j) step_a.block(i * m, j * m, m, m) += ua(i, j) * proj;
  }
  const Eigen::MatrixXcd step_d = propagator(eigendecompose(d_sparse), tau).matrix();

  Eigen::MatrixXcd base = step_a * step_d;
  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(na * m, na * m);
  for (std::size_t r = steps; r > 0; r >>= 1) {
    if (r & 1) result = result * base;
    if (r > 1) base = base * base;
  }
  return Propagator(std::move(result));
}

SymmetricMatrix TowerSplit::relabelled_source() const {
  const auto m = static_cast<Eigen::Index>(fibre_size);
  // A (+) 0 = A (x) I_m.
  return SymmetricMatrix(kronecker_sum(base.dense(), Eigen::MatrixXd::Zero(m, m))) + correction;
}

TowerSplit tower_split(const WeightedGraph& y, const WeightedGraph& x, const VertexMap& pi) {
  if (pi.source_size() != y.num_vertices() || pi.target_size() != x.num_vertices()) {
    throw std::invalid_argument("tower_split: map does not match the graphs");
  }
  const std::size_t m = pi.fibre_size(0);
  for (std::size_t u = 0; u < pi.target_size(); ++u) {
    if (pi.fibre_size(u) != m) {
      throw std::invalid_argument("tower_split: fibres of unequal size");
    }
  }
  TowerSplit out;
  out.fibre_size = m;
  out.base = adjacency_matrix(x);
  out.position.resize(y.num_vertices());
  for (std::size_t u = 0; u < pi.target_size(); ++u) {
    const auto& f = pi.fibre(u);
    for (std::size_t k = 0; k < f.size(); ++k) out.position[f[k]] = u * m + k;
  }
  SymmetricMatrix d(y.num_vertices());
  for (const Edge& e : y.edges()) d.add(out.position[e.u], out.position[e.v], e.weight);
  // A(X) (x) I_m subtracted entrywise.
  for (std::size_t a = 0; a < x.num_vertices(); ++a) {
    for (std::size_t b = a; b < x.num_vertices(); ++b) {
      const double w = out.base(a, b);
      if (w == 0.0) continue;
      for (std::size_t k = 0; k < m; ++k) d.add(a * m + k, b * m + k, -w);
    }
  }
  out.correction = std::move(d);
  return out;
}

}  // namespace covwalk
