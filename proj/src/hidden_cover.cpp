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

#include "covwalk/hidden_cover.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "covwalk/groups.hpp"

namespace covwalk {
namespace {

void check_coset_args(std::size_t n, std::size_t p, std::size_t j) {
  if (p == 0 || n == 0 || n % p != 0) {
    throw std::invalid_argument("constant coset state: p must divide n");
  }
  if (j >= p) throw std::invalid_argument("constant coset state: need 0 <= j < p");
}

// Fourier modes of a circulant chained into eigenspaces, ascending.
std::vector<std::pair<double, std::vector<std::size_t>>> group_modes(const CirculantSpectrum& c) {
  std::vector<std::size_t> order(c.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return c.eigenvalues[a] < c.eigenvalues[b];
  });
  Eigen::VectorXd sorted(static_cast<Eigen::Index>(order.size()));
  for (std::size_t i = 0; i < order.size(); ++i) {
    sorted(static_cast<Eigen::Index>(i)) = c.eigenvalues[order[i]];
  }
  std::vector<std::pair<double, std::vector<std::size_t>>> spaces;
  for (const Eigenspace& e : group_eigenvalues(sorted)) {
    spaces.emplace_back(e.eigenvalue, std::vector<std::size_t>(order.begin() + e.begin,
                                                               order.begin() + e.end));
  }
  return spaces;
}

std::vector<Outcome> fourier_outcomes(
    const QuantumState& psi, const std::vector<std::pair<double, std::vector<std::size_t>>>& spaces,
    const std::vector<double>& cos_table, const std::vector<double>& sin_table) {
  const std::size_t n = cos_table.size();
  if (psi.dimension() != n) throw std::invalid_argument("measurement: dimension mismatch");
  std::vector<std::size_t> support;
  for (std::size_t x = 0; x < n; ++x) {
    if (psi[x] != Complex(0.0, 0.0)) support.push_back(x);
  }
  // |<W(k)|psi>|^2 with <W(k)|psi> = n^{-1/2} sum_x exp(-2 pi i k x / n) psi_x.
  std::vector<double> weight(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex sum = 0.0;
    for (std::size_t x : support) {
      const std::size_t r = (k * x) % n;
      sum += Complex(cos_table[r], -sin_table[r]) * psi[x];
    }
    weight[k] = std::norm(sum) / static_cast<double>(n);
  }
  std::vector<Outcome> out;
  out.reserve(spaces.size());
  for (const auto& [lambda, modes] : spaces) {
    double p = 0.0;
    for (std::size_t k : modes) p += weight[k];
    out.push_back({lambda, p});
  }
  return out;
}

void trig_tables(std::size_t n, std::vector<double>& c, std::vector<double>& s) {
  c.resize(n);
  s.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
    c[r] = std::cos(angle);
    s[r] = std::sin(angle);
  }
}

}  // namespace

QuantumState constant_coset_state(std::size_t n, std::size_t p, std::size_t j) {
  check_coset_args(n, p, j);
  const std::size_t q = n / p;
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
  const double a = 1.0 / std::sqrt(static_cast<double>(q));
  for (std::size_t l = 0; l < q; ++l) v(static_cast<Eigen::Index>(j + l * p)) = a;
  return QuantumState(std::move(v));
}

std::vector<std::pair<std::size_t, Complex>> coset_fourier_support(std::size_t n, std::size_t p,
                                                                   std::size_t j) {
  check_coset_args(n, p, j);
  const std::size_t q = n / p;
  // The sum over l is geometric in exp(-2 pi i k / q); it vanishes unless
  // q | k, and for k = l' q each term equals exp(-2 pi i l' j / p).
  std::vector<std::pair<std::size_t, Complex>> out;
  const double mag = 1.0 / std::sqrt(static_cast<double>(p));
  for (std::size_t l = 0; l < p; ++l) {
    const double angle =
        -2.0 * std::numbers::pi * static_cast<double>((l * j) % p) / static_cast<double>(p);
    out.emplace_back(l * q, std::polar(mag, angle));
  }
  return out;
}

CosetOracle::CosetOracle(std::size_t n, std::size_t p, std::uint64_t seed, std::uint64_t stream)
    : n_(n), p_(p), rng_(seed, stream) {
  if (p < 2 || p > n || n % p != 0) {
    throw std::invalid_argument("CosetOracle: need 1 < p <= n with p | n");
  }
}

QuantumState CosetOracle::emit() { return constant_coset_state(n_, p_, rng_.below(p_)); }

std::vector<Outcome> outcome_distribution(const QuantumState& psi,
                                          const SpectralDecomposition& d) {
  if (psi.dimension() != d.dimension()) {
    throw std::invalid_argument("outcome_distribution: dimension mismatch");
  }
  const Eigen::VectorXcd& a = psi.amplitudes();
  const Eigen::VectorXd re = d.eigenvectors.transpose() * a.real();
  const Eigen::VectorXd im = d.eigenvectors.transpose() * a.imag();
  std::vector<Outcome> out;
  for (const Eigenspace& e : group_eigenvalues(d.eigenvalues)) {
    double p = 0.0;
    for (std::size_t i = e.begin; i < e.end; ++i) {
      const auto k = static_cast<Eigen::Index>(i);
      p += re(k) * re(k) + im(k) * im(k);
    }
    out.push_back({e.eigenvalue, p});
  }
  return out;
}

std::vector<Outcome> outcome_distribution(const QuantumState& psi, const CirculantSpectrum& c) {
  std::vector<double> cs;
  std::vector<double> sn;
  trig_tables(c.size(), cs, sn);
  return fourier_outcomes(psi, group_modes(c), cs, sn);
}

double round_to_bits(double x, int bits) {
  if (bits < 1 || bits > 52) throw std::invalid_argument("round_to_bits: bits must lie in [1, 52]");
  return std::ldexp(std::nearbyint(std::ldexp(x, bits)), -bits);
}

MeasurementSample sample_outcome(const std::vector<Outcome>& distribution, int bits,
                                 CounterRng& rng) {
  if (distribution.empty()) throw std::invalid_argument("sample_outcome: empty distribution");
  double total = 0.0;
  for (const Outcome& o : distribution) total += o.probability;
  const double u = rng.uniform() * total;
  double acc = 0.0;
  // Falls back to the last outcome with positive mass when rounding leaves
  // u beyond the accumulated total.
  std::size_t pick = distribution.size();
  for (std::size_t i = 0; i < distribution.size(); ++i) {
    if (distribution[i].probability <= 0.0) continue;
    pick = i;
    acc += distribution[i].probability;
    if (u < acc) break;
  }
  if (pick == distribution.size()) throw std::invalid_argument("sample_outcome: zero distribution");
  return {round_to_bits(distribution[pick].eigenvalue, bits), bits};
}

MeasurementSample measure_hamiltonian(const QuantumState& psi, const SpectralDecomposition& d,
                                      int bits, CounterRng& rng) {
  return sample_outcome(outcome_distribution(psi, d), bits, rng);
}

MeasurementSample measure_hamiltonian(const QuantumState& psi, const CirculantSpectrum& c,
                                      int bits, CounterRng& rng) {
  return sample_outcome(outcome_distribution(psi, c), bits, rng);
}

Rational continued_fractions(double x, std::int64_t max_denominator) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("continued_fractions: x outside [0, 1]");
  if (max_denominator < 1) throw std::invalid_argument("continued_fractions: max_denominator < 1");
  // x = num / 2^120 exactly for x >= 2^-67; smaller x cannot produce a
  // convergent with denominator below 2^60 other than 0/1.
  using u128 = unsigned __int128;
  constexpr int kShift = 120;
  u128 num = static_cast<u128>(std::ldexp(x, kShift));
  u128 den = u128{1} << kShift;

  // Convergents h/k: h_{-1} = 1, h_{-2} = 0, k_{-1} = 0, k_{-2} = 1.
  u128 h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
  const auto cap = static_cast<u128>(max_denominator);
  Rational best{0, 1};
  while (den != 0) {
    const u128 a = num / den;
    const u128 r = num % den;
    const u128 h = a * h_prev + h_prev2;
    const u128 k = a * k_prev + k_prev2;
    if (k > cap) break;
    best = {static_cast<std::int64_t>(h), static_cast<std::int64_t>(k)};
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    num = den;
    den = r;
  }
  return best;
}

HiddenCycleSolver::HiddenCycleSolver(std::size_t n, int bits)
    : n_(n), bits_(bits), spectrum_(n >= 3 ? circulant_spectrum(cycle_row(n)) : CirculantSpectrum{}) {
  if (n < 3) throw std::invalid_argument("HiddenCycleSolver: need n >= 3");
  if (bits < 1 || bits > 52) throw std::invalid_argument("HiddenCycleSolver: bits in [1, 52]");
  trig_tables(n, cos_table_, sin_table_);
  spaces_ = group_modes(spectrum_);
}

const std::vector<Outcome>& HiddenCycleSolver::distribution(const QuantumState& psi) {
  std::vector<double> key;
  for (std::size_t x = 0; x < psi.dimension(); ++x) {
    if (psi[x] == Complex(0.0, 0.0)) continue;
    key.insert(key.end(), {static_cast<double>(x), psi[x].real(), psi[x].imag()});
  }
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    it = cache_.emplace(std::move(key), fourier_outcomes(psi, spaces_, cos_table_, sin_table_))
             .first;
  }
  return it->second;
}

MeasurementSample HiddenCycleSolver::measure(const QuantumState& psi, CounterRng& rng) {
  if (psi.dimension() != n_) throw std::invalid_argument("HiddenCycleSolver: dimension mismatch");
  return sample_outcome(distribution(psi), bits_, rng);
}

HiddenCoverSample HiddenCycleSolver::interpret(double lambda_tilde) const {
  HiddenCoverSample s;
  s.lambda_tilde = lambda_tilde;
  const double c = std::clamp(lambda_tilde / 2.0, -1.0, 1.0);
  s.x_tilde = std::acos(c) / (2.0 * std::numbers::pi);
  s.fraction = continued_fractions(s.x_tilde, static_cast<std::int64_t>(n_));
  return s;
}

HiddenCoverResult HiddenCycleSolver::solve(CosetOracle& oracle, std::size_t max_samples,
                                           CounterRng& rng) {
  if (oracle.modulus() != n_) throw std::invalid_argument("HiddenCycleSolver: oracle modulus");
  HiddenCoverResult result;
  std::uint64_t lcm = 1;
  std::size_t unchanged = 0;
  for (std::size_t i = 0; i < max_samples; ++i) {
    HiddenCoverSample s = interpret(measure(oracle.emit(), rng).lambda_tilde);
    const std::uint64_t next = std::lcm(lcm, static_cast<std::uint64_t>(s.fraction.denominator));
    unchanged = (next == lcm && i > 0) ? unchanged + 1 : 1;
    lcm = next;
    s.lcm = lcm;
    result.samples.push_back(s);
    if (lcm > 1 && n_ % lcm == 0 && unchanged >= 3) {
      result.success = true;
      result.period = lcm;
      result.fibre = n_ / lcm;
      break;
    }
  }
  return result;
}

HiddenCoverResult solve_hidden_cycle_cover(std::size_t n, CosetOracle& oracle, int bits,
                                           std::size_t max_samples, CounterRng& rng) {
  HiddenCycleSolver solver(n, bits);
  return solver.solve(oracle, max_samples, rng);
}

double sorted_spectrum_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

DihedralIsospectralityReport dihedral_isospectrality_report(std::size_t n, double tol) {
  if (n < 3) throw std::invalid_argument("dihedral_isospectrality_report: need n >= 3");
  const FiniteGroup g = dihedral_group(n);
  const auto s = static_cast<Element>(1);
  const auto t = static_cast<Element>(n);
  const GeneratingSet gens(g, {s, g.inverse(s), t});

  DihedralIsospectralityReport report;
  report.n = n;
  for (std::size_t j = 0; j < n; ++j) {
    const Subgroup h(g, {g.identity(), static_cast<Element>(j + n)});
    const SchreierGraph x = schreier_graph(g, h, gens);
    report.spectra.push_back(eigendecompose(adjacency_matrix(x.graph)).eigenvalues);
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      report.max_pairwise_distance =
          std::max(report.max_pairwise_distance,
                   sorted_spectrum_distance(report.spectra[a], report.spectra[b]));
    }
  }
  report.indistinguishable = report.max_pairwise_distance <= tol;

  const Subgroup rotations = Subgroup::generated_by(g, {s});
  report.rotation_control =
      eigendecompose(adjacency_matrix(schreier_graph(g, rotations, gens).graph)).eigenvalues;
  report.control_distance = sorted_spectrum_distance(report.spectra[0], report.rotation_control);
  return report;
}

}  // namespace covwalk
