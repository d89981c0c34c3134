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

#include "covwalk/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "covwalk/gates.hpp"
#include "covwalk/groups.hpp"
#include "covwalk/hidden_cover.hpp"
#include "covwalk/rng.hpp"
#include "covwalk/spectral.hpp"

namespace covwalk {
namespace {

constexpr double kWalkTimes[] = {0.5, 1.0, 10.0};
constexpr Hamiltonian kKinds[] = {Hamiltonian::kLaplacian, Hamiltonian::kAdjacency};

const char* kind_name(Hamiltonian k) {
  return k == Hamiltonian::kLaplacian ? "laplacian" : "adjacency";
}

CoveringMap cycle_mod_cover(std::size_t n, std::size_t p) {
  const FiniteGroup g = cyclic_group(n);
  const GeneratingSet s(g, {1, static_cast<Element>(n - 1)});
  const Subgroup h = Subgroup::generated_by(g, {static_cast<Element>(p)});
  return cayley_to_schreier_map(g, h, s);
}

CoveringMap dihedral_cover(std::size_t n) {
  const FiniteGroup g = dihedral_group(n);
  const GeneratingSet s(g, {1, g.inverse(1), static_cast<Element>(n)});
  const Subgroup h(g, {g.identity(), static_cast<Element>(n)});
  return cayley_to_schreier_map(g, h, s);
}

double exact_adjacency_bound(int bits) { return 2.0 * std::numbers::pi * std::ldexp(1.0, -bits); }

}  // namespace

std::vector<CoverCase> cover_corpus(bool dihedral) {
  std::vector<CoverCase> out;
  for (std::size_t n = 2; n <= 10; ++n) {
    HypercubeQuotient q = hypercube_path_quotient(n);
    VertexMap pi(std::move(q.hamming), n + 1);
    out.push_back({"Q_" + std::to_string(n) + " -> weighted path",
                   CoveringMap::verified(hypercube(n), std::move(q.path), std::move(pi))});
  }
  for (auto [n, p] : std::vector<std::pair<std::size_t, std::size_t>>{
           {6, 3}, {15, 3}, {15, 5}, {35, 7}}) {
    out.push_back({"C_" + std::to_string(n) + " -> C_" + std::to_string(p) + " (mod " +
                       std::to_string(p) + ")",
                   cycle_mod_cover(n, p)});
  }
  if (dihedral) {
    for (std::size_t n = 3; n <= 9; ++n) {
      out.push_back({"X(D_" + std::to_string(n) + ") -> D_" + std::to_string(n) + "/<t>",
                     dihedral_cover(n)});
    }
  }
  return out;
}

WeightedGraph corrupt_first_edge(const WeightedGraph& y) {
  std::vector<Edge> edges = y.edges();
  if (edges.empty()) throw std::invalid_argument("corrupt_first_edge: graph has no edges");
  edges.front().weight += 1.0;
  return WeightedGraph(y.num_vertices(), edges, y.labels());
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("loglog_slope: need at least two matching points");
  }
  const double k = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

QuantumState random_state(std::size_t dim, std::uint64_t seed, std::uint64_t stream) {
  CounterRng rng(seed, stream);
  Eigen::VectorXcd v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = rng.normal();
    const double im = rng.normal();
    v(i) = Complex(re, im);
  }
  return QuantumState::normalized(std::move(v));
}

ExperimentResult cover_verification_experiment() {
  ExperimentResult r;
  r.pass = true;
  Json cases = Json::array();
  for (const CoverCase& c : cover_corpus(false)) {
    const CoverReport& rep = c.cover.report();
    const CoverReport bad = verify_cover(corrupt_first_edge(c.cover.source()), c.cover.target(),
                                         c.cover.map());
    const bool ok = rep.is_cover && std::abs(rep.mu - 1.0) <= tol::kStructural &&
                    rep.max_residual <= tol::kStructural && !bad.is_cover;
    r.pass = r.pass && ok;
    cases.push_back({{"cover", c.name},
                     {"is_cover", rep.is_cover},
                     {"mu", rep.mu},
                     {"max_residual", rep.max_residual},
                     {"corrupted_is_cover", bad.is_cover},
                     {"corrupted_residual", bad.max_residual},
                     {"pass", ok}});
  }
  r.data = {{"criterion", "cover verification"}, {"tolerance", tol::kStructural},
            {"cases", std::move(cases)}, {"pass", r.pass}};
  return r;
}

ExperimentResult quotient_walk_experiment(std::uint64_t seed, std::size_t states) {
  ExperimentResult r;
  r.pass = true;
  Json cases = Json::array();
  std::uint64_t stream = 0;
  const std::vector<CoverCase> corpus = cover_corpus(false);
  for (std::size_t ci = 0; ci < corpus.size(); ++ci) {
    const CoverCase& c = corpus[ci];
    std::vector<QuantumState> phis;
    for (std::size_t s = 0; s < states; ++s) {
      phis.push_back(random_state(c.cover.target().num_vertices(), seed, stream++));
    }
    for (Hamiltonian kind : kKinds) {
      const QuotientWalk walk(c.cover, kind);
      double worst = 0.0;
      for (const QuantumState& phi : phis) {
        for (double t : kWalkTimes) worst = std::max(worst, walk.residual(phi, t));
      }
      const bool ok = worst <= tol::kEvolution;
      r.pass = r.pass && ok;
      cases.push_back({{"cover", c.name},
                       {"hamiltonian", kind_name(kind)},
                       {"max_residual", worst},
                       {"pass", ok}});
    }
  }
  r.data = {{"criterion", "quotient walk"}, {"seed", seed}, {"states_per_cover", states},
            {"times", kWalkTimes}, {"tolerance", tol::kEvolution},
            {"cases", std::move(cases)}, {"pass", r.pass}};
  return r;
}

ExperimentResult spectrum_containment_experiment() {
  constexpr double kTol = 1e-8;
  ExperimentResult r;
  r.pass = true;
  Json cases = Json::array();
  for (const CoverCase& c : cover_corpus(true)) {
    for (Hamiltonian kind : kKinds) {
      const QuotientWalk walk(c.cover, kind);
      const double defect = submultiset_defect(walk.target_spectrum().eigenvalues,
                                               walk.source_spectrum().eigenvalues, kTol);
      const bool ok = defect <= kTol;
      r.pass = r.pass && ok;
      cases.push_back({{"cover", c.name},
                       {"hamiltonian", kind_name(kind)},
                       {"quotient_size", walk.target_spectrum().dimension()},
                       {"cover_size", walk.source_spectrum().dimension()},
                       {"defect", defect},
                       {"pass", ok}});
    }
  }
  r.data = {{"criterion", "spectrum containment"}, {"tolerance", kTol},
            {"cases", std::move(cases)}, {"pass", r.pass}};
  return r;
}

ExperimentResult circulant_experiment() {
  constexpr double kTol = 1e-9;
  ExperimentResult r;
  r.pass = true;
  Json cases = Json::array();
  for (std::size_t m : {8, 64, 256, 1024}) {
    const Eigen::VectorXd fast = circulant_spectrum(cycle_row(m)).sorted();
    const Eigen::VectorXd dense = eigendecompose(adjacency_matrix(cycle(m))).eigenvalues;
    const double diff = (fast - dense).cwiseAbs().maxCoeff();
    const bool ok = diff <= kTol;
    r.pass = r.pass && ok;
    cases.push_back({{"m", m}, {"max_difference", diff}, {"pass", ok}});
  }
  r.data = {{"criterion", "circulant spectrum"}, {"tolerance", kTol},
            {"cases", std::move(cases)}, {"pass", r.pass}};
  return r;
}

ExperimentResult gate_compiler_experiment() {
  constexpr int kBits = 32;
  const double bound = exact_adjacency_bound(kBits) + 1e-9;
  ExperimentResult r;
  r.pass = true;
  Json cases = Json::array();
  for (std::size_t n = 2; n <= 8; ++n) {
    const SymmetricMatrix a = adjacency_matrix(cycle(std::size_t{1} << n));
    SpectralDecomposition d = eigendecompose(a);
    refine_eigenvalues(d, a);
    std::vector<std::size_t> totals;
    for (double t : {1.0, 37.5, 1e6}) {
      const GateSequence seq = compile_cycle_walk(n, t, kBits);
      const UnitaryDistance dist = unitary_distance(simulate_gates(seq), propagator(d, t).matrix());
      const bool ok = dist.operator_norm <= bound;
      r.pass = r.pass && ok;
      totals.push_back(seq.counts().total());
      cases.push_back({{"n", n},
                       {"t", t},
                       {"distance", dist.operator_norm},
                       {"max_entry", dist.max_entry},
                       {"gates", seq.counts().total()},
                       {"pass", ok}});
    }
    const bool same = std::all_of(totals.begin(), totals.end(),
                                  [&](std::size_t c) { return c == totals.front(); });
    r.pass = r.pass && same;
  }

  const SpectralDecomposition c4 = eigendecompose(adjacency_matrix(cycle(4)));
  const GateSequence torus_seq = compile_torus_walk(2, 2, 1.0, kBits);
  const double torus_dist =
      unitary_distance(simulate_gates(torus_seq), tensor_propagator({{&c4, 1.0}, {&c4, 1.0}}).matrix())
          .operator_norm;
  const bool torus_ok = torus_dist <= 2.0 * bound;
  r.pass = r.pass && torus_ok;
  r.data = {{"criterion", "gate compiler"},
            {"bits", kBits},
            {"bound", bound},
            {"cases", std::move(cases)},
            {"torus", {{"m", 2}, {"n", 2}, {"t", 1.0}, {"distance", torus_dist},
                       {"bound", 2.0 * bound}, {"gates", torus_seq.counts().total()},
                       {"pass", torus_ok}}},
            {"pass", r.pass}};
  return r;
}

ExperimentResult trotter_experiment() {
  const WeightedGraph y = cycle(8);
  const WeightedGraph x = cycle(4);
  std::vector<std::size_t> images(8);
  for (std::size_t k = 0; k < 8; ++k) images[k] = k % 4;
  const TowerSplit split = tower_split(y, x, VertexMap(images, 4));
  const double t = 1.0;
  const Eigen::MatrixXcd exact =
      propagator(eigendecompose(split.relabelled_source()), t).matrix();
  std::vector<double> steps;
  std::vector<double> errors;
  Json rows = Json::array();
  for (std::size_t r = 8; r <= 256; r *= 2) {
    const double err =
        unitary_distance(trotter_compile(split.base, split.correction, 2, t, r).matrix(), exact)
            .operator_norm;
    if (r <= 128) {
      steps.push_back(static_cast<double>(r));
      errors.push_back(err);
    }
    rows.push_back({{"steps", r}, {"error", err}});
  }
  const double slope = loglog_slope(steps, errors);
  ExperimentResult out;
  out.pass = slope >= -1.25 && slope <= -0.8;
  out.data = {{"criterion", "trotter order"},
              {"instance", "C_8 over C_4, pi(k) = k mod 4"},
              {"t", t},
              {"errors", std::move(rows)},
              {"slope_8_to_128", slope},
              {"slope_range", {-1.25, -0.8}},
              {"pass", out.pass}};
  return out;
}

ExperimentResult hidden_cover_experiment(std::uint64_t seed, std::size_t trials) {
  constexpr int kBits = 32;
  constexpr std::size_t kMaxSamples = 25;
  std::vector<std::size_t> primes;
  for (std::size_t k = 2; k <= 31; ++k) {
    if (is_prime(k)) primes.push_back(k);
  }
  ExperimentResult r;
  r.pass = true;
  Json pairs = Json::array();
  std::uint64_t trial_index = 0;
  std::size_t total_wrong = 0;
  for (std::size_t p : primes) {
    for (std::size_t q : primes) {
      const std::size_t n = p * q;
      HiddenCycleSolver solver(n, kBits);
      std::size_t successes = 0, wrong = 0, samples = 0, good_samples = 0;
      for (std::size_t i = 0; i < trials; ++i, ++trial_index) {
        CosetOracle oracle(n, p, seed, 2 * trial_index);
        CounterRng rng(seed, 2 * trial_index + 1);
        const HiddenCoverResult res = solver.solve(oracle, kMaxSamples, rng);
        if (res.success) {
          if (res.period == p) {
            ++successes;
          } else {
            ++wrong;
          }
        }
        for (const HiddenCoverSample& s : res.samples) {
          ++samples;
          if (static_cast<std::size_t>(s.fraction.denominator) == p) ++good_samples;
        }
      }
      const double rate = static_cast<double>(successes) / static_cast<double>(trials);
      const double single = static_cast<double>(good_samples) / static_cast<double>(samples);
      const double predicted = static_cast<double>(p - 1) / static_cast<double>(p);
      const bool ok = rate >= 0.99 && wrong == 0 && std::abs(single - predicted) <= 0.05;
      r.pass = r.pass && ok;
      total_wrong += wrong;
      pairs.push_back({{"p", p},
                       {"q", q},
                       {"n", n},
                       {"success_rate", rate},
                       {"wrong", wrong},
                       {"samples", samples},
                       {"single_sample_rate", single},
                       {"predicted_single_sample_rate", predicted},
                       {"pass", ok}});
    }
  }
  r.data = {{"criterion", "hidden cover solver"}, {"seed", seed}, {"bits", kBits},
            {"trials_per_pair", trials}, {"max_samples", kMaxSamples},
            {"wrong_answers", total_wrong}, {"pairs", std::move(pairs)}, {"pass", r.pass}};
  return r;
}

ExperimentResult confinement_experiment(std::uint64_t seed, std::size_t samples) {
  constexpr std::size_t kN = 30;
  constexpr std::size_t kP = 5;
  constexpr int kBits = 32;
  const double window = 2.0 * std::ldexp(1.0, -kBits);

  // Allowed outcomes 2 cos(2 pi l / p) and their probabilities from the
  // Fourier support of alpha_j, which does not depend on j.
  const std::size_t q = kN / kP;
  std::vector<double> allowed;
  std::vector<double> expected;
  for (const auto& [k, amp] : coset_fourier_support(kN, kP, 0)) {
    const double lambda = 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(k / q) /
                                         static_cast<double>(kP));
    auto it = std::find_if(allowed.begin(), allowed.end(),
                           [&](double a) { return std::abs(a - lambda) <= 1e-12; });
    if (it == allowed.end()) {
      allowed.push_back(lambda);
      expected.push_back(std::norm(amp));
    } else {
      expected[static_cast<std::size_t>(it - allowed.begin())] += std::norm(amp);
    }
  }

  const SpectralDecomposition d = eigendecompose(adjacency_matrix(cycle(kN)));
  CosetOracle oracle(kN, kP, seed, 0);
  CounterRng rng(seed, 1);
  std::vector<std::size_t> counts(allowed.size(), 0);
  double worst = 0.0;
  std::size_t outside = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double lt = measure_hamiltonian(oracle.emit(), d, kBits, rng).lambda_tilde;
    double best = std::numeric_limits<double>::infinity();
    std::size_t arg = 0;
    for (std::size_t a = 0; a < allowed.size(); ++a) {
      if (std::abs(lt - allowed[a]) < best) {
        best = std::abs(lt - allowed[a]);
        arg = a;
      }
    }
    worst = std::max(worst, best);
    if (best > window) {
      ++outside;
    } else {
      ++counts[arg];
    }
  }
  bool within = outside == 0;
  Json outcomes = Json::array();
  const double total = static_cast<double>(samples);
  for (std::size_t a = 0; a < allowed.size(); ++a) {
    const double sigma = std::sqrt(total * expected[a] * (1.0 - expected[a]));
    const double dev = std::abs(static_cast<double>(counts[a]) - total * expected[a]);
    const bool ok = dev <= 3.0 * sigma;
    within = within && ok;
    outcomes.push_back({{"eigenvalue", allowed[a]},
                        {"probability", expected[a]},
                        {"count", counts[a]},
                        {"deviation_sigmas", sigma > 0 ? dev / sigma : 0.0},
                        {"pass", ok}});
  }
  ExperimentResult r;
  r.pass = within;
  r.data = {{"criterion", "spectral confinement"}, {"n", kN}, {"p", kP}, {"bits", kBits},
            {"seed", seed}, {"samples", samples}, {"window", window},
            {"max_distance_to_allowed", worst}, {"outside_window", outside},
            {"outcomes", std::move(outcomes)}, {"pass", r.pass}};
  return r;
}

ExperimentResult dihedral_experiment() {
  constexpr double kTol = 1e-9;
  ExperimentResult r;
  r.pass = true;
  Json cases = Json::array();
  for (std::size_t n : {3, 5, 7, 9}) {
    const DihedralIsospectralityReport rep = dihedral_isospectrality_report(n, kTol);
    const bool ok = rep.max_pairwise_distance <= kTol && rep.indistinguishable &&
                    rep.control_distance > kTol;
    r.pass = r.pass && ok;
    cases.push_back({{"n", n},
                     {"max_pairwise_distance", rep.max_pairwise_distance},
                     {"indistinguishable", rep.indistinguishable},
                     {"rotation_control_distinct", rep.control_distance > kTol},
                     {"pass", ok}});
  }
  r.data = {{"criterion", "dihedral isospectrality"}, {"tolerance", kTol},
            {"cases", std::move(cases)}, {"pass", r.pass}};
  return r;
}

ExperimentResult hypercube_experiment(std::size_t n, std::uint64_t seed) {
  HypercubeQuotient hq = hypercube_path_quotient(n);
  VertexMap pi(std::move(hq.hamming), n + 1);
  const CoveringMap cm = CoveringMap::verified(hypercube(n), std::move(hq.path), std::move(pi));
  ExperimentResult r;
  r.pass = true;
  Json rows = Json::array();
  for (Hamiltonian kind : kKinds) {
    const QuotientWalk walk(cm, kind);
    const QuantumState basis = QuantumState::basis(n + 1, 0);
    const QuantumState random = random_state(n + 1, seed, 0);
    for (double t : kWalkTimes) {
      const double a = walk.residual(basis, t);
      const double b = walk.residual(random, t);
      const bool ok = std::max(a, b) <= tol::kEvolution;
      r.pass = r.pass && ok;
      rows.push_back({{"hamiltonian", kind_name(kind)},
                      {"t", t},
                      {"residual_basis_0", a},
                      {"residual_random", b},
                      {"pass", ok}});
    }
  }
  r.data = {{"demo", "hypercube quotient walk"}, {"n", n}, {"seed", seed},
            {"mu", cm.mu()}, {"cover_residual", cm.report().max_residual},
            {"tolerance", tol::kEvolution}, {"residuals", std::move(rows)}, {"pass", r.pass}};
  return r;
}

}  // namespace covwalk
