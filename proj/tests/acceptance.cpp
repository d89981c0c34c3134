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

// Acceptance runner: one PASS/FAIL line per criterion. Library results are
// checked against oracles built here from Eigen and closed forms.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "covwalk/cli.hpp"
#include "covwalk/covering.hpp"
#include "covwalk/experiments.hpp"
#include "covwalk/gates.hpp"
#include "covwalk/graph.hpp"
#include "covwalk/groups.hpp"
#include "covwalk/hidden_cover.hpp"
#include "covwalk/spectral.hpp"
#include "test_support.hpp"

namespace covwalk {
namespace {

using Clock = std::chrono::steady_clock;
using cd = std::complex<double>;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename F>
double timed(F&& f) {
  const auto start = Clock::now();
  f();
  return seconds_since(start);
}

std::string fmt(const char* format, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, x);
  return buf;
}

// P with 1/sqrt|fibre| on fibre columns, built from the images alone
Eigen::MatrixXd pullback_oracle(const std::vector<std::size_t>& images, std::size_t target) {
  std::vector<double> size(target, 0.0);
  for (std::size_t y : images) size[y] += 1.0;
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(target),
                                            static_cast<Eigen::Index>(images.size()));
  for (std::size_t v = 0; v < images.size(); ++v) {
    p(static_cast<Eigen::Index>(images[v]), static_cast<Eigen::Index>(v)) = 1.0 / std::sqrt(size[images[v]]);
  }
  return p;
}

Eigen::MatrixXd laplacian_oracle(const Eigen::MatrixXd& a) {
  Eigen::MatrixXd l = -a;
  l.diagonal() += a.rowwise().sum();
  return l;
}

// max |P A(Y) - mu A(X) P| with mu from least squares
struct CoverCheck {
  double mu = 0.0;
  double residual = 0.0;
};

CoverCheck cover_oracle(const WeightedGraph& y, const WeightedGraph& x, const std::vector<std::size_t>& images) {
  const Eigen::MatrixXd p = pullback_oracle(images, x.num_vertices());
  const Eigen::MatrixXd lhs = p * testing::adjacency_from_edges(y);
  const Eigen::MatrixXd rhs = testing::adjacency_from_edges(x) * p;
  CoverCheck c;
  c.mu = rhs.squaredNorm() > 0 ? lhs.cwiseProduct(rhs).sum() / rhs.squaredNorm() : 0.0;
  c.residual = (lhs - c.mu * rhs).cwiseAbs().maxCoeff();
  return c;
}

// greedy sub-multiset test on sorted values
bool sub_multiset(const Eigen::VectorXd& small, const Eigen::VectorXd& big, double tol) {
  std::vector<double> b(big.data(), big.data() + big.size());
  std::sort(b.begin(), b.end());
  std::vector<bool> used(b.size(), false);
  std::vector<double> s(small.data(), small.data() + small.size());
  std::sort(s.begin(), s.end());
  std::size_t start = 0;
  for (double v : s) {
    while (start < b.size() && (used[start] || b[start] < v - tol)) ++start;
    std::size_t k = start;
    while (k < b.size() && used[k]) ++k;
    if (k == b.size() || std::abs(b[k] - v) > tol) return false;
    used[k] = true;
  }
  return true;
}

double op_norm(const Eigen::MatrixXcd& m) {
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues()(0);
}

// e^{-iAt} for C_N through the DFT, phases reduced in long double
Eigen::MatrixXcd cycle_propagator_oracle(std::size_t big_n, double t) {
  const auto dim = static_cast<Eigen::Index>(big_n);
  Eigen::VectorXcd phase(dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    const long double lambda = 2.0L * std::cos(2.0L * std::numbers::pi_v<long double> * j / dim);
    long double a = std::fmod(-lambda * static_cast<long double>(t), 2.0L * std::numbers::pi_v<long double>);
    phase(j) = std::polar(1.0, static_cast<double>(a));
  }
  const Eigen::MatrixXcd f = testing::dft_matrix(big_n);
  return f * phase.asDiagonal() * f.adjoint();
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

struct Verdict {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& why) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + why;
    }
  }
};

// 1
Verdict cover_verification() {
  Verdict o;
  ExperimentResult r;
  const double secs = timed([&] { r = cover_verification_experiment(); });
  o.require(r.pass, "experiment reported failure");
  o.require(secs < 10.0, "runtime " + fmt("%.2f s", secs));

  const auto corpus = cover_corpus(false);
  o.require(corpus.size() == 13, "corpus size " + std::to_string(corpus.size()));
  double worst = 0.0;
  for (const CoverCase& c : corpus) {
    const auto& images = c.cover.map().images();
    const CoverCheck good = cover_oracle(c.cover.source(), c.cover.target(), images);
    worst = std::max(worst, good.residual);
    o.require(std::abs(good.mu - 1.0) <= 1e-9 && good.residual <= 1e-9, c.name + ": oracle rejects");
    o.require(verify_cover(c.cover.source(), c.cover.target(), c.cover.map()).is_cover, c.name + ": rejected");
    const WeightedGraph bad = corrupt_first_edge(c.cover.source());
    o.require(cover_oracle(bad, c.cover.target(), images).residual > 1e-9, c.name + ": corruption undetected by oracle");
    o.require(!verify_cover(bad, c.cover.target(), c.cover.map()).is_cover, c.name + ": corrupted accepted");
  }
  o.detail = (o.pass ? "13 covers, oracle residual " + fmt("%.2e", worst) + ", " + fmt("%.2f s", secs) : o.detail);
  return o;
}

// 2
Verdict quotient_walk() {
  Verdict o;
  ExperimentResult r;
  const double secs = timed([&] { r = quotient_walk_experiment(0, 20); });
  o.require(r.pass, "experiment reported failure");
  o.require(secs < 30.0, "runtime " + fmt("%.2f s", secs));

  // U_Y(t) P^T psi == P^T exp(-i t P H_Y P^T) psi, from Eigen eigensolvers
  double worst = 0.0;
  std::uint64_t seed = 1;
  for (const CoverCase& c : cover_corpus(false)) {
    const Eigen::MatrixXd p = pullback_oracle(c.cover.map().images(), c.cover.target().num_vertices());
    const Eigen::MatrixXd a = testing::adjacency_from_edges(c.cover.source());
    for (const Eigen::MatrixXd& h : {a, laplacian_oracle(a)}) {
      const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ey(h);
      const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ex(p * h * p.transpose());
      for (double t : {0.5, 1.0, 10.0}) {
        auto evolve = [t](const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>& es, const Eigen::VectorXcd& v) {
          Eigen::VectorXcd coeff = es.eigenvectors().transpose().cast<cd>() * v;
          for (Eigen::Index k = 0; k < coeff.size(); ++k) coeff(k) *= std::polar(1.0, -t * es.eigenvalues()(k));
          return Eigen::VectorXcd(es.eigenvectors().cast<cd>() * coeff);
        };
        for (int s = 0; s < 3; ++s) {
          const Eigen::VectorXcd psi = testing::random_complex_unit(c.cover.target().num_vertices(), seed++);
          const Eigen::VectorXcd lifted = p.transpose().cast<cd>() * psi;
          const Eigen::VectorXcd diff = evolve(ey, lifted) - p.transpose().cast<cd>() * evolve(ex, psi);
          worst = std::max(worst, diff.cwiseAbs().maxCoeff());
        }
      }
    }
  }
  o.require(worst <= 1e-9, "oracle residual " + fmt("%.2e", worst));
  if (o.pass) o.detail = "oracle residual " + fmt("%.2e", worst) + ", " + fmt("%.2f s", secs);
  return o;
}

// 3
Verdict spectrum_containment() {
  Verdict o;
  o.require(spectrum_containment_experiment().pass, "experiment reported failure");
  const auto corpus = cover_corpus(true);
  o.require(corpus.size() == 20, "corpus size " + std::to_string(corpus.size()));
  for (const CoverCase& c : corpus) {
    const Eigen::MatrixXd p = pullback_oracle(c.cover.map().images(), c.cover.target().num_vertices());
    const Eigen::MatrixXd a = testing::adjacency_from_edges(c.cover.source());
    for (const Eigen::MatrixXd& h : {a, laplacian_oracle(a)}) {
      const Eigen::VectorXd big = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(h, Eigen::EigenvaluesOnly).eigenvalues();
      const Eigen::VectorXd small =
          Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(p * h * p.transpose(), Eigen::EigenvaluesOnly).eigenvalues();
      o.require(sub_multiset(small, big, 1e-8), c.name + ": oracle spectra not contained");
    }
  }
  if (o.pass) o.detail = std::to_string(corpus.size()) + " covers, both Hamiltonians";
  return o;
}

// 4
Verdict circulant() {
  Verdict o;
  o.require(circulant_experiment().pass, "experiment reported failure");
  double worst = 0.0;
  for (std::size_t m : {8, 64, 256, 1024}) {
    const Eigen::VectorXd fast = circulant_spectrum(cycle_row(m)).sorted();
    const Eigen::VectorXd dense =
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(testing::adjacency_from_edges(cycle(m)), Eigen::EigenvaluesOnly)
            .eigenvalues();
    worst = std::max(worst, (fast - dense).cwiseAbs().maxCoeff());
  }
  o.require(worst <= 1e-9, "oracle difference " + fmt("%.2e", worst));

  const std::vector<double> row = cycle_row(1024);
  const SymmetricMatrix a = adjacency_matrix(cycle(1024));
  double fft = 1e300, dense = 1e300;
  for (int rep = 0; rep < 20; ++rep) fft = std::min(fft, timed([&] { (void)circulant_spectrum(row); }));
  for (int rep = 0; rep < 2; ++rep) dense = std::min(dense, timed([&] { (void)eigendecompose(a); }));
  const double speedup = dense / std::max(fft, 1e-9);
  o.require(speedup >= 10.0, "speedup " + fmt("%.1fx", speedup));
  if (o.pass) o.detail = "oracle difference " + fmt("%.2e", worst) + ", FFT speedup " + fmt("%.0fx", speedup);
  return o;
}

// 5
Verdict gate_compiler() {
  Verdict o;
  o.require(gate_compiler_experiment().pass, "experiment reported failure");
  const double bound = 2.0 * std::numbers::pi * std::ldexp(1.0, -32) + 1e-9;
  double worst = 0.0;
  for (std::size_t n = 2; n <= 8; ++n) {
    std::vector<std::size_t> totals;
    for (double t : {1.0, 37.5, 1e6}) {
      const GateSequence seq = compile_cycle_walk(n, t, 32);
      const double d = op_norm(simulate_gates(seq) - cycle_propagator_oracle(std::size_t{1} << n, t));
      worst = std::max(worst, d);
      o.require(d <= bound, "n=" + std::to_string(n) + " t=" + fmt("%g", t) + " distance " + fmt("%.3e", d));
      totals.push_back(seq.counts().total());
    }
    o.require(std::count(totals.begin(), totals.end(), totals.front()) == 3,
              "gate count varies with t at n=" + std::to_string(n));
  }
  const Eigen::MatrixXcd u4 = cycle_propagator_oracle(4, 1.0);
  const double torus = op_norm(simulate_gates(compile_torus_walk(2, 2, 1.0, 32)) - kron(u4, u4));
  o.require(torus <= 2.0 * bound, "torus distance " + fmt("%.3e", torus));
  if (o.pass) {
    o.detail = "worst distance " + fmt("%.3e", worst) + " <= " + fmt("%.3e", bound) + ", torus " + fmt("%.3e", torus);
  }
  return o;
}

// 6
Verdict trotter_order() {
  Verdict o;
  const ExperimentResult r = trotter_experiment();
  o.require(r.pass, "experiment slope " + fmt("%.4f", r.data["slope_8_to_128"].get<double>()));

  std::vector<std::size_t> images(8);
  for (std::size_t k = 0; k < 8; ++k) images[k] = k % 4;
  const TowerSplit split = tower_split(cycle(8), cycle(4), VertexMap(images, 4));
  const Eigen::MatrixXcd exact = testing::expm_oracle(testing::adjacency_from_edges(cycle(8)), 1.0);
  // undo the relabelling so the oracle stays in the original vertex order
  Eigen::MatrixXcd perm = Eigen::MatrixXcd::Zero(8, 8);
  for (std::size_t v = 0; v < 8; ++v) perm(static_cast<Eigen::Index>(split.position[v]), static_cast<Eigen::Index>(v)) = 1.0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (std::size_t steps = 8; steps <= 128; steps *= 2) {
    const Eigen::MatrixXcd u = perm.adjoint() * trotter_compile(split.base, split.correction, 2, 1.0, steps).matrix() * perm;
    const double lx = std::log(double(steps)), ly = std::log(op_norm(u - exact));
    sx += lx, sy += ly, sxx += lx * lx, sxy += lx * ly, ++count;
  }
  const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  o.require(slope >= -1.25 && slope <= -0.8, "oracle slope " + fmt("%.4f", slope));
  if (o.pass) o.detail = "slope " + fmt("%.4f", slope) + " over r = 8..128";
  return o;
}

// 7
Verdict hidden_cover() {
  Verdict o;
  ExperimentResult r;
  const double secs = timed([&] { r = hidden_cover_experiment(0, 200); });
  o.require(secs < 60.0, "runtime " + fmt("%.2f s", secs));
  std::size_t pairs = 0, wrong = 0;
  double min_rate = 1.0, worst_gap = 0.0;
  for (const auto& row : r.data["pairs"]) {
    const auto p = row["p"].get<std::size_t>();
    const auto q = row["q"].get<std::size_t>();
    o.require(is_prime(p) && is_prime(q) && p <= 31 && q <= 31, "bad pair");
    ++pairs;
    wrong += row["wrong"].get<std::size_t>();
    min_rate = std::min(min_rate, row["success_rate"].get<double>());
    // a uniform l in Z/p gives denominator p unless l = 0
    const double predicted = 1.0 - 1.0 / static_cast<double>(p);
    worst_gap = std::max(worst_gap, std::abs(row["single_sample_rate"].get<double>() - predicted));
  }
  o.require(r.pass, "experiment reported failure");
  o.require(pairs == 121, "pairs " + std::to_string(pairs));
  o.require(wrong == 0, std::to_string(wrong) + " wrong answers");
  o.require(min_rate >= 0.99, "min success rate " + fmt("%.3f", min_rate));
  o.require(worst_gap <= 0.05, "single-sample gap " + fmt("%.3f", worst_gap));
  if (o.pass) {
    o.detail = "121 pairs x 200 trials, min success " + fmt("%.3f", min_rate) + ", single-sample gap " +
               fmt("%.3f", worst_gap) + ", " + fmt("%.2f s", secs);
  }
  return o;
}

// 8
Verdict confinement() {
  Verdict o;
  const ExperimentResult r = confinement_experiment(0, 10000);
  o.require(r.pass, "experiment reported failure");
  o.require(r.data["outside_window"].get<std::size_t>() == 0, "samples outside window");
  o.require(r.data["max_distance_to_allowed"].get<double>() <= 2.0 * std::ldexp(1.0, -32), "window exceeded");
  // fibre-constant states of C_30 over C_5 see 2cos(2 pi l / 5), l uniform
  std::size_t total = 0;
  double worst_sigma = 0.0;
  for (const auto& row : r.data["outcomes"]) {
    const double lambda = row["eigenvalue"].get<double>();
    double prob = 0.0;
    for (int l = 0; l < 5; ++l) {
      if (std::abs(2.0 * std::cos(2.0 * std::numbers::pi * l / 5.0) - lambda) < 1e-12) prob += 0.2;
    }
    o.require(std::abs(prob - row["probability"].get<double>()) < 1e-12, "probability mismatch");
    const auto count = row["count"].get<std::size_t>();
    total += count;
    const double sigma = std::sqrt(1e4 * prob * (1 - prob));
    const double dev = std::abs(double(count) - 1e4 * prob) / sigma;
    worst_sigma = std::max(worst_sigma, dev);
    o.require(dev <= 3.0, "deviation " + fmt("%.2f sigma", dev));
  }
  o.require(total == 10000, "counted " + std::to_string(total));
  o.require(r.data["outcomes"].size() == 3, "outcome count");
  if (o.pass) o.detail = "10000 samples in window, worst deviation " + fmt("%.2f sigma", worst_sigma);
  return o;
}

// 9
Verdict dihedral() {
  Verdict o;
  o.require(dihedral_experiment().pass, "experiment reported failure");
  double worst = 0.0;
  for (std::size_t n : {3, 5, 7, 9}) {
    const DihedralIsospectralityReport rep = dihedral_isospectrality_report(n);
    o.require(rep.indistinguishable, "n=" + std::to_string(n) + " not flagged");
    const FiniteGroup g = dihedral_group(n);
    const Element s = 1, sinv = static_cast<Element>(n - 1), t = static_cast<Element>(n);
    const GeneratingSet gens(g, {s, sinv, t});
    std::vector<Eigen::VectorXd> spectra;
    for (std::size_t j = 0; j < n; ++j) {
      const Subgroup h(g, {0, static_cast<Element>(j + n)});
      const SchreierGraph sg = schreier_graph(g, h, gens);
      // coset graph by brute force, each pair (x, s) weighted 1 / |H|
      const auto dim = static_cast<Eigen::Index>(sg.cosets.size());
      Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
      for (std::size_t x = 0; x < g.order(); ++x) {
        for (Element gen : {s, sinv, t}) {
          const Element y = g.multiply(g.inverse(gen), static_cast<Element>(x));
          a(static_cast<Eigen::Index>(sg.coset_of[x]), static_cast<Eigen::Index>(sg.coset_of[y])) += 0.5;
        }
      }
      spectra.push_back(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a, Eigen::EigenvaluesOnly).eigenvalues());
    }
    for (std::size_t j = 1; j < n; ++j) worst = std::max(worst, (spectra[j] - spectra[0]).cwiseAbs().maxCoeff());
  }
  o.require(worst <= 1e-9, "oracle pairwise distance " + fmt("%.2e", worst));
  if (o.pass) o.detail = "oracle pairwise distance " + fmt("%.2e", worst);
  return o;
}

// 10
Verdict determinism() {
  Verdict o;
  std::size_t runs = 0;
  for (const std::string& name : cli::demo_names()) {
    std::string first;
    for (int rep = 0; rep < 2; ++rep) {
      std::istringstream in;
      std::ostringstream out, err;
      const int code = cli::run({"demo", name, "--seed", "0"}, in, out, err);
      o.require(code == cli::kExitSuccess, name + " exit " + std::to_string(code));
      if (rep == 0) {
        first = out.str();
      } else {
        o.require(out.str() == first, name + " output differs");
      }
      ++runs;
    }
  }
  if (o.pass) o.detail = std::to_string(runs / 2) + " demos byte-identical across two runs";
  return o;
}

}  // namespace
}  // namespace covwalk

int main() {
  using namespace covwalk;
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"cover verification", cover_verification},
      {"quotient-walk equivalence", quotient_walk},
      {"spectrum containment", spectrum_containment},
      {"circulant fast path", circulant},
      {"gate compiler", gate_compiler},
      {"trotter order", trotter_order},
      {"hidden cover solver", hidden_cover},
      {"spectral confinement", confinement},
      {"dihedral obstruction", dihedral},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    if (!out.pass) ++failures;
    std::printf("%s %2zu %s: %s\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                out.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
