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

#include "covwalk/covering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace covwalk {
namespace {

// S(u, v) = sum over x in pi^-1(u), y in pi^-1(v) of w_Y(x, y), counting
// ordered pairs, so loops once and other intra-fibre edges twice.
Eigen::MatrixXd fibre_block_sums(const WeightedGraph& y, const VertexMap& pi) {
  const Eigen::Index m = static_cast<Eigen::Index>(pi.target_size());
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(m, m);
  for (const Edge& e : y.edges()) {
    const auto a = static_cast<Eigen::Index>(pi[e.u]);
    const auto b = static_cast<Eigen::Index>(pi[e.v]);
    s(a, b) += e.weight;
    if (e.u != e.v) s(b, a) += e.weight;
  }
  return s;
}

// h(v, j) = sum_{x in pi^-1(j)} w_Y(v, x).
Eigen::MatrixXd fibre_degrees(const WeightedGraph& y, const VertexMap& pi) {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(y.num_vertices()),
                                            static_cast<Eigen::Index>(pi.target_size()));
  for (const Edge& e : y.edges()) {
    h(static_cast<Eigen::Index>(e.u), static_cast<Eigen::Index>(pi[e.v])) += e.weight;
    if (e.u != e.v) {
      h(static_cast<Eigen::Index>(e.v), static_cast<Eigen::Index>(pi[e.u])) += e.weight;
    }
  }
  return h;
}

struct Equitability {
  double spread = 0.0;
  std::size_t fibre = 0;
  std::size_t target = 0;
};

Equitability equitability(const Eigen::MatrixXd& h, const VertexMap& pi) {
  Equitability worst;
  for (std::size_t u = 0; u < pi.target_size(); ++u) {
    for (std::size_t j = 0; j < pi.target_size(); ++j) {
      double lo = std::numeric_limits<double>::infinity();
      double hi = -lo;
      for (std::size_t v : pi.fibre(u)) {
        const double x = h(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(j));
        lo = std::min(lo, x);
        hi = std::max(hi, x);
      }
      if (hi - lo > worst.spread) worst = {hi - lo, u, j};
    }
  }
  return worst;
}

void check_sizes(const WeightedGraph& y, const VertexMap& pi, const char* what) {
  if (pi.source_size() != y.num_vertices()) {
    throw std::invalid_argument(std::string(what) + ": map length differs from |V(Y)|");
  }
}

}  // namespace

VertexMap::VertexMap(std::vector<std::size_t> pi, std::size_t target_size)
    : pi_(std::move(pi)), fibres_(target_size) {
  if (pi_.empty()) throw std::invalid_argument("VertexMap: empty map");
  for (std::size_t v = 0; v < pi_.size(); ++v) {
    if (pi_[v] >= target_size) {
      throw std::invalid_argument("VertexMap: image " + std::to_string(pi_[v]) +
                                  " out of range");
    }
    fibres_[pi_[v]].push_back(v);
  }
  for (std::size_t u = 0; u < target_size; ++u) {
    if (fibres_[u].empty()) {
      throw std::invalid_argument("VertexMap: not surjective (vertex " + std::to_string(u) +
                                  " has an empty fibre)");
    }
  }
}

VertexMap VertexMap::identity(std::size_t n) {
  std::vector<std::size_t> pi(n);
  for (std::size_t v = 0; v < n; ++v) pi[v] = v;
  return VertexMap(std::move(pi), n);
}

PullbackOperator pullback_operator(const VertexMap& pi) {
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(pi.target_size()),
                                            static_cast<Eigen::Index>(pi.source_size()));
  for (std::size_t u = 0; u < pi.target_size(); ++u) {
    const double value = 1.0 / std::sqrt(static_cast<double>(pi.fibre_size(u)));
    for (std::size_t x : pi.fibre(u)) {
      p(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(x)) = value;
    }
  }
  return {std::move(p)};
}

CoverReport verify_cover(const WeightedGraph& y, const WeightedGraph& x,
                         const VertexMap& pi) {
  check_sizes(y, pi, "verify_cover");
  if (pi.target_size() != x.num_vertices()) {
    throw std::invalid_argument("verify_cover: map target size differs from |V(X)|");
  }
  const std::size_t ny = y.num_vertices();
  const std::size_t nx = x.num_vertices();
  std::vector<double> inv_sqrt(nx);
  for (std::size_t u = 0; u < nx; ++u) {
    inv_sqrt[u] = 1.0 / std::sqrt(static_cast<double>(pi.fibre_size(u)));
  }

  CoverReport report;

  // Godsil-McKay: (P A(Y))_{u,v} = h(v, u) / sqrt|pi^-1(u)| against
  // (A(X) P)_{u,v} = w_X(u, pi(v)) / sqrt|pi^-1(pi(v))|.
  const Eigen::MatrixXd h = fibre_degrees(y, pi);
  const SymmetricMatrix ax = adjacency_matrix(x);
  for (std::size_t v = 0; v < ny; ++v) {
    const std::size_t pv = pi[v];
    for (std::size_t u = 0; u < nx; ++u) {
      const double pay = h(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)) * inv_sqrt[u];
      const double axp = ax(u, pv) * inv_sqrt[pv];
      report.max_residual = std::max(report.max_residual, std::abs(pay - axp));
    }
  }

  // Weight-sum condition with one index mu.
  const Eigen::MatrixXd s = fibre_block_sums(y, pi);
  bool have_mu = false;
  for (std::size_t u = 0; u < nx && !have_mu; ++u) {
    for (std::size_t v = 0; v < nx; ++v) {
      if (ax(u, v) != 0.0) {
        report.mu = s(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) * inv_sqrt[u] *
                    inv_sqrt[v] / ax(u, v);
        have_mu = true;
        break;
      }
    }
  }
  for (std::size_t u = 0; u < nx; ++u) {
    for (std::size_t v = 0; v < nx; ++v) {
      const double block = s(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v));
      if (ax(u, v) != 0.0) {
        const double mu_uv = block * inv_sqrt[u] * inv_sqrt[v] / ax(u, v);
        report.mu_spread = std::max(report.mu_spread, std::abs(mu_uv - report.mu));
      } else {
        report.mu_spread = std::max(report.mu_spread, std::abs(block));
      }
    }
  }
  // An edgeless X pins nothing; mu = 1 matches P A(Y) P^T = 0 = A(X).
  if (!have_mu && report.mu_spread <= tol::kStructural) report.mu = 1.0;
  report.mu_consistent = report.mu_spread <= tol::kStructural;

  const Equitability eq = equitability(h, pi);
  report.equitable_spread = eq.spread;
  report.worst_fibre = eq.fibre;
  report.worst_target = eq.target;

  report.is_cover = report.max_residual <= tol::kStructural && report.mu_consistent &&
                    report.mu > 0.0;
  return report;
}

QuotientGraph quotient_graph(const WeightedGraph& y, const VertexMap& pi) {
  check_sizes(y, pi, "quotient_graph");
  const Eigen::MatrixXd h = fibre_degrees(y, pi);
  const Equitability eq = equitability(h, pi);
  if (eq.spread > tol::kStructural) {
    throw std::invalid_argument(
        "quotient_graph: fibres are not an equitable partition (fibre " +
        std::to_string(eq.fibre) + " towards " + std::to_string(eq.target) +
        ", spread " + std::to_string(eq.spread) + ")");
  }
  const std::size_t nx = pi.target_size();
  const Eigen::MatrixXd s = fibre_block_sums(y, pi);
  const std::vector<double> deg = degrees(y);

  SymmetricMatrix adjacency(nx);
  SymmetricMatrix degree(nx);
  for (std::size_t u = 0; u < nx; ++u) {
    const double fu = static_cast<double>(pi.fibre_size(u));
    for (std::size_t v = u; v < nx; ++v) {
      const double fv = static_cast<double>(pi.fibre_size(v));
      adjacency.set(u, v, s(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) /
                              std::sqrt(fu * fv));
    }
    double dsum = 0.0;
    for (std::size_t x : pi.fibre(u)) dsum += deg[x];
    degree.set(u, u, dsum / fu);
  }
  return {graph_from_adjacency(adjacency), 1.0, adjacency, degree};
}

CoveringMap CoveringMap::verified(WeightedGraph y, WeightedGraph x, VertexMap pi) {
  CoverReport report = verify_cover(y, x, pi);
  if (!report.is_cover) {
    throw std::invalid_argument(
        "CoveringMap: not a cover (residual " + std::to_string(report.max_residual) +
        ", mu spread " + std::to_string(report.mu_spread) + ", worst fibre " +
        std::to_string(report.worst_fibre) + " -> " + std::to_string(report.worst_target) + ")");
  }
  return CoveringMap(std::move(y), std::move(x), std::move(pi), report);
}

CoveringMap CoveringMap::onto_quotient(WeightedGraph y, VertexMap pi) {
  WeightedGraph x = quotient_graph(y, pi).graph;
  return verified(std::move(y), std::move(x), std::move(pi));
}

CoveringMap cayley_to_schreier_map(const FiniteGroup& g, const Subgroup& h,
                                   const GeneratingSet& s) {
  SchreierGraph schreier = schreier_graph(g, h, s);
  VertexMap pi(std::move(schreier.coset_of), schreier.cosets.size());
  return CoveringMap::verified(cayley_graph(g, s), std::move(schreier.graph), std::move(pi));
}

Eigen::VectorXcd lift_vector(const VertexMap& pi, const Eigen::VectorXcd& phi) {
  if (static_cast<std::size_t>(phi.size()) != pi.target_size()) {
    throw std::invalid_argument("lift: dimension mismatch");
  }
  Eigen::VectorXcd out(static_cast<Eigen::Index>(pi.source_size()));
  for (std::size_t v = 0; v < pi.source_size(); ++v) {
    const std::size_t u = pi[v];
    out(static_cast<Eigen::Index>(v)) =
        phi(static_cast<Eigen::Index>(u)) / std::sqrt(static_cast<double>(pi.fibre_size(u)));
  }
  return out;
}

QuantumState lift_state(const CoveringMap& cm, const QuantumState& phi) {
  return QuantumState(lift_vector(cm.map(), phi.amplitudes()));
}

bool is_fibre_constant(const VertexMap& pi, const QuantumState& psi) {
  if (psi.dimension() != pi.source_size()) {
    throw std::invalid_argument("is_fibre_constant: dimension mismatch");
  }
  // P^T P psi replaces each amplitude by its fibre mean.
  double err2 = 0.0;
  for (std::size_t u = 0; u < pi.target_size(); ++u) {
    Complex mean = 0.0;
    for (std::size_t v : pi.fibre(u)) mean += psi[v];
    mean /= static_cast<double>(pi.fibre_size(u));
    for (std::size_t v : pi.fibre(u)) err2 += std::norm(psi[v] - mean);
  }
  return std::sqrt(err2) <= tol::kFibreConstant;
}

bool is_fibre_constant(const CoveringMap& cm, const QuantumState& psi) {
  return is_fibre_constant(cm.map(), psi);
}

Eigen::VectorXd lift_eigenvector(const CoveringMap& cm, const Eigen::VectorXd& f,
                                 double lambda) {
  const VertexMap& pi = cm.map();
  if (static_cast<std::size_t>(f.size()) != pi.target_size()) {
    throw std::invalid_argument("lift_eigenvector: dimension mismatch");
  }
  const Eigen::MatrixXd ax = adjacency_matrix(cm.target()).dense();
  if ((ax * f - lambda * f).norm() > tol::kStructural) {
    throw std::invalid_argument("lift_eigenvector: (f, lambda) is not an eigenpair of A(X)");
  }
  return lift_vector(pi, f.cast<Complex>()).real();
}

namespace {

SymmetricMatrix quotient_hamiltonian(const CoveringMap& cm, Hamiltonian kind) {
  const QuotientGraph q = quotient_graph(cm.source(), cm.map());
  return kind == Hamiltonian::kAdjacency ? q.adjacency : q.laplacian();
}

}  // namespace

QuotientWalk::QuotientWalk(const CoveringMap& cm, Hamiltonian kind)
    : QuotientWalk(cm.source(), cm.map(), quotient_hamiltonian(cm, kind), kind) {}

QuotientWalk::QuotientWalk(const WeightedGraph& y, VertexMap pi,
                           const SymmetricMatrix& x_hamiltonian, Hamiltonian kind)
    : pi_(std::move(pi)),
      y_(eigendecompose(hamiltonian_matrix(y, kind))),
      x_(eigendecompose(x_hamiltonian)) {
  check_sizes(y, pi_, "QuotientWalk");
  if (x_hamiltonian.dim() != pi_.target_size()) {
    throw std::invalid_argument("QuotientWalk: X Hamiltonian dimension mismatch");
  }
}

double QuotientWalk::residual(const QuantumState& phi, double t) const {
  if (phi.dimension() != pi_.target_size()) {
    throw std::invalid_argument("QuotientWalk::residual: dimension mismatch");
  }
  const QuantumState lifted(lift_vector(pi_, phi.amplitudes()));
  const QuantumState upstairs = evolve(lifted, y_, t);
  const QuantumState downstairs = evolve(phi, x_, t);
  return (upstairs.amplitudes() - lift_vector(pi_, downstairs.amplitudes())).norm();
}

double quotient_walk_residual(const CoveringMap& cm, const QuantumState& phi, double t,
                              Hamiltonian kind) {
  return QuotientWalk(cm, kind).residual(phi, t);
}

double submultiset_defect(const Eigen::VectorXd& sub, const Eigen::VectorXd& super,
                          double tol) {
  double worst = 0.0;
  Eigen::Index j = 0;
  for (Eigen::Index i = 0; i < sub.size(); ++i) {
    while (j < super.size() && super(j) < sub(i) - tol) ++j;
    if (j == super.size() || super(j) > sub(i) + tol) {
      return std::numeric_limits<double>::infinity();
    }
    worst = std::max(worst, std::abs(super(j) - sub(i)));
    ++j;
  }
  return worst;
}

}  // namespace covwalk
