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

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "covwalk/graph.hpp"

namespace covwalk::testing {

// Random weighted graph with loops, from std::mt19937_64 so the corpus does
// not depend on the library's own generator.
inline WeightedGraph random_graph(std::size_t n, double density, std::uint64_t seed,
                                  bool loops = true) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u; v < n; ++v) {
      if (u == v && !loops) continue;
      if (unit(gen) < density) edges.push_back({u, v, 0.25 + 2.0 * unit(gen)});
    }
  }
  return WeightedGraph(n, edges);
}

// Adjacency matrix straight from the edge list, entry by entry.
inline Eigen::MatrixXd adjacency_from_edges(const WeightedGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    a(static_cast<Eigen::Index>(e.u), static_cast<Eigen::Index>(e.v)) = e.weight;
    a(static_cast<Eigen::Index>(e.v), static_cast<Eigen::Index>(e.u)) = e.weight;
  }
  return a;
}

// exp(-i H t) by Pade scaling and squaring.
inline Eigen::MatrixXcd expm_oracle(const Eigen::MatrixXd& h, double t) {
  const Eigen::MatrixXcd m = std::complex<double>(0.0, -t) * h.cast<std::complex<double>>();
  return m.exp();
}

inline Eigen::MatrixXcd dft_matrix(std::size_t m) {
  const auto dim = static_cast<Eigen::Index>(m);
  Eigen::MatrixXcd f(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      // index product reduced first so the angle stays small
      const auto k = static_cast<double>((static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) % m);
      f(r, c) = std::polar(1.0 / std::sqrt(static_cast<double>(m)),
                           2.0 * M_PI * k / static_cast<double>(m));
    }
  }
  return f;
}

inline Eigen::VectorXcd random_complex_unit(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> nd;
  Eigen::VectorXcd v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = {nd(gen), nd(gen)};
  return v / v.norm();
}

inline double max_abs(const Eigen::MatrixXcd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace covwalk::testing
