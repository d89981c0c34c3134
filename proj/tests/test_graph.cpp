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

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "covwalk/graph.hpp"
#include "covwalk/groups.hpp"
#include "test_support.hpp"

namespace covwalk {
namespace {

WeightedGraph star3() { return WeightedGraph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}}); }

TEST(WeightedGraph, RejectsBadInput) {
  EXPECT_THROW(WeightedGraph(2, {{0, 2, 1.0}}), std::invalid_argument);
  EXPECT_THROW(WeightedGraph(2, {{0, 1, -1.0}}), std::invalid_argument);
  EXPECT_THROW(WeightedGraph(2, {{0, 1, NAN}}), std::invalid_argument);
  EXPECT_THROW(WeightedGraph(2, {}, {"a"}), std::invalid_argument);
  EXPECT_THROW(WeightedGraph(10, {}, {}, 5), std::length_error);
}

TEST(WeightedGraph, RepeatedPairsAccumulate) {
  WeightedGraph g(3, {{0, 1, 1.0}, {1, 0, 2.5}, {2, 2, 1.0}});
  EXPECT_DOUBLE_EQ(g.weight(0, 1), 3.5);
  EXPECT_DOUBLE_EQ(g.weight(1, 0), 3.5);
  EXPECT_DOUBLE_EQ(g.weight(0, 2), 0.0);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_FALSE(g.is_simple());
  EXPECT_TRUE(cycle(5).is_simple());
}

TEST(AdjacencyMatrix, CycleC4) {
  const Eigen::MatrixXd a = adjacency_matrix(cycle(4)).dense();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const bool adj = (j == (i + 1) % 4) || (j == (i + 3) % 4);
      EXPECT_EQ(a(i, j), adj ? 1.0 : 0.0);
    }
}

TEST(AdjacencyMatrix, LoopIsDiagonal) {
  WeightedGraph g(1, {{0, 0, 2.0}});
  EXPECT_EQ(adjacency_matrix(g).dense()(0, 0), 2.0);
}

TEST(AdjacencyMatrix, PathIsTridiagonal) {
  WeightedGraph g(3, {{0, 1, 1}, {1, 2, 1}});
  Eigen::Matrix3d expected;
  expected << 0, 1, 0, 1, 0, 1, 0, 1, 0;
  EXPECT_EQ(adjacency_matrix(g).dense(), Eigen::MatrixXd(expected));
}

TEST(Degree, Examples) {
  for (VertexId v = 0; v < 4; ++v) EXPECT_DOUBLE_EQ(degree(cycle(4), v), 2.0);
  EXPECT_DOUBLE_EQ(degree(WeightedGraph(1, {{0, 0, 3.0}}), 0), 3.0);
  EXPECT_DOUBLE_EQ(degree(star3(), 0), 3.0);
  EXPECT_THROW(degree(star3(), 4), std::out_of_range);
}

TEST(Laplacian, Examples) {
  const Eigen::MatrixXd c4 = adjacency_matrix(cycle(4)).dense();
  EXPECT_EQ(laplacian(cycle(4)).dense(), Eigen::MatrixXd(2.0 * Eigen::MatrixXd::Identity(4, 4) - c4));

  WeightedGraph edge(2, {{0, 1, 0.75}});
  Eigen::Matrix2d expected;
  expected << 0.75, -0.75, -0.75, 0.75;
  EXPECT_EQ(laplacian(edge).dense(), Eigen::MatrixXd(expected));

  WeightedGraph loop(1, {{0, 0, 4.0}});
  EXPECT_EQ(laplacian(loop).dense()(0, 0), 0.0);
}

TEST(Laplacian, RandomCorpusProperties) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = testing::random_graph(3 + seed % 17, 0.4, seed);
    const Eigen::MatrixXd a = testing::adjacency_from_edges(g);
    const Eigen::MatrixXd l = laplacian(g).dense();
    const Eigen::MatrixXd d = degree_matrix(g).dense();

    EXPECT_EQ(adjacency_matrix(g).dense(), a);
    EXPECT_EQ(l, Eigen::MatrixXd(d - a)) << "seed " << seed;
    EXPECT_LE(l.rowwise().sum().cwiseAbs().maxCoeff(), 1e-12);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(l);
    EXPECT_GE(es.eigenvalues().minCoeff(), -1e-9);
  }
}

TEST(CartesianProduct, TorusAndSquare) {
  const auto t = cartesian_product(cycle(4), cycle(4));
  EXPECT_EQ(t.num_vertices(), 16u);
  auto r = is_regular(t);
  EXPECT_TRUE(r.regular);
  EXPECT_DOUBLE_EQ(r.degree, 4.0);

  const auto sq = cartesian_product(cycle(2), cycle(2));
  // K_2 x K_2 is C_4 up to relabelling 0,1,3,2.
  const std::size_t order[] = {0, 1, 3, 2};
  const auto c4 = cycle(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      EXPECT_EQ(sq.weight(order[i], order[j]), c4.weight(i, j));
}

TEST(CartesianProduct, MatchesKroneckerFormula) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g1 = testing::random_graph(2 + seed % 5, 0.5, 100 + seed);
    const auto g2 = testing::random_graph(3 + seed % 4, 0.5, 200 + seed);
    const Eigen::MatrixXd a1 = testing::adjacency_from_edges(g1);
    const Eigen::MatrixXd a2 = testing::adjacency_from_edges(g2);
    const auto n1 = a1.rows();
    const auto n2 = a2.rows();
    // explicit Kronecker sum
    Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n1 * n2, n1 * n2);
    for (Eigen::Index i1 = 0; i1 < n1; ++i1)
      for (Eigen::Index j1 = 0; j1 < n1; ++j1)
        for (Eigen::Index i2 = 0; i2 < n2; ++i2)
          for (Eigen::Index j2 = 0; j2 < n2; ++j2) {
            double v = 0.0;
            if (i2 == j2) v += a1(i1, j1);
            if (i1 == j1) v += a2(i2, j2);
            k(i1 * n2 + i2, j1 * n2 + j2) = v;
          }
    EXPECT_LE((adjacency_matrix(cartesian_product(g1, g2)).dense() - k).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LE((kronecker_sum(a1, a2) - k).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(CartesianProduct, CapEnforced) {
  EXPECT_THROW(cartesian_product(cycle(64), cycle(64), 1000), std::length_error);
}

TEST(IsRegular, Examples) {
  EXPECT_TRUE(is_regular(cycle(7)).regular);
  EXPECT_FALSE(is_regular(star3()).regular);
  // n = 2 weighted path: degrees sqrt2, 2 sqrt2, sqrt2
  const auto p = hypercube_path_quotient(2).path;
  EXPECT_FALSE(is_regular(p).regular);
  EXPECT_NEAR(degree(p, 1), 2.0 * std::sqrt(2.0), 1e-15);
}

TEST(SymmetricMatrix, StaysSymmetric) {
  SymmetricMatrix m(3);
  m.set(0, 2, 1.5);
  m.add(1, 1, 2.0);
  m.add(1, 1, 2.0);
  EXPECT_EQ(m(2, 0), 1.5);
  EXPECT_EQ(m(1, 1), 4.0);
  Eigen::MatrixXd bad(2, 2);
  bad << 0, 1, 2, 0;
  EXPECT_THROW(SymmetricMatrix{bad}, std::invalid_argument);
}

TEST(GraphFromAdjacency, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto g = testing::random_graph(8, 0.3, seed);
    EXPECT_EQ(graph_from_adjacency(adjacency_matrix(g)), g);
  }
}

}  // namespace
}  // namespace covwalk
