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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "covwalk/spectral.hpp"

namespace covwalk {
namespace {

constexpr double kEps = 0x1.0p-52;

// Householder reduction of the symmetric matrix held in v to tridiagonal
// form. On exit d is the diagonal, e[1..n) the subdiagonal, and v the
// accumulated orthogonal transform. Column-major access throughout.
void tridiagonalize(Eigen::MatrixXd& v, Eigen::VectorXd& d, Eigen::VectorXd& e) {
  const Eigen::Index n = v.rows();
  for (Eigen::Index j = 0; j < n; ++j) d(j) = v(n - 1, j);

  for (Eigen::Index i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (Eigen::Index k = 0; k < i; ++k) scale += std::abs(d(k));
    if (scale == 0.0) {
      e(i) = d(i - 1);
      for (Eigen::Index j = 0; j < i; ++j) {
        d(j) = v(i - 1, j);
        v(i, j) = 0.0;
        v(j, i) = 0.0;
      }
    } else {
      for (Eigen::Index k = 0; k < i; ++k) {
        d(k) /= scale;
        h += d(k) * d(k);
      }
      double f = d(i - 1);
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      e(i) = scale * g;
      h -= f * g;
      d(i - 1) = f - g;
      for (Eigen::Index j = 0; j < i; ++j) e(j) = 0.0;

      for (Eigen::Index j = 0; j < i; ++j) {
        f = d(j);
        v(j, i) = f;
        g = e(j) + v(j, j) * f;
        for (Eigen::Index k = j + 1; k <= i - 1; ++k) {
          g += v(k, j) * d(k);
          e(k) += v(k, j) * f;
        }
        e(j) = g;
      }
      f = 0.0;
      for (Eigen::Index j = 0; j < i; ++j) {
        e(j) /= h;
        f += e(j) * d(j);
      }
      const double hh = f / (h + h);
      for (Eigen::Index j = 0; j < i; ++j) e(j) -= hh * d(j);
      for (Eigen::Index j = 0; j < i; ++j) {
        f = d(j);
        g = e(j);
        for (Eigen::Index k = j; k <= i - 1; ++k) v(k, j) -= (f * e(k) + g * d(k));
        d(j) = v(i - 1, j);
        v(i, j) = 0.0;
      }
    }
    d(i) = h;
  }

  for (Eigen::Index i = 0; i < n - 1; ++i) {
    v(n - 1, i) = v(i, i);
    v(i, i) = 1.0;
    const double h = d(i + 1);
    if (h != 0.0) {
      for (Eigen::Index k = 0; k <= i; ++k) d(k) = v(k, i + 1) / h;
      for (Eigen::Index j = 0; j <= i; ++j) {
        double g = 0.0;
        for (Eigen::Index k = 0; k <= i; ++k) g += v(k, i + 1) * v(k, j);
        for (Eigen::Index k = 0; k <= i; ++k) v(k, j) -= g * d(k);
      }
    }
    for (Eigen::Index k = 0; k <= i; ++k) v(k, i + 1) = 0.0;
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    d(j) = v(n - 1, j);
    v(n - 1, j) = 0.0;
  }
  v(n - 1, n - 1) = 1.0;
  e(0) = 0.0;
}

// Implicit-shift QL on the tridiagonal (d, e), rotating the columns of v.
void tridiagonal_ql(Eigen::MatrixXd& v, Eigen::VectorXd& d, Eigen::VectorXd& e) {
  const Eigen::Index n = v.rows();
  for (Eigen::Index i = 1; i < n; ++i) e(i - 1) = e(i);
  e(n - 1) = 0.0;

  double f = 0.0;
  double tst1 = 0.0;
  for (Eigen::Index l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d(l)) + std::abs(e(l)));
    Eigen::Index m = l;
    while (m < n - 1 && std::abs(e(m)) > kEps * tst1) ++m;

    if (m > l) {
      int iter = 0;
      do {
        if (++iter > 64) {
          throw ConvergenceError("eigendecompose: QL iteration did not converge");
        }
        double g = d(l);
        double p = (d(l + 1) - g) / (2.0 * e(l));
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d(l) = e(l) / (p + r);
        d(l + 1) = e(l) * (p + r);
        const double dl1 = d(l + 1);
        double h = g - d(l);
        for (Eigen::Index i = l + 2; i < n; ++i) d(i) -= h;
        f += h;

        p = d(m);
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = e(l + 1);
        double s = 0.0, s2 = 0.0;
        for (Eigen::Index i = m - 1; i >= l; --i) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e(i);
          h = c * p;
          r = std::hypot(p, e(i));
          e(i + 1) = s * r;
          s = e(i) / r;
          c = p / r;
          p = c * d(i) - s * g;
          d(i + 1) = h + s * (c * g + s * d(i));
          double* vi = v.col(i).data();
          double* vi1 = v.col(i + 1).data();
          for (Eigen::Index k = 0; k < n; ++k) {
            const double t = vi1[k];
            vi1[k] = s * vi[k] + c * t;
            vi[k] = c * vi[k] - s * t;
          }
        }
        p = -s * s2 * c3 * el1 * e(l) / dl1;
        e(l) = s * p;
        d(l) = c * p;
      } while (std::abs(e(l)) > kEps * tst1);
    }
    d(l) += f;
    e(l) = 0.0;
  }
}

// Cyclic Jacobi. Stops once off(A) <= 1e-12 * max(1, ||A||_F).
void jacobi(Eigen::MatrixXd& a, Eigen::MatrixXd& v, Eigen::VectorXd& d) {
  const Eigen::Index n = a.rows();
  v.setIdentity(n, n);
  const double fro = std::max(1.0, a.norm());
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i)
        if (i != j) off += a(i, j) * a(i, j);
    if (std::sqrt(off) <= 1e-12 * fro) {
      d = a.diagonal();
      return;
    }
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        // Below rounding level relative to both diagonals: drop it.
        if (std::abs(apq) <= 0.25 * kEps * kEps * (std::abs(app) + std::abs(aqq)) &&
            std::abs(app) + std::abs(aqq) > 0.0) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        double* cp = a.col(p).data();
        double* cq = a.col(q).data();
        for (Eigen::Index k = 0; k < n; ++k) {
          const double x = cp[k], y = cq[k];
          cp[k] = c * x - s * y;
          cq[k] = s * x + c * y;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          a(p, k) = cp[k];
          a(q, k) = cq[k];
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = 0.0;
        double* vp = v.col(p).data();
        double* vq = v.col(q).data();
        for (Eigen::Index k = 0; k < n; ++k) {
          const double x = vp[k], y = vq[k];
          vp[k] = c * x - s * y;
          vq[k] = s * x + c * y;
        }
      }
    }
  }
  throw ConvergenceError("eigendecompose: Jacobi sweeps did not converge");
}

}  // namespace

SpectralDecomposition eigendecompose(const SymmetricMatrix& m, EigenMethod method,
                                     std::size_t max_dim) {
  const std::size_t n = m.dim();
  if (n == 0) throw std::invalid_argument("eigendecompose: empty matrix");
  if (n > max_dim) {
    throw std::length_error("eigendecompose: dimension " + std::to_string(n) +
                            " exceeds cap " + std::to_string(max_dim));
  }
  const Eigen::Index ni = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd v;
  Eigen::VectorXd d(ni);
  if (method == EigenMethod::kJacobi) {
    Eigen::MatrixXd a = m.dense();
    jacobi(a, v, d);
  } else {
    v = m.dense();
    Eigen::VectorXd e(ni);
    tridiagonalize(v, d, e);
    tridiagonal_ql(v, d, e);
  }

  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return d(a) < d(b); });
  SpectralDecomposition out;
  out.eigenvalues.resize(ni);
  out.eigenvectors.resize(ni, ni);
  for (Eigen::Index j = 0; j < ni; ++j) {
    out.eigenvalues(j) = d(order[j]);
    out.eigenvectors.col(j) = v.col(order[j]);
  }
  return out;
}

void refine_eigenvalues(SpectralDecomposition& d, const SymmetricMatrix& m) {
  const Eigen::Index n = static_cast<Eigen::Index>(d.dimension());
  if (static_cast<std::size_t>(n) != m.dim()) {
    throw std::invalid_argument("refine_eigenvalues: dimension mismatch");
  }
  const Eigen::MatrixXd& a = m.dense();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double* v = d.eigenvectors.col(j).data();
    long double num = 0.0L;
    long double den = 0.0L;
    for (Eigen::Index c = 0; c < n; ++c) {
      if (v[c] == 0.0) continue;
      const double* col = a.col(c).data();
      long double av = 0.0L;  // (M v)_c, M symmetric
      for (Eigen::Index r = 0; r < n; ++r) av += static_cast<long double>(col[r]) * v[r];
      num += av * v[c];
      den += static_cast<long double>(v[c]) * v[c];
    }
    d.eigenvalues(j) = static_cast<double>(num / den);
  }
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    return d.eigenvalues(x) < d.eigenvalues(y);
  });
  SpectralDecomposition sorted;
  sorted.eigenvalues.resize(n);
  sorted.eigenvectors.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    sorted.eigenvalues(j) = d.eigenvalues(order[static_cast<std::size_t>(j)]);
    sorted.eigenvectors.col(j) = d.eigenvectors.col(order[static_cast<std::size_t>(j)]);
  }
  d = std::move(sorted);
}

Eigen::MatrixXd SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.transpose();
}

std::vector<Eigenspace> group_eigenvalues(const Eigen::VectorXd& sorted_values,
                                          double gap) {
  std::vector<Eigenspace> out;
  const std::size_t n = static_cast<std::size_t>(sorted_values.size());
  std::size_t begin = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i == n || sorted_values(i) - sorted_values(i - 1) >= gap) {
      double sum = 0.0;
      for (std::size_t k = begin; k < i; ++k) sum += sorted_values(k);
      out.push_back({sum / static_cast<double>(i - begin), begin, i});
      begin = i;
    }
  }
  return out;
}

}  // namespace covwalk
