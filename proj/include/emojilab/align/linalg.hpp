// Copyright 2026 The emojilab Authors.
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

// Small dense linear algebra: a row-major matrix, Householder QR and a
// one-sided Jacobi SVD.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "emojilab/error.hpp"
#include "emojilab/rng.hpp"

namespace emojilab::linalg {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product: shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto ci = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0) continue;
      const auto bk = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) ci[j] += aik * bk[j];
    }
  }
  return c;
}

/// a * b^T without forming the transpose.
inline Matrix multiply_transposed(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw InputError("matrix product: shape mismatch");
  Matrix c(a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.rows(); ++j) c(i, j) = dot(a.row(i), b.row(j));
  }
  return c;
}

inline Matrix subtract(const Matrix& a, const Matrix& b) {
  Matrix c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] -= b.data()[i];
  return c;
}

inline double frobenius(const Matrix& a) { return norm(a.data()); }

/// max |M^T M - I| over all entries.
inline double orthogonality_error(const Matrix& m) {
  double worst = 0;
  for (std::size_t i = 0; i < m.cols(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      double s = 0;
      for (std::size_t k = 0; k < m.rows(); ++k) s += m(k, i) * m(k, j);
      worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

/// Householder QR of an m x n matrix X (any shape). Reflector k acts on
/// rows k..m-1; r = min(m, n) reflectors are stored.
class HouseholderQr {
 public:
  explicit HouseholderQr(Matrix x) : qr_(std::move(x)) {
    const std::size_t m = qr_.rows(), n = qr_.cols();
    const std::size_t r = std::min(m, n);
    beta_.assign(r, 0.0);
    vectors_.resize(r);
    for (std::size_t k = 0; k < r; ++k) {
      std::vector<double> v(m - k);
      for (std::size_t i = k; i < m; ++i) v[i - k] = qr_(i, k);
      const double alpha = norm(v);
      if (alpha == 0) {
        vectors_[k] = std::move(v);
        continue;  // identity reflector
      }
      const double sign = v[0] >= 0 ? 1.0 : -1.0;
      v[0] += sign * alpha;
      const double vv = dot(v, v);
      beta_[k] = 2.0 / vv;
      for (std::size_t j = k; j < n; ++j) {
        double s = 0;
        for (std::size_t i = k; i < m; ++i) s += v[i - k] * qr_(i, j);
        s *= beta_[k];
        for (std::size_t i = k; i < m; ++i) qr_(i, j) -= s * v[i - k];
      }
      vectors_[k] = std::move(v);
    }
  }

  std::size_t rank_bound() const { return beta_.size(); }

  /// The r x n upper-trapezoidal factor.
  Matrix r() const {
    const std::size_t r = rank_bound();
    Matrix out(r, qr_.cols());
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = i; j < qr_.cols(); ++j) out(i, j) = qr_(i, j);
    }
    return out;
  }

  /// Overwrites the columns of `y` (m x c) with Q * y.
  void apply_q(Matrix& y) const {
    for (std::size_t k = rank_bound(); k-- > 0;) reflect(y, k);
  }

  /// Overwrites the columns of `y` (m x c) with Q^T * y.
  void apply_qt(Matrix& y) const {
    for (std::size_t k = 0; k < rank_bound(); ++k) reflect(y, k);
  }

  /// The full m x m orthogonal factor.
  Matrix full_q() const {
    Matrix q = Matrix::identity(qr_.rows());
    apply_q(q);
    return q;
  }

  /// The first r columns of Q (m x r).
  Matrix thin_q() const {
    const std::size_t m = qr_.rows(), r = rank_bound();
    Matrix q(m, r);
    for (std::size_t i = 0; i < r; ++i) q(i, i) = 1;
    apply_q(q);
    return q;
  }

 private:
  void reflect(Matrix& y, std::size_t k) const {
    if (beta_[k] == 0) return;
    const auto& v = vectors_[k];
    const std::size_t m = y.rows();
    for (std::size_t j = 0; j < y.cols(); ++j) {
      double s = 0;
      for (std::size_t i = k; i < m; ++i) s += v[i - k] * y(i, j);
      s *= beta_[k];
      if (s == 0) continue;
      for (std::size_t i = k; i < m; ++i) y(i, j) -= s * v[i - k];
    }
  }

  Matrix qr_;
  std::vector<double> beta_;
  std::vector<std::vector<double>> vectors_;
};

struct Svd {
  Matrix u;                       // m x n, orthonormal columns
  std::vector<double> singular;   // n values, descending
  Matrix v;                       // n x n orthogonal
  int sweeps = 0;
};

/// One-sided (Hestenes) Jacobi SVD of an m x n matrix with m >= n.
/// Columns are rotated pairwise until every pair is orthogonal to relative
/// tolerance `tol`. Columns of U belonging to zero singular values are
/// completed to an orthonormal set, so U always has orthonormal columns.
inline Svd jacobi_svd(const Matrix& a, double tol = 1e-10, int max_sweeps = 80) {
  const std::size_t m = a.rows(), n = a.cols();
  if (m < n) throw InputError("jacobi_svd expects rows >= cols");
  // Work on columns stored contiguously.
  std::vector<std::vector<double>> g(n, std::vector<double>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) g[j][i] = a(i, j);
  }
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (std::size_t j = 0; j < n; ++j) v[j][j] = 1;

  Svd out;
  for (; out.sweeps < max_sweeps; ++out.sweeps) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double alpha = dot(g[p], g[p]);
        const double beta = dot(g[q], g[q]);
        const double gamma = dot(g[p], g[q]);
        if (gamma == 0 || std::abs(gamma) <= tol * std::sqrt(alpha * beta)) {
          continue;
        }
        rotated = true;
        const double zeta = (beta - alpha) / (2 * gamma);
        const double t = (zeta >= 0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1 + zeta * zeta));
        const double c = 1 / std::sqrt(1 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < m; ++i) {
          const double gp = g[p][i], gq = g[q][i];
          g[p][i] = c * gp - s * gq;
          g[q][i] = s * gp + c * gq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double vp = v[p][i], vq = v[q][i];
          v[p][i] = c * vp - s * vq;
          v[q][i] = s * vp + c * vq;
        }
      }
    }
    if (!rotated) break;
  }
  if (out.sweeps == max_sweeps) {
    throw NumericalError("jacobi_svd did not converge");
  }

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) sigma[j] = norm(g[j]);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

  const double largest = n ? sigma[order[0]] : 0.0;
  const double cutoff =
      largest * static_cast<double>(std::max(m, n)) * 1e-15;
  out.u = Matrix(m, n);
  out.v = Matrix(n, n);
  out.singular.resize(n);
  std::vector<std::size_t> null_columns;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = order[k];
    out.singular[k] = sigma[j];
    for (std::size_t i = 0; i < n; ++i) out.v(i, k) = v[j][i];
    if (sigma[j] > cutoff && sigma[j] > 0) {
      for (std::size_t i = 0; i < m; ++i) out.u(i, k) = g[j][i] / sigma[j];
    } else {
      out.singular[k] = sigma[j] > cutoff ? sigma[j] : 0.0;
      null_columns.push_back(k);
    }
  }
  // Complete U with unit vectors made orthogonal (two Gram-Schmidt passes)
  // to the columns filled so far; unfilled columns are still zero.
  std::size_t probe = 0;
  for (std::size_t k : null_columns) {
    for (; probe < m; ++probe) {
      std::vector<double> e(m, 0.0);
      e[probe] = 1;
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t c = 0; c < n; ++c) {
          double s = 0;
          for (std::size_t i = 0; i < m; ++i) s += out.u(i, c) * e[i];
          for (std::size_t i = 0; i < m; ++i) e[i] -= s * out.u(i, c);
        }
      }
      const double len = norm(e);
      if (len > 1e-6) {
        for (std::size_t i = 0; i < m; ++i) out.u(i, k) = e[i] / len;
        ++probe;
        break;
      }
    }
  }
  return out;
}

/// Haar-distributed random orthogonal d x d matrix (QR of a Gaussian matrix
/// with the signs of R's diagonal folded into Q).
inline Matrix random_orthogonal(std::size_t d, Rng& rng) {
  Matrix g(d, d);
  for (double& x : g.data()) x = rng.normal();
  HouseholderQr qr(g);
  Matrix q = qr.full_q();
  const Matrix r = qr.r();
  for (std::size_t j = 0; j < d; ++j) {
    if (r(j, j) < 0) {
      for (std::size_t i = 0; i < d; ++i) q(i, j) = -q(i, j);
    }
  }
  return q;
}

}  // namespace emojilab::linalg
