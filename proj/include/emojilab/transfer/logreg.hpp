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

// Binary L2-regularized logistic regression.
//
//   J(w, b) = 0.5 |w|^2 + c * sum_i log(1 + exp(-y_i (w . x_i + b)))
//
// with labels y in {-1, +1} and an unpenalized bias. J is minimised by
// limited-memory BFGS with a backtracking Armijo line search; a step is
// only taken when it lowers J, so the recorded objective never increases.

#pragma once

#include <algorithm>
#include <cmath>
#include <deque>
#include <span>
#include <vector>

#include "emojilab/error.hpp"
#include "emojilab/transfer/tfidf.hpp"

namespace emojilab {

struct LogisticModel {
  std::vector<double> weights;
  double bias = 0;
  double c = 1.0;
  bool converged = false;
  int iterations = 0;
  std::vector<double> objective_history;  // J before the first step, then per step

  double decision(const SparseMatrix& x, std::size_t row) const {
    return x.row_dot(row, weights) + bias;
  }
  /// +1 or -1; a zero margin counts as positive.
  int predict(const SparseMatrix& x, std::size_t row) const {
    return decision(x, row) >= 0 ? 1 : -1;
  }
};

struct LogregOptions {
  double c = 1.0;
  double tol = 1e-6;
  int max_iter = 1000;
  int memory = 10;
};

namespace detail {

/// log(1 + exp(-m)) without overflow.
inline double log1p_exp_neg(double m) {
  return m > 0 ? std::log1p(std::exp(-m)) : -m + std::log1p(std::exp(m));
}

/// 1 / (1 + exp(m)).
inline double sigmoid_neg(double m) {
  if (m >= 0) {
    const double e = std::exp(-m);
    return e / (1 + e);
  }
  return 1 / (1 + std::exp(m));
}

inline double inf_norm(std::span<const double> v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace detail

/// J and its gradient at theta = (w, b); the gradient has the bias last.
inline double logreg_objective(const SparseMatrix& x, std::span<const int> y,
                               std::span<const double> theta, double c,
                               std::vector<double>* grad = nullptr) {
  const std::size_t d = x.cols;
  const double b = theta[d];
  double j = 0;
  for (std::size_t k = 0; k < d; ++k) j += 0.5 * theta[k] * theta[k];
  if (grad) {
    grad->assign(d + 1, 0.0);
    for (std::size_t k = 0; k < d; ++k) (*grad)[k] = theta[k];
  }
  double loss = 0;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    const double m = y[i] * (x.row_dot(i, theta.first(d)) + b);
    loss += detail::log1p_exp_neg(m);
    if (grad) {
      const double g = -c * y[i] * detail::sigmoid_neg(m);
      for (std::size_t k = x.indptr[i]; k < x.indptr[i + 1]; ++k) {
        (*grad)[x.indices[k]] += g * x.values[k];
      }
      (*grad)[d] += g;
    }
  }
  return j + c * loss;
}

inline void validate_training_data(const SparseMatrix& x, std::span<const int> y) {
  if (x.rows() != y.size()) throw InputError("logreg: X rows and labels differ in number");
  bool pos = false, neg = false;
  for (int label : y) {
    if (label == 1) {
      pos = true;
    } else if (label == -1) {
      neg = true;
    } else {
      throw InputError("logreg: labels must be +1 or -1");
    }
  }
  if (!pos || !neg) throw InputError("logreg: both classes must be present");
  for (double v : x.values) {
    if (!std::isfinite(v)) throw InputError("logreg: non-finite feature value");
  }
  for (auto j : x.indices) {
    if (j >= x.cols) throw InputError("logreg: feature index out of range");
  }
}

inline LogisticModel logreg_train(const SparseMatrix& x, std::span<const int> y,
                                  const LogregOptions& opts = {}) {
  validate_training_data(x, y);
  if (!(opts.c > 0)) throw InputError("logreg: c must be positive");
  const std::size_t n = x.cols + 1;
  std::vector<double> theta(n, 0.0), grad, next(n), next_grad, dir(n);
  double f = logreg_objective(x, y, theta, opts.c, &grad);

  LogisticModel model;
  model.c = opts.c;
  model.objective_history.push_back(f);
  std::deque<std::vector<double>> s_hist, y_hist;
  std::deque<double> rho_hist;

  for (int it = 0; it < opts.max_iter; ++it) {
    if (detail::inf_norm(grad) < opts.tol) {
      model.converged = true;
      break;
    }
    // Two-loop recursion for dir = -H grad.
    dir = grad;
    std::vector<double> alpha(s_hist.size());
    for (std::size_t k = s_hist.size(); k-- > 0;) {
      alpha[k] = rho_hist[k] * detail::dot(s_hist[k], dir);
      for (std::size_t i = 0; i < n; ++i) dir[i] -= alpha[k] * y_hist[k][i];
    }
    double gamma = 1;
    if (!s_hist.empty()) {
      gamma = detail::dot(s_hist.back(), y_hist.back()) /
              detail::dot(y_hist.back(), y_hist.back());
    } else {
      gamma = 1 / std::max(1.0, detail::inf_norm(grad));
    }
    for (double& v : dir) v *= gamma;
    for (std::size_t k = 0; k < s_hist.size(); ++k) {
      const double beta = rho_hist[k] * detail::dot(y_hist[k], dir);
      for (std::size_t i = 0; i < n; ++i) dir[i] += (alpha[k] - beta) * s_hist[k][i];
    }
    for (double& v : dir) v = -v;
    double slope = detail::dot(grad, dir);
    if (!(slope < 0)) {  // not a descent direction: restart from steepest descent
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
      for (std::size_t i = 0; i < n; ++i) dir[i] = -grad[i];
      slope = -detail::dot(grad, grad);
    }

    double step = 1;
    double f_next = f;
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls) {
      for (std::size_t i = 0; i < n; ++i) next[i] = theta[i] + step * dir[i];
      f_next = logreg_objective(x, y, next, opts.c, &next_grad);
      if (f_next <= f + 1e-4 * step * slope && f_next < f) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;  // no decrease representable in floating point

    std::vector<double> s(n), yk(n);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = next[i] - theta[i];
      yk[i] = next_grad[i] - grad[i];
    }
    const double sy = detail::dot(s, yk);
    if (sy > 1e-12 * std::sqrt(detail::dot(s, s) * detail::dot(yk, yk))) {
      s_hist.push_back(std::move(s));
      y_hist.push_back(std::move(yk));
      rho_hist.push_back(1 / sy);
      if (static_cast<int>(s_hist.size()) > opts.memory) {
        s_hist.pop_front();
        y_hist.pop_front();
        rho_hist.pop_front();
      }
    }
    theta.swap(next);
    grad.swap(next_grad);
    f = f_next;
    model.objective_history.push_back(f);
    model.iterations = it + 1;
  }
  if (!model.converged && detail::inf_norm(grad) < opts.tol) model.converged = true;
  model.bias = theta[x.cols];
  theta.resize(x.cols);
  model.weights = std::move(theta);
  for (double w : model.weights) {
    if (!std::isfinite(w)) throw NumericalError("logreg: non-finite weight");
  }
  return model;
}

}  // namespace emojilab
