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

// Emoji centroid embeddings and their orthogonal Procrustes alignment.
//
// For centroid matrices A and B (n emojis x d dims) the rotation R
// minimising ||A R - B||_F is U V^T, where A^T B = U S V^T. With
// A^T = Qa Ra and B^T = Qb Rb (Householder QR, r = min(n, d)):
//
//   A^T B = Qa (Ra Rb^T) Qb^T,   Ra Rb^T = Uk S Vk^T   (an r x r problem)
//   R     = Qa diag(Uk Vk^T, I) Qb^T
//
// where the identity block maps the orthogonal complement of A's row
// space onto that of B's; it does not change the objective. Because Qb
// is orthogonal, cosines between rows of A R and rows of B can be taken in
// the r-dimensional coordinates (Ra^T Uk Vk^T versus Rb^T). Scoring and
// permutation replicates therefore never touch d x d matrices.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "emojilab/align/embedding_io.hpp"
#include "emojilab/align/linalg.hpp"
#include "emojilab/error.hpp"
#include "emojilab/ingest/post.hpp"
#include "emojilab/parallel.hpp"
#include "emojilab/rng.hpp"
#include "emojilab/stats/stats.hpp"

namespace emojilab {

/// Per-emoji centroids of one corpus, row-aligned with `emojis`.
struct CentroidMatrix {
  std::vector<std::string> emojis;
  linalg::Matrix rows;
  std::vector<std::size_t> support;   // posts available per emoji
  std::vector<std::size_t> sampled;   // posts averaged per emoji
  std::vector<bool> degenerate;       // centroid with (near) zero norm
  bool normalized = true;

  std::size_t dim() const { return rows.cols(); }
};

/// Embedding rows of the posts that contain each emoji (a post counts once
/// per emoji, in input order). Posts without a vector are skipped.
inline std::map<std::string, std::vector<std::size_t>> emoji_rows(
    const EmbeddingStore& store, std::span<const Post> posts) {
  const auto index = store.index();
  std::map<std::string, std::vector<std::size_t>> out;
  for (const auto& p : posts) {
    auto it = index.find(p.id);
    if (it == index.end()) continue;
    std::vector<std::string_view> seen;
    for (const auto& e : p.emojis) {
      if (std::find(seen.begin(), seen.end(), e) != seen.end()) continue;
      seen.push_back(e);
      out[e].push_back(it->second);
    }
  }
  return out;
}

/// Emojis with at least `min_support` embedded posts on both sides, in code
/// point order.
inline std::vector<std::string> shared_emojis(
    const std::map<std::string, std::vector<std::size_t>>& a,
    const std::map<std::string, std::vector<std::size_t>>& b,
    std::size_t min_support) {
  std::vector<std::string> out;
  for (const auto& [emoji, rows] : a) {
    if (rows.size() < min_support) continue;
    auto it = b.find(emoji);
    if (it != b.end() && it->second.size() >= min_support) out.push_back(emoji);
  }
  return out;
}

struct CentroidOptions {
  std::size_t n_samples = 500;
  std::uint64_t seed = 0;
  bool normalize = true;  // unit-normalize post vectors before averaging
  unsigned threads = 1;
};

/// Mean of `n_samples` post vectors per shared emoji, sampled without
/// replacement. The sample of an emoji depends only on (seed, emoji).
inline CentroidMatrix compute_centroids(const EmbeddingStore& store,
                                        std::span<const Post> posts,
                                        const std::vector<std::string>& shared,
                                        const CentroidOptions& opts) {
  if (opts.n_samples < 1) throw InputError("n_samples must be at least 1");
  const auto rows_by_emoji = emoji_rows(store, posts);
  CentroidMatrix out;
  out.emojis = shared;
  out.normalized = opts.normalize;
  out.rows = linalg::Matrix(shared.size(), store.dim);
  out.support.resize(shared.size());
  out.sampled.resize(shared.size());
  out.degenerate.resize(shared.size());
  for (std::size_t i = 0; i < shared.size(); ++i) {
    auto it = rows_by_emoji.find(shared[i]);
    const std::size_t have = it == rows_by_emoji.end() ? 0 : it->second.size();
    if (have < opts.n_samples) {
      throw InputError("emoji " + shared[i] + " has " + std::to_string(have) +
                       " embedded posts, " + std::to_string(opts.n_samples) +
                       " required");
    }
    out.support[i] = have;
  }
  parallel_for(shared.size(), opts.threads, [&](std::size_t i) {
    std::vector<std::size_t> pool = rows_by_emoji.at(shared[i]);
    Rng rng(derive_seed(opts.seed, stream_key(shared[i])));
    for (std::size_t k = 0; k < opts.n_samples; ++k) {  // partial Fisher-Yates
      const std::size_t j = k + rng.below(pool.size() - k);
      std::swap(pool[k], pool[j]);
    }
    std::vector<double> acc(store.dim, 0.0);
    for (std::size_t k = 0; k < opts.n_samples; ++k) {
      const float* v = store.row(pool[k]);
      double scale = 1;
      if (opts.normalize) {
        double ss = 0;
        for (std::size_t c = 0; c < store.dim; ++c) ss += double{v[c]} * v[c];
        scale = ss > 0 ? 1 / std::sqrt(ss) : 0.0;
      }
      for (std::size_t c = 0; c < store.dim; ++c) acc[c] += scale * v[c];
    }
    auto row = out.rows.row(i);
    for (std::size_t c = 0; c < store.dim; ++c) {
      row[c] = acc[c] / static_cast<double>(opts.n_samples);
    }
    out.sampled[i] = opts.n_samples;
  });
  for (std::size_t i = 0; i < shared.size(); ++i) {
    out.degenerate[i] = linalg::norm(out.rows.row(i)) <= 1e-12;
  }
  return out;
}

struct ProcrustesOptions {
  bool center = false;  // subtract column means from both matrices
  bool scale = false;   // divide both matrices by their Frobenius norm
};

namespace detail {

inline linalg::Matrix preprocess(linalg::Matrix m, const ProcrustesOptions& o) {
  if (o.center && m.rows() > 0) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      double mean = 0;
      for (std::size_t r = 0; r < m.rows(); ++r) mean += m(r, c);
      mean /= static_cast<double>(m.rows());
      for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) -= mean;
    }
  }
  if (o.scale) {
    const double f = linalg::frobenius(m);
    if (f > 0) {
      for (double& x : m.data()) x /= f;
    }
  }
  return m;
}

/// A and B expressed in the QR bases of their row spaces.
struct ReducedPair {
  linalg::HouseholderQr qa;
  linalg::HouseholderQr qb;
  linalg::Matrix a_coords;  // n x r, equals Ra^T
  linalg::Matrix b_coords;  // n x r, equals Rb^T

  ReducedPair(const linalg::Matrix& a, const linalg::Matrix& b)
      : qa(a.transposed()), qb(b.transposed()) {
    a_coords = qa.r().transposed();
    b_coords = qb.r().transposed();
  }
};

/// W = Uk Vk^T for K = a_coords^T * b_rows (r x r).
inline linalg::Matrix core_rotation(const linalg::Matrix& a_coords,
                                    const linalg::Matrix& b_coords) {
  const std::size_t r = a_coords.cols();
  linalg::Matrix k(r, r);
  for (std::size_t e = 0; e < a_coords.rows(); ++e) {
    const auto ae = a_coords.row(e);
    const auto be = b_coords.row(e);
    for (std::size_t i = 0; i < r; ++i) {
      if (ae[i] == 0) continue;
      auto ki = k.row(i);
      for (std::size_t j = 0; j < r; ++j) ki[j] += ae[i] * be[j];
    }
  }
  const auto svd = linalg::jacobi_svd(k);
  return linalg::multiply_transposed(svd.u, svd.v);
}

inline void validate_pair(const CentroidMatrix& a, const CentroidMatrix& b) {
  if (a.emojis != b.emojis) {
    throw InputError("centroid matrices must share the same emoji list");
  }
  if (a.dim() != b.dim()) {
    throw InputError("embedding dims differ: " + std::to_string(a.dim()) +
                     " vs " + std::to_string(b.dim()));
  }
  if (a.emojis.size() < 2) {
    throw InputError("alignment needs at least 2 shared emojis");
  }
}

}  // namespace detail

/// Orthogonal d x d matrix R minimising ||A R - B||_F.
inline linalg::Matrix procrustes(const linalg::Matrix& a, const linalg::Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InputError("procrustes: matrices must have the same shape");
  }
  const std::size_t d = a.cols();
  detail::ReducedPair red(a, b);
  const auto w = detail::core_rotation(red.a_coords, red.b_coords);
  // R = Qa diag(W, I) Qb^T, built as Qa * (diag(W, I) * Qb^T).
  linalg::Matrix m = linalg::Matrix::identity(d);
  for (std::size_t i = 0; i < w.rows(); ++i) {
    for (std::size_t j = 0; j < w.cols(); ++j) m(i, j) = w(i, j);
  }
  linalg::Matrix mt = m.transposed();  // diag(W, I)^T
  red.qb.apply_q(mt);                  // Qb diag(W, I)^T
  linalg::Matrix rot = mt.transposed();  // diag(W, I) Qb^T
  red.qa.apply_q(rot);
  return rot;
}

inline linalg::Matrix procrustes(const CentroidMatrix& a, const CentroidMatrix& b,
                                 const ProcrustesOptions& opts = {}) {
  detail::validate_pair(a, b);
  return procrustes(detail::preprocess(a.rows, opts),
                    detail::preprocess(b.rows, opts));
}

struct AlignmentResult {
  linalg::Matrix rotation;  // empty unless requested
  double mean_cosine = 0;
  std::map<int, double> nn_at;
  std::optional<double> permutation_p;
  std::vector<std::string> excluded;  // zero-norm centroids
  std::size_t n_scored = 0;
  std::string direction = "a->b";
};

namespace detail {

/// Scores mapped rows against target rows. `emojis` supplies the tie order.
inline AlignmentResult score_rows(const linalg::Matrix& mapped,
                                  const linalg::Matrix& target,
                                  const std::vector<std::string>& emojis,
                                  const std::vector<int>& ks) {
  AlignmentResult res;
  const std::size_t n = mapped.rows();
  std::vector<std::size_t> keep;
  std::vector<double> mapped_norm(n), target_norm(n);
  for (std::size_t i = 0; i < n; ++i) {
    mapped_norm[i] = linalg::norm(mapped.row(i));
    target_norm[i] = linalg::norm(target.row(i));
    if (mapped_norm[i] <= 1e-12 || target_norm[i] <= 1e-12) {
      res.excluded.push_back(emojis[i]);
    } else {
      keep.push_back(i);
    }
  }
  res.n_scored = keep.size();
  for (int k : ks) {
    if (k < 1) throw InputError("NN@k needs k >= 1");
    res.nn_at[k] = 0;
  }
  if (keep.empty()) return res;
  double cos_sum = 0;
  std::map<int, std::size_t> hits;
  std::vector<double> sims(keep.size());
  for (std::size_t qi = 0; qi < keep.size(); ++qi) {
    const std::size_t i = keep[qi];
    for (std::size_t cj = 0; cj < keep.size(); ++cj) {
      const std::size_t j = keep[cj];
      sims[cj] = linalg::dot(mapped.row(i), target.row(j)) /
                 (mapped_norm[i] * target_norm[j]);
    }
    cos_sum += sims[qi];
    std::size_t rank = 0;  // candidates ranked ahead of the true counterpart
    for (std::size_t cj = 0; cj < keep.size(); ++cj) {
      if (cj == qi) continue;
      if (sims[cj] > sims[qi] ||
          (sims[cj] == sims[qi] && emojis[keep[cj]] < emojis[i])) {
        ++rank;
      }
    }
    for (int k : ks) {
      if (rank < static_cast<std::size_t>(k)) ++hits[k];
    }
  }
  res.mean_cosine = cos_sum / static_cast<double>(keep.size());
  for (int k : ks) {
    res.nn_at[k] = static_cast<double>(hits[k]) / static_cast<double>(keep.size());
  }
  return res;
}

}  // namespace detail

/// Scores an explicit rotation: cosine(A_i R, B_i) and NN@k by cosine.
inline AlignmentResult score_alignment(const CentroidMatrix& a,
                                       const CentroidMatrix& b,
                                       const linalg::Matrix& rotation,
                                       const std::vector<int>& ks = {1, 2, 3, 4, 5},
                                       const ProcrustesOptions& opts = {}) {
  detail::validate_pair(a, b);
  if (rotation.rows() != a.dim() || rotation.cols() != a.dim()) {
    throw InputError("rotation must be dim x dim");
  }
  const auto pa = detail::preprocess(a.rows, opts);
  const auto pb = detail::preprocess(b.rows, opts);
  auto res = detail::score_rows(linalg::multiply(pa, rotation), pb, a.emojis, ks);
  res.rotation = rotation;
  return res;
}

struct AlignOptions {
  ProcrustesOptions procrustes;
  std::vector<int> ks = {1, 2, 3, 4, 5};
  bool keep_rotation = false;
  std::size_t n_perm = 0;  // 0 skips the permutation test
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

/// Mean cosine after Procrustes fitted on (a_coords, permuted b_coords).
inline double permuted_mean_cosine(const detail::ReducedPair& red,
                                   const std::vector<std::size_t>& perm,
                                   const std::vector<std::string>& emojis) {
  linalg::Matrix b(red.b_coords.rows(), red.b_coords.cols());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const auto src = red.b_coords.row(perm[i]);
    std::copy(src.begin(), src.end(), b.row(i).begin());
  }
  const auto w = detail::core_rotation(red.a_coords, b);
  return detail::score_rows(linalg::multiply(red.a_coords, w), b, emojis, {})
      .mean_cosine;
}

/// Fits the rotation, scores it and optionally runs the permutation test
/// (rows of B re-paired at random, Procrustes re-fitted, mean cosine
/// compared with the observed one; add-one p-value).
inline AlignmentResult align(const CentroidMatrix& a, const CentroidMatrix& b,
                             const AlignOptions& opts = {}) {
  detail::validate_pair(a, b);
  const auto pa = detail::preprocess(a.rows, opts.procrustes);
  const auto pb = detail::preprocess(b.rows, opts.procrustes);
  detail::ReducedPair red(pa, pb);
  const auto w = detail::core_rotation(red.a_coords, red.b_coords);
  auto res = detail::score_rows(linalg::multiply(red.a_coords, w), red.b_coords,
                                a.emojis, opts.ks);
  if (opts.keep_rotation) res.rotation = procrustes(pa, pb);
  if (opts.n_perm > 0) {
    const std::size_t n = a.emojis.size();
    res.permutation_p = stats::permutation_test(
        res.mean_cosine,
        [&](std::uint64_t seed) {
          std::vector<std::size_t> perm(n);
          for (std::size_t i = 0; i < n; ++i) perm[i] = i;
          Rng rng(seed);
          rng.shuffle(std::span<std::size_t>(perm));
          return permuted_mean_cosine(red, perm, a.emojis);
        },
        opts.n_perm, stats::Tail::kGreater, opts.seed, opts.threads);
  }
  return res;
}

/// Permutation p-value for the mean cosine of an aligned pair.
inline double alignment_permutation_test(const CentroidMatrix& a,
                                         const CentroidMatrix& b,
                                         std::size_t n_perm, std::uint64_t seed,
                                         unsigned threads = 1,
                                         const ProcrustesOptions& opts = {}) {
  if (n_perm < 1) throw InputError("n_perm must be at least 1");
  AlignOptions o;
  o.procrustes = opts;
  o.ks = {};
  o.n_perm = n_perm;
  o.seed = seed;
  o.threads = threads;
  return *align(a, b, o).permutation_p;
}

/// Wraps a raw matrix as a centroid matrix with generated emoji labels;
/// convenient for synthetic experiments.
inline CentroidMatrix centroid_matrix_from(linalg::Matrix rows,
                                           std::vector<std::string> emojis = {}) {
  CentroidMatrix c;
  if (emojis.empty()) {
    for (std::size_t i = 0; i < rows.rows(); ++i) {
      char buf[16];
      std::snprintf(buf, sizeof buf, "e%06zu", i);
      emojis.emplace_back(buf);
    }
  }
  c.emojis = std::move(emojis);
  c.support.assign(rows.rows(), 0);
  c.sampled.assign(rows.rows(), 0);
  c.degenerate.assign(rows.rows(), false);
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    c.degenerate[i] = linalg::norm(rows.row(i)) <= 1e-12;
  }
  c.rows = std::move(rows);
  return c;
}

}  // namespace emojilab
