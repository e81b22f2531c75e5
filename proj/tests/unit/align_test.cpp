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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "emojilab/align/align.hpp"
#include "emojilab/align/embedding_io.hpp"
#include "emojilab/align/linalg.hpp"
#include "emojilab/error.hpp"

using namespace emojilab;
using linalg::Matrix;

namespace {

Matrix gaussian(std::size_t n, std::size_t d, Rng& rng) {
  Matrix m(n, d);
  for (double& x : m.data()) x = rng.normal();
  return m;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  double worst = 0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  }
  return worst;
}

double residual(const Matrix& a, const Matrix& r, const Matrix& b) {
  return linalg::frobenius(linalg::subtract(linalg::multiply(a, r), b));
}

Post post(std::string id, std::vector<std::string> emojis) {
  Post p;
  p.id = std::move(id);
  p.emojis = std::move(emojis);
  return p;
}

}  // namespace

TEST(Linalg, QrReconstructs) {
  Rng rng(11);
  for (auto [m, n] : {std::pair{7, 4}, {4, 7}, {5, 5}}) {
    const Matrix x = gaussian(m, n, rng);
    linalg::HouseholderQr qr(x);
    const Matrix q = qr.full_q();
    EXPECT_LT(linalg::orthogonality_error(q), 1e-12);
    Matrix rfull(m, n);
    const Matrix r = qr.r();
    for (std::size_t i = 0; i < r.rows(); ++i) {
      for (std::size_t j = 0; j < r.cols(); ++j) rfull(i, j) = r(i, j);
    }
    EXPECT_LT(max_abs_diff(linalg::multiply(q, rfull), x), 1e-12);
  }
}

TEST(Linalg, JacobiSvdReconstructs) {
  Rng rng(12);
  const Matrix a = gaussian(9, 6, rng);
  const auto svd = linalg::jacobi_svd(a);
  Matrix us = svd.u;
  for (std::size_t i = 0; i < us.rows(); ++i) {
    for (std::size_t j = 0; j < us.cols(); ++j) us(i, j) *= svd.singular[j];
  }
  EXPECT_LT(max_abs_diff(linalg::multiply_transposed(us, svd.v), a), 1e-12);
  EXPECT_LT(linalg::orthogonality_error(svd.v), 1e-12);
  for (std::size_t j = 1; j < svd.singular.size(); ++j) {
    EXPECT_GE(svd.singular[j - 1], svd.singular[j]);
  }
}

TEST(Linalg, JacobiSvdRankDeficientKeepsOrthonormalU) {
  Matrix a(5, 4);
  for (std::size_t i = 0; i < 5; ++i) {
    a(i, 0) = static_cast<double>(i + 1);
    a(i, 1) = 2.0 * static_cast<double>(i + 1);
  }
  const auto svd = linalg::jacobi_svd(a);
  EXPECT_LT(linalg::orthogonality_error(svd.u), 1e-10);
  EXPECT_EQ(svd.singular[1], 0.0);
}

TEST(Procrustes, RecoversPlantedRotation) {
  Rng rng(21);
  const Matrix a = gaussian(50, 32, rng);
  const Matrix r0 = linalg::random_orthogonal(32, rng);
  const Matrix b = linalg::multiply(a, r0);
  const Matrix r = procrustes(a, b);
  EXPECT_LT(residual(a, r, b), 1e-8);
  EXPECT_LT(linalg::orthogonality_error(r), 1e-8);

  const auto res = score_alignment(centroid_matrix_from(a), centroid_matrix_from(b), r);
  EXPECT_NEAR(res.mean_cosine, 1.0, 1e-8);
  EXPECT_EQ(res.nn_at.at(1), 1.0);
}

TEST(Procrustes, IdentityWhenMatricesEqual) {
  Rng rng(22);
  const Matrix a = gaussian(40, 8, rng);
  const Matrix r = procrustes(a, a);
  EXPECT_LT(residual(a, r, a), 1e-8);
  EXPECT_LT(max_abs_diff(r, Matrix::identity(8)), 1e-8);
}

TEST(Procrustes, FewerEmojisThanDimsStillOrthogonal) {
  Rng rng(23);
  const Matrix a = gaussian(6, 20, rng);
  const Matrix r0 = linalg::random_orthogonal(20, rng);
  const Matrix b = linalg::multiply(a, r0);
  const Matrix r = procrustes(a, b);
  EXPECT_LT(linalg::orthogonality_error(r), 1e-8);
  EXPECT_LT(residual(a, r, b), 1e-8);
}

TEST(Procrustes, RankDeficientInputGivesOrthogonalMap) {
  Matrix a(4, 3), b(4, 3);
  for (std::size_t i = 0; i < 4; ++i) {
    a(i, 0) = static_cast<double>(i);
    b(i, 1) = static_cast<double>(i);
  }
  const Matrix r = procrustes(a, b);
  EXPECT_LT(linalg::orthogonality_error(r), 1e-8);
  EXPECT_LT(residual(a, r, b), 1e-8);
}

TEST(Procrustes, BeatsRandomOrthogonalMaps) {
  Rng rng(24);
  const Matrix a = gaussian(30, 10, rng);
  const Matrix b = gaussian(30, 10, rng);
  const Matrix r = procrustes(a, b);
  const double best = residual(a, r, b);
  EXPECT_LE(best, residual(a, Matrix::identity(10), b));
  for (int t = 0; t < 200; ++t) {
    EXPECT_LE(best, residual(a, linalg::random_orthogonal(10, rng), b) + 1e-12);
  }
}

TEST(Procrustes, RejectsMismatchedInputs) {
  auto a = centroid_matrix_from(Matrix(3, 4, 1.0));
  auto b = centroid_matrix_from(Matrix(3, 5, 1.0));
  EXPECT_THROW(procrustes(a, b), InputError);
  auto c = centroid_matrix_from(Matrix(1, 4, 1.0));
  EXPECT_THROW(procrustes(c, c), InputError);
  auto d = centroid_matrix_from(Matrix(3, 4, 1.0), {"x", "y", "z"});
  EXPECT_THROW(procrustes(a, d), InputError);
}

TEST(Alignment, NearestNeighbourAccuracyIsMonotone) {
  Rng rng(31);
  const Matrix a = gaussian(25, 6, rng);
  Matrix b = linalg::multiply(a, linalg::random_orthogonal(6, rng));
  for (double& x : b.data()) x += 0.8 * rng.normal();
  AlignOptions opts;
  opts.ks = {1, 2, 3, 4, 5, 25};
  const auto res = align(centroid_matrix_from(a), centroid_matrix_from(b), opts);
  for (int k = 2; k <= 5; ++k) EXPECT_GE(res.nn_at.at(k), res.nn_at.at(k - 1));
  EXPECT_EQ(res.nn_at.at(25), 1.0);
  EXPECT_GE(res.nn_at.at(1), 0.0);
  EXPECT_LE(res.nn_at.at(5), 1.0);
}

TEST(Alignment, ReducedPathMatchesFullRotation) {
  Rng rng(32);
  const Matrix a = gaussian(12, 16, rng);
  const Matrix b = gaussian(12, 16, rng);
  const auto ca = centroid_matrix_from(a), cb = centroid_matrix_from(b);
  AlignOptions opts;
  opts.keep_rotation = true;
  const auto fast = align(ca, cb, opts);
  const auto full = score_alignment(ca, cb, fast.rotation);
  EXPECT_NEAR(fast.mean_cosine, full.mean_cosine, 1e-10);
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(fast.nn_at.at(k), full.nn_at.at(k));
}

TEST(Alignment, MeanCosineInvariantUnderSharedTransform) {
  Rng rng(33);
  const Matrix a = gaussian(20, 7, rng);
  const Matrix b = gaussian(20, 7, rng);
  const Matrix q = linalg::random_orthogonal(7, rng);
  const double base = align(centroid_matrix_from(a), centroid_matrix_from(b)).mean_cosine;
  const double moved = align(centroid_matrix_from(linalg::multiply(a, q)),
                             centroid_matrix_from(linalg::multiply(b, q)))
                           .mean_cosine;
  EXPECT_NEAR(base, moved, 1e-10);
}

TEST(Alignment, TiesGoToLowerCodePoint) {
  // Two identical target rows: the query whose label sorts first wins NN@1.
  Matrix a(3, 2), b(3, 2);
  a(0, 0) = 1;
  a(1, 0) = 1;
  a(2, 1) = 1;
  b = a;
  const auto res = score_alignment(centroid_matrix_from(a, {"a", "b", "c"}),
                                   centroid_matrix_from(b, {"a", "b", "c"}),
                                   Matrix::identity(2), {1, 2});
  EXPECT_NEAR(res.nn_at.at(1), 2.0 / 3.0, 1e-15);
  EXPECT_EQ(res.nn_at.at(2), 1.0);
}

TEST(Alignment, ZeroCentroidIsExcludedAndReported) {
  Matrix a(3, 2), b(3, 2);
  a(0, 0) = 1;
  a(1, 1) = 1;
  b = a;
  const auto res = score_alignment(centroid_matrix_from(a, {"x", "y", "z"}),
                                   centroid_matrix_from(b, {"x", "y", "z"}),
                                   Matrix::identity(2));
  ASSERT_EQ(res.excluded.size(), 1u);
  EXPECT_EQ(res.excluded[0], "z");
  EXPECT_EQ(res.n_scored, 2u);
  EXPECT_DOUBLE_EQ(res.mean_cosine, 1.0);
}

TEST(AlignmentPermutation, PlantedSignalIsSignificant) {
  Rng rng(41);
  const Matrix a = gaussian(30, 8, rng);
  const Matrix b = linalg::multiply(a, linalg::random_orthogonal(8, rng));
  const double p = alignment_permutation_test(centroid_matrix_from(a),
                                              centroid_matrix_from(b), 999, 5, 2);
  EXPECT_LE(p, 0.01);
}

TEST(AlignmentPermutation, SinglePermutationUsesAddOne) {
  Rng rng(42);
  const auto a = centroid_matrix_from(gaussian(10, 4, rng));
  const auto b = centroid_matrix_from(gaussian(10, 4, rng));
  const double p = alignment_permutation_test(a, b, 1, 9);
  EXPECT_TRUE(p == 0.5 || p == 1.0);
  EXPECT_THROW(alignment_permutation_test(a, b, 0, 9), InputError);
}

TEST(AlignmentPermutation, ThreadCountDoesNotChangeResult) {
  Rng rng(43);
  const auto a = centroid_matrix_from(gaussian(15, 5, rng));
  const auto b = centroid_matrix_from(gaussian(15, 5, rng));
  EXPECT_EQ(alignment_permutation_test(a, b, 200, 3, 1),
            alignment_permutation_test(a, b, 200, 3, 4));
}

TEST(Centroids, ConstantVectorGivesUnitDirection) {
  EmbeddingStore store;
  store.dim = 2;
  std::vector<Post> posts;
  for (int i = 0; i < 5; ++i) {
    store.ids.push_back("p" + std::to_string(i));
    store.values.insert(store.values.end(), {3.0f, 4.0f});
    posts.push_back(post("p" + std::to_string(i), {"🚀"}));
  }
  const auto c = compute_centroids(store, posts, {"🚀"}, {.n_samples = 3, .seed = 1});
  EXPECT_NEAR(c.rows(0, 0), 0.6, 1e-7);
  EXPECT_NEAR(c.rows(0, 1), 0.8, 1e-7);
  EXPECT_FALSE(c.degenerate[0]);
  EXPECT_EQ(c.support[0], 5u);
}

TEST(Centroids, OpposingVectorsAreDegenerate) {
  EmbeddingStore store;
  store.dim = 3;
  store.ids = {"a", "b"};
  store.values = {1, 2, 3, -1, -2, -3};
  const std::vector<Post> posts = {post("a", {"🔥"}), post("b", {"🔥"})};
  const auto c = compute_centroids(store, posts, {"🔥"}, {.n_samples = 2});
  EXPECT_TRUE(c.degenerate[0]);
  EXPECT_EQ(linalg::norm(c.rows.row(0)), 0.0);
}

TEST(Centroids, DeterministicAcrossRunsAndThreads) {
  Rng rng(51);
  EmbeddingStore store;
  store.dim = 4;
  std::vector<Post> posts;
  const std::vector<std::string> pool = {"🚀", "🔥", "💎"};
  for (int i = 0; i < 60; ++i) {
    store.ids.push_back(std::to_string(i));
    for (int c = 0; c < 4; ++c) store.values.push_back(static_cast<float>(rng.normal()));
    posts.push_back(post(std::to_string(i), {pool[i % 3], pool[(i / 3) % 3]}));
  }
  const auto rows = emoji_rows(store, posts);
  const auto shared = shared_emojis(rows, rows, 10);
  ASSERT_EQ(shared.size(), 3u);
  CentroidOptions opts{.n_samples = 10, .seed = 77, .normalize = true, .threads = 1};
  const auto c1 = compute_centroids(store, posts, shared, opts);
  opts.threads = 3;
  const auto c2 = compute_centroids(store, posts, shared, opts);
  EXPECT_EQ(c1.rows, c2.rows);
  opts.seed = 78;
  EXPECT_NE(compute_centroids(store, posts, shared, opts).rows, c1.rows);
}

TEST(Centroids, InsufficientSupportNamesEmoji) {
  EmbeddingStore store;
  store.dim = 1;
  store.ids = {"a"};
  store.values = {1};
  const std::vector<Post> posts = {post("a", {"🐻"})};
  try {
    compute_centroids(store, posts, {"🐻"}, {.n_samples = 5});
    FAIL();
  } catch (const InputError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("🐻"), std::string::npos);
    EXPECT_NE(what.find("1"), std::string::npos);
    EXPECT_NE(what.find("5"), std::string::npos);
  }
}

TEST(EmbeddingIo, RoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "emojilab_emb_test";
  std::filesystem::create_directories(dir);
  const std::string prefix = (dir / "vec").string();
  EmbeddingStore store;
  store.dim = 3;
  store.ids = {"x", "y"};
  store.values = {1.5f, -2.0f, 0.25f, 3.0f, 1e-7f, -0.0f};
  store.metadata = {{"pooling", "mean"}};
  write_embeddings(prefix, store);

  std::ifstream raw(matrix_path(prefix), std::ios::binary);
  char magic[4];
  raw.read(magic, 4);
  EXPECT_EQ(std::string(magic, 4), "EMB1");
  EXPECT_EQ(std::filesystem::file_size(matrix_path(prefix)), 16u + 6u * 4u);

  const auto back = read_embeddings(prefix);
  EXPECT_EQ(back.dim, 3u);
  EXPECT_EQ(back.ids, store.ids);
  EXPECT_EQ(back.values, store.values);
  EXPECT_EQ(back.metadata["pooling"], "mean");
}

TEST(EmbeddingIo, RejectsBadFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "emojilab_emb_bad";
  std::filesystem::create_directories(dir);
  const std::string prefix = (dir / "bad").string();
  {
    std::ofstream(matrix_path(prefix), std::ios::binary) << "NOPE0000000000000000";
    std::ofstream(index_path(prefix)) << "";
  }
  EXPECT_THROW(read_embeddings(prefix), InputError);

  EmbeddingStore store;
  store.dim = 1;
  store.ids = {"a", "b"};
  store.values = {1, 2};
  write_embeddings(prefix, store);
  {
    std::ofstream idx(index_path(prefix));
    idx << R"({"post_id":"a","row":0})" << '\n' << R"({"post_id":"b","row":0})" << '\n';
  }
  EXPECT_THROW(read_embeddings(prefix), InputError);
  {
    std::ofstream idx(index_path(prefix));
    idx << R"({"post_id":"a","row":5})" << '\n';
  }
  EXPECT_THROW(read_embeddings(prefix), InputError);
}
