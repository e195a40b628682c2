/*
 * Copyright 2026 The conicgen Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "conicgen/randkit.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "conicgen/error.hpp"
#include "conicgen/kernels.hpp"

namespace conicgen::randkit {

namespace {

constexpr double kRankTol = 1e-10;
constexpr double kDensitySlack = 0.1;

Matrix uniform_matrix(std::size_t rows, std::size_t cols, RngStream& stream) {
  Matrix a(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  // Row-major fill order so the sequence of draws does not depend on storage order.
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = stream.uniform(kSignedLo, kSignedHi);
  return a;
}

Matrix sparse_matrix(std::size_t rows, std::size_t cols, double density, RngStream& stream) {
  const std::size_t total = rows * cols;
  const auto target = static_cast<std::size_t>(std::llround(density * static_cast<double>(total)));
  std::vector<char> mask(total, 0);
  std::size_t filled = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    const std::size_t j = stream.below(cols);
    mask[i * cols + j] = 1;
    ++filled;
  }
  if (target > filled) {
    std::vector<std::size_t> free_slots;
    free_slots.reserve(total - filled);
    for (std::size_t k = 0; k < total; ++k)
      if (!mask[k]) free_slots.push_back(k);
    std::size_t need = target - filled;
    // Partial Fisher-Yates over the free slots.
    for (std::size_t k = 0; k < need; ++k) {
      const std::size_t pick = k + stream.below(free_slots.size() - k);
      std::swap(free_slots[k], free_slots[pick]);
      mask[free_slots[k]] = 1;
    }
  }
  Matrix a = Matrix::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (!mask[i * cols + j]) continue;
      // Nonzero by construction: magnitude in [0.1, 1.1], random sign.
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          stream.sign() * stream.uniform(kPositiveLo, kPositiveHi);
    }
  }
  return a;
}

bool has_full_row_rank(const Matrix& a) {
  return numerical_rank(a, kRankTol) == static_cast<std::size_t>(a.rows());
}

double nonzero_fraction(const Matrix& a) {
  const auto nnz = (a.array() != 0.0).count();
  return static_cast<double>(nnz) / static_cast<double>(a.size());
}

void validate(const MatrixRecipe& r) {
  detail::require(r.rows >= 1 && r.cols >= 1, "gen_matrix: rows and cols must be positive");
  const bool square_kind = r.kind == MatrixKind::psd || r.kind == MatrixKind::pd ||
                           r.kind == MatrixKind::orthonormal;
  detail::require(!square_kind || r.rows == r.cols,
                  "gen_matrix: psd/pd/orthonormal recipes require rows == cols");
  if (r.density) {
    detail::require(*r.density > 0.0 && *r.density <= 1.0,
                    "gen_matrix: density must lie in (0, 1]");
  }
  if (r.cond_target) {
    detail::require(*r.cond_target >= 1.0, "gen_matrix: cond-target must be >= 1");
    detail::require(!(r.density && *r.density < 1.0),
                    "gen_matrix: cond-target and density < 1 cannot be combined");
  }
  if (r.fro_norm_target) {
    detail::require(*r.fro_norm_target > 0.0, "gen_matrix: fro-norm-target must be positive");
  }
  detail::require(r.eigen_floor >= 0.0, "gen_matrix: eigen-floor must be nonnegative");
}

Matrix full_rank_general(const MatrixRecipe& r, RngStream& stream) {
  const bool sparse = r.kind == MatrixKind::sparse || (r.density && *r.density < 1.0);
  const double density = r.density.value_or(sparse ? 0.5 : 1.0);
  const bool need_rank = r.rows <= r.cols;

  auto draw = [&]() {
    return sparse ? sparse_matrix(r.rows, r.cols, density, stream)
                  : uniform_matrix(r.rows, r.cols, stream);
  };
  auto density_ok = [&](const Matrix& a) {
    return !sparse || std::abs(nonzero_fraction(a) - density) <= kDensitySlack;
  };

  Matrix a;
  for (int attempt = 0; attempt < kMaxRegenerations; ++attempt) {
    a = draw();
    if (!density_ok(a)) {
      throw GenerationError("gen_matrix: density " + std::to_string(density) +
                            " unreachable with one mandatory nonzero per row (got " +
                            std::to_string(nonzero_fraction(a)) + ")");
    }
    if (!need_rank || has_full_row_rank(a)) return a;
  }
  const double eps = 1e-6 * a.norm();
  for (Eigen::Index i = 0; i < a.rows(); ++i) a(i, i) += (eps > 0.0 ? eps : 1e-6);
  if (has_full_row_rank(a) && density_ok(a)) return a;
  throw GenerationError("gen_matrix: full row rank not reached after " +
                        std::to_string(kMaxRegenerations) + " regenerations and perturbation");
}

}  // namespace

Vector uniform_vector(std::size_t n, double lo, double hi, RngStream& stream) {
  Vector v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = stream.uniform(lo, hi);
  return v;
}

Vector signed_vector(std::size_t n, RngStream& stream) {
  return uniform_vector(n, kSignedLo, kSignedHi, stream);
}

Vector positive_vector(std::size_t n, RngStream& stream) {
  return uniform_vector(n, kPositiveLo, kPositiveHi, stream);
}

Matrix symmetric_matrix(std::size_t n, RngStream& stream) {
  const auto k = static_cast<Eigen::Index>(n);
  Matrix a(k, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    for (Eigen::Index i = 0; i <= j; ++i) {
      const double v = stream.uniform(kSignedLo, kSignedHi);
      a(i, j) = v;
      a(j, i) = v;
    }
  }
  return a;
}

Vector geometric_profile(std::size_t count, double hi, double cond) {
  Vector s(static_cast<Eigen::Index>(count));
  if (count == 1) {
    s(0) = hi;
    return s;
  }
  const double step = std::log(cond) / static_cast<double>(count - 1);
  for (Eigen::Index i = 0; i < s.size(); ++i) s(i) = hi * std::exp(-step * static_cast<double>(i));
  s(s.size() - 1) = hi / cond;
  return s;
}

Matrix gen_orthonormal(std::size_t n, RngStream& stream) {
  detail::require(n >= 1, "gen_orthonormal: n must be positive");
  for (int attempt = 0; attempt < kMaxRegenerations; ++attempt) {
    const Matrix m = uniform_matrix(n, n, stream);
    Eigen::HouseholderQR<Matrix> qr(m);
    Matrix q = qr.householderQ();
    const Matrix& packed = qr.matrixQR();
    bool degenerate = false;
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
      const double rjj = packed(j, j);
      if (rjj == 0.0) {
        degenerate = true;
        break;
      }
      if (rjj < 0.0) q.col(j) = -q.col(j);
    }
    if (!degenerate) return q;
  }
  throw GenerationError("gen_orthonormal: random matrix repeatedly singular");
}

Matrix gen_conditioned(std::size_t rows, std::size_t cols, double cond, RngStream& stream) {
  detail::require(rows >= 1 && cols >= 1, "gen_conditioned: dimensions must be positive");
  detail::require(cond >= 1.0, "gen_conditioned: cond must be >= 1");
  detail::require(std::min(rows, cols) > 1 || cond == 1.0,
                  "gen_conditioned: a single row or column only has condition number 1");
  if (rows > cols) return gen_conditioned(cols, rows, cond, stream).transpose();
  const Matrix u = gen_orthonormal(rows, stream);
  const Matrix v = gen_orthonormal(cols, stream);
  const Vector sigma = geometric_profile(rows, 1.0, cond);
  return u * sigma.asDiagonal() * v.leftCols(static_cast<Eigen::Index>(rows)).transpose();
}

Matrix gen_psd(std::size_t n, PsdMethod method, const std::optional<Vector>& diagonal,
               RngStream& stream) {
  detail::require(n >= 1, "gen_psd: n must be positive");
  const auto k = static_cast<Eigen::Index>(n);
  if (diagonal) {
    detail::require(method != PsdMethod::gram, "gen_psd: gram method takes no diagonal");
    detail::require(diagonal->size() == k, "gen_psd: diagonal length must equal n");
    detail::require((diagonal->array() >= 0.0).all(),
                    "gen_psd: diagonal entries must be nonnegative");
  }
  switch (method) {
    case PsdMethod::gram:
      return kernels::gram(uniform_matrix(n, n, stream));
    case PsdMethod::cholesky_like: {
      Matrix l = Matrix::Zero(k, k);
      for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < i; ++j) l(i, j) = stream.uniform(kSignedLo, kSignedHi);
      const Vector d = diagonal ? *diagonal : positive_vector(n, stream);
      l.diagonal() = d;
      return kernels::gram(l);
    }
    case PsdMethod::spectral: {
      const Vector eig = diagonal ? *diagonal : positive_vector(n, stream);
      return kernels::congruence(gen_orthonormal(n, stream), eig);
    }
    case PsdMethod::ldl: {
      Matrix l = Matrix::Identity(k, k);
      for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < i; ++j) l(i, j) = stream.uniform(kSignedLo, kSignedHi);
      const Vector d = diagonal ? *diagonal : positive_vector(n, stream);
      return kernels::congruence(l, d);
    }
  }
  throw ArgumentError("gen_psd: unknown method");
}

Matrix gen_matrix(const MatrixRecipe& recipe, RngStream& stream) {
  validate(recipe);
  Matrix a;
  switch (recipe.kind) {
    case MatrixKind::dense:
    case MatrixKind::sparse:
      if (recipe.cond_target) {
        if (recipe.rows <= recipe.cols) {
          a = gen_conditioned(recipe.rows, recipe.cols, *recipe.cond_target, stream);
        } else {
          a = gen_conditioned(recipe.cols, recipe.rows, *recipe.cond_target, stream).transpose();
        }
      } else {
        a = full_rank_general(recipe, stream);
      }
      break;
    case MatrixKind::psd:
      a = gen_psd(recipe.rows, PsdMethod::gram, std::nullopt, stream);
      break;
    case MatrixKind::pd: {
      const double floor = recipe.eigen_floor;
      Vector eig;
      if (recipe.cond_target) {
        const double lo = floor > 0.0 ? floor : 1.0 / *recipe.cond_target;
        eig = geometric_profile(recipe.rows, lo * *recipe.cond_target, *recipe.cond_target);
      } else {
        const double lo = std::max(floor, kPositiveLo);
        eig = uniform_vector(recipe.rows, lo, lo + 1.0, stream);
      }
      a = gen_psd(recipe.rows, PsdMethod::spectral, eig, stream);
      break;
    }
    case MatrixKind::orthonormal:
      a = gen_orthonormal(recipe.rows, stream);
      break;
    case MatrixKind::lower_triangular: {
      a = Matrix::Zero(static_cast<Eigen::Index>(recipe.rows),
                       static_cast<Eigen::Index>(recipe.cols));
      for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < std::min<Eigen::Index>(i, a.cols()); ++j)
          a(i, j) = stream.uniform(kSignedLo, kSignedHi);
        if (i < a.cols()) a(i, i) = stream.uniform(kPositiveLo, kPositiveHi);
      }
      break;
    }
  }
  if (recipe.fro_norm_target) {
    const double norm = a.norm();
    if (norm == 0.0) throw GenerationError("gen_matrix: cannot scale a zero matrix to a norm target");
    a *= *recipe.fro_norm_target / norm;
  }
  return a;
}

}  // namespace conicgen::randkit
