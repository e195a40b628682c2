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

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "conicgen/linalg.hpp"
#include "conicgen/rng.hpp"

namespace conicgen::randkit {

enum class MatrixKind { dense, sparse, psd, pd, orthonormal, lower_triangular };

/// Description of a random matrix to synthesize.
struct MatrixRecipe {
  std::size_t rows = 1;
  std::size_t cols = 1;
  MatrixKind kind = MatrixKind::dense;
  /// Fraction of nonzero entries in (0, 1]. Applies to dense and sparse kinds.
  std::optional<double> density;
  /// sigma_max / sigma_min of the result (dense kind) or eigenvalue ratio (pd kind).
  std::optional<double> cond_target;
  /// Frobenius norm of the result, applied by a final scaling.
  std::optional<double> fro_norm_target;
  /// Smallest eigenvalue for pd matrices.
  double eigen_floor = 0.0;
};

enum class PsdMethod { gram, cholesky_like, spectral, ldl };

// Default scalar ranges. Entries that must be strictly positive are bounded
// away from zero so interiority margins can be asserted.
inline constexpr double kSignedLo = -1.0;
inline constexpr double kSignedHi = 1.0;
inline constexpr double kPositiveLo = 0.1;
inline constexpr double kPositiveHi = 1.1;

/// Retry budget shared by every rank repair loop.
inline constexpr int kMaxRegenerations = 5;

Vector uniform_vector(std::size_t n, double lo, double hi, RngStream& stream);
Vector signed_vector(std::size_t n, RngStream& stream);
Vector positive_vector(std::size_t n, RngStream& stream);

/// Random symmetric matrix, entries uniform on [-1, 1].
Matrix symmetric_matrix(std::size_t n, RngStream& stream);

/// Builds the matrix described by `recipe`.
///
/// Dense and sparse matrices with rows <= cols come out with full row rank:
/// up to kMaxRegenerations fresh draws, then one additive perturbation
/// eps * I-pattern with eps = 1e-6 ||A||_F. A GenerationError names the
/// constraint that could not be met. Sparse masks place one mandatory nonzero
/// per row and fill the rest uniformly at random up to the target count.
Matrix gen_matrix(const MatrixRecipe& recipe, RngStream& stream);

/// U diag(sigma) V^T with sigma geometric from 1 down to 1/cond.
Matrix gen_conditioned(std::size_t rows, std::size_t cols, double cond, RngStream& stream);

/// Symmetric positive semidefinite matrix.
///
/// `diagonal` feeds the method's free diagonal: the eigenvalues for spectral,
/// D for ldl (L unit lower triangular), and the diagonal of L for
/// cholesky_like. Zero entries produce a singular result. It is rejected for
/// gram. When absent, spectral draws eigenvalues from [0.1, 1.1].
Matrix gen_psd(std::size_t n, PsdMethod method, const std::optional<Vector>& diagonal,
               RngStream& stream);

/// Orthonormal matrix from a Householder QR of a random square matrix, with
/// column signs fixed so the triangular factor has a positive diagonal.
Matrix gen_orthonormal(std::size_t n, RngStream& stream);

/// Geometric profile hi, hi*r, ..., hi/cond with `count` entries.
Vector geometric_profile(std::size_t count, double hi, double cond);

}  // namespace conicgen::randkit
