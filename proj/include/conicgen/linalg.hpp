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
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace conicgen {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Singular values in descending order.
Vector singular_values(const Matrix& a);

/// Number of singular values above rel_tol * sigma_max. Zero for empty or zero matrices.
std::size_t numerical_rank(const Matrix& a, double rel_tol);

/// sigma_max / sigma_min over min(rows, cols) singular values; +inf when rank deficient.
double condition_number(const Matrix& a);

/// Ascending eigenvalues of the symmetric part of a.
Vector symmetric_eigenvalues(const Matrix& a);

/// (a + a^T) / 2.
Matrix symmetrize(const Matrix& a);

/// Frobenius inner product trace(a^T b).
double frobenius_inner(const Matrix& a, const Matrix& b);

/// Upper triangle (including diagonal) of a symmetric matrix, column by column,
/// with off-diagonal entries weighted by sqrt(2) so that dot products of the
/// results equal Frobenius inner products.
Vector svec(const Matrix& a);

/// Rows of the result are vec(m_i); used for linear-independence checks.
Matrix stack_vectorized(std::span<const Matrix> ms);

/// Positive part max(0, v).
inline double positive_part(double v) { return v > 0.0 ? v : 0.0; }

}  // namespace conicgen
