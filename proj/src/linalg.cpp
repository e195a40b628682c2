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

#include "conicgen/linalg.hpp"

#include <cmath>
#include <limits>

namespace conicgen {

Vector singular_values(const Matrix& a) {
  if (a.size() == 0) return Vector();
  Eigen::BDCSVD<Matrix> svd(a);
  return svd.singularValues();
}

std::size_t numerical_rank(const Matrix& a, double rel_tol) {
  const Vector sv = singular_values(a);
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double threshold = rel_tol * sv(0);
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > threshold) ++rank;
  }
  return rank;
}

double condition_number(const Matrix& a) {
  const Vector sv = singular_values(a);
  if (sv.size() == 0) return std::numeric_limits<double>::infinity();
  const double smin = sv(sv.size() - 1);
  if (smin == 0.0) return std::numeric_limits<double>::infinity();
  return sv(0) / smin;
}

Vector symmetric_eigenvalues(const Matrix& a) {
  if (a.size() == 0) return Vector();
  Eigen::SelfAdjointEigenSolver<Matrix> es(symmetrize(a), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

Matrix symmetrize(const Matrix& a) { return 0.5 * (a + a.transpose()); }

double frobenius_inner(const Matrix& a, const Matrix& b) {
  return (a.array() * b.array()).sum();
}

Vector svec(const Matrix& a) {
  const Eigen::Index n = a.rows();
  Vector v(n * (n + 1) / 2);
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i <= j; ++i) {
      v(k++) = (i == j) ? a(i, j) : std::sqrt(2.0) * a(i, j);
    }
  }
  return v;
}

Matrix stack_vectorized(std::span<const Matrix> ms) {
  if (ms.empty()) return Matrix();
  const Eigen::Index len = ms.front().size();
  Matrix out(static_cast<Eigen::Index>(ms.size()), len);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    out.row(static_cast<Eigen::Index>(i)) =
        Eigen::Map<const Vector>(ms[i].data(), len).transpose();
  }
  return out;
}

}  // namespace conicgen
