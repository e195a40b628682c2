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

#include <omp.h>

#include "conicgen/error.hpp"
#include "conicgen/kernels.hpp"

namespace conicgen::kernels::parallel {

namespace {

// Below this many multiply-adds the fork/join cost dominates.
constexpr long kMinParallelWork = 1L << 14;

bool worth_forking(long work) { return work >= kMinParallelWork && !omp_in_parallel(); }

}  // namespace

Vector gemv(const Matrix& a, const Vector& x) {
  detail::require(a.cols() == x.size(), "gemv: shape mismatch");
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Vector y(rows);
#pragma omp parallel for schedule(static) if (worth_forking(static_cast<long>(rows) * cols))
  for (Eigen::Index i = 0; i < rows; ++i) {
    double acc = 0.0;
    for (Eigen::Index k = 0; k < cols; ++k) acc += a(i, k) * x(k);
    y(i) = acc;
  }
  return y;
}

Vector gemv_t(const Matrix& a, const Vector& x) {
  detail::require(a.rows() == x.size(), "gemv_t: shape mismatch");
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Vector y(cols);
#pragma omp parallel for schedule(static) if (worth_forking(static_cast<long>(rows) * cols))
  for (Eigen::Index j = 0; j < cols; ++j) {
    double acc = 0.0;
    for (Eigen::Index k = 0; k < rows; ++k) acc += a(k, j) * x(k);
    y(j) = acc;
  }
  return y;
}

Vector trace_products(std::span<const Matrix> as, const Matrix& x) {
  for (const Matrix& a : as) {
    detail::require(a.rows() == x.rows() && a.cols() == x.cols(),
                    "trace_products: shape mismatch");
  }
  const long count = static_cast<long>(as.size());
  Vector out(count);
#pragma omp parallel for schedule(static) if (worth_forking(count * static_cast<long>(x.size())))
  for (long i = 0; i < count; ++i) {
    const Matrix& a = as[static_cast<std::size_t>(i)];
    double acc = 0.0;
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      for (Eigen::Index r = 0; r < a.rows(); ++r) acc += a(r, c) * x(r, c);
    out(i) = acc;
  }
  return out;
}

Matrix combine(std::span<const Matrix> as, const Vector& w, const Matrix& base) {
  detail::require(static_cast<Eigen::Index>(as.size()) == w.size(),
                  "combine: weight count mismatch");
  const Eigen::Index rows = base.rows();
  const Eigen::Index cols = base.cols();
  Matrix out(rows, cols);
#pragma omp parallel for schedule(static) \
    if (worth_forking(static_cast<long>(as.size()) * base.size()))
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) {
      double acc = base(r, c);
      for (std::size_t i = 0; i < as.size(); ++i)
        acc += w(static_cast<Eigen::Index>(i)) * as[i](r, c);
      out(r, c) = acc;
    }
  }
  return out;
}

Matrix congruence(const Matrix& q, const Vector& d) {
  detail::require(q.cols() == d.size(), "congruence: shape mismatch");
  const Eigen::Index n = q.rows();
  const Eigen::Index inner = q.cols();
  Matrix out(n, n);
  // Dynamic schedule: column c owns c + 1 entries of the upper triangle.
#pragma omp parallel for schedule(dynamic, 4) \
    if (worth_forking(static_cast<long>(n) * n * inner / 2))
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r <= c; ++r) {
      double acc = 0.0;
      for (Eigen::Index k = 0; k < inner; ++k) acc += q(r, k) * d(k) * q(c, k);
      out(r, c) = acc;
      out(c, r) = acc;
    }
  }
  return out;
}

Matrix gram(const Matrix& a) {
  const Eigen::Index n = a.rows();
  const Eigen::Index inner = a.cols();
  Matrix out(n, n);
#pragma omp parallel for schedule(dynamic, 4) \
    if (worth_forking(static_cast<long>(n) * n * inner / 2))
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r <= c; ++r) {
      double acc = 0.0;
      for (Eigen::Index k = 0; k < inner; ++k) acc += a(r, k) * a(c, k);
      out(r, c) = acc;
      out(c, r) = acc;
    }
  }
  return out;
}

}  // namespace conicgen::kernels::parallel
