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

#include "conicgen/error.hpp"
#include "conicgen/kernels.hpp"

namespace conicgen::kernels::serial {

Vector gemv(const Matrix& a, const Vector& x) {
  detail::require(a.cols() == x.size(), "gemv: shape mismatch");
  Vector y(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    double acc = 0.0;
    for (Eigen::Index k = 0; k < a.cols(); ++k) acc += a(i, k) * x(k);
    y(i) = acc;
  }
  return y;
}

Vector gemv_t(const Matrix& a, const Vector& x) {
  detail::require(a.rows() == x.size(), "gemv_t: shape mismatch");
  Vector y(a.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    double acc = 0.0;
    for (Eigen::Index k = 0; k < a.rows(); ++k) acc += a(k, j) * x(k);
    y(j) = acc;
  }
  return y;
}

Vector trace_products(std::span<const Matrix> as, const Matrix& x) {
  Vector out(static_cast<Eigen::Index>(as.size()));
  for (std::size_t i = 0; i < as.size(); ++i) {
    const Matrix& a = as[i];
    detail::require(a.rows() == x.rows() && a.cols() == x.cols(),
                    "trace_products: shape mismatch");
    double acc = 0.0;
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      for (Eigen::Index r = 0; r < a.rows(); ++r) acc += a(r, c) * x(r, c);
    out(static_cast<Eigen::Index>(i)) = acc;
  }
  return out;
}

Matrix combine(std::span<const Matrix> as, const Vector& w, const Matrix& base) {
  detail::require(static_cast<Eigen::Index>(as.size()) == w.size(),
                  "combine: weight count mismatch");
  Matrix out(base.rows(), base.cols());
  for (Eigen::Index c = 0; c < base.cols(); ++c) {
    for (Eigen::Index r = 0; r < base.rows(); ++r) {
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
  Matrix out(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r <= c; ++r) {
      double acc = 0.0;
      for (Eigen::Index k = 0; k < q.cols(); ++k) acc += q(r, k) * d(k) * q(c, k);
      out(r, c) = acc;
      out(c, r) = acc;
    }
  }
  return out;
}

Matrix gram(const Matrix& a) {
  const Eigen::Index n = a.rows();
  Matrix out(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r <= c; ++r) {
      double acc = 0.0;
      for (Eigen::Index k = 0; k < a.cols(); ++k) acc += a(r, k) * a(c, k);
      out(r, c) = acc;
      out(c, r) = acc;
    }
  }
  return out;
}

}  // namespace conicgen::kernels::serial
