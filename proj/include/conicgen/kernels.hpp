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

#include <span>

#include "conicgen/linalg.hpp"

// Dense assembly kernels used by the generators.
//
// Every kernel exists twice: a plain serial loop nest kept as the reference,
// and an OpenMP version that distributes independent output entries across
// threads. Each output entry is accumulated in the same order in both, so the
// two agree bit for bit regardless of thread count. Generated files therefore
// do not depend on OMP_NUM_THREADS.
namespace conicgen::kernels {

namespace serial {

/// y = A x
Vector gemv(const Matrix& a, const Vector& x);
/// y = A^T x
Vector gemv_t(const Matrix& a, const Vector& x);
/// out_i = A_i . X (Frobenius)
Vector trace_products(std::span<const Matrix> as, const Matrix& x);
/// base + sum_i w_i A_i
Matrix combine(std::span<const Matrix> as, const Vector& w, const Matrix& base);
/// Q diag(d) Q^T, exactly symmetric.
Matrix congruence(const Matrix& q, const Vector& d);
/// A A^T, exactly symmetric.
Matrix gram(const Matrix& a);

}  // namespace serial

namespace parallel {

Vector gemv(const Matrix& a, const Vector& x);
Vector gemv_t(const Matrix& a, const Vector& x);
Vector trace_products(std::span<const Matrix> as, const Matrix& x);
Matrix combine(std::span<const Matrix> as, const Vector& w, const Matrix& base);
Matrix congruence(const Matrix& q, const Vector& d);
Matrix gram(const Matrix& a);

}  // namespace parallel

using parallel::combine;
using parallel::congruence;
using parallel::gemv;
using parallel::gemv_t;
using parallel::gram;
using parallel::trace_products;

}  // namespace conicgen::kernels
