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

#include "conicgen/controls.hpp"
#include "conicgen/linalg.hpp"

namespace conicgen {

/// min c^T x  s.t.  A x = b, x >= 0.
struct LinearInstance {
  Matrix a;
  Vector b;
  Vector c;
};

struct LoSolution {
  Vector x;
  Vector y;
  Vector s;
};

struct LoCertificate {
  std::optional<LoSolution> interior;
  std::optional<LoSolution> optimal;
  /// Declared partition, 0-based. Both empty when no optimal solution is certified.
  std::vector<std::size_t> basic;
  std::vector<std::size_t> nonbasic;
  std::optional<double> mu;
  bool strictly_complementary = false;
  bool unique_basis = false;
  /// Factors applied to the primal and dual solutions to reach norm targets.
  double primal_scale = 1.0;
  double dual_scale = 1.0;
};

struct LoGenerated {
  LinearInstance instance;
  LoCertificate certificate;
};

/// Fixed pieces for gen_lo_interior. Anything left empty is drawn.
struct LoInteriorOptions {
  std::optional<Vector> x0;
  std::optional<Vector> s0;
  std::optional<double> mu;
  std::optional<Matrix> a;
  std::optional<Vector> y0;
};

LoGenerated gen_lo_interior(std::size_t m, std::size_t n, const GenControls& controls,
                            const LoInteriorOptions& options = {});

struct LoOptimalOverrides {
  std::optional<Matrix> a;
  std::optional<Vector> x;
  std::optional<Vector> y;
  std::optional<Vector> s;
};

/// Optimal solution supported on `basic` (x) and its complement (s).
/// With strict = false, entries inside the supports may also be zero.
LoGenerated gen_lo_optimal(std::size_t m, std::size_t n, const std::vector<std::size_t>& basic,
                           const GenControls& controls, bool strict = true,
                           const LoOptimalOverrides& overrides = {});

enum class LoBothVariant {
  general,
  /// x0_B = x_B, s0_N = s_N, y0_{1:m} = y, so delta = 0.
  simplified,
  /// simplified plus x0_N = e, s0_B = e and y0_{m+1} = x0_{n+1} = s0_{n+1} = 1.
  simplest,
};

struct LoBothOverrides {
  /// Inner instance and its optimal solution; drawn with gen_lo_optimal when absent.
  std::optional<LinearInstance> inner;
  std::optional<LoSolution> inner_optimal;
  /// Full-length (n+1) interior pieces.
  std::optional<Vector> x0;
  std::optional<Vector> s0;
  std::optional<Vector> y0;
};

/// Instance with m+1 rows and n+1 columns certifying an interior point and a
/// strictly complementary optimal solution at once.
LoGenerated gen_lo_both(std::size_t m, std::size_t n, const std::vector<std::size_t>& basic,
                        const GenControls& controls,
                        LoBothVariant variant = LoBothVariant::general,
                        const LoBothOverrides& overrides = {});

/// Complement of `basic` in [0, n). Throws ArgumentError on duplicates or out-of-range indices.
std::vector<std::size_t> complement_indices(std::size_t n, const std::vector<std::size_t>& basic);

}  // namespace conicgen
