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

#include <cstdint>
#include <optional>

#include "conicgen/randkit.hpp"

namespace conicgen {

/// Knobs shared by every generator.
struct GenControls {
  std::uint64_t seed = 0;
  std::uint32_t stream_id = 0;
  /// Nonzero fraction of constraint data.
  std::optional<double> density;
  /// Condition number of the constraint matrix (LO, SOCO).
  std::optional<double> cond;
  /// Frobenius norm of the constraint matrix.
  std::optional<double> norm_a;
  /// Euclidean norms of b and c, reached by scaling the certified solutions.
  std::optional<double> norm_b;
  std::optional<double> norm_c;
  /// Floor of every strict-inequality margin.
  double margin = 0.1;
};

/// How far a freshly drawn value v must clear the bound (-delta/x)^+.
double strict_margin(double delta_over_x, double floor);

/// Random value with |v| in [0.5, 1.5] and random sign.
double nonzero_scalar(RngStream& stream);

/// Recipe for an m x n constraint matrix honoring density/cond/norm controls.
randkit::MatrixRecipe constraint_recipe(std::size_t m, std::size_t n, const GenControls& controls);

}  // namespace conicgen
