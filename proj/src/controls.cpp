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

#include "conicgen/controls.hpp"

#include <algorithm>
#include <cmath>

namespace conicgen {

double strict_margin(double delta_over_x, double floor) {
  return std::max(floor, 0.1 * std::abs(delta_over_x));
}

double nonzero_scalar(RngStream& stream) {
  const double sign = stream.sign();
  return sign * stream.uniform(0.5, 1.5);
}

randkit::MatrixRecipe constraint_recipe(std::size_t m, std::size_t n, const GenControls& controls) {
  randkit::MatrixRecipe r;
  r.rows = m;
  r.cols = n;
  r.kind = randkit::MatrixKind::dense;
  if (controls.density && *controls.density < 1.0) {
    r.kind = randkit::MatrixKind::sparse;
    r.density = controls.density;
  }
  r.cond_target = controls.cond;
  r.fro_norm_target = controls.norm_a;
  return r;
}

}  // namespace conicgen
