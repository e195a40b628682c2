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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conicgen/controls.hpp"
#include "conicgen/linalg.hpp"
#include "conicgen/lo_gen.hpp"

namespace conicgen {

/// min c^T x  s.t.  A x = b, x in L^{n_1} x ... x L^{n_p}.
struct SocoInstance {
  std::vector<std::size_t> cone_dims;
  Matrix a;
  Vector b;
  Vector c;
};

using SocoSolution = LoSolution;

enum class ConeLabel { B, N, R, T1, T2, T3 };

std::string to_string(ConeLabel label);
/// Throws ArgumentError for anything but B, N, R, T1, T2, T3.
ConeLabel parse_cone_label(const std::string& text);

struct SocoCertificate {
  std::optional<SocoSolution> interior;
  std::optional<SocoSolution> optimal;
  /// One label per cone; empty when no optimal solution is certified.
  std::vector<ConeLabel> labels;
  /// s*-block = r * (x*_1, -x*_{2:}) on every R cone.
  std::map<std::size_t, double> r_scalars;
  bool maximally_complementary = false;
  double primal_scale = 1.0;
  double dual_scale = 1.0;
};

struct SocoGenerated {
  SocoInstance instance;
  SocoCertificate certificate;
};

/// Start offset of every cone plus the total length at the end.
std::vector<std::size_t> cone_offsets(const std::vector<std::size_t>& dims);

/// (x^T s; x_1 s_{2:} + s_1 x_{2:}).
Vector jordan_product(const Vector& x, const Vector& s);

/// Same tail, head replaced by ||tail|| + |v_1|.
Vector interiorize(const Vector& v);

/// x_1 - ||x_{2:}||.
double cone_margin(const Vector& v);

/// x = (||v||, v), s = r (||v||, -v).
std::pair<Vector, Vector> r_cone_pair(const Vector& v, double r);

struct SocoInteriorOverrides {
  std::optional<Matrix> a;
  std::optional<Vector> x0;
  std::optional<Vector> s0;
  std::optional<Vector> y0;
};

SocoGenerated gen_soco_interior(std::size_t m, const std::vector<std::size_t>& cone_dims,
                                const GenControls& controls,
                                const SocoInteriorOverrides& overrides = {});

SocoGenerated gen_soco_optimal(std::size_t m, const std::vector<std::size_t>& cone_dims,
                               const std::vector<ConeLabel>& labels, const GenControls& controls);

/// Requires |T2| + 1 < m <= |B| + |R| + |T2| and at least one T1, T3 or N cone.
SocoGenerated gen_soco_maxcomp(std::size_t m, const std::vector<std::size_t>& cone_dims,
                               const std::vector<ConeLabel>& labels, const GenControls& controls);

/// m+1 constraints; the last cone grows by one coordinate. The last cone must be labeled N.
SocoGenerated gen_soco_both(std::size_t m, const std::vector<std::size_t>& cone_dims,
                            const std::vector<ConeLabel>& labels, const GenControls& controls);

SocoGenerated gen_soco_maxcomp_both(std::size_t m, const std::vector<std::size_t>& cone_dims,
                                    const std::vector<ConeLabel>& labels,
                                    const GenControls& controls);

}  // namespace conicgen
