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
#include <string>
#include <vector>

#include "conicgen/linalg.hpp"
#include "conicgen/lo_gen.hpp"
#include "conicgen/sdo_gen.hpp"
#include "conicgen/soco_gen.hpp"

namespace conicgen {

struct Tolerances {
  /// Residuals are compared against residual * (1 + ||rhs||).
  double residual = 1e-8;
  /// Complementarity against complementarity * (1 + ||x|| ||s||).
  double complementarity = 1e-10;
  /// Cone membership allows eigenvalues / margins down to -psd * (1 + max).
  double psd = 1e-9;
  /// Singular values below rank * sigma_max count as zero.
  double rank = 1e-8;
};

/// Checks are grouped by the data they read: "primal" (A, b), "dual" (A, c or C),
/// "cone", "complementarity", "partition", "structure", "hypothesis".
struct CheckResult {
  std::string name;
  std::string group;
  bool passed = false;
  double value = 0.0;
  double threshold = 0.0;
};

struct VerifyReport {
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double complementarity_gap = 0.0;
  std::vector<CheckResult> checks;
  Tolerances tolerances;
  bool passed = true;

  void add(std::string name, std::string group, bool ok, double value, double threshold);
  /// nullptr when no check has this name.
  const CheckResult* find(const std::string& name) const;
  std::vector<std::string> failed() const;
  std::string summary() const;
};

VerifyReport verify_lo(const LinearInstance& instance, const LoCertificate& cert,
                       const Tolerances& tol = {});
VerifyReport verify_sdo(const SdoInstance& instance, const SdoCertificate& cert,
                        const Tolerances& tol = {});
VerifyReport verify_soco(const SocoInstance& instance, const SocoCertificate& cert,
                         const Tolerances& tol = {});

/// The LO problem behind a SOCO instance whose cones all have dimension 1.
/// B maps to the basic set; N and T1 to the nonbasic set.
LoGenerated to_linear(const SocoInstance& instance, const SocoCertificate& cert);

enum class LpStatus { optimal, infeasible, unbounded };

struct LpOracleResult {
  LpStatus status = LpStatus::infeasible;
  /// +inf when infeasible, -inf when unbounded.
  double value = 0.0;
  Vector vertex;
};

/// Minimizes c^T x over {Ax = b, x >= 0} by enumerating all bases.
/// Unboundedness is detected only through reduced costs at feasible bases.
/// Refuses n > 12.
LpOracleResult lo_bruteforce_optimal(const LinearInstance& instance);

}  // namespace conicgen
