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

/// min C . X  s.t.  A_i . X = b_i, X psd.
struct SdoInstance {
  std::vector<Matrix> a;
  Vector b;
  Matrix c;
};

struct SdoSolution {
  Matrix x;
  Vector y;
  Matrix s;
};

/// Dimensions of the B, T, N eigenspaces, ordered B then T then N in the basis.
struct SdoPartition {
  std::size_t nb = 0;
  std::size_t nt = 0;
  std::size_t nn = 0;
};

enum class PartitionStatus {
  none,
  /// The solution's supports are as declared; the instance's own partition is not known.
  declared_unverified,
  /// The declared partition is the instance's optimal partition.
  optimal,
};

struct SdoCertificate {
  std::optional<SdoSolution> interior;
  std::optional<SdoSolution> optimal;
  std::optional<SdoPartition> partition;
  /// Orthonormal Q whose column blocks span the B, T, N subspaces.
  std::optional<Matrix> basis;
  /// Diagonal of Q^T A_1 Q for the maximally complementary constructions.
  std::optional<Vector> gamma;
  PartitionStatus partition_status = PartitionStatus::none;
  bool maximally_complementary = false;
  bool strictly_complementary = false;
  std::optional<double> mu;
  double primal_scale = 1.0;
  double dual_scale = 1.0;
};

struct SdoGenerated {
  SdoInstance instance;
  SdoCertificate certificate;
};

struct SdoInteriorOptions {
  std::optional<double> mu;
  /// X0 and S0 diagonal; with mu their entrywise product is mu.
  bool diagonal = false;
  std::optional<std::vector<Matrix>> a;
  std::optional<Matrix> x0;
  std::optional<Matrix> s0;
  std::optional<Vector> y0;
};

SdoGenerated gen_sdo_interior(std::size_t m, std::size_t n, const GenControls& controls,
                              const SdoInteriorOptions& options = {});

struct SdoBlockOverrides {
  std::optional<std::vector<Matrix>> a;
  std::optional<Matrix> xb;
  std::optional<Matrix> sn;
  std::optional<Vector> y;
};

/// X* = blockdiag(X_B, 0, 0), S* = blockdiag(0, 0, S_N).
SdoGenerated gen_sdo_block_optimal(std::size_t m, std::size_t n, std::size_t nb, std::size_t nn,
                                   const GenControls& controls,
                                   const SdoBlockOverrides& overrides = {});

enum class SdoBothVariant {
  general,
  /// Interior blocks fixed to identities / the optimal blocks so that delta = 0
  /// (block form needs nb + nn = n). For the eigen form all interior
  /// eigenvalues and sigma0_{n+1} are 1.
  special,
};

/// Block-structured optimal solution plus an interior point; m+1 constraints, order n+1.
SdoGenerated gen_sdo_block_both(std::size_t m, std::size_t n, std::size_t nb, std::size_t nn,
                                const GenControls& controls,
                                SdoBothVariant variant = SdoBothVariant::general);

struct SdoEigOverrides {
  std::optional<Matrix> q;
};

/// X* = Q diag(sigma, 0, 0) Q^T, S* = Q diag(0, 0, lambda) Q^T.
SdoGenerated gen_sdo_eig_optimal(std::size_t m, std::size_t n, std::size_t nb, std::size_t nn,
                                 const GenControls& controls,
                                 const SdoEigOverrides& overrides = {});

/// Maximally complementary construction; A_1 = Q diag(gamma) Q^T with
/// gamma_B = 0 and gamma_T > 0. Requires nb >= 1 and nn >= 1.
SdoGenerated gen_sdo_maxcomp(std::size_t m, std::size_t n, std::size_t nb, std::size_t nn,
                             const GenControls& controls, const SdoEigOverrides& overrides = {});

/// Maximally complementary construction for an empty B block: X* = 0, b = 0.
SdoGenerated gen_sdo_maxcomp_bempty(std::size_t m, std::size_t n, std::size_t nn,
                                    const GenControls& controls,
                                    const SdoEigOverrides& overrides = {});

SdoGenerated gen_sdo_eig_both(std::size_t m, std::size_t n, std::size_t nb, std::size_t nn,
                              const GenControls& controls,
                              SdoBothVariant variant = SdoBothVariant::general,
                              const SdoEigOverrides& overrides = {});

/// gen_sdo_maxcomp extended by an interior point. The appended direction joins N.
SdoGenerated gen_sdo_maxcomp_both(std::size_t m, std::size_t n, std::size_t nb, std::size_t nn,
                                  const GenControls& controls,
                                  const SdoEigOverrides& overrides = {});

/// Block-diagonal matrix with square blocks in order.
Matrix block_diagonal(const std::vector<Matrix>& blocks);

}  // namespace conicgen
