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

#include <gtest/gtest.h>

#include <Eigen/Dense>

#include "conicgen/error.hpp"
#include "conicgen/linalg.hpp"
#include "conicgen/randkit.hpp"
#include "conicgen/rng.hpp"

using namespace conicgen;
using namespace conicgen::randkit;

TEST(Rng, RangeAndDeterminism) {
  RngStream a(1, 0), b(1, 0), c(2, 0);
  bool differs = false;
  for (int i = 0; i < 10; ++i) {
    const double va = a.uniform(0.0, 1.0);
    EXPECT_GE(va, 0.0);
    EXPECT_LT(va, 1.0);
    EXPECT_EQ(va, b.uniform(0.0, 1.0));
    differs = differs || va != c.uniform(0.0, 1.0);
  }
  EXPECT_TRUE(differs);
}

TEST(Rng, StreamsDiffer) {
  RngStream a(5, 0), b(5, 1);
  EXPECT_NE(a.next_u64(), b.next_u64());
}

TEST(Rng, RejectsEmptyRange) {
  RngStream a(1, 0);
  EXPECT_THROW(a.uniform(1.0, 1.0), ArgumentError);
  EXPECT_THROW(a.below(0), ArgumentError);
}

TEST(GenMatrix, ScalarNormTarget) {
  RngStream s(3, 0);
  MatrixRecipe r;
  r.fro_norm_target = 3.0;
  const Matrix a = gen_matrix(r, s);
  ASSERT_EQ(a.size(), 1);
  EXPECT_NEAR(std::abs(a(0, 0)), 3.0, 1e-14);
}

TEST(GenMatrix, DenseFullRowRank) {
  RngStream s(4, 0);
  MatrixRecipe r;
  r.rows = 2;
  r.cols = 4;
  EXPECT_EQ(numerical_rank(gen_matrix(r, s), 1e-10), 2u);
}

TEST(GenMatrix, SparseDensity) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RngStream s(seed, 0);
    MatrixRecipe r;
    r.rows = 4;
    r.cols = 4;
    r.kind = MatrixKind::sparse;
    r.density = 0.5;
    const Matrix a = gen_matrix(r, s);
    const double frac = static_cast<double>((a.array() != 0.0).count()) / 16.0;
    EXPECT_GE(frac, 0.4);
    EXPECT_LE(frac, 0.6);
    EXPECT_EQ(numerical_rank(a, 1e-10), 4u);
  }
}

TEST(GenMatrix, UnreachableDensityThrows) {
  RngStream s(1, 0);
  MatrixRecipe r;
  r.rows = 4;
  r.cols = 4;
  r.kind = MatrixKind::sparse;
  r.density = 0.05;
  EXPECT_THROW(gen_matrix(r, s), GenerationError);
}

TEST(GenMatrix, PdRespectsCond) {
  RngStream s(2, 0);
  MatrixRecipe r;
  r.rows = r.cols = 6;
  r.kind = MatrixKind::pd;
  r.cond_target = 50.0;
  const Vector ev = symmetric_eigenvalues(gen_matrix(r, s));
  EXPECT_NEAR(ev.maxCoeff() / ev.minCoeff(), 50.0, 0.5);
  EXPECT_GT(ev.minCoeff(), 0.0);
}

TEST(Conditioned, UnitCond) {
  RngStream s(1, 0);
  const Matrix a = gen_conditioned(3, 3, 1.0, s);
  EXPECT_LE(condition_number(a), 1.01);
  const Matrix one = gen_conditioned(1, 1, 1.0, s);
  EXPECT_NE(one(0, 0), 0.0);
}

TEST(Conditioned, VectorCannotHaveSpread) {
  RngStream s(2, 0);
  EXPECT_THROW(gen_conditioned(1, 4, 10.0, s), ArgumentError);
  EXPECT_THROW(gen_conditioned(4, 1, 10.0, s), ArgumentError);
  EXPECT_NO_THROW(gen_conditioned(4, 1, 1.0, s));
}

TEST(Conditioned, Wide) {
  RngStream s(9, 0);
  const double k = condition_number(gen_conditioned(3, 5, 1e6, s));
  EXPECT_GE(k, 1e6 / 1.01);
  EXPECT_LE(k, 1.01e6);
}

TEST(Conditioned, Tall) {
  RngStream s(9, 1);
  const double k = condition_number(gen_conditioned(6, 3, 100.0, s));
  EXPECT_NEAR(k, 100.0, 1.0);
}

TEST(Psd, SpectralIdentity) {
  RngStream s(1, 0);
  const Matrix a = gen_psd(3, PsdMethod::spectral, Vector::Ones(3), s);
  EXPECT_LE((a - Matrix::Identity(3, 3)).norm(), 1e-14);
}

TEST(Psd, CholeskySingular) {
  RngStream s(1, 0);
  Vector d(2);
  d << 1.0, 0.0;
  const Matrix a = gen_psd(2, PsdMethod::cholesky_like, d, s);
  EXPECT_NEAR(a.determinant(), 0.0, 1e-12);
  EXPECT_GE(symmetric_eigenvalues(a).minCoeff(), -1e-14);
}

TEST(Psd, SpectralCond) {
  RngStream s(1, 0);
  Vector d(4);
  d << 1e3, 1.0, 1.0, 1.0;
  const Vector ev = symmetric_eigenvalues(gen_psd(4, PsdMethod::spectral, d, s));
  EXPECT_NEAR(ev.maxCoeff() / ev.minCoeff(), 1e3, 10.0);
}

TEST(Psd, AllMethodsPsd) {
  for (PsdMethod m : {PsdMethod::gram, PsdMethod::cholesky_like, PsdMethod::spectral,
                      PsdMethod::ldl}) {
    RngStream s(11, 0);
    const Matrix a = gen_psd(5, m, std::nullopt, s);
    EXPECT_EQ(a, a.transpose());
    EXPECT_GE(symmetric_eigenvalues(a).minCoeff(), -1e-12);
  }
}

TEST(Psd, GramRejectsDiagonal) {
  RngStream s(1, 0);
  EXPECT_THROW(gen_psd(2, PsdMethod::gram, Vector::Ones(2), s), ArgumentError);
}

TEST(Orthonormal, Properties) {
  RngStream s(1, 0);
  const Matrix one = gen_orthonormal(1, s);
  EXPECT_EQ(std::abs(one(0, 0)), 1.0);
  const Matrix q5 = gen_orthonormal(5, s);
  EXPECT_LE((q5.transpose() * q5 - Matrix::Identity(5, 5)).norm(), 5e-12);
  const Matrix q4 = gen_orthonormal(4, s);
  EXPECT_NEAR(std::abs(q4.determinant()), 1.0, 1e-10);
}

TEST(Profile, Endpoints) {
  const Vector g = geometric_profile(4, 2.0, 8.0);
  EXPECT_DOUBLE_EQ(g(0), 2.0);
  EXPECT_DOUBLE_EQ(g(3), 0.25);
}
