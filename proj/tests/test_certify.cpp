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

#include <cmath>

#include "conicgen/certify.hpp"
#include "conicgen/error.hpp"
#include "conicgen/lo_gen.hpp"
#include "conicgen/sdo_gen.hpp"
#include "conicgen/soco_gen.hpp"

using namespace conicgen;

namespace {

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

GenControls seeded(std::uint64_t seed) {
  GenControls c;
  c.seed = seed;
  return c;
}

LoGenerated lo_toy() {
  LoBothOverrides o;
  Matrix a(1, 2);
  a << 1, 1;
  o.inner = LinearInstance{a, vec({2}), vec({1, 4})};
  o.inner_optimal = LoSolution{vec({2, 0}), vec({1}), vec({0, 3})};
  o.x0 = vec({1, 1, 1});
  o.s0 = vec({1, 1, 4});
  o.y0 = vec({1, 1});
  return gen_lo_both(1, 2, {0}, seeded(0), LoBothVariant::general, o);
}

std::vector<std::string> failed_groups(const VerifyReport& r) {
  std::vector<std::string> out;
  for (const CheckResult& c : r.checks)
    if (!c.passed) out.push_back(c.group);
  return out;
}

}  // namespace

TEST(VerifyLo, ToyPasses) {
  const LoGenerated g = lo_toy();
  const VerifyReport r = verify_lo(g.instance, g.certificate);
  EXPECT_TRUE(r.passed) << r.summary();
  EXPECT_LE(r.primal_residual, 1e-12);
  EXPECT_LE(r.dual_residual, 1e-12);
}

TEST(VerifyLo, PerturbedB) {
  LoGenerated g = lo_toy();
  g.instance.b(0) *= 1.0 + 1e-3;
  const VerifyReport r = verify_lo(g.instance, g.certificate);
  EXPECT_FALSE(r.passed);
  EXPECT_GT(r.primal_residual, 1e-4);
  EXPECT_LT(r.primal_residual, 1e-3);
  for (const std::string& grp : failed_groups(r)) EXPECT_EQ(grp, "primal");
}

TEST(VerifyLo, BrokenComplementarity) {
  LoGenerated g = lo_toy();
  g.certificate.optimal->s(0) = 0.5;
  g.certificate.optimal->x(0) = 2.0;
  const VerifyReport r = verify_lo(g.instance, g.certificate);
  ASSERT_NE(r.find("optimal.complementarity"), nullptr);
  EXPECT_FALSE(r.find("optimal.complementarity")->passed);
}

TEST(VerifyLo, ShapeMismatch) {
  LoGenerated g = lo_toy();
  g.instance.c.conservativeResize(2);
  EXPECT_THROW(verify_lo(g.instance, g.certificate), ArgumentError);
}

TEST(VerifySdo, ToyPasses) {
  SdoInteriorOptions o;
  Matrix a1(2, 2);
  a1 << 1, 0, 0, 2;
  o.a = std::vector<Matrix>{a1};
  o.x0 = Matrix::Identity(2, 2);
  o.s0 = Matrix::Identity(2, 2);
  o.y0 = Vector::Ones(1);
  const SdoGenerated g = gen_sdo_interior(1, 2, seeded(0), o);
  EXPECT_TRUE(verify_sdo(g.instance, g.certificate).passed);
}

TEST(VerifySdo, IndefiniteInterior) {
  SdoGenerated g = gen_sdo_interior(2, 3, seeded(1));
  SdoSolution& in = *g.certificate.interior;
  Eigen::SelfAdjointEigenSolver<Matrix> es(in.x);
  Vector ev = es.eigenvalues();
  ev(0) = -1e-6;
  in.x = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose();
  in.x = symmetrize(in.x);
  const VerifyReport r = verify_sdo(g.instance, g.certificate);
  EXPECT_FALSE(r.find("interior.cone")->passed);
}

TEST(VerifySdo, MaxcompGammaZero) {
  SdoGenerated g = gen_sdo_maxcomp(3, 5, 1, 2, seeded(2));
  ASSERT_TRUE(verify_sdo(g.instance, g.certificate).passed);
  // Remove the positive T part of A_1 along one direction of T.
  const Matrix& q = *g.certificate.basis;
  const Vector qt = q.col(1);
  const double gamma = (*g.certificate.gamma)(1);
  g.instance.a[0] -= gamma * qt * qt.transpose();
  (*g.certificate.gamma)(1) = 0.0;
  const VerifyReport r = verify_sdo(g.instance, g.certificate);
  EXPECT_FALSE(r.find("hypothesis.gamma_t")->passed);
}

TEST(VerifySdo, AsymmetricInput) {
  SdoGenerated g = gen_sdo_interior(1, 3, seeded(1));
  g.instance.c(0, 1) += 1.0;
  EXPECT_THROW(verify_sdo(g.instance, g.certificate), ArgumentError);
}

TEST(VerifySoco, RConeJordan) {
  const auto [x, s] = r_cone_pair(vec({3, 4}), 2.0);
  SocoInstance inst{{3}, Matrix::Zero(1, 3), Vector::Zero(1), s};
  inst.a(0, 0) = 1.0;
  inst.b(0) = x(0);
  inst.c(0) += 0.0;
  SocoCertificate cert;
  cert.optimal = SocoSolution{x, Vector::Zero(1), s};
  cert.labels = {ConeLabel::R};
  const VerifyReport r = verify_soco(inst, cert);
  EXPECT_EQ(r.find("optimal.complementarity")->value, 0.0);
  EXPECT_TRUE(r.passed) << r.summary();
}

TEST(VerifySoco, BrokenT2) {
  SocoGenerated g = gen_soco_optimal(3, {3, 3, 3}, {ConeLabel::B, ConeLabel::T2, ConeLabel::N},
                                     seeded(3));
  ASSERT_TRUE(verify_soco(g.instance, g.certificate).passed);
  g.certificate.optimal->x(3) *= 1.5;
  g.instance.b = g.instance.a * g.certificate.optimal->x;
  const VerifyReport r = verify_soco(g.instance, g.certificate);
  EXPECT_FALSE(r.find("partition.labels")->passed);
}

TEST(VerifySoco, DimsMustSum) {
  SocoGenerated g = gen_soco_interior(1, {2, 2}, seeded(1));
  g.instance.cone_dims = {2, 1};
  EXPECT_THROW(verify_soco(g.instance, g.certificate), ArgumentError);
}

TEST(VerifySoco, SpecializesToLo) {
  const std::vector<std::size_t> dims(6, 1);
  const std::vector<ConeLabel> labels{ConeLabel::B, ConeLabel::N, ConeLabel::B,
                                      ConeLabel::N, ConeLabel::T1, ConeLabel::N};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SocoGenerated g = gen_soco_optimal(2, dims, labels, seeded(seed));
    const LoGenerated lo = to_linear(g.instance, g.certificate);
    EXPECT_EQ(verify_soco(g.instance, g.certificate).passed, verify_lo(lo.instance, lo.certificate).passed);
    EXPECT_TRUE(verify_lo(lo.instance, lo.certificate).passed);
  }
}

TEST(Oracle, Toy) {
  Matrix a(1, 2);
  a << 1, 1;
  const LpOracleResult r = lo_bruteforce_optimal({a, vec({2}), vec({1, 4})});
  EXPECT_EQ(r.status, LpStatus::optimal);
  EXPECT_DOUBLE_EQ(r.value, 2.0);
  EXPECT_EQ(r.vertex, vec({2, 0}));
}

TEST(Oracle, ZeroRhs) {
  Matrix a(1, 3);
  a << 1, -1, 2;
  const LpOracleResult r = lo_bruteforce_optimal({a, vec({0}), vec({1, 2, 0.5})});
  EXPECT_EQ(r.status, LpStatus::optimal);
  EXPECT_EQ(r.value, 0.0);
}

TEST(Oracle, InfeasibleAndUnbounded) {
  Matrix a(1, 2);
  a << 1, 1;
  EXPECT_EQ(lo_bruteforce_optimal({a, vec({-1}), vec({1, 1})}).status, LpStatus::infeasible);
  Matrix u(1, 2);
  u << 1, -1;
  EXPECT_EQ(lo_bruteforce_optimal({u, vec({1}), vec({0, -1})}).status, LpStatus::unbounded);
}

TEST(Oracle, MatchesGenerated) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const LoGenerated g = gen_lo_optimal(3, 8, {1, 3, 5}, seeded(seed));
    const LpOracleResult r = lo_bruteforce_optimal(g.instance);
    ASSERT_EQ(r.status, LpStatus::optimal);
    EXPECT_NEAR(r.value, g.instance.c.dot(g.certificate.optimal->x), 1e-8);
  }
}
