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

#include "conicgen/certify.hpp"
#include "conicgen/error.hpp"
#include "conicgen/lo_gen.hpp"

using namespace conicgen;

namespace {

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

Matrix row(std::initializer_list<double> v) { return vec(v).transpose(); }

GenControls seeded(std::uint64_t seed) {
  GenControls c;
  c.seed = seed;
  return c;
}

}  // namespace

TEST(LoInterior, ForcedArithmetic) {
  LoInteriorOptions o;
  o.a = row({1, 1});
  o.x0 = vec({1, 2});
  o.y0 = vec({2});
  o.s0 = vec({3, 1});
  const LoGenerated g = gen_lo_interior(1, 2, seeded(1), o);
  EXPECT_EQ(g.instance.b, vec({3}));
  EXPECT_EQ(g.instance.c, vec({5, 3}));
}

TEST(LoInterior, MuRule) {
  LoInteriorOptions o;
  o.x0 = vec({2, 4});
  o.mu = 1.0;
  const LoGenerated g = gen_lo_interior(1, 2, seeded(1), o);
  EXPECT_EQ(g.certificate.interior->s, vec({0.5, 0.25}));
  EXPECT_DOUBLE_EQ(g.certificate.interior->x.dot(g.certificate.interior->s), 2.0);
}

TEST(LoInterior, Errors) {
  LoInteriorOptions o;
  o.x0 = vec({1, -1});
  EXPECT_THROW(gen_lo_interior(1, 2, seeded(1), o), ArgumentError);
  LoInteriorOptions both;
  both.mu = 1.0;
  both.s0 = vec({1, 1});
  EXPECT_THROW(gen_lo_interior(1, 2, seeded(1), both), ArgumentError);
  EXPECT_THROW(gen_lo_interior(2, 2, seeded(1)), ArgumentError);
}

TEST(LoInterior, ExactResiduals) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const LoGenerated g = gen_lo_interior(3, 7, seeded(seed));
    const VerifyReport r = verify_lo(g.instance, g.certificate);
    EXPECT_TRUE(r.passed) << r.summary();
  }
}

TEST(LoOptimal, ForcedArithmetic) {
  LoOptimalOverrides o;
  o.a = row({1, 1});
  o.x = vec({2, 0});
  o.s = vec({0, 3});
  o.y = vec({1});
  const LoGenerated g = gen_lo_optimal(1, 2, {0}, seeded(1), true, o);
  EXPECT_EQ(g.instance.b, vec({2}));
  EXPECT_EQ(g.instance.c, vec({1, 4}));
  EXPECT_DOUBLE_EQ(g.instance.c.dot(o.x.value()), g.instance.b.dot(o.y.value()));
  EXPECT_TRUE(g.certificate.strictly_complementary);
  EXPECT_TRUE(g.certificate.unique_basis);
}

TEST(LoOptimal, NonStrictStillOptimal) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const LoGenerated g = gen_lo_optimal(3, 8, {0, 2, 5, 7}, seeded(seed), false);
    const LoSolution& s = *g.certificate.optimal;
    EXPECT_EQ(g.certificate.strictly_complementary, (s.x + s.s).minCoeff() > 0.0);
    EXPECT_TRUE(verify_lo(g.instance, g.certificate).passed);
  }
}

TEST(LoOptimal, EmptyBasisWithNormTarget) {
  GenControls c = seeded(1);
  c.norm_b = 1.0;
  EXPECT_THROW(gen_lo_optimal(2, 4, {}, c, true), GenerationError);
}

TEST(LoBoth, HandToy) {
  LoBothOverrides o;
  o.inner = LinearInstance{row({1, 1}), vec({2}), vec({1, 4})};
  o.inner_optimal = LoSolution{vec({2, 0}), vec({1}), vec({0, 3})};
  o.x0 = vec({1, 1, 1});
  o.s0 = vec({1, 1, 4});
  o.y0 = vec({1, 1});
  const LoGenerated g = gen_lo_both(1, 2, {0}, seeded(1), LoBothVariant::general, o);
  Matrix a(2, 3);
  a << 1, 1, 0, -1, 2, -3;
  EXPECT_EQ(g.instance.a, a);
  EXPECT_EQ(g.instance.b, vec({2, -2}));
  EXPECT_EQ(g.instance.c, vec({1, 4, 1}));
  EXPECT_EQ(g.certificate.optimal->x, vec({2, 0, 0}));
  EXPECT_EQ(g.certificate.optimal->s, vec({0, 3, 1}));
  const VerifyReport r = verify_lo(g.instance, g.certificate);
  EXPECT_TRUE(r.passed) << r.summary();
  EXPECT_LE(r.primal_residual, 1e-12);
  EXPECT_LE(r.dual_residual, 1e-12);
}

TEST(LoBoth, Variants) {
  for (LoBothVariant v : {LoBothVariant::general, LoBothVariant::simplified,
                          LoBothVariant::simplest}) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const LoGenerated g = gen_lo_both(3, 7, {1, 4, 6}, seeded(seed), v);
      EXPECT_EQ(g.instance.a.rows(), 4);
      EXPECT_EQ(g.instance.a.cols(), 8);
      const VerifyReport r = verify_lo(g.instance, g.certificate);
      EXPECT_TRUE(r.passed) << r.summary();
    }
  }
}

TEST(LoBoth, SimplestSettings) {
  const LoGenerated g = gen_lo_both(2, 5, {0, 3}, seeded(4), LoBothVariant::simplest);
  const LoSolution& in = *g.certificate.interior;
  EXPECT_EQ(in.x(5), 1.0);
  EXPECT_EQ(in.y(2), 1.0);
  EXPECT_EQ(in.x(1), 1.0);
  EXPECT_EQ(in.s(0), 1.0);
}

TEST(LoBoth, NormTargets) {
  GenControls c = seeded(3);
  c.norm_b = 10.0;
  c.norm_c = 0.5;
  const LoGenerated g = gen_lo_both(2, 6, {0, 1}, c);
  EXPECT_NEAR(g.instance.b.norm(), 10.0, 1e-12);
  EXPECT_NEAR(g.instance.c.norm(), 0.5, 1e-12);
  EXPECT_TRUE(verify_lo(g.instance, g.certificate).passed);
}

TEST(LoBoth, SparseAndConditioned) {
  GenControls c = seeded(5);
  c.density = 0.5;
  const LoGenerated g = gen_lo_both(4, 10, {0, 2, 4, 6}, c);
  EXPECT_TRUE(verify_lo(g.instance, g.certificate).passed);
  GenControls k = seeded(5);
  k.cond = 1e3;
  const LoGenerated h = gen_lo_optimal(4, 10, {0, 2, 4, 6}, k);
  EXPECT_NEAR(condition_number(h.instance.a), 1e3, 10.0);
}
