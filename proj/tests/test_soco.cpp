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

using L = ConeLabel;

const std::vector<std::size_t> kDims{3, 3, 3, 2, 3, 2};
const std::vector<ConeLabel> kLabels{L::B, L::R, L::T2, L::T1, L::N, L::T3};

void expect_pass(const SocoGenerated& g) {
  const VerifyReport r = verify_soco(g.instance, g.certificate);
  EXPECT_TRUE(r.passed) << r.summary();
}

}  // namespace

TEST(Jordan, Examples) {
  EXPECT_EQ(jordan_product(vec({1, 0}), vec({1, 0})), vec({1, 0}));
  EXPECT_EQ(jordan_product(vec({5, 3, 4}), vec({10, -6, -8})), vec({0, 0, 0}));
  EXPECT_EQ(jordan_product(vec({2, -1, 7}), vec({0, 0, 0})).norm(), 0.0);
}

TEST(Interiorize, Examples) {
  EXPECT_EQ(interiorize(vec({0.5, 3, 4})), vec({5.5, 3, 4}));
  EXPECT_EQ(interiorize(vec({2})), vec({2}));
  EXPECT_EQ(interiorize(vec({-1, 0})), vec({1, 0}));
  EXPECT_THROW(interiorize(vec({0, 1})), ArgumentError);
}

TEST(RCone, Pair) {
  const auto [x, s] = r_cone_pair(vec({3, 4}), 2.0);
  EXPECT_EQ(x, vec({5, 3, 4}));
  EXPECT_EQ(s, vec({10, -6, -8}));
  EXPECT_EQ(jordan_product(x, s).norm(), 0.0);
}

TEST(Labels, RoundTrip) {
  for (L l : {L::B, L::N, L::R, L::T1, L::T2, L::T3}) EXPECT_EQ(parse_cone_label(to_string(l)), l);
  EXPECT_THROW(parse_cone_label("Q"), ArgumentError);
}

TEST(SocoInterior, ForcedArithmetic) {
  SocoInteriorOverrides o;
  o.a = Matrix(1, 3);
  *o.a << 1, 0, 0;
  o.x0 = vec({2, 1, 1});
  o.y0 = vec({1});
  o.s0 = vec({3, 0, 0});
  const SocoGenerated g = gen_soco_interior(1, {3}, seeded(1), o);
  EXPECT_EQ(g.instance.b, vec({2}));
  EXPECT_EQ(g.instance.c, vec({4, 0, 0}));
}

TEST(SocoInterior, Margins) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SocoGenerated g = gen_soco_interior(3, {3, 1, 4, 2}, seeded(seed));
    const std::vector<std::size_t> off = cone_offsets(g.instance.cone_dims);
    for (std::size_t i = 0; i < g.instance.cone_dims.size(); ++i) {
      const Vector xb = g.certificate.interior->x.segment(
          static_cast<Eigen::Index>(off[i]), static_cast<Eigen::Index>(g.instance.cone_dims[i]));
      EXPECT_GE(cone_margin(xb), 0.1 * xb.cwiseAbs().maxCoeff() - 1e-15);
    }
    expect_pass(g);
  }
}

TEST(SocoOptimal, AllLabels) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SocoGenerated g = gen_soco_optimal(4, kDims, kLabels, seeded(seed));
    const SocoSolution& s = *g.certificate.optimal;
    EXPECT_NEAR(g.instance.c.dot(s.x), g.instance.b.dot(s.y), 1e-12);
    EXPECT_EQ(s.x.segment(9, 2).norm(), 0.0);
    EXPECT_EQ(s.s.segment(9, 2).norm(), 0.0);
    expect_pass(g);
  }
}

TEST(SocoMaxcomp, Hypotheses) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SocoGenerated g = gen_soco_maxcomp(3, kDims, kLabels, seeded(seed));
    EXPECT_EQ(g.instance.b(0), 0.0);
    const Vector row = g.instance.a.row(1).segment(6, 3).transpose();
    EXPECT_LE(std::abs(row.dot(g.certificate.optimal->x.segment(6, 3))), 1e-12);
    expect_pass(g);
  }
}

TEST(SocoMaxcomp, Rejections) {
  GenControls c = seeded(1);
  c.cond = 10.0;
  EXPECT_THROW(gen_soco_maxcomp(3, kDims, kLabels, c), ArgumentError);
  EXPECT_THROW(gen_soco_maxcomp(2, {3, 3}, {L::B, L::B}, seeded(1)), ArgumentError);
}

TEST(SocoBoth, Seeds) {
  const std::vector<ConeLabel> labels{L::B, L::R, L::T2, L::T1, L::T3, L::N};
  const std::vector<std::size_t> dims{3, 3, 3, 2, 2, 3};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SocoGenerated g = gen_soco_both(4, dims, labels, seeded(seed));
    EXPECT_EQ(g.instance.a.rows(), 5);
    EXPECT_EQ(g.instance.cone_dims.back(), 4u);
    EXPECT_EQ(g.certificate.optimal->x(g.instance.a.cols() - 1), 0.0);
    EXPECT_EQ(g.certificate.labels.back(), L::N);
    expect_pass(g);
  }
  EXPECT_THROW(gen_soco_both(4, {3, 3}, {L::N, L::B}, seeded(1)), ArgumentError);
}

TEST(SocoMaxcompBoth, Seeds) {
  const std::vector<ConeLabel> labels{L::B, L::R, L::T2, L::T1, L::T3, L::N};
  const std::vector<std::size_t> dims{3, 3, 3, 2, 2, 3};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SocoGenerated g = gen_soco_maxcomp_both(3, dims, labels, seeded(seed));
    EXPECT_TRUE(g.certificate.maximally_complementary);
    expect_pass(g);
  }
}
