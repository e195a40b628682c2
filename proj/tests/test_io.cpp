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

#include <filesystem>

#include "conicgen/error.hpp"
#include "conicgen/instance_io.hpp"

using namespace conicgen;
namespace fs = std::filesystem;

namespace {

GenControls seeded(std::uint64_t seed) {
  GenControls c;
  c.seed = seed;
  return c;
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("conicgen_io_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::size_t count_lines(const std::string& text, const std::string& prefix) {
  std::size_t k = 0;
  std::size_t pos = 0;
  while ((pos = text.find("\n" + prefix, pos)) != std::string::npos) {
    ++k;
    ++pos;
  }
  return k;
}

}  // namespace

TEST(HexFloat, RoundTrip) {
  for (double v : {0.0, -0.0, 1.0, -2.5, 1e-300, 3.141592653589793, -1e308, 5e-324}) {
    const double back = io::parse_hex_double(io::hex_double(v));
    EXPECT_EQ(std::signbit(back), std::signbit(v));
    EXPECT_EQ(back, v);
  }
  EXPECT_EQ(io::hex_double(3.0), "0x1.8p+1");
  EXPECT_THROW(io::parse_hex_double("zz"), ParseError);
}

TEST(Sha256, KnownVector) {
  EXPECT_EQ(io::sha256_hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Mps, ToyLayout) {
  Matrix a(1, 2);
  a << 1, 1;
  const LinearInstance inst{a, Vector::Constant(1, 2.0), (Vector(2) << 1, 4).finished()};
  const std::string text = io::format_lo_mps(inst);
  EXPECT_EQ(count_lines(text, " E  "), 1u);
  EXPECT_NE(text.find("X2  COST  4"), std::string::npos);
  EXPECT_NE(text.find("RHS  R1  2\n"), std::string::npos);
  const LinearInstance back = io::parse_lo_mps(text);
  EXPECT_EQ(back.a, inst.a);
  EXPECT_EQ(back.b, inst.b);
  EXPECT_EQ(back.c, inst.c);
}

TEST(Mps, ZeroRhsOmitted) {
  const LoGenerated g = gen_lo_optimal(2, 4, {}, seeded(1), true);
  ASSERT_EQ(g.instance.b.norm(), 0.0);
  const std::string text = io::format_lo_mps(g.instance);
  const std::size_t rhs = text.find("RHS\n");
  ASSERT_NE(rhs, std::string::npos);
  EXPECT_EQ(text.compare(rhs, 11, "RHS\nBOUNDS\n"), 0);
  const LinearInstance back = io::parse_lo_mps(text);
  EXPECT_EQ(back.b, g.instance.b);
  EXPECT_EQ(back.a, g.instance.a);
}

TEST(Mps, RoundTripExact) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GenControls c = seeded(seed);
    c.density = 0.5;
    const LoGenerated g = gen_lo_both(3, 8, {0, 3, 5}, c);
    const LinearInstance back = io::parse_lo_mps(io::format_lo_mps(g.instance));
    EXPECT_EQ(back.a, g.instance.a);
    EXPECT_EQ(back.b, g.instance.b);
    EXPECT_EQ(back.c, g.instance.c);
  }
}

TEST(Mps, Malformed) {
  EXPECT_THROW(io::parse_lo_mps("NAME X\nROWS\n N  COST\n L  R1\nENDATA\n"), ParseError);
  EXPECT_THROW(io::parse_lo_mps("NAME X\nROWS\n N  COST\n E  R1\nCOLUMNS\n    X1  R1  abc\nENDATA\n"),
               ParseError);
  EXPECT_THROW(io::parse_lo_mps("NAME X\nROWS\n"), ParseError);
}

TEST(Sdpa, ToyLayout) {
  SdoInstance inst;
  Matrix a1(2, 2);
  a1 << 1, 1, 1, 0;
  inst.a = {a1};
  inst.b = Vector::Constant(1, 2.0);
  inst.c.resize(2, 2);
  inst.c << 1, 1, 1, 3;
  const std::string text = io::format_sdo_sdpa(inst);
  EXPECT_EQ(count_lines(text, "0 1 "), 3u);
  EXPECT_NE(text.find("\n0 1 1 1 -1\n0 1 1 2 -1\n0 1 2 2 -3\n1 1 1 1 1\n1 1 1 2 1\n"),
            std::string::npos);
  const SdoInstance back = io::parse_sdo_sdpa(text);
  EXPECT_EQ(back.c, inst.c);
  EXPECT_EQ(back.a[0], inst.a[0]);
  EXPECT_EQ(back.b, inst.b);
}

TEST(Sdpa, ZeroMatrixHasNoEntries) {
  SdoInstance inst;
  inst.a = {Matrix::Zero(2, 2), Matrix::Identity(2, 2)};
  inst.b = Vector::Zero(2);
  inst.c = Matrix::Identity(2, 2);
  const std::string text = io::format_sdo_sdpa(inst);
  EXPECT_EQ(count_lines(text, "1 1 "), 0u);
  EXPECT_EQ(count_lines(text, "2 1 "), 2u);
  const SdoInstance back = io::parse_sdo_sdpa(text);
  EXPECT_EQ(back.a[0], inst.a[0]);
}

TEST(Sdpa, RoundTripExact) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SdoGenerated g = gen_sdo_eig_both(3, 4, 1, 2, seeded(seed));
    const SdoInstance back = io::parse_sdo_sdpa(io::format_sdo_sdpa(g.instance));
    ASSERT_EQ(back.a.size(), g.instance.a.size());
    for (std::size_t i = 0; i < back.a.size(); ++i) EXPECT_EQ(back.a[i], g.instance.a[i]);
    EXPECT_EQ(back.b, g.instance.b);
    EXPECT_EQ(back.c, g.instance.c);
  }
}

TEST(Cbf, SingleQuadraticCone) {
  SocoInteriorOverrides o;
  const SocoGenerated g = gen_soco_interior(1, {3}, seeded(1), o);
  const std::string text = io::format_soco_cbf(g.instance);
  EXPECT_NE(text.find("VAR\n3 1\nQ 3\n"), std::string::npos);
  const SocoInstance back = io::parse_soco_cbf(text);
  EXPECT_EQ(back.cone_dims, g.instance.cone_dims);
  EXPECT_EQ(back.a, g.instance.a);
}

TEST(Cbf, OrthantMerged) {
  const SocoGenerated g = gen_soco_interior(2, {1, 1, 1, 1}, seeded(1));
  const std::string text = io::format_soco_cbf(g.instance);
  EXPECT_NE(text.find("VAR\n4 1\nL+ 4\n"), std::string::npos);
  EXPECT_EQ(io::parse_soco_cbf(text).cone_dims, g.instance.cone_dims);
}

TEST(Cbf, RoundTripExact) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SocoGenerated g = gen_soco_both(
        3, {1, 3, 1, 1, 4}, {ConeLabel::B, ConeLabel::R, ConeLabel::N, ConeLabel::T1, ConeLabel::N},
        seeded(seed));
    const SocoInstance back = io::parse_soco_cbf(io::format_soco_cbf(g.instance));
    EXPECT_EQ(back.cone_dims, g.instance.cone_dims);
    EXPECT_EQ(back.a, g.instance.a);
    EXPECT_EQ(back.b, g.instance.b);
    EXPECT_EQ(back.c, g.instance.c);
  }
}

TEST(Cbf, Malformed) {
  EXPECT_THROW(io::parse_soco_cbf("VER\n2\nVAR\n3 1\nQ 2\nCON\n0 0\n"), ParseError);
  EXPECT_THROW(io::parse_soco_cbf("VER\n2\nVAR\n3 1\nF 3\n"), ParseError);
}

TEST(Manifest, RoundTripBitExact) {
  const SdoGenerated g = gen_sdo_maxcomp(3, 5, 1, 2, seeded(4));
  io::Manifest m;
  m.family = io::Family::sdo;
  m.mode = "maxcomp";
  m.m = 3;
  m.n = 5;
  m.controls = {{"seed", 4}};
  m.instances.push_back({"instance.dat-s", "sdpa", io::sha256_hex(io::format_sdo_sdpa(g.instance))});
  m.certificate = g.certificate;
  m.report = verify_sdo(g.instance, g.certificate);
  const std::string text = io::format_manifest(m);
  const io::Manifest back = io::parse_manifest(text);
  EXPECT_EQ(io::format_manifest(back), text);
  const auto& c = std::get<SdoCertificate>(back.certificate);
  EXPECT_EQ(c.optimal->x, g.certificate.optimal->x);
  EXPECT_EQ(c.optimal->s, g.certificate.optimal->s);
  EXPECT_EQ(c.interior.has_value(), false);
  EXPECT_EQ(*c.basis, *g.certificate.basis);
  EXPECT_EQ(*c.gamma, *g.certificate.gamma);
  EXPECT_EQ(c.partition->nb, 1u);
  EXPECT_EQ(c.partition->nt, 2u);
  EXPECT_EQ(c.partition->nn, 2u);
  EXPECT_EQ(back.report.checks.size(), m.report.checks.size());
  EXPECT_EQ(back.report.primal_residual, m.report.primal_residual);
}

TEST(Manifest, FilesAndIntegrity) {
  const fs::path dir = scratch("integrity");
  const SocoGenerated g = gen_soco_both(2, {2, 3}, {ConeLabel::B, ConeLabel::N}, seeded(2));
  const std::string text = io::format_soco_cbf(g.instance);
  io::write_text(dir / "instance.cbf", text);
  io::Manifest m;
  m.family = io::Family::soco;
  m.mode = "both";
  m.instances.push_back({"instance.cbf", "cbf", io::sha256_hex(text)});
  m.certificate = g.certificate;
  m.report = verify_soco(g.instance, g.certificate);
  io::write_manifest(m, dir / "manifest.json");

  const io::Manifest back = io::read_manifest(dir / "manifest.json");
  const io::AnyInstance inst = io::load_instance(back.instances[0], back.family, dir);
  EXPECT_TRUE(io::verify_any(inst, back.certificate).passed);
  const auto& sc = std::get<SocoCertificate>(back.certificate);
  EXPECT_EQ(sc.labels, g.certificate.labels);

  io::write_text(dir / "instance.cbf", text + "\n");
  EXPECT_THROW(io::read_manifest(dir / "manifest.json"), IntegrityError);
  fs::remove(dir / "instance.cbf");
  EXPECT_THROW(io::read_manifest(dir / "manifest.json"), IntegrityError);
}

TEST(Manifest, ParseErrorsNameTheField) {
  const LoGenerated g = gen_lo_interior(1, 3, seeded(1));
  io::Manifest m;
  m.certificate = g.certificate;
  m.report = verify_lo(g.instance, g.certificate);
  nlohmann::ordered_json j = io::manifest_to_json(m);
  j["certificate"]["interior"]["x"][1] = "bogus";
  try {
    io::manifest_from_json(j);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("certificate.interior.x[1]"), std::string::npos) << e.what();
  }
  j = io::manifest_to_json(m);
  j.erase("report");
  try {
    io::manifest_from_json(j);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("'report'"), std::string::npos) << e.what();
  }
  EXPECT_THROW(io::parse_manifest("{ not json"), ParseError);
}

TEST(Manifest, LoAsCbf) {
  const LoGenerated g = gen_lo_both(2, 5, {0, 1}, seeded(3));
  const fs::path dir = scratch("lo_cbf");
  const std::string text = io::format_instance(io::AnyInstance{g.instance}, "cbf");
  io::write_text(dir / "i.cbf", text);
  const io::AnyInstance back = io::load_instance({"i.cbf", "cbf", ""}, io::Family::lo, dir);
  EXPECT_EQ(std::get<LinearInstance>(back).a, g.instance.a);
  EXPECT_THROW(io::format_instance(io::AnyInstance{g.instance}, "sdpa"), ArgumentError);
}

TEST(Io, UnwritablePath) {
  EXPECT_THROW(io::write_text("/nonexistent-dir/x/y.mps", "x"), IoError);
  EXPECT_THROW(io::read_text("/nonexistent-dir/x/y.mps"), IoError);
}
