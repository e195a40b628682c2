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

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "conicgen/cli.hpp"
#include "conicgen/instance_io.hpp"

using namespace conicgen;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "conicgen");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("conicgen_cli_" + name);
  fs::remove_all(p);
  return p;
}

std::size_t file_count(const fs::path& dir) {
  if (!fs::exists(dir)) return 0;
  std::size_t k = 0;
  for (const auto& e : fs::directory_iterator(dir)) k += e.is_regular_file();
  return k;
}

}  // namespace

TEST(Cli, GenAndVerifyLo) {
  const fs::path d = scratch("lo");
  const Result r = run({"gen", "lo", "--mode", "both", "--m", "3", "--n", "6", "--seed", "7",
                        "--out", d.string(), "--format", "mps"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(d / "instance.mps"));
  EXPECT_TRUE(fs::exists(d / "manifest.json"));
  EXPECT_EQ(file_count(d), 2u);
  const Result v = run({"verify", (d / "manifest.json").string()});
  EXPECT_EQ(v.code, 0) << v.err;
}

TEST(Cli, Deterministic) {
  const fs::path a = scratch("det_a"), b = scratch("det_b");
  for (const fs::path& d : {a, b}) {
    ASSERT_EQ(run({"gen", "soco", "--mode", "both", "--m", "2", "--cone-dims", "3,1,2",
                   "--partition", "B,T1,N", "--seed", "11", "--batch", "3", "--out", d.string()})
                  .code,
              0);
  }
  for (const auto& e : fs::directory_iterator(a)) {
    EXPECT_EQ(io::read_text(e.path()), io::read_text(b / e.path().filename()));
  }
  EXPECT_EQ(file_count(a), 6u);
}

TEST(Cli, TamperedInstanceFails) {
  const fs::path d = scratch("tamper");
  ASSERT_EQ(run({"gen", "sdo", "--mode", "optimal", "--m", "2", "--n", "4", "--nB", "1", "--nN",
                 "2", "--out", d.string()})
                .code,
            0);
  io::write_text(d / "instance.dat-s", io::read_text(d / "instance.dat-s") + "\n");
  const Result v = run({"verify", (d / "manifest.json").string()});
  EXPECT_EQ(v.code, 1);
  EXPECT_NE(v.err.find("integrity"), std::string::npos);
}

TEST(Cli, RoutesBEmpty) {
  const fs::path d = scratch("bempty");
  ASSERT_EQ(run({"gen", "sdo", "--mode", "maxcomp", "--m", "2", "--n", "5", "--nB", "0", "--nN",
                 "3", "--out", d.string()})
                .code,
            0);
  const io::Manifest m = io::read_manifest(d / "manifest.json");
  const auto& c = std::get<SdoCertificate>(m.certificate);
  EXPECT_EQ(c.partition->nb, 0u);
  EXPECT_EQ(c.optimal->x.norm(), 0.0);
  EXPECT_NE(m.report.find("hypothesis.gamma_t_zero"), nullptr);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"gen", "lo", "--bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"gen", "lo", "--mode", "maxcomp", "--m", "1", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"gen", "lo", "--mode", "optimal", "--m", "1", "--n", "2", "--format", "sdpa"}).code, 2);
  EXPECT_EQ(run({"gen", "sdo", "--mode", "both", "--m", "1", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"gen", "lo", "--mode", "optimal", "--m", "3", "--n", "2"}).code, 2);
}

TEST(Cli, ConfigWithOverride) {
  const fs::path d = scratch("config");
  fs::create_directories(d);
  io::write_text(d / "cfg.json",
                 R"({"family": "lo", "mode": "optimal", "m": 2, "n": 5, "partition": [1, 3], "seed": 3})");
  const fs::path out = d / "out";
  ASSERT_EQ(run({"gen", "--config", (d / "cfg.json").string(), "--seed", "9", "--out", out.string()}).code, 0);
  const io::Manifest m = io::read_manifest(out / "manifest.json");
  EXPECT_EQ(m.controls.at("seed"), 9);
  const auto& c = std::get<LoCertificate>(m.certificate);
  EXPECT_EQ(c.basic, (std::vector<std::size_t>{0, 2}));
}

TEST(Cli, EnvironmentOutputDir) {
  const fs::path d = scratch("env");
  setenv("CONICGEN_OUT", d.string().c_str(), 1);
  const Result r = run({"gen", "lo", "--mode", "interior", "--m", "1", "--n", "3"});
  unsetenv("CONICGEN_OUT");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(d / "manifest.json"));
}

TEST(Cli, GenerationFailureWritesNothing) {
  const fs::path d = scratch("fail");
  // Density 0.01 cannot be met with one mandatory nonzero per row.
  const Result r = run({"gen", "lo", "--mode", "optimal", "--m", "4", "--n", "8", "--sparsity",
                        "0.01", "--out", d.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(file_count(d), 0u);
}
