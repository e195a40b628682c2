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

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "conicgen/certify.hpp"
#include "conicgen/lo_gen.hpp"
#include "conicgen/sdo_gen.hpp"
#include "conicgen/soco_gen.hpp"

namespace conicgen::io {

inline constexpr const char* kManifestVersion = "1";

// Text formats. format_* and parse_* work on in-memory text; write_* and
// read_* wrap them with file access and throw IoError on failure.
//
// MPS: free-form fields, objective row COST, rows R1..Rm of type E, columns
// X1..Xn. Every column carries its COST entry even when it is zero, so all
// columns are listed. The RHS section is always present and omits zero
// entries. BOUNDS lists every column as PL (x >= 0, no upper bound).
std::string format_lo_mps(const LinearInstance& inst);
LinearInstance parse_lo_mps(const std::string& text);

// SDPA sparse (.dat-s) with a single block. The problem min C.X, A_i.X = b_i,
// X psd is stored as the SDPA dual: F_0 = -C, F_i = A_i, c = b. A solver's
// primal vector is then -y.
std::string format_sdo_sdpa(const SdoInstance& inst);
SdoInstance parse_sdo_sdpa(const std::string& text);

// CBF version 2. Consecutive cones of dimension 1 are merged into one L+
// domain, larger ones are Q cones. Constraints are one L= block of size m
// written as A x - b = 0.
std::string format_soco_cbf(const SocoInstance& inst);
SocoInstance parse_soco_cbf(const std::string& text);

void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

void write_lo_mps(const LinearInstance& inst, const std::filesystem::path& path);
LinearInstance read_lo_mps(const std::filesystem::path& path);
void write_sdo_sdpa(const SdoInstance& inst, const std::filesystem::path& path);
SdoInstance read_sdo_sdpa(const std::filesystem::path& path);
void write_soco_cbf(const SocoInstance& inst, const std::filesystem::path& path);
SocoInstance read_soco_cbf(const std::filesystem::path& path);

/// Lowercase hex SHA-256 digest.
std::string sha256_hex(const std::string& bytes);

/// C99 hex-float text ("0x1.8p+1", "-0x0p+0"), exact in both directions.
std::string hex_double(double v);
double parse_hex_double(const std::string& text);

enum class Family { lo, sdo, soco };
std::string to_string(Family f);
Family parse_family(const std::string& text);

struct InstanceFile {
  /// Path relative to the manifest's directory.
  std::string file;
  /// mps, sdpa or cbf.
  std::string format;
  std::string sha256;
};

using AnyInstance = std::variant<LinearInstance, SdoInstance, SocoInstance>;
using AnyCertificate = std::variant<LoCertificate, SdoCertificate, SocoCertificate>;

struct Manifest {
  std::string format_version = kManifestVersion;
  Family family = Family::lo;
  std::string mode;
  /// Rows of A (LO, SOCO) or number of constraint matrices (SDO).
  std::size_t m = 0;
  /// Variables (LO, SOCO) or matrix order (SDO).
  std::size_t n = 0;
  std::vector<std::size_t> cone_dims;
  /// Generation parameters as given on the command line or in a config file.
  nlohmann::ordered_json controls = nlohmann::ordered_json::object();
  std::vector<InstanceFile> instances;
  AnyCertificate certificate;
  VerifyReport report;
};

nlohmann::ordered_json manifest_to_json(const Manifest& manifest);
/// Throws ParseError naming the offending field.
Manifest manifest_from_json(const nlohmann::ordered_json& j);

std::string format_manifest(const Manifest& manifest);
Manifest parse_manifest(const std::string& text);

void write_manifest(const Manifest& manifest, const std::filesystem::path& path);

/// Parses the manifest and checks every referenced instance file against its
/// recorded hash; a mismatch or a missing file throws IntegrityError.
Manifest read_manifest(const std::filesystem::path& path);

/// Loads one referenced instance file (resolved against `dir`).
AnyInstance load_instance(const InstanceFile& ref, Family family,
                          const std::filesystem::path& dir);

/// Serialization of a single instance in the named format.
std::string format_instance(const AnyInstance& inst, const std::string& format);

/// Runs the family's verifier on the pair.
VerifyReport verify_any(const AnyInstance& inst, const AnyCertificate& cert,
                        const Tolerances& tol = {});

}  // namespace conicgen::io
