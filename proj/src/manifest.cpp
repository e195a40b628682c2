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

#include <filesystem>

#include "conicgen/error.hpp"
#include "conicgen/instance_io.hpp"

namespace conicgen::io {

namespace {

using json = nlohmann::ordered_json;
using Index = Eigen::Index;

json vec_json(const Vector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(hex_double(v(i)));
  return out;
}

json mat_json(const Matrix& a) {
  json data = json::array();
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) data.push_back(hex_double(a(i, j)));
  return json{{"rows", a.rows()}, {"cols", a.cols()}, {"data", data}};
}

json index_json(const std::vector<std::size_t>& v) { return json(v); }

// Field access with the dotted path carried along for error messages.
class Reader {
 public:
  Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {}

  bool has(const std::string& key) const { return j_.is_object() && j_.contains(key) && !j_.at(key).is_null(); }

  Reader at(const std::string& key) const {
    if (!j_.is_object()) fail("expected an object");
    if (!j_.contains(key)) throw ParseError("manifest: missing field '" + join(key) + "'");
    return Reader(j_.at(key), join(key));
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("manifest: field '" + path_ + "': " + what);
  }

  std::string str() const {
    if (!j_.is_string()) fail("expected a string");
    return j_.get<std::string>();
  }
  bool boolean() const {
    if (!j_.is_boolean()) fail("expected true or false");
    return j_.get<bool>();
  }
  std::size_t count() const {
    if (!j_.is_number_unsigned() && !(j_.is_number_integer() && j_.get<long long>() >= 0))
      fail("expected a nonnegative integer");
    return j_.get<std::size_t>();
  }
  double hex() const {
    if (!j_.is_string()) fail("expected a hex-float string");
    try {
      return parse_hex_double(j_.get<std::string>());
    } catch (const ParseError& e) {
      fail(e.what());
    }
  }
  Vector vec() const {
    if (!j_.is_array()) fail("expected an array");
    Vector v(static_cast<Index>(j_.size()));
    for (std::size_t i = 0; i < j_.size(); ++i)
      v(static_cast<Index>(i)) = Reader(j_[i], path_ + "[" + std::to_string(i) + "]").hex();
    return v;
  }
  Matrix mat() const {
    const std::size_t r = at("rows").count();
    const std::size_t c = at("cols").count();
    const Vector d = at("data").vec();
    if (static_cast<std::size_t>(d.size()) != r * c) at("data").fail("expected rows*cols entries");
    Matrix a(static_cast<Index>(r), static_cast<Index>(c));
    for (Index i = 0; i < a.rows(); ++i)
      for (Index j = 0; j < a.cols(); ++j) a(i, j) = d(i * a.cols() + j);
    return a;
  }
  std::vector<std::size_t> indices() const {
    if (!j_.is_array()) fail("expected an array");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < j_.size(); ++i)
      out.push_back(Reader(j_[i], path_ + "[" + std::to_string(i) + "]").count());
    return out;
  }
  std::size_t size() const {
    if (!j_.is_array()) fail("expected an array");
    return j_.size();
  }
  Reader operator[](std::size_t i) const { return Reader(j_[i], path_ + "[" + std::to_string(i) + "]"); }
  const json& raw() const { return j_; }

 private:
  std::string join(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }
  const json& j_;
  std::string path_;
};

json lo_solution_json(const LoSolution& s) {
  return json{{"x", vec_json(s.x)}, {"y", vec_json(s.y)}, {"s", vec_json(s.s)}};
}

LoSolution lo_solution_from(const Reader& r) {
  return LoSolution{r.at("x").vec(), r.at("y").vec(), r.at("s").vec()};
}

json sdo_solution_json(const SdoSolution& s) {
  return json{{"x", mat_json(s.x)}, {"y", vec_json(s.y)}, {"s", mat_json(s.s)}};
}

SdoSolution sdo_solution_from(const Reader& r) {
  return SdoSolution{r.at("x").mat(), r.at("y").vec(), r.at("s").mat()};
}

template <class Sol, class F>
void put_optional(json& j, const char* key, const std::optional<Sol>& v, F conv) {
  if (v) j[key] = conv(*v);
}

std::string status_name(PartitionStatus s) {
  switch (s) {
    case PartitionStatus::none: return "none";
    case PartitionStatus::declared_unverified: return "declared_unverified";
    case PartitionStatus::optimal: return "optimal";
  }
  return "none";
}

PartitionStatus parse_status(const Reader& r) {
  const std::string s = r.str();
  if (s == "none") return PartitionStatus::none;
  if (s == "declared_unverified") return PartitionStatus::declared_unverified;
  if (s == "optimal") return PartitionStatus::optimal;
  r.fail("unknown partition status '" + s + "'");
}

json certificate_json(const AnyCertificate& any) {
  json j = json::object();
  if (const auto* c = std::get_if<LoCertificate>(&any)) {
    put_optional(j, "interior", c->interior, lo_solution_json);
    put_optional(j, "optimal", c->optimal, lo_solution_json);
    j["basic"] = index_json(c->basic);
    j["nonbasic"] = index_json(c->nonbasic);
    if (c->mu) j["mu"] = hex_double(*c->mu);
    j["strictly_complementary"] = c->strictly_complementary;
    j["unique_basis"] = c->unique_basis;
    j["primal_scale"] = hex_double(c->primal_scale);
    j["dual_scale"] = hex_double(c->dual_scale);
  } else if (const auto* c = std::get_if<SdoCertificate>(&any)) {
    put_optional(j, "interior", c->interior, sdo_solution_json);
    put_optional(j, "optimal", c->optimal, sdo_solution_json);
    if (c->partition)
      j["partition"] = json{{"nb", c->partition->nb}, {"nt", c->partition->nt}, {"nn", c->partition->nn}};
    if (c->basis) j["basis"] = mat_json(*c->basis);
    if (c->gamma) j["gamma"] = vec_json(*c->gamma);
    j["partition_status"] = status_name(c->partition_status);
    j["maximally_complementary"] = c->maximally_complementary;
    j["strictly_complementary"] = c->strictly_complementary;
    if (c->mu) j["mu"] = hex_double(*c->mu);
    j["primal_scale"] = hex_double(c->primal_scale);
    j["dual_scale"] = hex_double(c->dual_scale);
  } else {
    const auto& k = std::get<SocoCertificate>(any);
    put_optional(j, "interior", k.interior, lo_solution_json);
    put_optional(j, "optimal", k.optimal, lo_solution_json);
    json labels = json::array();
    for (ConeLabel l : k.labels) labels.push_back(conicgen::to_string(l));
    j["labels"] = labels;
    json rs = json::array();
    for (const auto& [cone, r] : k.r_scalars) rs.push_back(json{{"cone", cone}, {"r", hex_double(r)}});
    j["r_scalars"] = rs;
    j["maximally_complementary"] = k.maximally_complementary;
    j["primal_scale"] = hex_double(k.primal_scale);
    j["dual_scale"] = hex_double(k.dual_scale);
  }
  return j;
}

AnyCertificate certificate_from(const Reader& r, Family family) {
  switch (family) {
    case Family::lo: {
      LoCertificate c;
      if (r.has("interior")) c.interior = lo_solution_from(r.at("interior"));
      if (r.has("optimal")) c.optimal = lo_solution_from(r.at("optimal"));
      c.basic = r.at("basic").indices();
      c.nonbasic = r.at("nonbasic").indices();
      if (r.has("mu")) c.mu = r.at("mu").hex();
      c.strictly_complementary = r.at("strictly_complementary").boolean();
      c.unique_basis = r.at("unique_basis").boolean();
      c.primal_scale = r.at("primal_scale").hex();
      c.dual_scale = r.at("dual_scale").hex();
      return c;
    }
    case Family::sdo: {
      SdoCertificate c;
      if (r.has("interior")) c.interior = sdo_solution_from(r.at("interior"));
      if (r.has("optimal")) c.optimal = sdo_solution_from(r.at("optimal"));
      if (r.has("partition")) {
        const Reader p = r.at("partition");
        c.partition = SdoPartition{p.at("nb").count(), p.at("nt").count(), p.at("nn").count()};
      }
      if (r.has("basis")) c.basis = r.at("basis").mat();
      if (r.has("gamma")) c.gamma = r.at("gamma").vec();
      c.partition_status = parse_status(r.at("partition_status"));
      c.maximally_complementary = r.at("maximally_complementary").boolean();
      c.strictly_complementary = r.at("strictly_complementary").boolean();
      if (r.has("mu")) c.mu = r.at("mu").hex();
      c.primal_scale = r.at("primal_scale").hex();
      c.dual_scale = r.at("dual_scale").hex();
      return c;
    }
    case Family::soco: {
      SocoCertificate c;
      if (r.has("interior")) c.interior = lo_solution_from(r.at("interior"));
      if (r.has("optimal")) c.optimal = lo_solution_from(r.at("optimal"));
      const Reader labels = r.at("labels");
      for (std::size_t i = 0; i < labels.size(); ++i) {
        try {
          c.labels.push_back(parse_cone_label(labels[i].str()));
        } catch (const ArgumentError& e) {
          labels[i].fail(e.what());
        }
      }
      const Reader rs = r.at("r_scalars");
      for (std::size_t i = 0; i < rs.size(); ++i) c.r_scalars[rs[i].at("cone").count()] = rs[i].at("r").hex();
      c.maximally_complementary = r.at("maximally_complementary").boolean();
      c.primal_scale = r.at("primal_scale").hex();
      c.dual_scale = r.at("dual_scale").hex();
      return c;
    }
  }
  throw ParseError("manifest: unknown family");
}

json report_json(const VerifyReport& r) {
  json checks = json::array();
  for (const CheckResult& c : r.checks)
    checks.push_back(json{{"name", c.name},
                          {"group", c.group},
                          {"passed", c.passed},
                          {"value", hex_double(c.value)},
                          {"threshold", hex_double(c.threshold)}});
  return json{{"passed", r.passed},
              {"primal_residual", hex_double(r.primal_residual)},
              {"dual_residual", hex_double(r.dual_residual)},
              {"complementarity_gap", hex_double(r.complementarity_gap)},
              {"tolerances",
               {{"residual", hex_double(r.tolerances.residual)},
                {"complementarity", hex_double(r.tolerances.complementarity)},
                {"psd", hex_double(r.tolerances.psd)},
                {"rank", hex_double(r.tolerances.rank)}}},
              {"checks", checks}};
}

VerifyReport report_from(const Reader& r) {
  VerifyReport out;
  out.primal_residual = r.at("primal_residual").hex();
  out.dual_residual = r.at("dual_residual").hex();
  out.complementarity_gap = r.at("complementarity_gap").hex();
  const Reader t = r.at("tolerances");
  out.tolerances = Tolerances{t.at("residual").hex(), t.at("complementarity").hex(), t.at("psd").hex(),
                              t.at("rank").hex()};
  const Reader checks = r.at("checks");
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const Reader c = checks[i];
    out.checks.push_back(CheckResult{c.at("name").str(), c.at("group").str(), c.at("passed").boolean(),
                                     c.at("value").hex(), c.at("threshold").hex()});
  }
  out.passed = r.at("passed").boolean();
  return out;
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::lo: return "lo";
    case Family::sdo: return "sdo";
    case Family::soco: return "soco";
  }
  return "lo";
}

Family parse_family(const std::string& text) {
  if (text == "lo") return Family::lo;
  if (text == "sdo") return Family::sdo;
  if (text == "soco") return Family::soco;
  throw ArgumentError("unknown family '" + text + "' (expected lo, sdo or soco)");
}

json manifest_to_json(const Manifest& m) {
  json files = json::array();
  for (const InstanceFile& f : m.instances)
    files.push_back(json{{"file", f.file}, {"format", f.format}, {"sha256", f.sha256}});
  json dims{{"m", m.m}, {"n", m.n}};
  if (!m.cone_dims.empty()) dims["cone_dims"] = m.cone_dims;
  return json{{"format_version", m.format_version},
              {"family", to_string(m.family)},
              {"mode", m.mode},
              {"dims", dims},
              {"controls", m.controls},
              {"instances", files},
              {"certificate", certificate_json(m.certificate)},
              {"report", report_json(m.report)}};
}

Manifest manifest_from_json(const json& j) {
  const Reader r(j, "");
  Manifest m;
  m.format_version = r.at("format_version").str();
  if (m.format_version != kManifestVersion)
    r.at("format_version").fail("unsupported version '" + m.format_version + "'");
  try {
    m.family = parse_family(r.at("family").str());
  } catch (const ArgumentError& e) {
    r.at("family").fail(e.what());
  }
  m.mode = r.at("mode").str();
  const Reader dims = r.at("dims");
  m.m = dims.at("m").count();
  m.n = dims.at("n").count();
  if (dims.has("cone_dims")) m.cone_dims = dims.at("cone_dims").indices();
  const Reader controls = r.at("controls");
  if (!controls.raw().is_object()) controls.fail("expected an object");
  m.controls = controls.raw();
  const Reader files = r.at("instances");
  for (std::size_t i = 0; i < files.size(); ++i) {
    const Reader f = files[i];
    m.instances.push_back(InstanceFile{f.at("file").str(), f.at("format").str(), f.at("sha256").str()});
  }
  m.certificate = certificate_from(r.at("certificate"), m.family);
  m.report = report_from(r.at("report"));
  return m;
}

std::string format_manifest(const Manifest& manifest) {
  return manifest_to_json(manifest).dump(1) + "\n";
}

Manifest parse_manifest(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("manifest: invalid JSON: ") + e.what());
  }
  return manifest_from_json(j);
}

void write_manifest(const Manifest& manifest, const std::filesystem::path& path) {
  write_text(path, format_manifest(manifest));
}

Manifest read_manifest(const std::filesystem::path& path) {
  Manifest m = parse_manifest(read_text(path));
  const std::filesystem::path dir = path.parent_path();
  for (const InstanceFile& f : m.instances) {
    const std::filesystem::path p = dir / f.file;
    std::string bytes;
    try {
      bytes = read_text(p);
    } catch (const IoError&) {
      throw IntegrityError("manifest references missing instance file '" + p.string() + "'");
    }
    const std::string digest = sha256_hex(bytes);
    if (digest != f.sha256)
      throw IntegrityError("hash mismatch for '" + p.string() + "': manifest " + f.sha256 +
                           ", file " + digest);
  }
  return m;
}

AnyInstance load_instance(const InstanceFile& ref, Family family, const std::filesystem::path& dir) {
  const std::string text = read_text(dir / ref.file);
  if (family == Family::lo && ref.format == "mps") return parse_lo_mps(text);
  if (family == Family::lo && ref.format == "cbf") {
    SocoInstance s = parse_soco_cbf(text);
    for (std::size_t d : s.cone_dims)
      if (d != 1) throw ParseError("CBF file for an LO instance contains a quadratic cone");
    return LinearInstance{s.a, s.b, s.c};
  }
  if (family == Family::sdo && ref.format == "sdpa") return parse_sdo_sdpa(text);
  if (family == Family::soco && ref.format == "cbf") return parse_soco_cbf(text);
  throw ParseError("manifest: format '" + ref.format + "' does not fit family " + to_string(family));
}

std::string format_instance(const AnyInstance& inst, const std::string& format) {
  if (const auto* lo = std::get_if<LinearInstance>(&inst)) {
    if (format == "mps") return format_lo_mps(*lo);
    if (format == "cbf")
      return format_soco_cbf(SocoInstance{std::vector<std::size_t>(static_cast<std::size_t>(lo->c.size()), 1),
                                          lo->a, lo->b, lo->c});
  } else if (const auto* sdo = std::get_if<SdoInstance>(&inst)) {
    if (format == "sdpa") return format_sdo_sdpa(*sdo);
  } else if (format == "cbf") {
    return format_soco_cbf(std::get<SocoInstance>(inst));
  }
  throw ArgumentError("format '" + format + "' is not available for this problem family");
}

VerifyReport verify_any(const AnyInstance& inst, const AnyCertificate& cert, const Tolerances& tol) {
  if (inst.index() != cert.index()) throw ArgumentError("instance and certificate families differ");
  switch (inst.index()) {
    case 0: return verify_lo(std::get<0>(inst), std::get<0>(cert), tol);
    case 1: return verify_sdo(std::get<1>(inst), std::get<1>(cert), tol);
    default: return verify_soco(std::get<2>(inst), std::get<2>(cert), tol);
  }
}

}  // namespace conicgen::io
