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

#include "conicgen/cli.hpp"

#include <omp.h>

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "conicgen/error.hpp"
#include "conicgen/instance_io.hpp"

namespace conicgen::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

struct Request {
  io::Family family = io::Family::lo;
  std::string mode;
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<std::size_t> cone_dims;
  std::optional<std::size_t> nb, nn;
  json partition;
  GenControls controls;
  std::optional<double> mu;
  std::string structure = "block";
  std::string variant = "general";
  bool diagonal = false;
  bool strict = true;
  std::size_t batch = 1;
  std::vector<std::string> formats;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',' || ch == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::size_t to_count(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size() || v < 0) throw std::invalid_argument(s);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw ArgumentError(what + ": expected a nonnegative integer, got '" + s + "'");
  }
}

template <class T>
T field(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ArgumentError(std::string("option '") + key + "' has the wrong type");
  }
}

std::string native_format(io::Family f) {
  switch (f) {
    case io::Family::lo: return "mps";
    case io::Family::sdo: return "sdpa";
    case io::Family::soco: return "cbf";
  }
  return "mps";
}

Request parse_request(const json& j) {
  Request r;
  r.family = io::parse_family(field<std::string>(j, "family"));
  if (!j.contains("mode")) throw ArgumentError("--mode is required");
  r.mode = field<std::string>(j, "mode");
  static const std::vector<std::string> modes{"interior", "optimal", "both", "maxcomp", "maxcomp-both"};
  if (std::find(modes.begin(), modes.end(), r.mode) == modes.end())
    throw ArgumentError("unknown mode '" + r.mode + "'");
  if (r.family == io::Family::lo && (r.mode == "maxcomp" || r.mode == "maxcomp-both"))
    throw ArgumentError("mode " + r.mode + " requires family sdo or soco");
  if (j.contains("m")) r.m = field<std::size_t>(j, "m");
  if (j.contains("n")) r.n = field<std::size_t>(j, "n");
  if (j.contains("cone_dims")) r.cone_dims = field<std::vector<std::size_t>>(j, "cone_dims");
  if (j.contains("nB")) r.nb = field<std::size_t>(j, "nB");
  if (j.contains("nN")) r.nn = field<std::size_t>(j, "nN");
  if (j.contains("partition")) r.partition = j.at("partition");
  if (j.contains("seed")) r.controls.seed = field<std::uint64_t>(j, "seed");
  if (j.contains("sparsity")) r.controls.density = field<double>(j, "sparsity");
  if (j.contains("cond")) r.controls.cond = field<double>(j, "cond");
  if (j.contains("norm_a")) r.controls.norm_a = field<double>(j, "norm_a");
  if (j.contains("norm_b")) r.controls.norm_b = field<double>(j, "norm_b");
  if (j.contains("norm_c")) r.controls.norm_c = field<double>(j, "norm_c");
  if (j.contains("margin")) r.controls.margin = field<double>(j, "margin");
  if (j.contains("mu")) r.mu = field<double>(j, "mu");
  if (j.contains("structure")) r.structure = field<std::string>(j, "structure");
  if (j.contains("variant")) r.variant = field<std::string>(j, "variant");
  if (j.contains("diagonal")) r.diagonal = field<bool>(j, "diagonal");
  if (j.contains("strict")) r.strict = field<bool>(j, "strict");
  if (j.contains("batch")) r.batch = field<std::size_t>(j, "batch");
  if (j.contains("formats")) r.formats = field<std::vector<std::string>>(j, "formats");

  if (r.batch < 1) throw ArgumentError("--batch must be at least 1");
  if (r.structure != "block" && r.structure != "eig") throw ArgumentError("--structure must be block or eig");
  if (r.mu && r.mode != "interior") throw ArgumentError("--mu applies to interior mode only");
  if (r.diagonal && !(r.family == io::Family::sdo && r.mode == "interior"))
    throw ArgumentError("--diagonal applies to sdo interior mode only");

  // Instance formats; the manifest is always written.
  std::vector<std::string> formats;
  for (const std::string& f : r.formats) {
    if (f == "manifest") continue;
    if (f != "mps" && f != "sdpa" && f != "cbf") throw ArgumentError("unknown format '" + f + "'");
    const bool fits = (r.family == io::Family::lo && (f == "mps" || f == "cbf")) ||
                      (r.family == io::Family::sdo && f == "sdpa") ||
                      (r.family == io::Family::soco && f == "cbf");
    if (!fits) throw ArgumentError("format " + f + " is not available for family " + io::to_string(r.family));
    if (std::find(formats.begin(), formats.end(), f) == formats.end()) formats.push_back(f);
  }
  if (formats.empty()) formats.push_back(native_format(r.family));
  r.formats = formats;
  return r;
}

std::vector<std::size_t> lo_basic(const Request& r) {
  if (!r.partition.is_null()) {
    std::vector<std::size_t> out;
    for (const json& e : r.partition) {
      if (!e.is_number_unsigned() || e.get<std::size_t>() == 0)
        throw ArgumentError("LO --partition lists 1-based basic column indices");
      out.push_back(e.get<std::size_t>() - 1);
    }
    return out;
  }
  const std::size_t nb = r.nb.value_or(r.m);
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < nb; ++j) out.push_back(j);
  return out;
}

std::vector<ConeLabel> soco_labels(const Request& r) {
  if (r.partition.is_null()) throw ArgumentError("soco mode " + r.mode + " needs --partition labels");
  std::vector<ConeLabel> out;
  for (const json& e : r.partition) {
    if (!e.is_string()) throw ArgumentError("soco --partition lists cone labels B,N,R,T1,T2,T3");
    out.push_back(parse_cone_label(e.get<std::string>()));
  }
  return out;
}

LoBothVariant lo_variant(const std::string& v) {
  if (v == "general") return LoBothVariant::general;
  if (v == "simplified") return LoBothVariant::simplified;
  if (v == "simplest") return LoBothVariant::simplest;
  throw ArgumentError("LO --variant must be general, simplified or simplest");
}

SdoBothVariant sdo_variant(const std::string& v) {
  if (v == "general") return SdoBothVariant::general;
  if (v == "special") return SdoBothVariant::special;
  throw ArgumentError("SDO --variant must be general or special");
}

struct Generated {
  io::AnyInstance instance;
  io::AnyCertificate certificate;
};

Generated generate(const Request& r, const GenControls& c) {
  const std::string& mode = r.mode;
  if (r.family == io::Family::lo) {
    LoGenerated g;
    if (mode == "interior") {
      LoInteriorOptions o;
      o.mu = r.mu;
      g = gen_lo_interior(r.m, r.n, c, o);
    } else if (mode == "optimal") {
      g = gen_lo_optimal(r.m, r.n, lo_basic(r), c, r.strict);
    } else {
      g = gen_lo_both(r.m, r.n, lo_basic(r), c, lo_variant(r.variant));
    }
    return {g.instance, g.certificate};
  }
  if (r.family == io::Family::sdo) {
    SdoGenerated g;
    const std::size_t nb = r.nb.value_or(0);
    const std::size_t nn = r.nn.value_or(0);
    if (mode != "interior" && (!r.nb || !r.nn)) throw ArgumentError("sdo mode " + mode + " needs --nB and --nN");
    const bool eig = r.structure == "eig";
    if (mode == "interior") {
      SdoInteriorOptions o;
      o.mu = r.mu;
      o.diagonal = r.diagonal;
      g = gen_sdo_interior(r.m, r.n, c, o);
    } else if (mode == "optimal") {
      g = eig ? gen_sdo_eig_optimal(r.m, r.n, nb, nn, c) : gen_sdo_block_optimal(r.m, r.n, nb, nn, c);
    } else if (mode == "both") {
      g = eig ? gen_sdo_eig_both(r.m, r.n, nb, nn, c, sdo_variant(r.variant))
              : gen_sdo_block_both(r.m, r.n, nb, nn, c, sdo_variant(r.variant));
    } else if (mode == "maxcomp") {
      g = nb == 0 ? gen_sdo_maxcomp_bempty(r.m, r.n, nn, c) : gen_sdo_maxcomp(r.m, r.n, nb, nn, c);
    } else {
      g = gen_sdo_maxcomp_both(r.m, r.n, nb, nn, c);
    }
    return {g.instance, g.certificate};
  }
  if (r.cone_dims.empty()) throw ArgumentError("soco needs --cone-dims");
  SocoGenerated g;
  if (mode == "interior") {
    g = gen_soco_interior(r.m, r.cone_dims, c);
  } else if (mode == "optimal") {
    g = gen_soco_optimal(r.m, r.cone_dims, soco_labels(r), c);
  } else if (mode == "maxcomp") {
    g = gen_soco_maxcomp(r.m, r.cone_dims, soco_labels(r), c);
  } else if (mode == "both") {
    g = gen_soco_both(r.m, r.cone_dims, soco_labels(r), c);
  } else {
    g = gen_soco_maxcomp_both(r.m, r.cone_dims, soco_labels(r), c);
  }
  return {g.instance, g.certificate};
}

void instance_dims(const io::AnyInstance& inst, io::Manifest& m) {
  if (const auto* lo = std::get_if<LinearInstance>(&inst)) {
    m.m = static_cast<std::size_t>(lo->a.rows());
    m.n = static_cast<std::size_t>(lo->a.cols());
  } else if (const auto* sdo = std::get_if<SdoInstance>(&inst)) {
    m.m = sdo->a.size();
    m.n = static_cast<std::size_t>(sdo->c.rows());
  } else {
    const auto& s = std::get<SocoInstance>(inst);
    m.m = static_cast<std::size_t>(s.a.rows());
    m.n = static_cast<std::size_t>(s.a.cols());
    m.cone_dims = s.cone_dims;
  }
}

std::string extension(const std::string& format) { return format == "sdpa" ? "dat-s" : format; }

std::string short_summary(const VerifyReport& r) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << "primal " << r.primal_residual << "  dual "
     << r.dual_residual << "  gap " << r.complementarity_gap;
  return os.str();
}

// Writes every (path, text) pair through temporary names; on any failure the
// files already written are removed again.
void commit_files(const std::vector<std::pair<fs::path, std::string>>& files) {
  std::vector<fs::path> temps, done;
  try {
    for (const auto& [path, text] : files) {
      fs::path tmp = path;
      tmp += ".tmp";
      io::write_text(tmp, text);
      temps.push_back(tmp);
    }
    for (std::size_t i = 0; i < files.size(); ++i) {
      fs::rename(temps[i], files[i].first);
      done.push_back(files[i].first);
    }
  } catch (...) {
    std::error_code ec;
    for (const fs::path& p : temps) fs::remove(p, ec);
    for (const fs::path& p : done) fs::remove(p, ec);
    throw;
  }
}

int cmd_gen(const json& request_json, const std::string& out_dir, std::ostream& out, std::ostream& err) {
  const Request req = parse_request(request_json);

  const std::size_t count = req.batch;
  std::vector<std::optional<Generated>> results(count);
  std::vector<VerifyReport> reports(count);
  std::vector<std::string> errors(count);
  std::vector<int> usage(count, 0);
  // Instances are independent; stream id k keeps every one reproducible.
#pragma omp parallel for schedule(dynamic) if (count > 1)
  for (std::size_t k = 0; k < count; ++k) {
    GenControls c = req.controls;
    c.stream_id = static_cast<std::uint32_t>(k);
    try {
      results[k] = generate(req, c);
      reports[k] = io::verify_any(results[k]->instance, results[k]->certificate);
    } catch (const ArgumentError& e) {
      errors[k] = e.what();
      usage[k] = 1;
    } catch (const std::exception& e) {
      errors[k] = e.what();
    }
  }

  bool any_usage = false, all_ok = true;
  for (std::size_t k = 0; k < count; ++k) {
    if (!errors[k].empty()) {
      err << "instance " << k << ": " << errors[k] << "\n";
      any_usage = any_usage || usage[k];
      all_ok = false;
    } else if (!reports[k].passed) {
      err << "instance " << k << ": verification failed:";
      for (const std::string& name : reports[k].failed()) err << " " << name;
      err << "\n";
      all_ok = false;
    }
  }
  if (any_usage) return kExitUsage;
  if (!all_ok) {
    err << "nothing written\n";
    return kExitFailure;
  }

  const fs::path dir(out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    err << "cannot create output directory '" << out_dir << "': " << ec.message() << "\n";
    return kExitFailure;
  }

  json controls = request_json;
  controls["formats"] = req.formats;
  std::vector<std::pair<fs::path, std::string>> files;
  for (std::size_t k = 0; k < count; ++k) {
    const std::string suffix = count > 1 ? "_" + std::to_string(k) : "";
    io::Manifest man;
    man.family = req.family;
    man.mode = req.mode;
    instance_dims(results[k]->instance, man);
    man.controls = controls;
    man.controls["stream_id"] = k;
    for (const std::string& f : req.formats) {
      const std::string name = "instance" + suffix + "." + extension(f);
      std::string text = io::format_instance(results[k]->instance, f);
      man.instances.push_back(io::InstanceFile{name, f, io::sha256_hex(text)});
      files.emplace_back(dir / name, std::move(text));
    }
    man.certificate = results[k]->certificate;
    man.report = reports[k];
    files.emplace_back(dir / ("manifest" + suffix + ".json"), io::format_manifest(man));
  }
  commit_files(files);
  for (std::size_t k = 0; k < count; ++k)
    out << "instance " << k << ": verified  " << short_summary(reports[k]) << "\n";
  out << "wrote " << files.size() << " files to " << dir.string() << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& manifest_path, bool verbose, std::ostream& out, std::ostream& err) {
  const fs::path path(manifest_path);
  const io::Manifest man = io::read_manifest(path);
  if (man.instances.empty()) {
    err << "manifest lists no instance file\n";
    return kExitFailure;
  }
  bool ok = true;
  for (const io::InstanceFile& ref : man.instances) {
    const io::AnyInstance inst = io::load_instance(ref, man.family, path.parent_path());
    const VerifyReport r = io::verify_any(inst, man.certificate, man.report.tolerances);
    if (verbose) out << r.summary();
    if (r.passed) {
      out << ref.file << ": verified  " << short_summary(r) << "\n";
    } else {
      err << ref.file << ": verification failed:";
      for (const std::string& name : r.failed()) err << " " << name;
      err << "\n";
      ok = false;
    }
  }
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conic optimization test instances with known solutions", "conicgen"};
  app.require_subcommand(1);

  CLI::App* gen = app.add_subcommand("gen", "generate instances, verify them and write them out");
  std::string family, mode, cone_dims, partition, config, structure, variant, out_dir, formats;
  std::size_t m = 0, n = 0, nb = 0, nn = 0, batch = 1;
  std::uint64_t seed = 0;
  double mu = 0, sparsity = 0, cond = 0, norm_a = 0, norm_b = 0, norm_c = 0, margin = 0;
  bool diagonal = false, nonstrict = false;
  gen->add_option("family", family, "lo, sdo or soco")->check(CLI::IsMember({"lo", "sdo", "soco"}));
  auto* o_mode = gen->add_option("--mode", mode, "interior, optimal, both, maxcomp or maxcomp-both")
                     ->check(CLI::IsMember({"interior", "optimal", "both", "maxcomp", "maxcomp-both"}));
  auto* o_m = gen->add_option("--m", m, "number of constraints");
  auto* o_n = gen->add_option("--n", n, "variables (lo) or matrix order (sdo)");
  auto* o_cone = gen->add_option("--cone-dims", cone_dims, "comma separated cone dimensions (soco)");
  auto* o_nb = gen->add_option("--nB", nb, "size of B");
  auto* o_nn = gen->add_option("--nN", nn, "size of N");
  auto* o_part = gen->add_option("--partition", partition,
                                 "1-based basic columns (lo) or cone labels B,N,R,T1,T2,T3 (soco)");
  auto* o_seed = gen->add_option("--seed", seed, "random seed");
  auto* o_mu = gen->add_option("--mu", mu, "central path parameter (interior mode)");
  auto* o_sp = gen->add_option("--sparsity", sparsity, "nonzero fraction of the constraint data");
  auto* o_cond = gen->add_option("--cond", cond, "condition number of A (lo, soco)");
  auto* o_na = gen->add_option("--norm-a", norm_a, "Frobenius norm of the constraint data");
  auto* o_nbn = gen->add_option("--norm-b", norm_b, "norm of b");
  auto* o_nc = gen->add_option("--norm-c", norm_c, "norm of c or C");
  auto* o_margin = gen->add_option("--margin", margin, "floor of strict-inequality margins");
  auto* o_struct = gen->add_option("--structure", structure, "block or eig (sdo)");
  auto* o_var = gen->add_option("--variant", variant, "general, simplified, simplest or special");
  auto* o_diag = gen->add_flag("--diagonal", diagonal, "diagonal interior pair (sdo interior)");
  auto* o_nonstrict = gen->add_flag("--non-strict", nonstrict, "allow zeros inside the declared supports (lo optimal)");
  auto* o_batch = gen->add_option("--batch", batch, "number of instances");
  auto* o_out = gen->add_option("--out", out_dir, "output directory (default $CONICGEN_OUT or .)");
  auto* o_fmt = gen->add_option("--format", formats, "comma separated: mps, sdpa, cbf, manifest");
  gen->add_option("--config", config, "JSON file with the same keys as a manifest's controls")
      ->check(CLI::ExistingFile);

  CLI::App* ver = app.add_subcommand("verify", "re-check a manifest and its instance files");
  std::string manifest_path;
  bool verbose = false;
  ver->add_option("manifest", manifest_path, "manifest.json")->required();
  ver->add_flag("-v,--verbose", verbose, "print every check");

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (*ver) return cmd_verify(manifest_path, verbose, out, err);

    json req = json::object();
    if (!config.empty()) {
      try {
        req = json::parse(io::read_text(config));
      } catch (const json::parse_error& e) {
        err << "config: invalid JSON: " << e.what() << "\n";
        return kExitUsage;
      }
      if (!req.is_object()) {
        err << "config: expected a JSON object\n";
        return kExitUsage;
      }
    }
    if (!family.empty()) req["family"] = family;
    if (!req.contains("family")) throw ArgumentError("family (lo, sdo or soco) is required");
    if (*o_mode) req["mode"] = mode;
    if (*o_m) req["m"] = m;
    if (*o_n) req["n"] = n;
    if (*o_cone) {
      json dims = json::array();
      for (const std::string& t : split_list(cone_dims)) dims.push_back(to_count(t, "--cone-dims"));
      req["cone_dims"] = dims;
    }
    if (*o_nb) req["nB"] = nb;
    if (*o_nn) req["nN"] = nn;
    if (*o_part) {
      json p = json::array();
      const bool numeric = req.at("family") == "lo";
      for (const std::string& t : split_list(partition)) {
        if (numeric) {
          p.push_back(to_count(t, "--partition"));
        } else {
          p.push_back(t);
        }
      }
      req["partition"] = p;
    }
    if (*o_seed) req["seed"] = seed;
    if (*o_mu) req["mu"] = mu;
    if (*o_sp) req["sparsity"] = sparsity;
    if (*o_cond) req["cond"] = cond;
    if (*o_na) req["norm_a"] = norm_a;
    if (*o_nbn) req["norm_b"] = norm_b;
    if (*o_nc) req["norm_c"] = norm_c;
    if (*o_margin) req["margin"] = margin;
    if (*o_struct) req["structure"] = structure;
    if (*o_var) req["variant"] = variant;
    if (*o_diag) req["diagonal"] = diagonal;
    if (*o_nonstrict) req["strict"] = !nonstrict;
    if (*o_batch) req["batch"] = batch;
    if (*o_fmt) req["formats"] = split_list(formats);
    std::string dir = ".";
    if (const char* env = std::getenv("CONICGEN_OUT"); env && *env) dir = env;
    if (*o_out) dir = out_dir;
    return cmd_gen(req, dir, out, err);
  } catch (const ArgumentError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IntegrityError& e) {
    err << "integrity error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace conicgen::cli
