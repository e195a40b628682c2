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

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <system_error>

#include "conicgen/error.hpp"
#include "conicgen/instance_io.hpp"

namespace conicgen::io {

namespace {

using Index = Eigen::Index;

std::string num(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

double parse_num(const std::string& tok, const std::string& where) {
  double v = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (first != last && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last)
    throw ParseError(where + ": expected a number, got '" + tok + "'");
  return v;
}

std::size_t parse_count(const std::string& tok, const std::string& where) {
  std::size_t v = 0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
    throw ParseError(where + ": expected a nonnegative integer, got '" + tok + "'");
  return v;
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::size_t index_after(const std::string& name, char prefix, const std::string& where) {
  if (name.size() < 2 || name[0] != prefix)
    throw ParseError(where + ": unexpected name '" + name + "'");
  const std::size_t k = parse_count(name.substr(1), where);
  if (k == 0) throw ParseError(where + ": names are 1-based, got '" + name + "'");
  return k - 1;
}

// Line reader that skips blank lines and tracks the line number for errors.
class Lines {
 public:
  explicit Lines(const std::string& text, std::string what) : is_(text), what_(std::move(what)) {}
  bool next(std::string& line) {
    while (std::getline(is_, line)) {
      ++number_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  }
  std::string where() const { return what_ + " line " + std::to_string(number_); }
  std::string require_next() {
    std::string line;
    if (!next(line)) throw ParseError(what_ + ": unexpected end of file");
    return line;
  }

 private:
  std::istringstream is_;
  std::string what_;
  std::size_t number_ = 0;
};

}  // namespace

std::string format_lo_mps(const LinearInstance& inst) {
  const Index m = inst.a.rows();
  const Index n = inst.a.cols();
  detail::require(inst.b.size() == m && inst.c.size() == n, "format_lo_mps: shape mismatch");
  std::ostringstream os;
  os << "NAME          CONICGEN\nROWS\n N  COST\n";
  for (Index i = 0; i < m; ++i) os << " E  R" << i + 1 << "\n";
  os << "COLUMNS\n";
  for (Index j = 0; j < n; ++j) {
    os << "    X" << j + 1 << "  COST  " << num(inst.c(j)) << "\n";
    for (Index i = 0; i < m; ++i)
      if (inst.a(i, j) != 0.0) os << "    X" << j + 1 << "  R" << i + 1 << "  " << num(inst.a(i, j)) << "\n";
  }
  os << "RHS\n";
  for (Index i = 0; i < m; ++i)
    if (inst.b(i) != 0.0) os << "    RHS  R" << i + 1 << "  " << num(inst.b(i)) << "\n";
  os << "BOUNDS\n";
  for (Index j = 0; j < n; ++j) os << " PL BND  X" << j + 1 << "\n";
  os << "ENDATA\n";
  return os.str();
}

LinearInstance parse_lo_mps(const std::string& text) {
  Lines lines(text, "MPS");
  std::string line;
  std::string section;
  std::size_t rows = 0;
  std::map<std::size_t, std::map<std::size_t, double>> cols;
  std::map<std::size_t, double> cost, rhs;
  std::size_t ncols = 0;
  bool ended = false;
  while (lines.next(line)) {
    const std::vector<std::string> t = split(line);
    if (line[0] != ' ' && line[0] != '\t') {
      section = t[0];
      if (section == "ENDATA") {
        ended = true;
        break;
      }
      if (section != "NAME" && section != "ROWS" && section != "COLUMNS" && section != "RHS" &&
          section != "BOUNDS")
        throw ParseError(lines.where() + ": unknown section '" + section + "'");
      continue;
    }
    if (section == "ROWS") {
      if (t.size() != 2) throw ParseError(lines.where() + ": malformed row");
      if (t[0] == "N") {
        if (t[1] != "COST") throw ParseError(lines.where() + ": objective row must be COST");
      } else if (t[0] == "E") {
        const std::size_t i = index_after(t[1], 'R', lines.where());
        if (i != rows) throw ParseError(lines.where() + ": rows must be listed in order");
        ++rows;
      } else {
        throw ParseError(lines.where() + ": only E rows are supported");
      }
    } else if (section == "COLUMNS") {
      if (t.size() != 3 && t.size() != 5) throw ParseError(lines.where() + ": malformed column entry");
      const std::size_t j = index_after(t[0], 'X', lines.where());
      ncols = std::max(ncols, j + 1);
      for (std::size_t k = 1; k + 1 < t.size(); k += 2) {
        const double v = parse_num(t[k + 1], lines.where());
        if (t[k] == "COST") {
          cost[j] = v;
        } else {
          const std::size_t i = index_after(t[k], 'R', lines.where());
          if (i >= rows) throw ParseError(lines.where() + ": unknown row '" + t[k] + "'");
          cols[j][i] = v;
        }
      }
    } else if (section == "RHS") {
      if (t.size() != 3 && t.size() != 5) throw ParseError(lines.where() + ": malformed RHS entry");
      for (std::size_t k = 1; k + 1 < t.size(); k += 2) {
        const std::size_t i = index_after(t[k], 'R', lines.where());
        if (i >= rows) throw ParseError(lines.where() + ": unknown row '" + t[k] + "'");
        rhs[i] = parse_num(t[k + 1], lines.where());
      }
    } else if (section == "BOUNDS") {
      if (t.size() < 3 || t[0] != "PL") throw ParseError(lines.where() + ": only PL bounds are supported");
      if (index_after(t[2], 'X', lines.where()) >= ncols)
        throw ParseError(lines.where() + ": bound on unknown column");
    } else if (section != "NAME") {
      throw ParseError(lines.where() + ": data outside a section");
    }
  }
  if (!ended) throw ParseError("MPS: missing ENDATA");
  LinearInstance inst;
  inst.a = Matrix::Zero(static_cast<Index>(rows), static_cast<Index>(ncols));
  inst.b = Vector::Zero(static_cast<Index>(rows));
  inst.c = Vector::Zero(static_cast<Index>(ncols));
  for (const auto& [j, entries] : cols)
    for (const auto& [i, v] : entries) inst.a(static_cast<Index>(i), static_cast<Index>(j)) = v;
  for (const auto& [j, v] : cost) inst.c(static_cast<Index>(j)) = v;
  for (const auto& [i, v] : rhs) inst.b(static_cast<Index>(i)) = v;
  return inst;
}

std::string format_sdo_sdpa(const SdoInstance& inst) {
  const std::size_t m = inst.a.size();
  const Index n = inst.c.rows();
  detail::require(inst.b.size() == static_cast<Index>(m), "format_sdo_sdpa: shape mismatch");
  std::ostringstream os;
  os << "\"conicgen: min C.X s.t. A_i.X = b_i, X psd; F0 = -C\"\n";
  os << m << "\n1\n" << n << "\n";
  for (std::size_t i = 0; i < m; ++i) os << (i ? " " : "") << num(inst.b(static_cast<Index>(i)));
  os << "\n";
  auto entries = [&](std::size_t matno, const Matrix& a, double sign) {
    detail::require(a.rows() == n && a.cols() == n, "format_sdo_sdpa: matrix order mismatch");
    for (Index i = 0; i < n; ++i)
      for (Index j = i; j < n; ++j)
        if (a(i, j) != 0.0)
          os << matno << " 1 " << i + 1 << " " << j + 1 << " " << num(sign * a(i, j)) << "\n";
  };
  entries(0, inst.c, -1.0);
  for (std::size_t k = 0; k < m; ++k) entries(k + 1, inst.a[k], 1.0);
  return os.str();
}

SdoInstance parse_sdo_sdpa(const std::string& text) {
  Lines lines(text, "SDPA");
  std::string line = lines.require_next();
  while (line[line.find_first_not_of(" \t")] == '"' || line[line.find_first_not_of(" \t")] == '*')
    line = lines.require_next();
  const std::size_t m = parse_count(split(line).at(0), lines.where());
  if (parse_count(split(lines.require_next()).at(0), lines.where()) != 1)
    throw ParseError(lines.where() + ": only single-block files are supported");
  const std::vector<std::string> sizes = split(lines.require_next());
  const std::size_t n = parse_count(sizes.at(0), lines.where());
  if (n == 0) throw ParseError(lines.where() + ": block size must be positive");
  SdoInstance inst;
  inst.b.resize(static_cast<Index>(m));
  std::vector<std::string> bt;
  while (bt.size() < m) {
    for (const std::string& tok : split(lines.require_next())) bt.push_back(tok);
  }
  if (bt.size() != m) throw ParseError(lines.where() + ": expected " + std::to_string(m) + " entries of b");
  for (std::size_t i = 0; i < m; ++i) inst.b(static_cast<Index>(i)) = parse_num(bt[i], lines.where());
  const Index k = static_cast<Index>(n);
  inst.c = Matrix::Zero(k, k);
  inst.a.assign(m, Matrix::Zero(k, k));
  while (lines.next(line)) {
    const std::vector<std::string> t = split(line);
    if (t.size() != 5) throw ParseError(lines.where() + ": expected 'matno block i j value'");
    const std::size_t matno = parse_count(t[0], lines.where());
    const std::size_t i = parse_count(t[2], lines.where());
    const std::size_t j = parse_count(t[3], lines.where());
    if (matno > m || t[1] != "1" || i < 1 || j < i || j > n)
      throw ParseError(lines.where() + ": entry out of range");
    const double v = parse_num(t[4], lines.where());
    Matrix& target = matno == 0 ? inst.c : inst.a[matno - 1];
    const double val = matno == 0 ? -v : v;
    target(static_cast<Index>(i - 1), static_cast<Index>(j - 1)) = val;
    target(static_cast<Index>(j - 1), static_cast<Index>(i - 1)) = val;
  }
  return inst;
}

std::string format_soco_cbf(const SocoInstance& inst) {
  const Index m = inst.a.rows();
  const Index n = inst.a.cols();
  detail::require(inst.b.size() == m && inst.c.size() == n, "format_soco_cbf: shape mismatch");
  std::size_t total = 0;
  std::vector<std::pair<std::string, std::size_t>> domains;
  for (std::size_t d : inst.cone_dims) {
    detail::require(d >= 1, "format_soco_cbf: cone dimensions must be positive");
    total += d;
    if (d == 1 && !domains.empty() && domains.back().first == "L+") {
      ++domains.back().second;
    } else {
      domains.emplace_back(d == 1 ? "L+" : "Q", d);
    }
  }
  detail::require(static_cast<Index>(total) == n, "format_soco_cbf: cone dimensions do not sum to n");
  std::ostringstream os;
  os << "VER\n2\n\nOBJSENSE\nMIN\n\nVAR\n" << n << " " << domains.size() << "\n";
  for (const auto& [kind, d] : domains) os << kind << " " << d << "\n";
  os << "\nCON\n" << m << " " << (m > 0 ? 1 : 0) << "\n";
  if (m > 0) os << "L= " << m << "\n";
  std::vector<std::string> obj;
  for (Index j = 0; j < n; ++j)
    if (inst.c(j) != 0.0) obj.push_back(std::to_string(j) + " " + num(inst.c(j)));
  if (!obj.empty()) {
    os << "\nOBJACOORD\n" << obj.size() << "\n";
    for (const std::string& s : obj) os << s << "\n";
  }
  std::vector<std::string> acoord;
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j)
      if (inst.a(i, j) != 0.0)
        acoord.push_back(std::to_string(i) + " " + std::to_string(j) + " " + num(inst.a(i, j)));
  if (!acoord.empty()) {
    os << "\nACOORD\n" << acoord.size() << "\n";
    for (const std::string& s : acoord) os << s << "\n";
  }
  std::vector<std::string> bcoord;
  for (Index i = 0; i < m; ++i)
    if (inst.b(i) != 0.0) bcoord.push_back(std::to_string(i) + " " + num(-inst.b(i)));
  if (!bcoord.empty()) {
    os << "\nBCOORD\n" << bcoord.size() << "\n";
    for (const std::string& s : bcoord) os << s << "\n";
  }
  return os.str();
}

SocoInstance parse_soco_cbf(const std::string& text) {
  Lines lines(text, "CBF");
  std::string line;
  SocoInstance inst;
  std::size_t n = 0, m = 0;
  bool have_var = false, have_con = false;
  std::vector<std::tuple<std::size_t, std::size_t, double>> a;
  std::vector<std::pair<std::size_t, double>> c, b;
  auto count_line = [&]() { return parse_count(split(lines.require_next()).at(0), lines.where()); };
  while (lines.next(line)) {
    const std::vector<std::string> t = split(line);
    if (t[0][0] == '#') continue;
    const std::string key = t[0];
    if (key == "VER") {
      const std::size_t v = count_line();
      if (v < 1 || v > 3) throw ParseError(lines.where() + ": unsupported CBF version");
    } else if (key == "OBJSENSE") {
      if (split(lines.require_next()).at(0) != "MIN") throw ParseError(lines.where() + ": only MIN is supported");
    } else if (key == "VAR") {
      const std::vector<std::string> h = split(lines.require_next());
      if (h.size() != 2) throw ParseError(lines.where() + ": expected 'n k'");
      n = parse_count(h[0], lines.where());
      const std::size_t k = parse_count(h[1], lines.where());
      std::size_t total = 0;
      for (std::size_t d = 0; d < k; ++d) {
        const std::vector<std::string> dom = split(lines.require_next());
        if (dom.size() != 2) throw ParseError(lines.where() + ": expected 'cone size'");
        const std::size_t sz = parse_count(dom[1], lines.where());
        if (dom[0] == "L+") {
          for (std::size_t q = 0; q < sz; ++q) inst.cone_dims.push_back(1);
        } else if (dom[0] == "Q") {
          inst.cone_dims.push_back(sz);
        } else {
          throw ParseError(lines.where() + ": unsupported variable domain '" + dom[0] + "'");
        }
        total += sz;
      }
      if (total != n) throw ParseError(lines.where() + ": domain sizes do not sum to n");
      have_var = true;
    } else if (key == "CON") {
      const std::vector<std::string> h = split(lines.require_next());
      if (h.size() != 2) throw ParseError(lines.where() + ": expected 'm k'");
      m = parse_count(h[0], lines.where());
      const std::size_t k = parse_count(h[1], lines.where());
      std::size_t total = 0;
      for (std::size_t d = 0; d < k; ++d) {
        const std::vector<std::string> dom = split(lines.require_next());
        if (dom.size() != 2 || dom[0] != "L=") throw ParseError(lines.where() + ": only L= constraints are supported");
        total += parse_count(dom[1], lines.where());
      }
      if (total != m) throw ParseError(lines.where() + ": constraint sizes do not sum to m");
      have_con = true;
    } else if (key == "OBJACOORD" || key == "BCOORD") {
      const std::size_t cnt = count_line();
      for (std::size_t q = 0; q < cnt; ++q) {
        const std::vector<std::string> e = split(lines.require_next());
        if (e.size() != 2) throw ParseError(lines.where() + ": expected 'index value'");
        auto& dst = key == "OBJACOORD" ? c : b;
        dst.emplace_back(parse_count(e[0], lines.where()), parse_num(e[1], lines.where()));
      }
    } else if (key == "ACOORD") {
      const std::size_t cnt = count_line();
      for (std::size_t q = 0; q < cnt; ++q) {
        const std::vector<std::string> e = split(lines.require_next());
        if (e.size() != 3) throw ParseError(lines.where() + ": expected 'row col value'");
        a.emplace_back(parse_count(e[0], lines.where()), parse_count(e[1], lines.where()),
                       parse_num(e[2], lines.where()));
      }
    } else {
      throw ParseError(lines.where() + ": unsupported keyword '" + key + "'");
    }
  }
  if (!have_var) throw ParseError("CBF: missing VAR section");
  if (!have_con) throw ParseError("CBF: missing CON section");
  const Index km = static_cast<Index>(m), kn = static_cast<Index>(n);
  inst.a = Matrix::Zero(km, kn);
  inst.b = Vector::Zero(km);
  inst.c = Vector::Zero(kn);
  for (const auto& [i, j, v] : a) {
    if (i >= m || j >= n) throw ParseError("CBF: ACOORD entry out of range");
    inst.a(static_cast<Index>(i), static_cast<Index>(j)) = v;
  }
  for (const auto& [j, v] : c) {
    if (j >= n) throw ParseError("CBF: OBJACOORD entry out of range");
    inst.c(static_cast<Index>(j)) = v;
  }
  for (const auto& [i, v] : b) {
    if (i >= m) throw ParseError("CBF: BCOORD entry out of range");
    inst.b(static_cast<Index>(i)) = -v;
  }
  return inst;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open '" + path.string() + "' for writing");
  os.write(text.data(), static_cast<std::streamsize>(text.size()));
  os.close();
  if (!os) throw IoError("failed writing '" + path.string() + "'");
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

void write_lo_mps(const LinearInstance& inst, const std::filesystem::path& path) {
  write_text(path, format_lo_mps(inst));
}
LinearInstance read_lo_mps(const std::filesystem::path& path) { return parse_lo_mps(read_text(path)); }
void write_sdo_sdpa(const SdoInstance& inst, const std::filesystem::path& path) {
  write_text(path, format_sdo_sdpa(inst));
}
SdoInstance read_sdo_sdpa(const std::filesystem::path& path) { return parse_sdo_sdpa(read_text(path)); }
void write_soco_cbf(const SocoInstance& inst, const std::filesystem::path& path) {
  write_text(path, format_soco_cbf(inst));
}
SocoInstance read_soco_cbf(const std::filesystem::path& path) { return parse_soco_cbf(read_text(path)); }

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw IoError("SHA-256 computation failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xf]);
  }
  return out;
}

std::string hex_double(double v) {
  char buf[64];
  const bool neg = std::signbit(v);
  const double mag = neg ? -v : v;
  const auto res = std::to_chars(buf, buf + sizeof buf, mag, std::chars_format::hex);
  std::string body(buf, res.ptr);
  if (std::isfinite(v)) body = "0x" + body;
  return neg ? "-" + body : body;
}

double parse_hex_double(const std::string& text) {
  std::string_view s = text;
  bool neg = false;
  if (!s.empty() && s[0] == '-') {
    neg = true;
    s.remove_prefix(1);
  }
  if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s.remove_prefix(2);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v, std::chars_format::hex);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ParseError("not a hex float: '" + text + "'");
  return neg ? -v : v;
}

}  // namespace conicgen::io
