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

#include "conicgen/soco_gen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "conicgen/error.hpp"
#include "conicgen/kernels.hpp"

namespace conicgen {

namespace {

using Index = Eigen::Index;

Index idx(std::size_t v) { return static_cast<Index>(v); }

std::size_t total_dim(const std::vector<std::size_t>& dims) {
  std::size_t n = 0;
  for (std::size_t d : dims) {
    detail::require(d >= 1, "SOCO generator: cone dimensions must be positive");
    n += d;
  }
  return n;
}

void check_dims(std::size_t m, const std::vector<std::size_t>& dims) {
  detail::require(!dims.empty(), "SOCO generator: at least one cone required");
  const std::size_t n = total_dim(dims);
  detail::require(m >= 1 && m < n, "SOCO generator: require 1 <= m < n");
}

void check_labels(const std::vector<std::size_t>& dims, const std::vector<ConeLabel>& labels) {
  detail::require(labels.size() == dims.size(), "SOCO generator: one label per cone required");
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const ConeLabel l = labels[i];
    if (l == ConeLabel::R || l == ConeLabel::T2 || l == ConeLabel::T3) {
      detail::require(dims[i] >= 2, "SOCO generator: cone " + std::to_string(i) + " labeled " +
                                        to_string(l) + " needs dimension >= 2");
    }
  }
}

// Strictly interior block with margin >= 0.1 * ||block||_inf.
Vector interior_block(std::size_t d, RngStream& stream) {
  Vector v(idx(d));
  const double u = stream.uniform(randkit::kPositiveLo, randkit::kPositiveHi);
  for (Index i = 1; i < v.size(); ++i) v(i) = stream.uniform(randkit::kSignedLo, randkit::kSignedHi);
  const double tail = d > 1 ? v.tail(v.size() - 1).norm() : 0.0;
  v(0) = std::max(u, tail / 9.0);
  return interiorize(v);
}

// Nonzero boundary block (||tail||, tail).
Vector boundary_block(std::size_t d, RngStream& stream) {
  Vector v(idx(d));
  for (Index i = 1; i < v.size(); ++i) v(i) = stream.uniform(randkit::kSignedLo, randkit::kSignedHi);
  double t = v.tail(v.size() - 1).norm();
  if (t == 0.0) {
    v(1) = 1.0;
    t = 1.0;
  }
  v(0) = t;
  return v;
}

Matrix constraint_matrix(std::size_t m, std::size_t n, const GenControls& controls,
                         RngStream& stream) {
  return randkit::gen_matrix(constraint_recipe(m, n, controls), stream);
}

double norm_factor(const std::optional<double>& target, double norm, const char* what) {
  if (!target) return 1.0;
  detail::require(*target > 0.0, std::string("SOCO generator: ") + what + " target must be positive");
  if (norm == 0.0) {
    throw GenerationError(std::string("SOCO generator: ") + what +
                          " is identically zero, norm target unreachable");
  }
  return *target / norm;
}

SocoInstance assemble(std::vector<std::size_t> dims, Matrix a, SocoSolution& sol,
                      SocoCertificate& cert, const GenControls& controls) {
  cert.primal_scale = norm_factor(controls.norm_b, kernels::gemv(a, sol.x).norm(), "b");
  sol.x *= cert.primal_scale;
  cert.dual_scale = norm_factor(controls.norm_c, (kernels::gemv_t(a, sol.y) + sol.s).norm(), "c");
  sol.y *= cert.dual_scale;
  sol.s *= cert.dual_scale;
  for (auto& [cone, r] : cert.r_scalars) r *= cert.dual_scale / cert.primal_scale;
  SocoInstance inst;
  inst.cone_dims = std::move(dims);
  inst.b = kernels::gemv(a, sol.x);
  inst.c = kernels::gemv_t(a, sol.y) + sol.s;
  inst.a = std::move(a);
  return inst;
}

// Optimal blocks for every label; fills r_scalars.
void optimal_blocks(const std::vector<std::size_t>& dims, const std::vector<ConeLabel>& labels,
                    SocoSolution& sol, SocoCertificate& cert, RngStream& stream) {
  const std::vector<std::size_t> off = cone_offsets(dims);
  sol.x = Vector::Zero(idx(off.back()));
  sol.s = Vector::Zero(idx(off.back()));
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const Index o = idx(off[i]);
    const Index d = idx(dims[i]);
    switch (labels[i]) {
      case ConeLabel::B:
        sol.x.segment(o, d) = interior_block(dims[i], stream);
        break;
      case ConeLabel::N:
        sol.s.segment(o, d) = interior_block(dims[i], stream);
        break;
      case ConeLabel::T1:
        break;
      case ConeLabel::T2:
        sol.x.segment(o, d) = boundary_block(dims[i], stream);
        break;
      case ConeLabel::T3:
        sol.s.segment(o, d) = boundary_block(dims[i], stream);
        break;
      case ConeLabel::R: {
        const Vector v = randkit::signed_vector(dims[i] - 1, stream);
        const double r = stream.uniform(0.5, 1.5);
        auto [x, s] = r_cone_pair(v.norm() > 0.0 ? v : Vector::Ones(d - 1), r);
        sol.x.segment(o, d) = x;
        sol.s.segment(o, d) = s;
        cert.r_scalars[i] = r;
        break;
      }
    }
  }
}

SocoGenerated optimal_impl(std::size_t m, const std::vector<std::size_t>& dims,
                           const std::vector<ConeLabel>& labels, const GenControls& controls,
                           RngStream& stream) {
  check_dims(m, dims);
  check_labels(dims, labels);
  SocoGenerated g;
  SocoSolution sol;
  optimal_blocks(dims, labels, sol, g.certificate, stream);
  sol.y = randkit::signed_vector(m, stream);
  Matrix a = constraint_matrix(m, total_dim(dims), controls, stream);
  g.instance = assemble(dims, std::move(a), sol, g.certificate, controls);
  g.certificate.optimal = std::move(sol);
  g.certificate.labels = labels;
  return g;
}

std::size_t count(const std::vector<ConeLabel>& labels, ConeLabel l) {
  return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), l));
}

SocoGenerated maxcomp_impl(std::size_t m, const std::vector<std::size_t>& dims,
                           const std::vector<ConeLabel>& labels, const GenControls& controls,
                           RngStream& stream) {
  check_dims(m, dims);
  check_labels(dims, labels);
  detail::require(!controls.cond && !controls.density,
                  "gen_soco_maxcomp: cond and density targets do not apply to the structured A");
  const std::size_t nt2 = count(labels, ConeLabel::T2);
  const std::size_t support = count(labels, ConeLabel::B) + count(labels, ConeLabel::R) + nt2;
  detail::require(nt2 + 1 < m && m <= support,
                  "gen_soco_maxcomp: require |T2| + 1 < m <= |B| + |R| + |T2|");
  detail::require(count(labels, ConeLabel::T1) + count(labels, ConeLabel::T3) +
                          count(labels, ConeLabel::N) > 0,
                  "gen_soco_maxcomp: the first row needs a T1, T3 or N cone");

  SocoGenerated g;
  SocoSolution sol;
  optimal_blocks(dims, labels, sol, g.certificate, stream);
  sol.y = randkit::signed_vector(m, stream);

  const std::vector<std::size_t> off = cone_offsets(dims);
  const std::size_t n = off.back();
  std::vector<Index> support_cols;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const ConeLabel l = labels[i];
    if (l == ConeLabel::B || l == ConeLabel::R || l == ConeLabel::T2)
      for (std::size_t j = off[i]; j < off[i + 1]; ++j) support_cols.push_back(idx(j));
  }

  Matrix a;
  bool ok = false;
  for (int attempt = 0; attempt < randkit::kMaxRegenerations && !ok; ++attempt) {
    a = Matrix::Zero(idx(m), idx(n));
    for (std::size_t i = 0; i < dims.size(); ++i) {
      const Index o = idx(off[i]);
      switch (labels[i]) {
        case ConeLabel::T1:
        case ConeLabel::T3:
          a(0, o) = stream.uniform(randkit::kPositiveLo, randkit::kPositiveHi);
          break;
        case ConeLabel::N:
          for (std::size_t j = off[i]; j < off[i + 1]; ++j)
            a(0, idx(j)) = stream.uniform(randkit::kSignedLo, randkit::kSignedHi);
          break;
        default:
          break;
      }
    }
    Index row = 1;
    for (std::size_t i = 0; i < dims.size(); ++i) {
      if (labels[i] != ConeLabel::T2) continue;
      const Index o = idx(off[i]);
      const Index d = idx(dims[i]);
      const Vector tail = sol.x.segment(o + 1, d - 1);
      a(row, o) = -1.0;
      a.block(row, o + 1, 1, d - 1) = (tail / tail.norm()).transpose();
      ++row;
    }
    for (; row < idx(m); ++row)
      for (Index j = 0; j < idx(n); ++j) a(row, j) = stream.uniform(randkit::kSignedLo, randkit::kSignedHi);

    // Row 1 vanishes on the support of x*, so these ranks top out at m - 1.
    const Matrix rest = a.bottomRows(idx(m) - 1);
    Matrix sub(rest.rows(), idx(support_cols.size()));
    for (std::size_t k = 0; k < support_cols.size(); ++k) sub.col(idx(k)) = rest.col(support_cols[k]);
    const Matrix weighted = rest * sol.x.asDiagonal();
    ok = numerical_rank(sub, 1e-8) == m - 1 && numerical_rank(weighted, 1e-8) == m - 1 &&
         numerical_rank(a, 1e-10) == m;
  }
  if (!ok) {
    throw GenerationError("gen_soco_maxcomp: rank conditions on [A^B, A^R, A^T2] not met after " +
                          std::to_string(randkit::kMaxRegenerations) + " draws");
  }
  if (controls.norm_a) a *= norm_factor(controls.norm_a, a.norm(), "constraint data");

  g.instance = assemble(dims, std::move(a), sol, g.certificate, controls);
  g.certificate.optimal = std::move(sol);
  g.certificate.labels = labels;
  g.certificate.maximally_complementary = true;
  return g;
}

// Appends one coordinate to the last cone (labeled N) and one constraint so
// that a freshly drawn interior point becomes feasible.
SocoGenerated extend(SocoGenerated inner, const GenControls& controls, RngStream& stream) {
  const SocoInstance& in = inner.instance;
  const SocoSolution& hat = *inner.certificate.optimal;
  const std::vector<std::size_t>& dims = in.cone_dims;
  const std::vector<std::size_t> off = cone_offsets(dims);
  const std::size_t p = dims.size() - 1;
  const Index n = idx(off.back());
  const Index m = in.a.rows();
  const Index lo = idx(off[p]);
  const Index dp = idx(dims[p]);

  Vector x0(n), s0(n);
  for (std::size_t i = 0; i < p; ++i) {
    x0.segment(idx(off[i]), idx(dims[i])) = interior_block(dims[i], stream);
    s0.segment(idx(off[i]), idx(dims[i])) = interior_block(dims[i], stream);
  }
  // On the last cone s0 copies s*, so that cone drops out of delta.
  s0.segment(lo, dp) = hat.s.segment(lo, dp);
  const Vector x_tail = randkit::signed_vector(static_cast<std::size_t>(dp - 1), stream);

  const Vector dxh = x0 - hat.x;  // head of the last cone is still unset; its s-difference is 0
  double delta = 0.0;
  for (Index j = 0; j < lo; ++j) delta += dxh(j) * (s0(j) - hat.s(j));

  const Vector sp = hat.s.segment(lo, dp);
  const double sp_tail = dp > 1 ? sp.tail(dp - 1).norm() : 0.0;
  const double slack = std::sqrt((sp(0) - sp_tail) * (sp(0) + sp_tail));
  const double x0_last =
      std::max(controls.margin, 4.0 * std::abs(delta) / slack) * stream.uniform(1.0, 2.0);
  const double s0_last = positive_part(-delta / x0_last) + slack / 4.0;
  const double s_last = delta / x0_last + s0_last;

  const double reach = std::sqrt(x_tail.squaredNorm() + x0_last * x0_last);
  const double u = stream.uniform(randkit::kPositiveLo, randkit::kPositiveHi);
  x0(lo) = reach + std::max(u, reach / 9.0);
  x0.segment(lo + 1, dp - 1) = x_tail;

  Vector y0(m + 1);
  y0.head(m) = randkit::signed_vector(static_cast<std::size_t>(m), stream);
  y0(m) = nonzero_scalar(stream);

  const Vector alpha = kernels::gemv(in.a, hat.x - x0) / x0_last;

  // Insert the new coordinate at the end of the last cone, which is also the end of x.
  SocoSolution opt, interior;
  opt.x = Vector::Zero(n + 1);
  opt.x.head(n) = hat.x;
  opt.s.resize(n + 1);
  opt.s.head(n) = hat.s;
  opt.s(n) = s_last;
  opt.y = Vector::Zero(m + 1);
  opt.y.head(m) = hat.y;
  interior.x.resize(n + 1);
  interior.x.head(n) = x0;
  interior.x(n) = x0_last;
  interior.s.resize(n + 1);
  interior.s.head(n) = s0;
  interior.s(n) = s0_last;
  interior.y = y0;

  Matrix at(m, n + 1);
  at.leftCols(n) = in.a;
  at.col(n) = alpha;
  const Vector beta = (kernels::gemv_t(at, hat.y - y0.head(m)) + opt.s - interior.s) / y0(m);

  SocoGenerated g;
  g.instance.cone_dims = dims;
  g.instance.cone_dims.back() += 1;
  g.instance.a.resize(m + 1, n + 1);
  g.instance.a.topRows(m) = at;
  g.instance.a.row(m) = beta.transpose();
  g.instance.b = kernels::gemv(g.instance.a, opt.x);
  g.instance.c = kernels::gemv_t(g.instance.a, opt.y) + opt.s;

  const double lemma = (interior.x - opt.x).dot(interior.s - opt.s);
  if (std::abs(lemma) >
      1e-9 * (1.0 + (interior.x - opt.x).norm() * (interior.s - opt.s).norm())) {
    throw std::logic_error("SOCO extension: orthogonality bookkeeping broken, residual " +
                           std::to_string(lemma));
  }

  g.certificate = std::move(inner.certificate);
  g.certificate.optimal = std::move(opt);
  g.certificate.interior = std::move(interior);
  return g;
}

void require_last_n(const std::vector<ConeLabel>& labels, const char* who) {
  detail::require(!labels.empty() && labels.back() == ConeLabel::N,
                  std::string(who) + ": the last cone must be labeled N");
}

}  // namespace

std::string to_string(ConeLabel label) {
  switch (label) {
    case ConeLabel::B: return "B";
    case ConeLabel::N: return "N";
    case ConeLabel::R: return "R";
    case ConeLabel::T1: return "T1";
    case ConeLabel::T2: return "T2";
    case ConeLabel::T3: return "T3";
  }
  return "?";
}

ConeLabel parse_cone_label(const std::string& text) {
  for (ConeLabel l : {ConeLabel::B, ConeLabel::N, ConeLabel::R, ConeLabel::T1, ConeLabel::T2,
                      ConeLabel::T3}) {
    if (to_string(l) == text) return l;
  }
  throw ArgumentError("unknown cone label '" + text + "'");
}

std::vector<std::size_t> cone_offsets(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> off(dims.size() + 1, 0);
  for (std::size_t i = 0; i < dims.size(); ++i) off[i + 1] = off[i] + dims[i];
  return off;
}

Vector jordan_product(const Vector& x, const Vector& s) {
  detail::require(x.size() == s.size() && x.size() >= 1,
                  "jordan_product: blocks must have equal, positive length");
  Vector out(x.size());
  out(0) = x.dot(s);
  const Index t = x.size() - 1;
  if (t > 0) out.tail(t) = x(0) * s.tail(t) + s(0) * x.tail(t);
  return out;
}

Vector interiorize(const Vector& v) {
  detail::require(v.size() >= 1, "interiorize: empty block");
  detail::require(v(0) != 0.0, "interiorize: leading entry must be nonzero");
  Vector out = v;
  const double tail = v.size() > 1 ? v.tail(v.size() - 1).norm() : 0.0;
  out(0) = tail + std::abs(v(0));
  return out;
}

double cone_margin(const Vector& v) {
  if (v.size() == 0) return 0.0;
  return v(0) - (v.size() > 1 ? v.tail(v.size() - 1).norm() : 0.0);
}

std::pair<Vector, Vector> r_cone_pair(const Vector& v, double r) {
  detail::require(v.size() >= 1, "r_cone_pair: tail must be nonempty");
  detail::require(r > 0.0, "r_cone_pair: scalar must be positive");
  Vector x(v.size() + 1), s(v.size() + 1);
  const double nv = v.norm();
  x(0) = nv;
  x.tail(v.size()) = v;
  s(0) = r * nv;
  s.tail(v.size()) = -r * v;
  return {x, s};
}

SocoGenerated gen_soco_interior(std::size_t m, const std::vector<std::size_t>& dims,
                                const GenControls& controls, const SocoInteriorOverrides& ov) {
  check_dims(m, dims);
  const std::size_t n = total_dim(dims);
  const std::vector<std::size_t> off = cone_offsets(dims);
  RngStream stream(controls.seed, controls.stream_id);

  Matrix a;
  if (ov.a) {
    detail::require(ov.a->rows() == idx(m) && ov.a->cols() == idx(n),
                    "gen_soco_interior: supplied A has the wrong shape");
    a = *ov.a;
  } else {
    a = constraint_matrix(m, n, controls, stream);
  }
  auto draw = [&]() {
    Vector v(idx(n));
    for (std::size_t i = 0; i < dims.size(); ++i)
      v.segment(idx(off[i]), idx(dims[i])) = interior_block(dims[i], stream);
    return v;
  };
  auto check_interior = [&](const Vector& v, const char* what) {
    detail::require(v.size() == idx(n), std::string("gen_soco_interior: ") + what + " has the wrong length");
    for (std::size_t i = 0; i < dims.size(); ++i)
      detail::require(cone_margin(v.segment(idx(off[i]), idx(dims[i]))) > 0.0,
                      std::string("gen_soco_interior: ") + what + " is not strictly interior");
  };

  SocoSolution sol;
  sol.x = ov.x0 ? *ov.x0 : draw();
  sol.s = ov.s0 ? *ov.s0 : draw();
  check_interior(sol.x, "x0");
  check_interior(sol.s, "s0");
  sol.y = ov.y0 ? *ov.y0 : randkit::signed_vector(m, stream);
  detail::require(sol.y.size() == idx(m), "gen_soco_interior: y0 has the wrong length");

  SocoGenerated g;
  g.instance = assemble(dims, std::move(a), sol, g.certificate, controls);
  g.certificate.interior = std::move(sol);
  return g;
}

SocoGenerated gen_soco_optimal(std::size_t m, const std::vector<std::size_t>& dims,
                               const std::vector<ConeLabel>& labels, const GenControls& controls) {
  RngStream stream(controls.seed, controls.stream_id);
  return optimal_impl(m, dims, labels, controls, stream);
}

SocoGenerated gen_soco_maxcomp(std::size_t m, const std::vector<std::size_t>& dims,
                               const std::vector<ConeLabel>& labels, const GenControls& controls) {
  RngStream stream(controls.seed, controls.stream_id);
  return maxcomp_impl(m, dims, labels, controls, stream);
}

SocoGenerated gen_soco_both(std::size_t m, const std::vector<std::size_t>& dims,
                            const std::vector<ConeLabel>& labels, const GenControls& controls) {
  require_last_n(labels, "gen_soco_both");
  RngStream stream(controls.seed, controls.stream_id);
  return extend(optimal_impl(m, dims, labels, controls, stream), controls, stream);
}

SocoGenerated gen_soco_maxcomp_both(std::size_t m, const std::vector<std::size_t>& dims,
                                    const std::vector<ConeLabel>& labels,
                                    const GenControls& controls) {
  require_last_n(labels, "gen_soco_maxcomp_both");
  RngStream stream(controls.seed, controls.stream_id);
  return extend(maxcomp_impl(m, dims, labels, controls, stream), controls, stream);
}

}  // namespace conicgen
