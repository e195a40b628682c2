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

#include "conicgen/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "conicgen/error.hpp"

namespace conicgen {

namespace {

using Index = Eigen::Index;

Index idx(std::size_t v) { return static_cast<Index>(v); }

double rel(double residual, double rhs_norm) { return residual / (1.0 + rhs_norm); }

void linear_residuals(VerifyReport& r, const std::string& tag, const Matrix& a, const Vector& b,
                      const Vector& c, const LoSolution& sol, const Tolerances& tol) {
  detail::require(sol.x.size() == a.cols() && sol.s.size() == a.cols() && sol.y.size() == a.rows(),
                  "verify: " + tag + " solution has the wrong shape");
  const double p = rel((a * sol.x - b).norm(), b.norm());
  const double d = rel((a.transpose() * sol.y + sol.s - c).norm(), c.norm());
  r.primal_residual = std::max(r.primal_residual, p);
  r.dual_residual = std::max(r.dual_residual, d);
  r.add(tag + ".primal", "primal", p <= tol.residual, p, tol.residual);
  r.add(tag + ".dual", "dual", d <= tol.residual, d, tol.residual);
}

void orthogonality(VerifyReport& r, double value, double scale, const Tolerances& tol) {
  const double v = std::abs(value) / scale;
  r.add("both.orthogonality", "complementarity", v <= tol.complementarity, v, tol.complementarity);
}

double sym_error(const Matrix& a) { return (a - a.transpose()).norm() / (1.0 + a.norm()); }

Vector eigenvalues(const Matrix& a) { return symmetric_eigenvalues(a); }

Matrix columns(const Matrix& a, const std::vector<Index>& cols) {
  Matrix out(a.rows(), idx(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) out.col(idx(k)) = a.col(cols[k]);
  return out;
}

std::size_t rank_of(const Matrix& a, const Tolerances& tol) { return numerical_rank(a, tol.rank); }

}  // namespace

void VerifyReport::add(std::string name, std::string group, bool ok, double value,
                       double threshold) {
  checks.push_back({std::move(name), std::move(group), ok, value, threshold});
  passed = passed && ok;
}

const CheckResult* VerifyReport::find(const std::string& name) const {
  for (const CheckResult& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<std::string> VerifyReport::failed() const {
  std::vector<std::string> out;
  for (const CheckResult& c : checks)
    if (!c.passed) out.push_back(c.name);
  return out;
}

std::string VerifyReport::summary() const {
  std::ostringstream os;
  os.precision(3);
  for (const CheckResult& c : checks) {
    os << (c.passed ? "  ok    " : "  FAIL  ") << c.name << "  value=" << c.value
       << "  threshold=" << c.threshold << "\n";
  }
  os << (passed ? "verification passed" : "verification FAILED") << "\n";
  return os.str();
}

VerifyReport verify_lo(const LinearInstance& inst, const LoCertificate& cert,
                       const Tolerances& tol) {
  const Index m = inst.a.rows();
  const Index n = inst.a.cols();
  detail::require(inst.b.size() == m && inst.c.size() == n, "verify_lo: shape mismatch");
  VerifyReport r;
  r.tolerances = tol;
  const std::size_t rk = rank_of(inst.a, tol);
  r.add("structure.rank", "structure", rk == static_cast<std::size_t>(m), static_cast<double>(rk),
        static_cast<double>(m));

  if (cert.interior) {
    const LoSolution& s = *cert.interior;
    linear_residuals(r, "interior", inst.a, inst.b, inst.c, s, tol);
    const double mn = std::min(s.x.minCoeff(), s.s.minCoeff());
    r.add("interior.cone", "cone", mn > 0.0, mn, 0.0);
    if (cert.mu) {
      const double dev = (s.x.cwiseProduct(s.s).array() - *cert.mu).abs().maxCoeff() / *cert.mu;
      r.add("interior.mu", "complementarity", dev <= 1e-10, dev, 1e-10);
    }
  }
  if (cert.optimal) {
    const LoSolution& s = *cert.optimal;
    linear_residuals(r, "optimal", inst.a, inst.b, inst.c, s, tol);
    const double scale = 1.0 + std::max(s.x.cwiseAbs().maxCoeff(), s.s.cwiseAbs().maxCoeff());
    const double mn = std::min(s.x.minCoeff(), s.s.minCoeff());
    r.add("optimal.cone", "cone", mn >= -tol.psd * scale, mn, -tol.psd * scale);
    const double gap = s.x.cwiseProduct(s.s).cwiseAbs().sum() / (1.0 + s.x.norm() * s.s.norm());
    r.complementarity_gap = std::abs(s.x.dot(s.s));
    r.add("optimal.complementarity", "complementarity", gap <= tol.complementarity, gap,
          tol.complementarity);

    if (!cert.basic.empty() || !cert.nonbasic.empty()) {
      std::vector<int> owner(static_cast<std::size_t>(n), 0);
      bool valid = true;
      for (std::size_t j : cert.basic) valid = valid && j < owner.size() && (owner[j]++ == 0);
      for (std::size_t j : cert.nonbasic) valid = valid && j < owner.size() && (owner[j]++ == 0);
      for (int o : owner) valid = valid && o == 1;
      r.add("partition.valid", "partition", valid, valid ? 0.0 : 1.0, 0.0);
      if (valid) {
        double off = 0.0;
        for (std::size_t j : cert.basic) off = std::max(off, std::abs(s.s(idx(j))));
        for (std::size_t j : cert.nonbasic) off = std::max(off, std::abs(s.x(idx(j))));
        r.add("partition.support", "partition", off == 0.0, off, 0.0);
      }
    }
    if (cert.strictly_complementary) {
      const double v = (s.x + s.s).minCoeff();
      r.add("partition.strict", "partition", v > 0.0, v, 0.0);
    }
    if (cert.unique_basis) {
      bool ok = cert.basic.size() == static_cast<std::size_t>(m);
      if (ok) {
        std::vector<Index> cols;
        for (std::size_t j : cert.basic) cols.push_back(idx(j));
        ok = rank_of(columns(inst.a, cols), tol) == static_cast<std::size_t>(m);
      }
      r.add("partition.unique_basis", "partition", ok, ok ? 0.0 : 1.0, 0.0);
    }
  }
  if (cert.interior && cert.optimal) {
    const Vector dx = cert.interior->x - cert.optimal->x;
    const Vector ds = cert.interior->s - cert.optimal->s;
    orthogonality(r, dx.dot(ds), 1.0 + dx.norm() * ds.norm(), tol);
  }
  return r;
}

VerifyReport verify_sdo(const SdoInstance& inst, const SdoCertificate& cert,
                        const Tolerances& tol) {
  const std::size_t m = inst.a.size();
  const Index n = inst.c.rows();
  detail::require(inst.c.cols() == n && inst.b.size() == idx(m), "verify_sdo: shape mismatch");
  for (const Matrix& a : inst.a) {
    detail::require(a.rows() == n && a.cols() == n, "verify_sdo: constraint order mismatch");
    detail::require(sym_error(a) <= 1e-10, "verify_sdo: constraint matrix not symmetric");
  }
  detail::require(sym_error(inst.c) <= 1e-10, "verify_sdo: C not symmetric");

  VerifyReport r;
  r.tolerances = tol;
  const std::size_t rk = rank_of(stack_vectorized(inst.a), tol);
  r.add("structure.independence", "structure", rk == m, static_cast<double>(rk),
        static_cast<double>(m));

  auto residuals = [&](const std::string& tag, const SdoSolution& s) {
    detail::require(s.x.rows() == n && s.s.rows() == n && s.y.size() == idx(m),
                    "verify_sdo: " + tag + " solution has the wrong shape");
    Vector ax(idx(m));
    Matrix dual = s.s - inst.c;
    for (std::size_t i = 0; i < m; ++i) {
      ax(idx(i)) = frobenius_inner(inst.a[i], s.x);
      dual += s.y(idx(i)) * inst.a[i];
    }
    const double p = rel((ax - inst.b).norm(), inst.b.norm());
    const double d = rel(dual.norm(), inst.c.norm());
    r.primal_residual = std::max(r.primal_residual, p);
    r.dual_residual = std::max(r.dual_residual, d);
    r.add(tag + ".primal", "primal", p <= tol.residual, p, tol.residual);
    r.add(tag + ".dual", "dual", d <= tol.residual, d, tol.residual);
  };

  if (cert.interior) {
    const SdoSolution& s = *cert.interior;
    residuals("interior", s);
    const double mn = std::min(eigenvalues(s.x).minCoeff(), eigenvalues(s.s).minCoeff());
    r.add("interior.cone", "cone", mn > 0.0, mn, 0.0);
    if (cert.mu) {
      const double dev = (s.x * s.s - *cert.mu * Matrix::Identity(n, n)).norm() / *cert.mu;
      r.add("interior.mu", "complementarity", dev <= 1e-10, dev, 1e-10);
    }
  }
  if (cert.optimal) {
    const SdoSolution& s = *cert.optimal;
    residuals("optimal", s);
    const Vector ex = eigenvalues(s.x);
    const Vector es = eigenvalues(s.s);
    const double floor_x = -tol.psd * (1.0 + std::max(0.0, ex.maxCoeff()));
    const double floor_s = -tol.psd * (1.0 + std::max(0.0, es.maxCoeff()));
    const double worst = std::min(ex.minCoeff() - floor_x, es.minCoeff() - floor_s);
    r.add("optimal.cone", "cone", worst >= 0.0, std::min(ex.minCoeff(), es.minCoeff()),
          std::min(floor_x, floor_s));
    const double scale = 1.0 + s.x.norm() * s.s.norm();
    const double gap = std::abs(frobenius_inner(s.x, s.s)) / scale;
    const double prod = (s.x * s.s).norm() / scale;
    r.complementarity_gap = std::abs(frobenius_inner(s.x, s.s));
    r.add("optimal.complementarity", "complementarity", gap <= tol.complementarity, gap,
          tol.complementarity);
    r.add("optimal.product", "complementarity", prod <= tol.complementarity, prod,
          tol.complementarity);

    if (cert.partition && cert.basis) {
      const SdoPartition& p = *cert.partition;
      const Matrix& q = *cert.basis;
      const bool dims_ok = p.nb + p.nt + p.nn == static_cast<std::size_t>(n) && q.rows() == n &&
                           q.cols() == n;
      r.add("partition.dims", "partition", dims_ok, dims_ok ? 0.0 : 1.0, 0.0);
      if (dims_ok) {
        const double orth = (q.transpose() * q - Matrix::Identity(n, n)).norm();
        r.add("partition.basis", "partition", orth <= 1e-10 * static_cast<double>(n), orth,
              1e-10 * static_cast<double>(n));
        const Index nb = idx(p.nb), nt = idx(p.nt), nn = idx(p.nn);
        const double sx = tol.complementarity * 100.0 * (1.0 + s.x.norm());
        const double ss = tol.complementarity * 100.0 * (1.0 + s.s.norm());
        const double x_off = (s.x * q.rightCols(nt + nn)).norm();
        const double s_off = (s.s * q.leftCols(nb + nt)).norm();
        r.add("partition.x_support", "partition", x_off <= sx, x_off, sx);
        r.add("partition.s_support", "partition", s_off <= ss, s_off, ss);
        const std::size_t rx = numerical_rank(s.x, tol.rank);
        const std::size_t rs = numerical_rank(s.s, tol.rank);
        r.add("partition.rank_x", "partition", rx == p.nb, static_cast<double>(rx),
              static_cast<double>(p.nb));
        r.add("partition.rank_s", "partition", rs == p.nn, static_cast<double>(rs),
              static_cast<double>(p.nn));
        if (cert.strictly_complementary) {
          const double v = eigenvalues(s.x + s.s).minCoeff();
          r.add("partition.strict", "partition", p.nt == 0 && v > 0.0, v, 0.0);
        }
        if (cert.maximally_complementary && cert.gamma && m >= 1) {
          // Hypotheses of the maximal complementarity construction, read off A.
          const Matrix& a1 = inst.a.front();
          const Matrix qb = q.leftCols(nb);
          const double gb = (a1 * qb).norm() / (1.0 + a1.norm());
          r.add("hypothesis.gamma_b", "hypothesis", gb <= tol.rank, gb, tol.rank);
          const Vector g = (q.transpose() * a1 * q).diagonal();
          const double gdev = (g - *cert.gamma).cwiseAbs().maxCoeff() / (1.0 + a1.norm());
          r.add("hypothesis.gamma_recorded", "hypothesis", gdev <= tol.rank, gdev, tol.rank);
          if (nt > 0) {
            const Matrix qt = q.middleCols(nb, nt);
            const double gt = eigenvalues(qt.transpose() * a1 * qt).minCoeff();
            const double floor = tol.rank * (1.0 + a1.norm());
            r.add("hypothesis.gamma_t", "hypothesis", gt > floor, gt, floor);
          }
          std::vector<Matrix> proj;
          for (std::size_t i = 1; i < m; ++i) proj.push_back(inst.a[i] * qb);
          const std::size_t rp = rank_of(stack_vectorized(proj), tol);
          r.add("hypothesis.independence", "hypothesis", rp == m - 1, static_cast<double>(rp),
                static_cast<double>(m - 1));
        } else if (cert.maximally_complementary && p.nb == 0) {
          const Matrix qt = q.leftCols(nt);
          double worst_t = 0.0;
          for (const Matrix& a : inst.a) worst_t = std::max(worst_t, (a * qt).norm() / (1.0 + a.norm()));
          r.add("hypothesis.gamma_t_zero", "hypothesis", worst_t <= tol.rank, worst_t, tol.rank);
        }
      }
    }
  }
  if (cert.interior && cert.optimal) {
    const Matrix dx = cert.interior->x - cert.optimal->x;
    const Matrix ds = cert.interior->s - cert.optimal->s;
    orthogonality(r, frobenius_inner(dx, ds), 1.0 + dx.norm() * ds.norm(), tol);
  }
  return r;
}

VerifyReport verify_soco(const SocoInstance& inst, const SocoCertificate& cert,
                         const Tolerances& tol) {
  const Index m = inst.a.rows();
  const Index n = inst.a.cols();
  std::size_t total = 0;
  for (std::size_t d : inst.cone_dims) {
    detail::require(d >= 1, "verify_soco: cone dimensions must be positive");
    total += d;
  }
  detail::require(idx(total) == n, "verify_soco: cone dimensions do not sum to n");
  detail::require(inst.b.size() == m && inst.c.size() == n, "verify_soco: shape mismatch");
  const std::vector<std::size_t> off = cone_offsets(inst.cone_dims);
  const std::size_t p = inst.cone_dims.size();
  auto block = [&](const Vector& v, std::size_t i) {
    return Vector(v.segment(idx(off[i]), idx(inst.cone_dims[i])));
  };

  VerifyReport r;
  r.tolerances = tol;
  const std::size_t rk = rank_of(inst.a, tol);
  r.add("structure.rank", "structure", rk == static_cast<std::size_t>(m), static_cast<double>(rk),
        static_cast<double>(m));

  if (cert.interior) {
    const SocoSolution& s = *cert.interior;
    linear_residuals(r, "interior", inst.a, inst.b, inst.c, s, tol);
    double mn = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < p; ++i)
      mn = std::min({mn, cone_margin(block(s.x, i)), cone_margin(block(s.s, i))});
    r.add("interior.cone", "cone", mn > 0.0, mn, 0.0);
  }
  if (cert.optimal) {
    const SocoSolution& s = *cert.optimal;
    linear_residuals(r, "optimal", inst.a, inst.b, inst.c, s, tol);
    const double big = 1.0 + std::max(s.x.cwiseAbs().maxCoeff(), s.s.cwiseAbs().maxCoeff());
    double mn = std::numeric_limits<double>::infinity();
    double jordan = 0.0;
    for (std::size_t i = 0; i < p; ++i) {
      mn = std::min({mn, cone_margin(block(s.x, i)), cone_margin(block(s.s, i))});
      jordan = std::max(jordan, jordan_product(block(s.x, i), block(s.s, i)).cwiseAbs().maxCoeff());
    }
    r.add("optimal.cone", "cone", mn >= -tol.psd * big, mn, -tol.psd * big);
    const double scale = 1.0 + s.x.norm() * s.s.norm();
    r.complementarity_gap = std::abs(s.x.dot(s.s));
    r.add("optimal.complementarity", "complementarity", jordan / scale <= tol.complementarity,
          jordan / scale, tol.complementarity);

    if (!cert.labels.empty()) {
      const bool sized = cert.labels.size() == p;
      r.add("partition.size", "partition", sized, sized ? 0.0 : 1.0, 0.0);
      if (sized) {
        const double eps = 1e-10 * big;
        auto zero = [&](const Vector& v) { return v.cwiseAbs().maxCoeff() <= eps; };
        auto interior = [&](const Vector& v) { return cone_margin(v) > eps; };
        auto boundary = [&](const Vector& v) {
          return v.size() >= 2 && std::abs(cone_margin(v)) <= eps && v(0) > eps;
        };
        double bad = 0.0;
        for (std::size_t i = 0; i < p; ++i) {
          const Vector x = block(s.x, i);
          const Vector sv = block(s.s, i);
          bool ok = false;
          switch (cert.labels[i]) {
            case ConeLabel::B: ok = interior(x) && zero(sv); break;
            case ConeLabel::N: ok = zero(x) && interior(sv); break;
            case ConeLabel::T1: ok = zero(x) && zero(sv); break;
            case ConeLabel::T2: ok = boundary(x) && zero(sv); break;
            case ConeLabel::T3: ok = zero(x) && boundary(sv); break;
            case ConeLabel::R: {
              const Index t = x.size() - 1;
              const double anti = t > 0 ? (x(0) * sv.tail(t) + sv(0) * x.tail(t)).cwiseAbs().maxCoeff() : 0.0;
              ok = boundary(x) && boundary(sv) && anti <= eps;
              break;
            }
          }
          if (!ok) bad += 1.0;
        }
        r.add("partition.labels", "partition", bad == 0.0, bad, 0.0);
      }
      if (sized && cert.maximally_complementary && m >= 2) {
        // Row-pattern and rank hypotheses of the maximal complementarity construction.
        const double xs = s.x.norm();
        const double b1 = std::abs(inst.b(0));
        r.add("hypothesis.b1", "hypothesis", b1 <= 1e-12 * (1.0 + xs), b1, 1e-12 * (1.0 + xs));
        double row1 = 0.0;
        std::vector<Index> support_cols;
        std::vector<std::size_t> t2;
        for (std::size_t i = 0; i < p; ++i) {
          const Index o = idx(off[i]);
          const Index d = idx(inst.cone_dims[i]);
          switch (cert.labels[i]) {
            case ConeLabel::T1:
            case ConeLabel::T3:
              if (!(inst.a(0, o) > 0.0)) row1 = std::max(row1, 1.0);
              if (d > 1) row1 = std::max(row1, inst.a.block(0, o + 1, 1, d - 1).cwiseAbs().maxCoeff());
              break;
            case ConeLabel::B:
            case ConeLabel::R:
            case ConeLabel::T2:
              row1 = std::max(row1, inst.a.block(0, o, 1, d).cwiseAbs().maxCoeff());
              for (Index j = o; j < o + d; ++j) support_cols.push_back(j);
              if (cert.labels[i] == ConeLabel::T2) t2.push_back(i);
              break;
            case ConeLabel::N:
              break;
          }
        }
        r.add("hypothesis.row1", "hypothesis", row1 == 0.0, row1, 0.0);
        double t2_dev = 0.0;
        for (std::size_t k = 0; k < t2.size() && idx(k) + 1 < m; ++k) {
          const Index row = idx(k) + 1;
          const std::size_t cone = t2[k];
          const Index o = idx(off[cone]);
          const Index d = idx(inst.cone_dims[cone]);
          const Vector a = inst.a.row(row).segment(o, d).transpose();
          t2_dev = std::max(t2_dev, std::abs(a.dot(block(s.x, cone))));
          t2_dev = std::max(t2_dev, std::abs(a(0) + 1.0));
          t2_dev = std::max(t2_dev, std::abs(a.tail(d - 1).norm() - 1.0));
          for (std::size_t i = 0; i < p; ++i) {
            if (i == cone || cert.labels[i] == ConeLabel::N) continue;
            t2_dev = std::max(t2_dev, inst.a.row(row)
                                          .segment(idx(off[i]), idx(inst.cone_dims[i]))
                                          .cwiseAbs()
                                          .maxCoeff());
          }
        }
        r.add("hypothesis.t2_rows", "hypothesis", t2_dev <= 1e-12, t2_dev, 1e-12);
        // Row 1 vanishes wherever x* does not, so rows 2..m carry the rank.
        const Matrix rest = inst.a.bottomRows(m - 1);
        const std::size_t r_sup = rank_of(columns(rest, support_cols), tol);
        const std::size_t r_w = rank_of(rest * s.x.asDiagonal(), tol);
        r.add("hypothesis.rank_support", "hypothesis", r_sup == static_cast<std::size_t>(m - 1),
              static_cast<double>(r_sup), static_cast<double>(m - 1));
        r.add("hypothesis.rank_weighted", "hypothesis", r_w == static_cast<std::size_t>(m - 1),
              static_cast<double>(r_w), static_cast<double>(m - 1));
      }
    }
  }
  if (cert.interior && cert.optimal) {
    const Vector dx = cert.interior->x - cert.optimal->x;
    const Vector ds = cert.interior->s - cert.optimal->s;
    orthogonality(r, dx.dot(ds), 1.0 + dx.norm() * ds.norm(), tol);
  }
  return r;
}

LoGenerated to_linear(const SocoInstance& inst, const SocoCertificate& cert) {
  for (std::size_t d : inst.cone_dims)
    detail::require(d == 1, "to_linear: every cone must have dimension 1");
  LoGenerated g;
  g.instance = LinearInstance{inst.a, inst.b, inst.c};
  LoCertificate& lo = g.certificate;
  lo.interior = cert.interior;
  lo.optimal = cert.optimal;
  bool strict = cert.optimal.has_value();
  for (std::size_t i = 0; i < cert.labels.size(); ++i) {
    switch (cert.labels[i]) {
      case ConeLabel::B: lo.basic.push_back(i); break;
      case ConeLabel::N: lo.nonbasic.push_back(i); break;
      case ConeLabel::T1:
        lo.nonbasic.push_back(i);
        strict = false;
        break;
      default:
        throw ArgumentError("to_linear: label " + to_string(cert.labels[i]) +
                            " impossible on a 1-dimensional cone");
    }
  }
  lo.strictly_complementary = strict && !cert.labels.empty();
  lo.primal_scale = cert.primal_scale;
  lo.dual_scale = cert.dual_scale;
  return g;
}

LpOracleResult lo_bruteforce_optimal(const LinearInstance& inst) {
  const Index m = inst.a.rows();
  const Index n = inst.a.cols();
  detail::require(n <= 12, "lo_bruteforce_optimal: refusing n > 12");
  detail::require(m >= 1 && m <= n, "lo_bruteforce_optimal: need 1 <= m <= n");
  LpOracleResult best;
  best.value = std::numeric_limits<double>::infinity();

  std::vector<int> pick(static_cast<std::size_t>(n), 0);
  std::fill(pick.begin(), pick.begin() + m, 1);
  // prev_permutation over a sorted-descending mask walks every m-subset once.
  do {
    std::vector<Index> cols;
    for (Index j = 0; j < n; ++j)
      if (pick[static_cast<std::size_t>(j)]) cols.push_back(j);
    const Matrix ab = columns(inst.a, cols);
    Eigen::FullPivLU<Matrix> lu(ab);
    lu.setThreshold(1e-10);
    if (lu.rank() < m) continue;
    const Vector xb = lu.solve(inst.b);
    if (xb.minCoeff() < -1e-9 * (1.0 + xb.cwiseAbs().maxCoeff())) continue;
    Vector cb(m);
    for (Index k = 0; k < m; ++k) cb(k) = inst.c(cols[static_cast<std::size_t>(k)]);
    const double value = cb.dot(xb);

    // Improving direction with no blocking basic variable means unbounded.
    const Vector dual = lu.transpose().solve(cb);
    for (Index j = 0; j < n; ++j) {
      if (pick[static_cast<std::size_t>(j)]) continue;
      const double reduced = inst.c(j) - dual.dot(inst.a.col(j));
      if (reduced >= -1e-12 * (1.0 + std::abs(inst.c(j)))) continue;
      const Vector dir = lu.solve(inst.a.col(j));
      if (dir.maxCoeff() <= 1e-12) {
        best.status = LpStatus::unbounded;
        best.value = -std::numeric_limits<double>::infinity();
        best.vertex.resize(0);
        return best;
      }
    }
    if (best.status == LpStatus::infeasible || value < best.value) {
      best.status = LpStatus::optimal;
      best.value = value;
      best.vertex = Vector::Zero(n);
      for (Index k = 0; k < m; ++k) best.vertex(cols[static_cast<std::size_t>(k)]) = std::max(0.0, xb(k));
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

}  // namespace conicgen
