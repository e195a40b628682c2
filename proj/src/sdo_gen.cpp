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

#include "conicgen/sdo_gen.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "conicgen/error.hpp"
#include "conicgen/kernels.hpp"

namespace conicgen {

namespace {

constexpr double kEigLo = 0.5;
constexpr double kEigHi = 1.5;
constexpr double kIndependenceTol = 1e-8;

using Index = Eigen::Index;

Index idx(std::size_t v) { return static_cast<Index>(v); }

void check_dims(std::size_t m, std::size_t n, const GenControls& controls) {
  detail::require(m >= 1 && n >= 1, "SDO generator: m and n must be positive");
  detail::require(m < n * (n + 1) / 2, "SDO generator: require m < n(n+1)/2");
  detail::require(!controls.cond, "SDO generator: cond targets apply to LO and SOCO only");
}

void check_partition(std::size_t n, std::size_t nb, std::size_t nn) {
  detail::require(nb + nn <= n, "SDO generator: require nB + nN <= n");
}

Vector eig_draw(std::size_t count, RngStream& stream) {
  return randkit::uniform_vector(count, kEigLo, kEigHi, stream);
}

Matrix random_symmetric(std::size_t n, const GenControls& controls, RngStream& stream) {
  if (!controls.density || *controls.density >= 1.0) return randkit::symmetric_matrix(n, stream);
  const double density = *controls.density;
  Matrix a = Matrix::Zero(idx(n), idx(n));
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i <= j; ++i) {
      if (stream.next_unit() >= density) continue;
      const double v = stream.sign() * stream.uniform(randkit::kPositiveLo, randkit::kPositiveHi);
      a(i, j) = v;
      a(j, i) = v;
    }
  }
  return a;
}

bool independent(const std::vector<Matrix>& as) {
  return numerical_rank(stack_vectorized(as), kIndependenceTol) == as.size();
}

std::vector<Matrix> constraint_family(std::size_t m, std::size_t n, const GenControls& controls,
                                      RngStream& stream) {
  for (int attempt = 0; attempt < randkit::kMaxRegenerations; ++attempt) {
    std::vector<Matrix> as;
    as.reserve(m);
    for (std::size_t i = 0; i < m; ++i) as.push_back(random_symmetric(n, controls, stream));
    if (independent(as)) return as;
  }
  throw GenerationError("SDO generator: constraint matrices not linearly independent after " +
                        std::to_string(randkit::kMaxRegenerations) + " draws");
}

void check_family(const std::vector<Matrix>& as, std::size_t m, std::size_t n) {
  detail::require(as.size() == m, "SDO generator: supplied constraint list has the wrong length");
  for (const Matrix& a : as) {
    detail::require(a.rows() == idx(n) && a.cols() == idx(n),
                    "SDO generator: supplied constraint matrix has the wrong order");
    detail::require((a - a.transpose()).norm() <= 1e-12 * (1.0 + a.norm()),
                    "SDO generator: supplied constraint matrix is not symmetric");
  }
}

double norm_factor(const std::optional<double>& target, double norm, const char* what) {
  if (!target) return 1.0;
  detail::require(*target > 0.0, std::string("SDO generator: ") + what + " target must be positive");
  if (norm == 0.0) {
    throw GenerationError(std::string("SDO generator: ") + what +
                          " is identically zero, norm target unreachable");
  }
  return *target / norm;
}

double scale_constraints(std::vector<Matrix>& as, const GenControls& controls) {
  if (!controls.norm_a) return 1.0;
  double sq = 0.0;
  for (const Matrix& a : as) sq += a.squaredNorm();
  const double f = norm_factor(controls.norm_a, std::sqrt(sq), "constraint data");
  for (Matrix& a : as) a *= f;
  return f;
}

Matrix zeros(std::size_t n) { return Matrix::Zero(idx(n), idx(n)); }

// Applies norm targets to `sol`, then assembles b_i = A_i . X and C = sum y_i A_i + S.
SdoInstance assemble(std::vector<Matrix> as, SdoSolution& sol, SdoCertificate& cert,
                     const GenControls& controls) {
  cert.primal_scale =
      norm_factor(controls.norm_b, kernels::trace_products(as, sol.x).norm(), "b");
  sol.x *= cert.primal_scale;
  cert.dual_scale =
      norm_factor(controls.norm_c, kernels::combine(as, sol.y, sol.s).norm(), "C");
  sol.y *= cert.dual_scale;
  sol.s *= cert.dual_scale;
  SdoInstance inst;
  inst.b = kernels::trace_products(as, sol.x);
  inst.c = symmetrize(kernels::combine(as, sol.y, sol.s));
  inst.a = std::move(as);
  return inst;
}

Vector concat(std::initializer_list<Vector> parts) {
  Index len = 0;
  for (const Vector& p : parts) len += p.size();
  Vector out(len);
  Index at = 0;
  for (const Vector& p : parts) {
    out.segment(at, p.size()) = p;
    at += p.size();
  }
  return out;
}

Vector zero_vec(std::size_t n) { return Vector::Zero(idx(n)); }

void set_partition(SdoCertificate& cert, std::size_t n, std::size_t nb, std::size_t nn) {
  cert.partition = SdoPartition{nb, n - nb - nn, nn};
}

SdoGenerated block_optimal_impl(std::size_t m, std::size_t n, std::size_t nb, std::size_t nn,
                                const GenControls& controls, const SdoBlockOverrides& ov,
                                RngStream& stream) {
  check_dims(m, n, controls);
  check_partition(n, nb, nn);
  const std::size_t nt = n - nb - nn;
  std::vector<Matrix> as;
  if (ov.a) {
    as = *ov.a;
    check_family(as, m, n);
  } else {
    as = constraint_family(m, n, controls, stream);
  }
  scale_constraints(as, controls);

  Matrix xb = ov.xb ? *ov.xb
                    : (nb ? randkit::gen_psd(nb, randkit::PsdMethod::spectral, eig_draw(nb, stream),
                                             stream)
                          : Matrix(0, 0));
  Matrix sn = ov.sn ? *ov.sn
                    : (nn ? randkit::gen_psd(nn, randkit::PsdMethod::spectral, eig_draw(nn, stream),
                                             stream)
                          : Matrix(0, 0));
  detail::require(xb.rows() == idx(nb) && xb.cols() == idx(nb), "SDO generator: X_B has the wrong order");
  detail::require(sn.rows() == idx(nn) && sn.cols() == idx(nn), "SDO generator: S_N has the wrong order");

  SdoSolution sol;
  sol.x = block_diagonal({xb, zeros(nt), zeros(nn)});
  sol.s = block_diagonal({zeros(nb), zeros(nt), sn});
  sol.y = ov.y ? *ov.y : randkit::signed_vector(m, stream);
  detail::require(sol.y.size() == idx(m), "SDO generator: y* has the wrong length");

  SdoGenerated g;
  g.instance = assemble(std::move(as), sol, g.certificate, controls);
  SdoCertificate& cert = g.certificate;
  cert.optimal = std::move(sol);
  set_partition(cert, n, nb, nn);
  cert.basis = Matrix::Identity(idx(n), idx(n));
  cert.strictly_complementary = nt == 0;
  cert.maximally_complementary = nt == 0;
  cert.partition_status = nt == 0 ? PartitionStatus::optimal : PartitionStatus::declared_unverified;
  return g;
}

Matrix basis_or_draw(std::size_t n, const SdoEigOverrides& ov, RngStream& stream) {
  if (ov.q) {
    detail::require(ov.q->rows() == idx(n) && ov.q->cols() == idx(n),
                    "SDO generator: supplied Q has the wrong order");
    detail::require((ov.q->transpose() * *ov.q - Matrix::Identity(idx(n), idx(n))).norm() <=
                        1e-12 * static_cast<double>(n),
                    "SDO generator: supplied Q is not orthonormal");
    return *ov.q;
  }
  return randkit::gen_orthonormal(n, stream);
}

SdoGenerated eig_optimal_impl(std::size_t m, std::size_t n, std::size_t nb, std::size_t nn,
                              const GenControls& controls, const SdoEigOverrides& ov,
                              RngStream& stream) {
  check_dims(m, n, controls);
  check_partition(n, nb, nn);
  const std::size_t nt = n - nb - nn;
  const Vector sigma = eig_draw(nb, stream);
  const Vector lambda = eig_draw(nn, stream);
  const Matrix q = basis_or_draw(n, ov, stream);
  std::vector<Matrix> as = constraint_family(m, n, controls, stream);
  scale_constraints(as, controls);

  SdoSolution sol;
  sol.x = kernels::congruence(q, concat({sigma, zero_vec(nt + nn)}));
  sol.s = kernels::congruence(q, concat({zero_vec(nb + nt), lambda}));
  sol.y = randkit::signed_vector(m, stream);

  SdoGenerated g;
  g.instance = assemble(std::move(as), sol, g.certificate, controls);
  SdoCertificate& cert = g.certificate;
  cert.optimal = std::move(sol);
  set_partition(cert, n, nb, nn);
  cert.basis = q;
  cert.strictly_complementary = nt == 0;
  cert.maximally_complementary = nt == 0;
  cert.partition_status = nt == 0 ? PartitionStatus::optimal : PartitionStatus::declared_unverified;
  return g;
}

SdoGenerated maxcomp_impl(std::size_t m, std::size_t n, std::size_t nb, std::size_t nn,
                          const GenControls& controls, const SdoEigOverrides& ov,
                          RngStream& stream) {
  check_dims(m, n, controls);
  check_partition(n, nb, nn);
  detail::require(nb >= 1 && nn >= 1,
                  "gen_sdo_maxcomp: requires nB >= 1 and nN >= 1 (use the B-empty variant)");
  // A Q_B ranges over a space of this dimension as A runs through symmetric matrices.
  const std::size_t span_dim = n * nb - nb * (nb - 1) / 2;
  detail::require(m - 1 <= span_dim,
                  "gen_sdo_maxcomp: m - 1 exceeds the dimension available to A_i Q_B");
  const std::size_t nt = n - nb - nn;
  const Vector sigma = eig_draw(nb, stream);
  const Vector lambda = eig_draw(nn, stream);
  const Matrix q = basis_or_draw(n, ov, stream);
  const Matrix qb = q.leftCols(idx(nb));

  Vector gamma = concat({zero_vec(nb), eig_draw(nt, stream), randkit::signed_vector(nn, stream)});
  const Matrix a1 = kernels::congruence(q, gamma);

  std::vector<Matrix> as;
  bool ok = false;
  for (int attempt = 0; attempt < randkit::kMaxRegenerations && !ok; ++attempt) {
    as.assign(1, a1);
    std::vector<Matrix> projected;
    for (std::size_t i = 1; i < m; ++i) {
      as.push_back(random_symmetric(n, controls, stream));
      projected.push_back(as.back() * qb);
    }
    ok = numerical_rank(stack_vectorized(projected), kIndependenceTol) == m - 1 && independent(as);
  }
  if (!ok) {
    throw GenerationError("gen_sdo_maxcomp: {A_i Q_B} not linearly independent after " +
                          std::to_string(randkit::kMaxRegenerations) + " draws");
  }
  gamma *= scale_constraints(as, controls);

  SdoSolution sol;
  sol.x = kernels::congruence(q, concat({sigma, zero_vec(nt + nn)}));
  sol.s = kernels::congruence(q, concat({zero_vec(nb + nt), lambda}));
  sol.y = randkit::signed_vector(m, stream);

  SdoGenerated g;
  g.instance = assemble(std::move(as), sol, g.certificate, controls);
  SdoCertificate& cert = g.certificate;
  cert.optimal = std::move(sol);
  set_partition(cert, n, nb, nn);
  cert.basis = q;
  cert.gamma = gamma;
  cert.strictly_complementary = nt == 0;
  cert.maximally_complementary = true;
  cert.partition_status = PartitionStatus::optimal;
  return g;
}

struct Extension {
  SdoInstance instance;
  SdoSolution optimal;
  SdoSolution interior;
};

// Adds one constraint and one row/column so that (X0, y0, S0) becomes an
// interior point while the padded optimal solution stays optimal.
Extension extend(const SdoInstance& inner, const SdoSolution& hat, const Matrix& x0,
                 const Matrix& s0, double x0_last, const std::optional<double>& s0_last_fixed,
                 const Vector& y0, double margin) {
  const auto m = static_cast<Index>(inner.a.size());
  const Index n = inner.c.rows();
  detail::require(y0.size() == m + 1 && y0(m) != 0.0, "SDO extension: y0_{m+1} must be nonzero");
  detail::require(x0_last > 0.0, "SDO extension: X0_{n+1} must be positive");

  const Matrix dx = hat.x - x0;
  const double delta = frobenius_inner(x0 - hat.x, s0 - hat.s);
  const double bound = positive_part(-delta / x0_last);
  double s0_last = 0.0;
  if (s0_last_fixed) {
    detail::require(*s0_last_fixed > bound, "SDO extension: S0_{n+1} must exceed (-delta/X0_{n+1})^+");
    s0_last = *s0_last_fixed;
  } else {
    s0_last = bound + strict_margin(delta / x0_last, margin);
  }
  const double s_last = delta / x0_last + s0_last;
  const Vector alpha = kernels::trace_products(inner.a, dx) / x0_last;

  auto pad = [n](const Matrix& core, double corner) {
    Matrix out = Matrix::Zero(n + 1, n + 1);
    out.topLeftCorner(n, n) = core;
    out(n, n) = corner;
    return out;
  };

  Extension e;
  std::vector<Matrix>& as = e.instance.a;
  for (Index i = 0; i < m; ++i) as.push_back(pad(inner.a[static_cast<std::size_t>(i)], alpha(i)));

  const Vector dy = hat.y - y0.head(m);
  const Matrix base = pad(hat.s - s0, s_last - s0_last);
  as.push_back(symmetrize(kernels::combine(std::span<const Matrix>(as.data(), as.size()), dy, base) /
                          y0(m)));

  e.optimal.x = pad(hat.x, 0.0);
  e.optimal.s = pad(hat.s, s_last);
  e.optimal.y = Vector::Zero(m + 1);
  e.optimal.y.head(m) = hat.y;
  e.interior.x = pad(x0, x0_last);
  e.interior.s = pad(s0, s0_last);
  e.interior.y = y0;

  e.instance.b.resize(m + 1);
  e.instance.b.head(m) = inner.b;
  e.instance.b(m) = frobenius_inner(as.back(), e.optimal.x);
  e.instance.c = pad(inner.c, s_last + hat.y.dot(alpha));

  const Matrix ddx = e.interior.x - e.optimal.x;
  const Matrix dds = e.interior.s - e.optimal.s;
  const double lemma = frobenius_inner(ddx, dds);
  if (std::abs(lemma) > 1e-9 * (1.0 + ddx.norm() * dds.norm())) {
    throw std::logic_error("SDO extension: orthogonality bookkeeping broken, residual " +
                           std::to_string(lemma));
  }
  return e;
}

Vector draw_y0(std::size_t m, RngStream& stream) {
  Vector y0(idx(m) + 1);
  y0.head(idx(m)) = randkit::signed_vector(m, stream);
  y0(idx(m)) = nonzero_scalar(stream);
  return y0;
}

Matrix extend_basis(const Matrix& q) {
  const Index n = q.rows();
  Matrix out = Matrix::Zero(n + 1, n + 1);
  out.topLeftCorner(n, n) = q;
  out(n, n) = 1.0;
  return out;
}

// Interior point with eigenvectors Q and random eigenvalues, then the extension.
SdoGenerated extend_eig(SdoGenerated inner, bool unit, const GenControls& controls,
                        RngStream& stream) {
  const Matrix q = *inner.certificate.basis;
  const auto n = static_cast<std::size_t>(q.rows());
  const std::size_t m = inner.instance.a.size();
  const Vector sig0 = unit ? Vector::Ones(idx(n)) : randkit::positive_vector(n, stream);
  const Vector lam0 = unit ? Vector::Ones(idx(n)) : randkit::positive_vector(n, stream);
  const double sig_last = unit ? 1.0 : stream.uniform(randkit::kPositiveLo, randkit::kPositiveHi);
  const Vector y0 = draw_y0(m, stream);
  Extension e = extend(inner.instance, *inner.certificate.optimal, kernels::congruence(q, sig0),
                       kernels::congruence(q, lam0), sig_last, std::nullopt, y0, controls.margin);

  SdoGenerated g;
  g.instance = std::move(e.instance);
  SdoCertificate cert = std::move(inner.certificate);
  cert.optimal = std::move(e.optimal);
  cert.interior = std::move(e.interior);
  cert.basis = extend_basis(q);
  cert.partition->nn += 1;
  if (cert.gamma) {
    cert.gamma = concat({*cert.gamma, Vector::Constant(1, g.instance.a.front()(idx(n), idx(n)))});
  }
  g.certificate = std::move(cert);
  return g;
}

}  // namespace

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
  Index n = 0;
  for (const Matrix& b : blocks) n += b.rows();
  Matrix out = Matrix::Zero(n, n);
  Index at = 0;
  for (const Matrix& b : blocks) {
    out.block(at, at, b.rows(), b.cols()) = b;
    at += b.rows();
  }
  return out;
}

SdoGenerated gen_sdo_interior(std::size_t m, std::size_t n, const GenControls& controls,
                              const SdoInteriorOptions& opt) {
  check_dims(m, n, controls);
  detail::require(!(opt.mu && opt.s0), "gen_sdo_interior: mu and S0 are mutually exclusive");
  if (opt.mu) {
    detail::require(*opt.mu > 0.0, "gen_sdo_interior: mu must be positive");
    detail::require(!controls.norm_b && !controls.norm_c,
                    "gen_sdo_interior: norm targets would break the mu coupling");
  }
  RngStream stream(controls.seed, controls.stream_id);
  std::vector<Matrix> as;
  if (opt.a) {
    as = *opt.a;
    check_family(as, m, n);
  } else {
    as = constraint_family(m, n, controls, stream);
  }
  scale_constraints(as, controls);

  SdoSolution sol;
  if (opt.x0) {
    sol.x = *opt.x0;
    detail::require(sol.x.rows() == idx(n) && sol.x.cols() == idx(n),
                    "gen_sdo_interior: X0 has the wrong order");
    if (opt.mu) {
      Eigen::SelfAdjointEigenSolver<Matrix> es(sol.x);
      detail::require(es.eigenvalues().minCoeff() > 0.0, "gen_sdo_interior: X0 must be positive definite");
      sol.s = kernels::congruence(es.eigenvectors(), *opt.mu * es.eigenvalues().cwiseInverse());
    }
  } else if (opt.diagonal) {
    const Vector e = randkit::positive_vector(n, stream);
    sol.x = e.asDiagonal();
    if (opt.mu) sol.s = Matrix((*opt.mu * e.cwiseInverse()).asDiagonal());
  } else {
    const Matrix q = randkit::gen_orthonormal(n, stream);
    const Vector e = randkit::positive_vector(n, stream);
    sol.x = kernels::congruence(q, e);
    if (opt.mu) sol.s = kernels::congruence(q, *opt.mu * e.cwiseInverse());
  }
  if (!opt.mu) {
    if (opt.s0) {
      sol.s = *opt.s0;
      detail::require(sol.s.rows() == idx(n) && sol.s.cols() == idx(n),
                      "gen_sdo_interior: S0 has the wrong order");
    } else if (opt.diagonal) {
      sol.s = randkit::positive_vector(n, stream).asDiagonal();
    } else {
      sol.s = randkit::gen_psd(n, randkit::PsdMethod::spectral, std::nullopt, stream);
    }
  }
  sol.y = opt.y0 ? *opt.y0 : randkit::signed_vector(m, stream);
  detail::require(sol.y.size() == idx(m), "gen_sdo_interior: y0 has the wrong length");

  SdoGenerated g;
  g.instance = assemble(std::move(as), sol, g.certificate, controls);
  g.certificate.interior = std::move(sol);
  g.certificate.mu = opt.mu;
  return g;
}

SdoGenerated gen_sdo_block_optimal(std::size_t m, std::size_t n, std::size_t nb, std::size_t nn,
                                   const GenControls& controls, const SdoBlockOverrides& ov) {
  RngStream stream(controls.seed, controls.stream_id);
  return block_optimal_impl(m, n, nb, nn, controls, ov, stream);
}

SdoGenerated gen_sdo_block_both(std::size_t m, std::size_t n, std::size_t nb, std::size_t nn,
                                const GenControls& controls, SdoBothVariant variant) {
  check_partition(n, nb, nn);
  const bool special = variant == SdoBothVariant::special;
  detail::require(!special || nb + nn == n,
                  "gen_sdo_block_both: the special variant needs nB + nN = n");
  RngStream stream(controls.seed, controls.stream_id);
  SdoGenerated inner = block_optimal_impl(m, n, nb, nn, controls, {}, stream);
  const std::size_t nt = n - nb - nn;
  const SdoSolution& hat = *inner.certificate.optimal;

  auto pd = [&](std::size_t k) {
    return k ? randkit::gen_psd(k, randkit::PsdMethod::spectral, std::nullopt, stream) : Matrix(0, 0);
  };
  auto eye = [](std::size_t k) { return Matrix(Matrix::Identity(idx(k), idx(k))); };
  const Matrix xb_hat = hat.x.topLeftCorner(idx(nb), idx(nb));
  const Matrix sn_hat = hat.s.bottomRightCorner(idx(nn), idx(nn));

  Matrix x0, s0;
  double x0_last = 1.0;
  std::optional<double> s0_last;
  if (special) {
    x0 = block_diagonal({xb_hat, eye(nt), eye(nn)});
    s0 = block_diagonal({eye(nb), eye(nt), sn_hat});
    s0_last = 1.0;
  } else {
    Matrix xb0 = pd(nb), xt0 = pd(nt), xn0 = pd(nn);
    x0 = block_diagonal({xb0, xt0, xn0});
    Matrix sb0 = pd(nb), st0 = pd(nt), sn0 = pd(nn);
    s0 = block_diagonal({sb0, st0, sn0});
    x0_last = stream.uniform(randkit::kPositiveLo, randkit::kPositiveHi);
  }
  const Vector y0 = draw_y0(m, stream);
  Extension e = extend(inner.instance, hat, x0, s0, x0_last, s0_last, y0, controls.margin);

  SdoGenerated g;
  g.instance = std::move(e.instance);
  SdoCertificate cert = std::move(inner.certificate);
  cert.optimal = std::move(e.optimal);
  cert.interior = std::move(e.interior);
  cert.basis = Matrix::Identity(idx(n) + 1, idx(n) + 1);
  cert.partition->nn += 1;
  g.certificate = std::move(cert);
  return g;
}

SdoGenerated gen_sdo_eig_optimal(std::size_t m, std::size_t n, std::size_t nb, std::size_t nn,
                                 const GenControls& controls, const SdoEigOverrides& ov) {
  RngStream stream(controls.seed, controls.stream_id);
  return eig_optimal_impl(m, n, nb, nn, controls, ov, stream);
}

SdoGenerated gen_sdo_maxcomp(std::size_t m, std::size_t n, std::size_t nb, std::size_t nn,
                             const GenControls& controls, const SdoEigOverrides& ov) {
  RngStream stream(controls.seed, controls.stream_id);
  return maxcomp_impl(m, n, nb, nn, controls, ov, stream);
}

SdoGenerated gen_sdo_maxcomp_bempty(std::size_t m, std::size_t n, std::size_t nn,
                                    const GenControls& controls, const SdoEigOverrides& ov) {
  check_dims(m, n, controls);
  detail::require(nn >= 1 && nn <= n, "gen_sdo_maxcomp_bempty: require 1 <= nN <= n");
  detail::require(m <= nn,
                  "gen_sdo_maxcomp_bempty: m independent constraints need m <= nN");
  RngStream stream(controls.seed, controls.stream_id);
  const std::size_t nt = n - nn;
  const Vector lambda = eig_draw(nn, stream);
  const Matrix q = basis_or_draw(n, ov, stream);

  std::vector<Matrix> as;
  bool ok = false;
  for (int attempt = 0; attempt < randkit::kMaxRegenerations && !ok; ++attempt) {
    as.clear();
    for (std::size_t i = 0; i < m; ++i)
      as.push_back(kernels::congruence(q, concat({zero_vec(nt), randkit::signed_vector(nn, stream)})));
    ok = independent(as);
  }
  if (!ok) throw GenerationError("gen_sdo_maxcomp_bempty: constraints not linearly independent");
  scale_constraints(as, controls);

  SdoSolution sol;
  sol.x = zeros(n);
  sol.s = kernels::congruence(q, concat({zero_vec(nt), lambda}));
  sol.y = randkit::signed_vector(m, stream);

  SdoGenerated g;
  g.instance = assemble(std::move(as), sol, g.certificate, controls);
  SdoCertificate& cert = g.certificate;
  cert.optimal = std::move(sol);
  set_partition(cert, n, 0, nn);
  cert.basis = q;
  cert.strictly_complementary = nt == 0;
  cert.maximally_complementary = true;
  cert.partition_status = PartitionStatus::optimal;
  return g;
}

SdoGenerated gen_sdo_eig_both(std::size_t m, std::size_t n, std::size_t nb, std::size_t nn,
                              const GenControls& controls, SdoBothVariant variant,
                              const SdoEigOverrides& ov) {
  RngStream stream(controls.seed, controls.stream_id);
  SdoGenerated inner = eig_optimal_impl(m, n, nb, nn, controls, ov, stream);
  return extend_eig(std::move(inner), variant == SdoBothVariant::special, controls, stream);
}

SdoGenerated gen_sdo_maxcomp_both(std::size_t m, std::size_t n, std::size_t nb, std::size_t nn,
                                  const GenControls& controls, const SdoEigOverrides& ov) {
  RngStream stream(controls.seed, controls.stream_id);
  SdoGenerated inner = maxcomp_impl(m, n, nb, nn, controls, ov, stream);
  return extend_eig(std::move(inner), false, controls, stream);
}

}  // namespace conicgen
