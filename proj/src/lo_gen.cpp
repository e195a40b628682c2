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

#include "conicgen/lo_gen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "conicgen/error.hpp"
#include "conicgen/kernels.hpp"

namespace conicgen {

namespace {

void check_dims(std::size_t m, std::size_t n) {
  detail::require(m >= 1, "LO generator: m must be positive");
  detail::require(m < n, "LO generator: require m < n");
}

Matrix constraint_matrix(std::size_t m, std::size_t n, const GenControls& controls,
                         const std::optional<Matrix>& fixed, RngStream& stream) {
  if (fixed) {
    detail::require(fixed->rows() == static_cast<Eigen::Index>(m) &&
                        fixed->cols() == static_cast<Eigen::Index>(n),
                    "LO generator: supplied A has the wrong shape");
    detail::require(numerical_rank(*fixed, 1e-10) == m,
                    "LO generator: supplied A lacks full row rank");
    return *fixed;
  }
  return randkit::gen_matrix(constraint_recipe(m, n, controls), stream);
}

void check_length(const Vector& v, std::size_t n, const char* what) {
  detail::require(v.size() == static_cast<Eigen::Index>(n),
                  std::string("LO generator: ") + what + " has the wrong length");
}

// Scale `v` (and optionally `w`) so that `image` reaches `target`. Returns the factor.
double scale_to_target(const std::optional<double>& target, double image_norm, const char* what) {
  if (!target) return 1.0;
  detail::require(*target > 0.0, std::string("LO generator: ") + what + " target must be positive");
  if (image_norm == 0.0) {
    throw GenerationError(std::string("LO generator: ") + what +
                          " is identically zero, norm target unreachable");
  }
  return *target / image_norm;
}

LoGenerated lo_optimal_impl(std::size_t m, std::size_t n, const std::vector<std::size_t>& basic,
                            const GenControls& controls, bool strict,
                            const LoOptimalOverrides& ov, RngStream& stream) {
  check_dims(m, n);
  const std::vector<std::size_t> nonbasic = complement_indices(n, basic);

  Matrix a = constraint_matrix(m, n, controls, ov.a, stream);

  const auto k = static_cast<Eigen::Index>(n);
  auto draw_support = [&](const std::vector<std::size_t>& support) {
    Vector v = Vector::Zero(k);
    for (std::size_t j : support) {
      const auto jj = static_cast<Eigen::Index>(j);
      v(jj) = stream.uniform(randkit::kPositiveLo, randkit::kPositiveHi);
      if (!strict && stream.below(4) == 0) v(jj) = 0.0;
    }
    return v;
  };
  auto check_support = [&](const Vector& v, const std::vector<std::size_t>& support,
                           const std::vector<std::size_t>& zeros, const char* what) {
    check_length(v, n, what);
    for (std::size_t j : zeros)
      detail::require(v(static_cast<Eigen::Index>(j)) == 0.0,
                      std::string("LO generator: ") + what + " must vanish off its support");
    for (std::size_t j : support) {
      const double vj = v(static_cast<Eigen::Index>(j));
      detail::require(strict ? vj > 0.0 : vj >= 0.0,
                      std::string("LO generator: ") + what + " has an inadmissible sign");
    }
  };

  Vector x = ov.x ? *ov.x : draw_support(basic);
  Vector s = ov.s ? *ov.s : draw_support(nonbasic);
  check_support(x, basic, nonbasic, "x*");
  check_support(s, nonbasic, basic, "s*");
  Vector y = ov.y ? *ov.y : randkit::signed_vector(m, stream);
  check_length(y, m, "y*");

  LoCertificate cert;
  cert.primal_scale = scale_to_target(controls.norm_b, kernels::gemv(a, x).norm(), "b");
  x *= cert.primal_scale;
  cert.dual_scale = scale_to_target(controls.norm_c, (kernels::gemv_t(a, y) + s).norm(), "c");
  y *= cert.dual_scale;
  s *= cert.dual_scale;

  LinearInstance inst{a, kernels::gemv(a, x), kernels::gemv_t(a, y) + s};

  cert.strictly_complementary = (x + s).minCoeff() > 0.0;
  if (basic.size() == m) {
    Matrix ab(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    bool positive = true;
    for (std::size_t i = 0; i < basic.size(); ++i) {
      const auto j = static_cast<Eigen::Index>(basic[i]);
      ab.col(static_cast<Eigen::Index>(i)) = a.col(j);
      positive = positive && x(j) > 0.0;
    }
    cert.unique_basis = positive && cert.strictly_complementary && numerical_rank(ab, 1e-10) == m;
  }
  cert.basic = basic;
  std::sort(cert.basic.begin(), cert.basic.end());
  cert.nonbasic = nonbasic;
  cert.optimal = LoSolution{x, y, s};
  return {std::move(inst), std::move(cert)};
}

}  // namespace

std::vector<std::size_t> complement_indices(std::size_t n, const std::vector<std::size_t>& basic) {
  std::vector<char> seen(n, 0);
  for (std::size_t j : basic) {
    detail::require(j < n, "partition index " + std::to_string(j) + " out of range");
    detail::require(!seen[j], "partition index " + std::to_string(j) + " listed twice");
    seen[j] = 1;
  }
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n; ++j)
    if (!seen[j]) out.push_back(j);
  return out;
}

LoGenerated gen_lo_interior(std::size_t m, std::size_t n, const GenControls& controls,
                            const LoInteriorOptions& options) {
  check_dims(m, n);
  detail::require(!(options.mu && options.s0), "gen_lo_interior: mu and s0 are mutually exclusive");
  if (options.mu) {
    detail::require(*options.mu > 0.0, "gen_lo_interior: mu must be positive");
    detail::require(!controls.norm_b && !controls.norm_c,
                    "gen_lo_interior: norm targets would break the mu coupling");
  }
  RngStream stream(controls.seed, controls.stream_id);
  Matrix a = constraint_matrix(m, n, controls, options.a, stream);

  Vector x0 = options.x0 ? *options.x0 : randkit::positive_vector(n, stream);
  check_length(x0, n, "x0");
  detail::require(x0.minCoeff() > 0.0, "gen_lo_interior: x0 must be strictly positive");
  Vector s0;
  if (options.mu) {
    s0 = (*options.mu) * x0.cwiseInverse();
  } else {
    s0 = options.s0 ? *options.s0 : randkit::positive_vector(n, stream);
  }
  check_length(s0, n, "s0");
  detail::require(s0.minCoeff() > 0.0, "gen_lo_interior: s0 must be strictly positive");
  Vector y0 = options.y0 ? *options.y0 : randkit::signed_vector(m, stream);
  check_length(y0, m, "y0");

  LoCertificate cert;
  cert.primal_scale = scale_to_target(controls.norm_b, kernels::gemv(a, x0).norm(), "b");
  x0 *= cert.primal_scale;
  cert.dual_scale = scale_to_target(controls.norm_c, (kernels::gemv_t(a, y0) + s0).norm(), "c");
  y0 *= cert.dual_scale;
  s0 *= cert.dual_scale;

  LinearInstance inst{a, kernels::gemv(a, x0), kernels::gemv_t(a, y0) + s0};
  cert.interior = LoSolution{x0, y0, s0};
  cert.mu = options.mu;
  return {std::move(inst), std::move(cert)};
}

LoGenerated gen_lo_optimal(std::size_t m, std::size_t n, const std::vector<std::size_t>& basic,
                           const GenControls& controls, bool strict,
                           const LoOptimalOverrides& overrides) {
  RngStream stream(controls.seed, controls.stream_id);
  return lo_optimal_impl(m, n, basic, controls, strict, overrides, stream);
}

LoGenerated gen_lo_both(std::size_t m, std::size_t n, const std::vector<std::size_t>& basic,
                        const GenControls& controls, LoBothVariant variant,
                        const LoBothOverrides& ov) {
  check_dims(m, n);
  detail::require(ov.inner.has_value() == ov.inner_optimal.has_value(),
                  "gen_lo_both: inner instance and inner solution must be supplied together");
  RngStream stream(controls.seed, controls.stream_id);

  LinearInstance inner;
  LoCertificate inner_cert;
  if (ov.inner) {
    inner = *ov.inner;
    detail::require(inner.a.rows() == static_cast<Eigen::Index>(m) &&
                        inner.a.cols() == static_cast<Eigen::Index>(n),
                    "gen_lo_both: inner instance has the wrong shape");
    inner_cert.optimal = *ov.inner_optimal;
    inner_cert.basic = basic;
    inner_cert.nonbasic = complement_indices(n, basic);
  } else {
    GenControls plain = controls;
    plain.norm_a.reset();
    plain.norm_b.reset();
    plain.norm_c.reset();
    LoGenerated g = lo_optimal_impl(m, n, basic, plain, true, {}, stream);
    inner = std::move(g.instance);
    inner_cert = std::move(g.certificate);
  }
  const LoSolution& hat = *inner_cert.optimal;
  const std::vector<std::size_t>& nonbasic = inner_cert.nonbasic;
  const auto kn = static_cast<Eigen::Index>(n);
  const auto km = static_cast<Eigen::Index>(m);

  // Interior pieces on the first n coordinates plus the appended entries.
  Vector x0(kn + 1), s0(kn + 1), y0(km + 1);
  if (variant == LoBothVariant::general) {
    x0.head(kn) = randkit::positive_vector(n, stream);
    s0.head(kn) = randkit::positive_vector(n, stream);
    y0.head(km) = randkit::signed_vector(m, stream);
    y0(km) = nonzero_scalar(stream);
    x0(kn) = stream.uniform(randkit::kPositiveLo, randkit::kPositiveHi);
  } else {
    const bool simplest = variant == LoBothVariant::simplest;
    for (std::size_t j : basic) {
      const auto jj = static_cast<Eigen::Index>(j);
      x0(jj) = hat.x(jj);
      s0(jj) = simplest ? 1.0 : stream.uniform(randkit::kPositiveLo, randkit::kPositiveHi);
    }
    for (std::size_t j : nonbasic) {
      const auto jj = static_cast<Eigen::Index>(j);
      x0(jj) = simplest ? 1.0 : stream.uniform(randkit::kPositiveLo, randkit::kPositiveHi);
      s0(jj) = hat.s(jj);
    }
    y0.head(km) = hat.y;
    y0(km) = simplest ? 1.0 : nonzero_scalar(stream);
    x0(kn) = simplest ? 1.0 : stream.uniform(randkit::kPositiveLo, randkit::kPositiveHi);
  }
  if (ov.x0) {
    detail::require(ov.x0->size() == kn + 1, "gen_lo_both: x0 must have n+1 entries");
    x0 = *ov.x0;
  }
  if (ov.y0) {
    detail::require(ov.y0->size() == km + 1, "gen_lo_both: y0 must have m+1 entries");
    y0 = *ov.y0;
  }
  if (ov.s0) {
    detail::require(ov.s0->size() == kn + 1, "gen_lo_both: s0 must have n+1 entries");
    s0 = *ov.s0;
  }
  detail::require(x0.minCoeff() > 0.0, "gen_lo_both: x0 must be strictly positive");
  detail::require(s0.head(kn).minCoeff() > 0.0, "gen_lo_both: s0 must be strictly positive");
  detail::require(y0(km) != 0.0, "gen_lo_both: y0_{m+1} must be nonzero");

  const Vector dx = hat.x - x0.head(kn);  // x_hat - x0
  const Vector ds = hat.s - s0.head(kn);  // s_hat - s0
  const double delta = dx.dot(ds);
  const double xl = x0(kn);
  const double bound = positive_part(-delta / xl);
  if (ov.s0) {
    detail::require(s0(kn) > bound, "gen_lo_both: s0_{n+1} must exceed (-delta/x0_{n+1})^+");
  } else if (variant == LoBothVariant::simplest) {
    s0(kn) = 1.0;
  } else {
    s0(kn) = bound + strict_margin(delta / xl, controls.margin);
  }
  const double s_last = delta / xl + s0(kn);

  const Matrix& ah = inner.a;
  const Vector dy = hat.y - y0.head(km);
  const Vector a_last = kernels::gemv(ah, dx) / xl;
  const Vector d = (kernels::gemv_t(ah, dy) + ds) / y0(km);
  const double d_last = d.dot(dx) / xl;

  LinearInstance inst;
  inst.a.resize(km + 1, kn + 1);
  inst.a.topLeftCorner(km, kn) = ah;
  inst.a.topRightCorner(km, 1) = a_last;
  inst.a.bottomLeftCorner(1, kn) = d.transpose();
  inst.a(km, kn) = d_last;
  inst.b.resize(km + 1);
  inst.b.head(km) = inner.b;
  inst.b(km) = d.dot(hat.x);
  inst.c.resize(kn + 1);
  inst.c.head(kn) = inner.c;
  inst.c(kn) = a_last.dot(hat.y) + s_last;

  LoSolution opt;
  opt.x = Vector::Zero(kn + 1);
  opt.x.head(kn) = hat.x;
  opt.y = Vector::Zero(km + 1);
  opt.y.head(km) = hat.y;
  opt.s.resize(kn + 1);
  opt.s.head(kn) = hat.s;
  opt.s(kn) = s_last;

  const double lemma = (x0 - opt.x).dot(s0 - opt.s);
  const double scale = 1.0 + (x0 - opt.x).norm() * (s0 - opt.s).norm();
  if (std::abs(lemma) > 1e-9 * scale) {
    throw std::logic_error("gen_lo_both: orthogonality bookkeeping broken, residual " +
                           std::to_string(lemma));
  }

  // Norm targets act on the extended instance. Scaling A by g and y by 1/g
  // keeps both residual identities; the remaining factors scale x and (y, s).
  if (controls.norm_a) {
    const double g = scale_to_target(controls.norm_a, inst.a.norm(), "A");
    inst.a *= g;
    inst.b *= g;
    opt.y /= g;
    y0 /= g;
  }
  LoCertificate cert;
  cert.primal_scale = scale_to_target(controls.norm_b, inst.b.norm(), "b");
  cert.dual_scale = scale_to_target(controls.norm_c, inst.c.norm(), "c");
  inst.b *= cert.primal_scale;
  opt.x *= cert.primal_scale;
  x0 *= cert.primal_scale;
  inst.c *= cert.dual_scale;
  for (Vector* v : {&opt.y, &opt.s, &y0, &s0}) *v *= cert.dual_scale;

  cert.interior = LoSolution{x0, y0, s0};
  cert.optimal = opt;
  cert.basic = inner_cert.basic;
  cert.nonbasic = nonbasic;
  cert.nonbasic.push_back(n);
  cert.strictly_complementary = (opt.x + opt.s).minCoeff() > 0.0;
  return {std::move(inst), std::move(cert)};
}

}  // namespace conicgen
