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

// Serial reference kernels against their OpenMP counterparts.
// Run with OMP_NUM_THREADS set to compare thread counts.

#include <vector>

#include <benchmark/benchmark.h>

#include "conicgen/kernels.hpp"
#include "conicgen/randkit.hpp"

using namespace conicgen;
namespace ks = conicgen::kernels::serial;
namespace kp = conicgen::kernels::parallel;

namespace {

Matrix square(std::int64_t n, std::uint64_t seed) {
  RngStream s(seed, 0);
  return randkit::uniform_vector(std::size_t(n * n), -1.0, 1.0, s).reshaped(n, n);
}

Vector vec(std::int64_t n, std::uint64_t seed) {
  RngStream s(seed, 1);
  return randkit::uniform_vector(std::size_t(n), -1.0, 1.0, s);
}

std::vector<Matrix> family(std::int64_t count, std::int64_t n) {
  std::vector<Matrix> out;
  for (std::int64_t i = 0; i < count; ++i) out.push_back(square(n, 100 + std::uint64_t(i)));
  return out;
}

template <Vector (*F)(const Matrix&, const Vector&)>
void BM_gemv(benchmark::State& st) {
  const Matrix a = square(st.range(0), 1);
  const Vector x = vec(st.range(0), 2);
  for (auto _ : st) benchmark::DoNotOptimize(F(a, x));
}

template <Vector (*F)(std::span<const Matrix>, const Matrix&)>
void BM_trace(benchmark::State& st) {
  const auto as = family(32, st.range(0));
  const Matrix x = square(st.range(0), 3);
  for (auto _ : st) benchmark::DoNotOptimize(F(as, x));
}

template <Matrix (*F)(std::span<const Matrix>, const Vector&, const Matrix&)>
void BM_combine(benchmark::State& st) {
  const auto as = family(32, st.range(0));
  const Vector w = vec(32, 4);
  const Matrix base = square(st.range(0), 5);
  for (auto _ : st) benchmark::DoNotOptimize(F(as, w, base));
}

template <Matrix (*F)(const Matrix&, const Vector&)>
void BM_congruence(benchmark::State& st) {
  RngStream s(6, 0);
  const Matrix q = randkit::gen_orthonormal(std::size_t(st.range(0)), s);
  const Vector d = vec(st.range(0), 7);
  for (auto _ : st) benchmark::DoNotOptimize(F(q, d));
}

template <Matrix (*F)(const Matrix&)>
void BM_gram(benchmark::State& st) {
  const Matrix a = square(st.range(0), 8);
  for (auto _ : st) benchmark::DoNotOptimize(F(a));
}

}  // namespace

#define SIZES RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond)->UseRealTime()
#define SMALL RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMicrosecond)->UseRealTime()

BENCHMARK(BM_gemv<ks::gemv>)->Name("gemv/serial")->SIZES;
BENCHMARK(BM_gemv<kp::gemv>)->Name("gemv/parallel")->SIZES;
BENCHMARK(BM_gemv<ks::gemv_t>)->Name("gemv_t/serial")->SIZES;
BENCHMARK(BM_gemv<kp::gemv_t>)->Name("gemv_t/parallel")->SIZES;
BENCHMARK(BM_trace<ks::trace_products>)->Name("trace_products/serial")->SMALL;
BENCHMARK(BM_trace<kp::trace_products>)->Name("trace_products/parallel")->SMALL;
BENCHMARK(BM_combine<ks::combine>)->Name("combine/serial")->SMALL;
BENCHMARK(BM_combine<kp::combine>)->Name("combine/parallel")->SMALL;
BENCHMARK(BM_congruence<ks::congruence>)->Name("congruence/serial")->SMALL;
BENCHMARK(BM_congruence<kp::congruence>)->Name("congruence/parallel")->SMALL;
BENCHMARK(BM_gram<ks::gram>)->Name("gram/serial")->SMALL;
BENCHMARK(BM_gram<kp::gram>)->Name("gram/parallel")->SMALL;

BENCHMARK_MAIN();
