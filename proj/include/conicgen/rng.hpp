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

#include <cstdint>
#include <random>

namespace conicgen {

/// Seeded, splittable pseudo-random stream.
///
/// The engine state is derived from (seed, stream id) through std::seed_seq,
/// whose mixing algorithm is fixed by the standard, and doubles are built from
/// the top 53 bits of each draw. Both steps are implementation independent, so
/// a given (seed, stream id) yields the same sequence on every platform.
/// Distinct stream ids under one seed give unrelated subsequences; batch
/// generation hands stream id k to instance k.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint32_t stream_id);

  std::uint64_t seed() const { return seed_; }
  std::uint32_t stream_id() const { return stream_id_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1).
  double next_unit();

  /// Uniform on [lo, hi). Throws ArgumentError unless lo < hi.
  double uniform(double lo, double hi);

  /// Uniform integer on [0, bound). Throws ArgumentError when bound is 0.
  std::uint64_t below(std::uint64_t bound);

  /// +1 or -1 with equal probability.
  double sign();

 private:
  std::uint64_t seed_;
  std::uint32_t stream_id_;
  std::mt19937_64 engine_;
};

/// Draw from [lo, hi) and advance the stream.
double next_uniform(RngStream& stream, double lo, double hi);

}  // namespace conicgen
