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

#include "conicgen/rng.hpp"

#include <cmath>

#include "conicgen/error.hpp"

namespace conicgen {

RngStream::RngStream(std::uint64_t seed, std::uint32_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32), stream_id,
                    0x636f6e69u};
  engine_.seed(seq);
}

double RngStream::next_unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
  if (!(lo < hi)) throw ArgumentError("uniform: require lo < hi");
  double v = lo + (hi - lo) * next_unit();
  // lo + (hi - lo) * u can round up to hi.
  if (v >= hi) v = std::nextafter(hi, lo);
  return v;
}

std::uint64_t RngStream::below(std::uint64_t bound) {
  if (bound == 0) throw ArgumentError("below: bound must be positive");
  // Rejection sampling keeps the result unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

double RngStream::sign() { return (engine_() >> 63) ? -1.0 : 1.0; }

double next_uniform(RngStream& stream, double lo, double hi) {
  return stream.uniform(lo, hi);
}

}  // namespace conicgen
