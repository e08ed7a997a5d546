// Copyright 2026 The csgeom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>

namespace csgeom {

/// Philox4x32-10 block function: maps (counter, key) to four 32-bit words.
using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;
PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key);

/**
 * @brief Counter-based random stream.
 *
 * Stream `id` under `seed` is an independent sequence of 2^64 blocks: the
 * seed is the Philox key and the id occupies the high half of the counter.
 * Any substream can be produced without stepping through the others, which
 * is what makes chunked Monte-Carlo runs independent of thread count.
 */
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t id);

  std::uint64_t next_u64();

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);
  /// Standard normal via Box-Muller; the second variate is kept for the next call.
  double normal();
  /// Exponential with unit rate.
  double exponential();
  /// Gamma(shape, 1) for integer shape >= 1 as a sum of exponentials.
  double gamma_integer(int shape);

 private:
  void refill();

  PhiloxKey key_;
  std::uint64_t id_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int available_ = 0;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace csgeom
