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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "csgeom/space.hpp"
#include "csgeom/volume.hpp"

/// @file sampler.hpp
///
/// Rejection Monte-Carlo volume estimates and exact uniform sampling inside
/// combined-metric balls. Work is split into fixed-size chunks, and chunk c
/// draws from RandomStream(seed, c), so results depend only on
/// (inputs, seed, trials, chunk_size) and never on the thread count.

namespace csgeom {

struct McConfig {
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 0;
  std::uint64_t chunk_size = 1 << 16;
  /// Worker threads; 0 picks the hardware concurrency. Does not affect results.
  unsigned threads = 0;

  /// Throws std::invalid_argument unless trials >= 1 and chunk_size >= 1.
  void validate() const;
};

struct EstimateReport {
  double volume_estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  double bounding_box_volume = 0.0;
  std::uint64_t seed = 0;

  double hit_rate() const { return trials ? static_cast<double>(hits) / static_cast<double>(trials) : 0.0; }

  friend bool operator==(const EstimateReport&, const EstimateReport&) = default;
};

/// Half-widths r / s_d of the tightest axis-aligned box around the ball
/// (s_d = 1 without weights).
std::vector<double> bounding_box(const BallQuery& query);

/// Fraction of bounding-box samples expected to land in the ball.
double expected_hit_rate(const BallQuery& query);

/// Estimates the ball volume from uniform samples in the bounding box.
EstimateReport mc_volume(const BallQuery& query, const McConfig& config);

struct SampleOptions {
  std::uint64_t chunk_size = 4096;
  unsigned threads = 0;
};

/**
 * @brief Draws `count` points exactly uniformly from the ball around the origin.
 *
 * The total radius is r U^(1/n); it is split between domains by a
 * Dirichlet(n_1, ..., n_k) draw, and each domain gets a uniform direction on
 * its sphere. Weighted balls are the unweighted samples with coordinate d
 * divided by its stretch factor. Every point satisfies norm <= r.
 */
std::vector<Point> sample_in_ball(const BallQuery& query, std::size_t count, std::uint64_t seed,
                                  const SampleOptions& options = {});

/// CSV with a header row of dimension names and one point per row,
/// 17 significant digits.
void write_samples_csv(std::ostream& out, const SpaceSpec& spec, std::span<const Point> points);

}  // namespace csgeom
