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
#include <span>
#include <string_view>
#include <vector>

#include "csgeom/space.hpp"

namespace csgeom {

/// Sensitivity constant of the exponential similarity, c > 0.
struct SimilarityParams {
  double c = 1.0;

  /// Throws std::invalid_argument unless c is positive and finite.
  void validate() const;
};

/**
 * @brief Combined distance: a weighted sum over domains of weighted
 * Euclidean distances inside each domain.
 *
 * d(x, y) = sum_delta w_delta * sqrt(sum_{d in delta} w_d * (x_d - y_d)^2)
 *
 * Weights are resolved to coordinate order once, so evaluation is a flat
 * loop. Domains are summed in SpaceSpec order. Plain (uncompensated)
 * summation; accurate enough for the tens of dimensions this targets.
 */
class CombinedMetric {
 public:
  /// Unit weights everywhere: the unweighted combined metric. With
  /// singleton domains this is the Manhattan distance.
  static CombinedMetric unweighted(const SpaceSpec& spec);

  /// Validates `weights` against `spec` and renormalizes them.
  CombinedMetric(const SpaceSpec& spec, const WeightSet& weights);

  std::size_t dimension_count() const noexcept { return dimension_weights_.size(); }
  std::size_t domain_count() const noexcept { return domain_weights_.size(); }

  /// Weighted Euclidean distance inside one domain, without w_delta.
  double domain_distance(std::size_t domain, std::span<const double> x, std::span<const double> y) const;
  /// Same, measured from the origin.
  double domain_norm(std::size_t domain, std::span<const double> x) const;

  double distance(std::span<const double> x, std::span<const double> y) const;
  /// Distance from the origin.
  double norm(std::span<const double> x) const;

  std::span<const double> domain_weights() const noexcept { return domain_weights_; }
  std::span<const double> dimension_weights() const noexcept { return dimension_weights_; }

 private:
  CombinedMetric(std::vector<std::size_t> offsets, std::vector<double> domain_weights,
                 std::vector<double> dimension_weights);

  void check_size(std::span<const double> x) const;

  std::vector<std::size_t> offsets_;
  std::vector<double> domain_weights_;
  std::vector<double> dimension_weights_;
};

/// Weighted Euclidean distance inside the named domain.
/// Throws std::invalid_argument for an unknown domain or nonconforming point.
double domain_distance(const SpaceSpec& spec, const WeightSet& weights, std::string_view domain,
                       const Point& x, const Point& y);

double combined_distance(const SpaceSpec& spec, const WeightSet& weights, const Point& x, const Point& y);

/// exp(-c * d).
double similarity_from_distance(const SimilarityParams& params, double distance);

/// exp(-c * combined_distance(x, y)); lies in (0, 1].
double similarity(const SpaceSpec& spec, const WeightSet& weights, const SimilarityParams& params,
                  const Point& x, const Point& y);

}  // namespace csgeom
