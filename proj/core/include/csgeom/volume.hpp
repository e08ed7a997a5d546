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

#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "csgeom/metric.hpp"
#include "csgeom/space.hpp"
#include "csgeom/special_functions.hpp"

/// @file volume.hpp
///
/// Closed-form hypervolume of balls under the combined metric. Everything is
/// composed in log space; factorials and Gamma values overflow a double
/// beyond n of about 170 while their logs stay small.

namespace csgeom {

/// A positive hypervolume stored as its natural log.
struct LogVolume {
  double log_value = 0.0;

  /// exp(log_value); +inf when the volume exceeds the double range.
  double value() const { return std::exp(log_value); }
  bool representable() const { return std::isfinite(value()); }
};

/// Ball of radius r around any center (the volume is translation invariant).
/// Without weights the unweighted metric applies (all weights one).
struct BallQuery {
  SpaceSpec spec;
  double radius = 1.0;
  std::optional<WeightSet> weights;

  /// Throws std::invalid_argument unless radius is positive and finite, and
  /// ConstraintError if the weights are invalid for spec.
  void validate() const;

  /// The metric that defines this ball.
  CombinedMetric metric() const;
};

/// Total angular measure of the unit (m-1)-sphere: 2 pi^(m/2) / Gamma(m/2).
/// For m = 1 this is 2, the two directions along a line.
LogVolume angular_measure(int m);

/// Integral of prod_i r_i^(n_i - 1) over { r_i >= 0, sum r_i <= r }:
/// r^n / Gamma(n + 1) * prod_i Gamma(n_i), with n = sum n_i.
LogVolume radial_simplex_integral(double r, std::span<const int> sizes);

/// Volume under the unweighted combined metric:
/// r^n / n! * prod_delta n_delta! pi^(n_delta/2) / Gamma(n_delta/2 + 1).
/// Throws std::invalid_argument if the query carries weights.
LogVolume ball_volume_unweighted(const BallQuery& query);

/// Unweighted volume divided by prod over all dimensions of w_delta sqrt(w_d).
/// Throws std::invalid_argument if the query has no weights.
LogVolume ball_volume_weighted(const BallQuery& query);

/// Dispatches on whether the query carries weights.
LogVolume ball_volume(const BallQuery& query);

/// s_d = w_delta * sqrt(w_d) in coordinate order. The weighted unit ball is
/// the unweighted one with coordinate d scaled by 1 / s_d.
std::vector<double> weight_stretch_factors(const SpaceSpec& spec, const WeightSet& weights);

/// Radius whose ball has volume exp(log_volume).
double radius_from_log_volume(const SpaceSpec& spec, const std::optional<WeightSet>& weights, double log_volume);

/// Radius whose ball has volume v > 0.
double radius_from_volume(const SpaceSpec& spec, const std::optional<WeightSet>& weights, double volume);

/// Radius of { y : similarity(p, y) >= alpha }, i.e. -ln(alpha) / c.
double radius_from_similarity(const SimilarityParams& params, double alpha);

}  // namespace csgeom
