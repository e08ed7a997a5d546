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

#include "csgeom/volume.hpp"

#include <numbers>
#include <stdexcept>

namespace csgeom {
namespace {

void check_radius(double r) {
  if (!(std::isfinite(r) && r > 0.0)) throw std::invalid_argument("radius must be positive and finite");
}

// ln of r^n/n! * prod n_delta! pi^(n_delta/2) / Gamma(n_delta/2 + 1)
double log_unweighted(const SpaceSpec& spec, double r) {
  const double n = static_cast<double>(spec.dimension_count());
  double log_v = n * std::log(r) - log_gamma(n + 1.0);
  for (int size : spec.domain_sizes()) {
    const double m = size;
    log_v += log_gamma(m + 1.0) + 0.5 * m * std::log(std::numbers::pi) - log_gamma(0.5 * m + 1.0);
  }
  return log_v;
}

double log_stretch_product(const SpaceSpec& spec, const WeightSet& weights) {
  double sum = 0.0;
  for (double s : weight_stretch_factors(spec, weights)) sum += std::log(s);
  return sum;
}

}  // namespace

void BallQuery::validate() const {
  check_radius(radius);
  if (weights) validate_weights(spec, *weights);
}

CombinedMetric BallQuery::metric() const {
  return weights ? CombinedMetric(spec, *weights) : CombinedMetric::unweighted(spec);
}

LogVolume angular_measure(int m) {
  if (m < 1) throw std::invalid_argument("angular_measure requires m >= 1");
  if (m == 1) return {std::numbers::ln2};
  const double half = 0.5 * m;
  return {std::numbers::ln2 + half * std::log(std::numbers::pi) - log_gamma(half)};
}

LogVolume radial_simplex_integral(double r, std::span<const int> sizes) {
  if (sizes.empty()) throw std::invalid_argument("radial_simplex_integral requires at least one size");
  check_radius(r);
  double n = 0.0;
  double log_v = 0.0;
  for (int size : sizes) {
    if (size < 1) throw std::invalid_argument("domain sizes must be >= 1");
    n += size;
    log_v += log_gamma(static_cast<double>(size));
  }
  return {log_v + n * std::log(r) - log_gamma(n + 1.0)};
}

LogVolume ball_volume_unweighted(const BallQuery& query) {
  if (query.weights) throw std::invalid_argument("ball_volume_unweighted called with weights");
  check_radius(query.radius);
  return {log_unweighted(query.spec, query.radius)};
}

LogVolume ball_volume_weighted(const BallQuery& query) {
  if (!query.weights) throw std::invalid_argument("ball_volume_weighted called without weights");
  check_radius(query.radius);
  return {log_unweighted(query.spec, query.radius) - log_stretch_product(query.spec, *query.weights)};
}

LogVolume ball_volume(const BallQuery& query) {
  return query.weights ? ball_volume_weighted(query) : ball_volume_unweighted(query);
}

std::vector<double> weight_stretch_factors(const SpaceSpec& spec, const WeightSet& weights) {
  const WeightSet w = normalize_weights(spec, weights);
  std::vector<double> factors;
  factors.reserve(spec.dimension_count());
  for (const auto& d : spec.domains()) {
    const double domain_weight = w.domain_weights.find(d.name)->second;
    for (const auto& dim : d.dimensions) {
      factors.push_back(domain_weight * std::sqrt(w.dimension_weights.find(dim)->second));
    }
  }
  return factors;
}

double radius_from_log_volume(const SpaceSpec& spec, const std::optional<WeightSet>& weights, double log_volume) {
  if (!std::isfinite(log_volume)) throw std::invalid_argument("log volume must be finite");
  // V(r) = V(1) r^n
  double log_unit = log_unweighted(spec, 1.0);
  if (weights) log_unit -= log_stretch_product(spec, *weights);
  return std::exp((log_volume - log_unit) / static_cast<double>(spec.dimension_count()));
}

double radius_from_volume(const SpaceSpec& spec, const std::optional<WeightSet>& weights, double volume) {
  if (!(std::isfinite(volume) && volume > 0.0)) throw std::invalid_argument("volume must be positive");
  return radius_from_log_volume(spec, weights, std::log(volume));
}

double radius_from_similarity(const SimilarityParams& params, double alpha) {
  params.validate();
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
  return -std::log(alpha) / params.c;
}

}  // namespace csgeom
