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

#include "csgeom/metric.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace csgeom {
namespace {

std::vector<std::size_t> offsets_of(const SpaceSpec& spec) {
  std::vector<std::size_t> offsets;
  for (std::size_t i = 0; i <= spec.domain_count(); ++i) offsets.push_back(spec.domain_offset(i));
  return offsets;
}

}  // namespace

void SimilarityParams::validate() const {
  if (!(std::isfinite(c) && c > 0.0)) {
    throw std::invalid_argument("similarity constant c must be positive and finite");
  }
}

CombinedMetric::CombinedMetric(std::vector<std::size_t> offsets, std::vector<double> domain_weights,
                               std::vector<double> dimension_weights)
    : offsets_(std::move(offsets)),
      domain_weights_(std::move(domain_weights)),
      dimension_weights_(std::move(dimension_weights)) {}

CombinedMetric CombinedMetric::unweighted(const SpaceSpec& spec) {
  return CombinedMetric(offsets_of(spec), std::vector<double>(spec.domain_count(), 1.0),
                        std::vector<double>(spec.dimension_count(), 1.0));
}

CombinedMetric::CombinedMetric(const SpaceSpec& spec, const WeightSet& weights) : offsets_(offsets_of(spec)) {
  const WeightSet w = normalize_weights(spec, weights);
  for (const auto& d : spec.domains()) {
    domain_weights_.push_back(w.domain_weights.find(d.name)->second);
    for (const auto& dim : d.dimensions) dimension_weights_.push_back(w.dimension_weights.find(dim)->second);
  }
}

void CombinedMetric::check_size(std::span<const double> x) const {
  if (x.size() != dimension_weights_.size()) {
    throw std::invalid_argument("point has " + std::to_string(x.size()) + " coordinates, space has " +
                                std::to_string(dimension_weights_.size()) + " dimensions");
  }
}

double CombinedMetric::domain_distance(std::size_t domain, std::span<const double> x,
                                       std::span<const double> y) const {
  check_size(x);
  check_size(y);
  if (domain >= domain_count()) throw std::invalid_argument("domain index out of range");
  double sum = 0.0;
  for (std::size_t j = offsets_[domain]; j < offsets_[domain + 1]; ++j) {
    const double diff = x[j] - y[j];
    sum += dimension_weights_[j] * diff * diff;
  }
  return std::sqrt(sum);
}

double CombinedMetric::domain_norm(std::size_t domain, std::span<const double> x) const {
  check_size(x);
  if (domain >= domain_count()) throw std::invalid_argument("domain index out of range");
  double sum = 0.0;
  for (std::size_t j = offsets_[domain]; j < offsets_[domain + 1]; ++j) {
    sum += dimension_weights_[j] * x[j] * x[j];
  }
  return std::sqrt(sum);
}

double CombinedMetric::distance(std::span<const double> x, std::span<const double> y) const {
  check_size(x);
  check_size(y);
  double total = 0.0;
  for (std::size_t i = 0; i < domain_weights_.size(); ++i) {
    double sum = 0.0;
    for (std::size_t j = offsets_[i]; j < offsets_[i + 1]; ++j) {
      const double diff = x[j] - y[j];
      sum += dimension_weights_[j] * diff * diff;
    }
    total += domain_weights_[i] * std::sqrt(sum);
  }
  return total;
}

double CombinedMetric::norm(std::span<const double> x) const {
  check_size(x);
  double total = 0.0;
  for (std::size_t i = 0; i < domain_weights_.size(); ++i) {
    double sum = 0.0;
    for (std::size_t j = offsets_[i]; j < offsets_[i + 1]; ++j) sum += dimension_weights_[j] * x[j] * x[j];
    total += domain_weights_[i] * std::sqrt(sum);
  }
  return total;
}

double domain_distance(const SpaceSpec& spec, const WeightSet& weights, std::string_view domain,
                       const Point& x, const Point& y) {
  const auto index = spec.find_domain(domain);
  if (!index) throw std::invalid_argument("unknown domain `" + std::string(domain) + "`");
  check_conforms(spec, x);
  check_conforms(spec, y);
  return CombinedMetric(spec, weights).domain_distance(*index, x.coords(), y.coords());
}

double combined_distance(const SpaceSpec& spec, const WeightSet& weights, const Point& x, const Point& y) {
  check_conforms(spec, x);
  check_conforms(spec, y);
  return CombinedMetric(spec, weights).distance(x.coords(), y.coords());
}

double similarity_from_distance(const SimilarityParams& params, double distance) {
  params.validate();
  return std::exp(-params.c * distance);
}

double similarity(const SpaceSpec& spec, const WeightSet& weights, const SimilarityParams& params,
                  const Point& x, const Point& y) {
  params.validate();
  return similarity_from_distance(params, combined_distance(spec, weights, x, y));
}

}  // namespace csgeom
