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

#include "csgeom/sampler.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "csgeom/random.hpp"
#include "parallel.hpp"

namespace csgeom {
namespace {

// Sampler streams live in the upper half of the stream-id space so they
// never coincide with Monte-Carlo streams for the same seed.
constexpr std::uint64_t kSampleStreamBase = std::uint64_t{1} << 63;

std::uint64_t chunk_count(std::uint64_t total, std::uint64_t chunk_size) {
  return total / chunk_size + (total % chunk_size != 0);
}

std::vector<double> stretch_or_unit(const BallQuery& query) {
  if (query.weights) return weight_stretch_factors(query.spec, *query.weights);
  return std::vector<double>(query.spec.dimension_count(), 1.0);
}

// Draws one point of the unweighted ball of radius r into `out`.
void draw_unweighted(const SpaceSpec& spec, double r, RandomStream& rng, std::vector<double>& fractions,
                     std::span<double> out) {
  const double n = static_cast<double>(spec.dimension_count());
  const double total = r * std::pow(rng.uniform(), 1.0 / n);

  double fraction_sum = 0.0;
  for (std::size_t i = 0; i < spec.domain_count(); ++i) {
    fractions[i] = rng.gamma_integer(static_cast<int>(spec.domain_size(i)));
    fraction_sum += fractions[i];
  }

  for (std::size_t i = 0; i < spec.domain_count(); ++i) {
    const double domain_radius = total * fractions[i] / fraction_sum;
    const std::size_t begin = spec.domain_offset(i);
    const std::size_t end = spec.domain_offset(i + 1);
    double length = 0.0;
    do {
      length = 0.0;
      for (std::size_t j = begin; j < end; ++j) {
        out[j] = rng.normal();
        length += out[j] * out[j];
      }
    } while (length == 0.0);
    const double scale = domain_radius / std::sqrt(length);
    for (std::size_t j = begin; j < end; ++j) out[j] *= scale;
  }
}

}  // namespace

void McConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (chunk_size < 1) throw std::invalid_argument("chunk_size must be >= 1");
}

std::vector<double> bounding_box(const BallQuery& query) {
  query.validate();
  std::vector<double> half_widths = stretch_or_unit(query);
  for (double& h : half_widths) h = query.radius / h;
  return half_widths;
}

double expected_hit_rate(const BallQuery& query) {
  double log_box = 0.0;
  for (double h : bounding_box(query)) log_box += std::log(2.0 * h);
  return std::exp(ball_volume(query).log_value - log_box);
}

EstimateReport mc_volume(const BallQuery& query, const McConfig& config) {
  config.validate();
  const std::vector<double> half_widths = bounding_box(query);
  const CombinedMetric metric = query.metric();
  const std::uint64_t chunks = chunk_count(config.trials, config.chunk_size);
  std::vector<std::uint64_t> chunk_hits(chunks, 0);

  detail::for_each_chunk(chunks, config.threads, [&](std::uint64_t c) {
    RandomStream rng(config.seed, c);
    std::vector<double> x(half_widths.size());
    const std::uint64_t begin = c * config.chunk_size;
    const std::uint64_t end = std::min(config.trials, begin + config.chunk_size);
    std::uint64_t hits = 0;
    for (std::uint64_t t = begin; t < end; ++t) {
      for (std::size_t d = 0; d < x.size(); ++d) x[d] = rng.uniform(-half_widths[d], half_widths[d]);
      if (metric.norm(x) <= query.radius) ++hits;
    }
    chunk_hits[c] = hits;
  });

  EstimateReport report;
  report.trials = config.trials;
  report.seed = config.seed;
  for (std::uint64_t h : chunk_hits) report.hits += h;
  double log_box = 0.0;
  for (double h : half_widths) log_box += std::log(2.0 * h);
  report.bounding_box_volume = std::exp(log_box);
  const double p = report.hit_rate();
  report.volume_estimate = report.bounding_box_volume * p;
  report.std_error = report.bounding_box_volume * std::sqrt(p * (1.0 - p) / static_cast<double>(config.trials));
  return report;
}

std::vector<Point> sample_in_ball(const BallQuery& query, std::size_t count, std::uint64_t seed,
                                  const SampleOptions& options) {
  query.validate();
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  if (options.chunk_size < 1) throw std::invalid_argument("chunk_size must be >= 1");

  const std::vector<double> stretch = stretch_or_unit(query);
  const CombinedMetric metric = query.metric();
  const std::uint64_t chunks = chunk_count(count, options.chunk_size);
  std::vector<Point> points(count);

  detail::for_each_chunk(chunks, options.threads, [&](std::uint64_t c) {
    RandomStream rng(seed, kSampleStreamBase + c);
    std::vector<double> fractions(query.spec.domain_count());
    std::vector<double> x(query.spec.dimension_count());
    const std::uint64_t begin = c * options.chunk_size;
    const std::uint64_t end = std::min<std::uint64_t>(count, begin + options.chunk_size);
    for (std::uint64_t i = begin; i < end; ++i) {
      // Rounding can push a draw just past the boundary; redraw those.
      do {
        draw_unweighted(query.spec, query.radius, rng, fractions, x);
        for (std::size_t d = 0; d < x.size(); ++d) x[d] /= stretch[d];
      } while (metric.norm(x) > query.radius);
      points[i] = Point(x);
    }
  });
  return points;
}

void write_samples_csv(std::ostream& out, const SpaceSpec& spec, std::span<const Point> points) {
  const auto names = spec.dimension_names();
  for (std::size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names[i];
  out << '\n';
  char buf[32];
  for (const auto& p : points) {
    check_conforms(spec, p);
    for (std::size_t i = 0; i < p.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", p[i]);
      out << (i ? "," : "") << buf;
    }
    out << '\n';
  }
}

}  // namespace csgeom
