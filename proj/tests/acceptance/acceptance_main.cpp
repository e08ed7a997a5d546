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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances and trial counts are fixed here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "csgeom/metric.hpp"
#include "csgeom/sampler.hpp"
#include "csgeom/space.hpp"
#include "csgeom/special_functions.hpp"
#include "csgeom/volume.hpp"
#include "oracles.hpp"

namespace {

using namespace csgeom;

struct Outcome {
  bool passed = true;
  std::string detail;
};

SpaceSpec single_domain(int n) {
  DomainSpec d{"all", {}};
  for (int i = 0; i < n; ++i) d.dimensions.push_back("x" + std::to_string(i));
  return SpaceSpec({d});
}

SpaceSpec singletons(int n) {
  std::vector<DomainSpec> domains;
  for (int i = 0; i < n; ++i) domains.push_back({"d" + std::to_string(i), {"x" + std::to_string(i)}});
  return SpaceSpec(std::move(domains));
}

SpaceSpec double_cone() { return SpaceSpec({{"plane", {"d1", "d2"}}, {"line", {"d3"}}}); }

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// Eight mixed domain structures with 3 <= n <= 6, shared by criteria 3 and 4.
std::vector<SpaceSpec> sweep_spaces() {
  std::mt19937_64 gen(20260101);
  std::vector<SpaceSpec> spaces;
  while (spaces.size() < 8) {
    const int n = 3 + static_cast<int>(spaces.size() % 4);
    SpaceSpec spec = oracle::random_space(gen, n);
    // at least two domains and one multi-dimensional domain: a genuine mix
    bool mixed = spec.domain_count() > 1 && spec.domain_count() < spec.dimension_count();
    if (mixed) spaces.push_back(std::move(spec));
  }
  return spaces;
}

Outcome degenerate_cases() {
  double worst = 0.0;
  for (int n = 1; n <= 12; ++n) {
    for (double r : {0.5, 1.0, 3.0}) {
      worst = std::max(worst, oracle::relative_error(ball_volume({single_domain(n), r, {}}).value(),
                                                     oracle::euclidean_ball_volume(n, r)));
      worst = std::max(worst, oracle::relative_error(ball_volume({singletons(n), r, {}}).value(),
                                                     oracle::cross_polytope_volume(n, r)));
    }
  }
  return {worst <= 1e-12, "max relative error " + sci(worst) + " (tol 1e-12)"};
}

Outcome double_cone_geometry() {
  const BallQuery q{double_cone(), 1.0, {}};
  const double exact = 2.0 * std::numbers::pi / 3.0;
  const double closed = ball_volume(q).value();
  const double rel = oracle::relative_error(closed, exact);
  const EstimateReport mc = mc_volume(q, {10'000'000, 2026});
  const double z = (mc.volume_estimate - closed) / mc.std_error;
  return {rel <= 1e-12 && std::abs(z) <= 4.0,
          "closed form rel err " + sci(rel) + ", MC " + sci(mc.volume_estimate) + " +- " + sci(mc.std_error) +
              " (z = " + sci(z) + ", limit 4)"};
}

Outcome oracle_sweep() {
  std::mt19937_64 gen(77);
  int agree = 0;
  int total = 0;
  std::string worst;
  double worst_z = 0.0;
  std::uint64_t seed = 500;
  for (const SpaceSpec& spec : sweep_spaces()) {
    for (bool weighted : {false, true}) {
      const std::optional<WeightSet> w =
          weighted ? std::optional<WeightSet>(oracle::random_weights(gen, spec)) : std::nullopt;
      const BallQuery q{spec, 1.25, w};
      const EstimateReport mc = mc_volume(q, {1'000'000, seed++});
      const double z = (mc.volume_estimate - ball_volume(q).value()) / mc.std_error;
      ++total;
      if (std::abs(z) <= 4.0) ++agree;
      worst_z = std::max(worst_z, std::abs(z));
    }
  }
  worst = sci(worst_z);
  return {8 * agree >= 7 * total,
          std::to_string(agree) + "/" + std::to_string(total) + " within 4 std errors (need >= 7/8), max |z| " +
              worst};
}

Outcome pipeline_consistency() {
  double worst = 0.0;
  for (const SpaceSpec& spec : sweep_spaces()) {
    for (double r : {0.5, 1.25, 3.0}) {
      double pipeline = radial_simplex_integral(r, spec.domain_sizes()).log_value;
      for (int size : spec.domain_sizes()) pipeline += angular_measure(size).log_value;
      worst = std::max(worst, std::abs(pipeline - ball_volume({spec, r, {}}).log_value));
    }
  }
  return {worst <= 1e-12, "max |log difference| " + sci(worst) + " (tol 1e-12)"};
}

Outcome beta_identity() {
  double worst = 0.0;
  for (double a : {1.0, 1.5, 2.0, 3.5}) {
    for (double b : {0.0, 1.0, 2.5}) {
      for (double R : {0.5, 1.0, 2.0}) {
        const double quad = oracle::beta_integral(a, b, R);
        const double closed = std::exp(log_beta(a, b + 1.0)) * std::pow(R, a + b);
        worst = std::max(worst, oracle::relative_error(closed, quad));
      }
    }
  }
  return {worst <= 1e-8, "max relative error " + sci(worst) + " over 36 grid points (tol 1e-8)"};
}

Outcome weighted_stretching() {
  const SpaceSpec plane({{"plane", {"x", "y"}}});
  const double ellipse = ball_volume({plane, 1.0, WeightSet::uniform(plane)}).value();
  const double ellipse_err = oracle::relative_error(ellipse, 2.0 * std::numbers::pi);

  const SpaceSpec two = singletons(2);
  WeightSet diamond_w = WeightSet::uniform(two);
  diamond_w.domain_weights = {{"d0", 1.5}, {"d1", 0.5}};
  const double diamond = ball_volume({two, 1.0, diamond_w}).value();
  const double diamond_err = oracle::relative_error(diamond, 8.0 / 3.0);

  // Per-dimension normalizer on a space where the two readings differ.
  const SpaceSpec spec({{"a", {"x", "y", "z"}}, {"b", {"u"}}});
  WeightSet w;
  w.domain_weights = {{"a", 1.5}, {"b", 0.5}};
  w.dimension_weights = {{"x", 0.5}, {"y", 0.25}, {"z", 0.25}, {"u", 1.0}};
  double per_dimension = 0.0;
  for (const auto& d : spec.domains()) {
    for (const auto& dim : d.dimensions) {
      per_dimension += std::log(w.domain_weights.at(d.name) * std::sqrt(w.dimension_weights.at(dim)));
    }
  }
  const double normalizer =
      ball_volume({spec, 1.0, {}}).log_value - ball_volume({spec, 1.0, w}).log_value;
  const double normalizer_err = std::abs(normalizer - per_dimension);

  const bool ok = ellipse_err <= 1e-12 && diamond_err <= 1e-12 && normalizer_err <= 1e-12;
  return {ok, "ellipse rel err " + sci(ellipse_err) + ", diamond rel err " + sci(diamond_err) +
                  ", per-dimension normalizer err " + sci(normalizer_err)};
}

Outcome metric_axioms() {
  std::mt19937_64 gen(314);
  long violations = 0;
  long triples = 0;
  std::vector<SpaceSpec> spaces = sweep_spaces();
  spaces.push_back(singletons(5));
  spaces.push_back(single_domain(4));
  for (const SpaceSpec& spec : spaces) {
    const CombinedMetric metric(spec, oracle::random_weights(gen, spec));
    const std::size_t n = spec.dimension_count();
    for (int i = 0; i < 10'000; ++i, ++triples) {
      const auto x = oracle::random_vector(gen, n);
      const auto y = oracle::random_vector(gen, n);
      const auto z = oracle::random_vector(gen, n);
      const double dxy = metric.distance(x, y);
      if (dxy != metric.distance(y, x)) ++violations;
      if (metric.distance(x, z) > dxy + metric.distance(y, z) + 1e-12) ++violations;
      if (metric.distance(x, x) != 0.0 || dxy <= 0.0) ++violations;
      auto p = x;
      p[i % n] = std::nextafter(p[i % n], INFINITY);
      if (metric.distance(x, p) <= 0.0) ++violations;
    }
  }
  return {violations == 0, std::to_string(triples) + " triples over " + std::to_string(spaces.size()) +
                               " spaces, " + std::to_string(violations) + " violations"};
}

Outcome sampler_laws() {
  std::mt19937_64 gen(2718);
  std::vector<BallQuery> queries;
  queries.push_back({double_cone(), 1.0, {}});
  const SpaceSpec mixed({{"a", {"x", "y", "z"}}, {"b", {"u"}}, {"c", {"v", "w"}}});
  queries.push_back({mixed, 2.0, oracle::random_weights(gen, mixed)});

  const std::size_t count = 100'000;
  double worst_ks = 0.0;
  double worst_sigma = 0.0;
  std::uint64_t seed = 90;
  for (const BallQuery& q : queries) {
    const CombinedMetric metric = q.metric();
    const auto points = sample_in_ball(q, count, seed++);
    const double n = static_cast<double>(q.spec.dimension_count());
    std::vector<double> law;
    std::vector<double> fraction_sums(q.spec.domain_count(), 0.0);
    for (const auto& p : points) {
      const double total = metric.norm(p.coords());
      law.push_back(std::pow(total / q.radius, n));
      for (std::size_t i = 0; i < q.spec.domain_count(); ++i) {
        fraction_sums[i] += metric.domain_weights()[i] * metric.domain_norm(i, p.coords()) / total;
      }
    }
    worst_ks = std::max(worst_ks, oracle::ks_uniform(law));
    for (std::size_t i = 0; i < q.spec.domain_count(); ++i) {
      const double ni = static_cast<double>(q.spec.domain_size(i));
      const double mean = ni / n;
      const double sd = std::sqrt(ni * (n - ni) / (n * n * (n + 1.0)) / static_cast<double>(count));
      worst_sigma = std::max(worst_sigma, std::abs(fraction_sums[i] / count - mean) / sd);
    }
  }
  return {worst_ks < 0.01 && worst_sigma <= 3.0,
          "max KS " + sci(worst_ks) + " (limit 0.01), max Dirichlet mean deviation " + sci(worst_sigma) +
              " sigma (limit 3)"};
}

Outcome scaling_law() {
  double worst_scale = 0.0;
  double worst_radius = 0.0;
  std::mt19937_64 gen(1618);
  std::vector<SpaceSpec> spaces = sweep_spaces();
  spaces.push_back(single_domain(30));
  spaces.push_back(singletons(12));
  for (const SpaceSpec& spec : spaces) {
    const double n = static_cast<double>(spec.dimension_count());
    for (bool weighted : {false, true}) {
      const std::optional<WeightSet> w =
          weighted ? std::optional<WeightSet>(oracle::random_weights(gen, spec)) : std::nullopt;
      const double base = ball_volume({spec, 1.1, w}).log_value;
      for (double lambda : {0.1, 2.0, 10.0}) {
        worst_scale =
            std::max(worst_scale, std::abs(ball_volume({spec, 1.1 * lambda, w}).log_value - base - n * std::log(lambda)));
      }
      for (double r : {0.3, 1.0, 2.5, 7.0}) {
        const double v = ball_volume({spec, r, w}).value();
        worst_radius = std::max(worst_radius, oracle::relative_error(radius_from_volume(spec, w, v), r));
      }
    }
  }
  return {worst_scale <= 1e-12 && worst_radius <= 1e-12,
          "max scaling error " + sci(worst_scale) + ", max radius round-trip rel err " + sci(worst_radius)};
}

Outcome reproducibility() {
  const std::string space = std::string(CSGEOM_TEST_DATA_DIR) + "/color_size.json";
  auto run = [&](const std::string& threads) {
    std::ostringstream out, err;
    const int code = cli::run({"estimate", "--space", space, "--r", "1", "--weighted", "--trials", "1000000",
                               "--seed", "8", "--chunk", "50000", "--threads", threads},
                              out, err);
    return code == 0 ? out.str() : std::string("exit ") + std::to_string(code);
  };
  const std::string first = run("1");
  const std::string second = run("1");
  const std::string parallel = run("4");
  const bool ok = first == second && first == parallel && first.rfind("exit", 0) != 0;
  return {ok, std::string("same thread count ") + (first == second ? "identical" : "DIFFERENT") +
                  ", 1 vs 4 threads " + (first == parallel ? "identical" : "DIFFERENT") + " (" +
                  std::to_string(first.size()) + " bytes)"};
}

struct Criterion {
  const char* id;
  const char* title;
  std::function<Outcome()> run;
  double time_limit_s;  // 0 = none
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "degenerate-case exactness", degenerate_cases, 1.0},
      {"AC2", "double-cone geometry", double_cone_geometry, 30.0},
      {"AC3", "oracle sweep", oracle_sweep, 60.0},
      {"AC4", "proof-pipeline consistency", pipeline_consistency, 0.0},
      {"AC5", "beta-integral identity", beta_identity, 0.0},
      {"AC6", "weighted stretching", weighted_stretching, 0.0},
      {"AC7", "metric axioms", metric_axioms, 0.0},
      {"AC8", "sampler laws", sampler_laws, 0.0},
      {"AC9", "scaling law", scaling_law, 0.0},
      {"AC10", "reproducibility", reproducibility, 0.0},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0.0 && seconds >= c.time_limit_s) {
      outcome.passed = false;
      outcome.detail += "; exceeded " + sci(c.time_limit_s) + " s";
    }
    if (!outcome.passed) ++failures;
    std::printf("[%s] %-5s %-28s %s [%.2f s]\n", outcome.passed ? "PASS" : "FAIL", c.id, c.title,
                outcome.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
