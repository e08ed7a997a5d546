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

#include "cli.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "csgeom/error.hpp"
#include "csgeom/metric.hpp"
#include "csgeom/sampler.hpp"
#include "csgeom/space.hpp"
#include "csgeom/volume.hpp"

namespace csgeom::cli {
namespace {

using nlohmann::json;

/// Bad flag values or combinations; exit code 4.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every printed number uses 12 significant digits.
std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct CommonOptions {
  std::string space_path;
  bool json = false;
  bool weighted = false;
};

struct Options {
  CommonOptions common;
  std::optional<double> r;
  std::optional<double> volume;
  std::optional<double> alpha;
  std::optional<double> c;
  std::optional<std::string> x;
  std::optional<std::string> y;
  std::int64_t trials = 1'000'000;
  std::uint64_t seed = 0;
  std::int64_t chunk = 1 << 16;
  std::int64_t count = 1000;
  unsigned threads = 0;
  std::optional<std::string> out_path;
};

struct LoadedSpace {
  SpaceDocument doc;
  std::optional<WeightSet> weights;  // set iff --weighted
};

LoadedSpace load(const CommonOptions& common) {
  SpaceDocument doc = load_space(common.space_path);
  std::optional<WeightSet> weights;
  if (common.weighted) weights = doc.effective_weights();
  return {std::move(doc), std::move(weights)};
}

double require_radius(const std::optional<double>& r) {
  if (!r) throw UsageError("--r is required");
  if (!(std::isfinite(*r) && *r > 0.0)) throw UsageError("radius must be positive");
  return *r;
}

Point parse_point(const std::string& text, const SpaceSpec& spec, const char* flag) {
  std::vector<double> coords;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    char* end = nullptr;
    const double value = std::strtod(item.c_str(), &end);
    if (item.empty() || end == item.c_str() || *end != '\0' || !std::isfinite(value)) {
      throw UsageError(std::string(flag) + ": cannot parse coordinate '" + item + "'");
    }
    coords.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (coords.size() != spec.dimension_count()) {
    throw UsageError(std::string(flag) + ": expected " + std::to_string(spec.dimension_count()) +
                     " coordinates, got " + std::to_string(coords.size()));
  }
  return Point(std::move(coords));
}

void print_lines(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& lines) {
  for (const auto& [key, value] : lines) out << key << ": " << value << '\n';
}

std::string sizes_text(const SpaceSpec& spec) {
  std::string s;
  for (int size : spec.domain_sizes()) s += (s.empty() ? "" : " ") + std::to_string(size);
  return s;
}

int cmd_volume(const Options& o, std::ostream& out) {
  const double r = require_radius(o.r);
  auto [doc, weights] = load(o.common);
  const BallQuery query{doc.spec, r, weights};
  const LogVolume v = ball_volume(query);
  const bool overflow = !v.representable();
  if (o.common.json) {
    json j{{"n", doc.spec.dimension_count()},
           {"k", doc.spec.domain_count()},
           {"domain_sizes", doc.spec.domain_sizes()},
           {"radius", r},
           {"weighted", weights.has_value()},
           {"log_volume", v.log_value},
           {"volume", overflow ? json(nullptr) : json(v.value())},
           {"overflow", overflow}};
    out << j.dump() << '\n';
    return kSuccess;
  }
  print_lines(out, {{"n", std::to_string(doc.spec.dimension_count())},
                    {"k", std::to_string(doc.spec.domain_count())},
                    {"domain sizes", sizes_text(doc.spec)},
                    {"radius", num(r)},
                    {"weighted", weights ? "yes" : "no"},
                    {"log-volume", num(v.log_value)},
                    {"volume", overflow ? "overflow: log-volume only" : num(v.value())}});
  return kSuccess;
}

int cmd_radius(const Options& o, std::ostream& out) {
  const bool by_volume = o.volume.has_value();
  const bool by_similarity = o.alpha.has_value() || o.c.has_value();
  if (by_volume == by_similarity) throw UsageError("give exactly one of --volume or --alpha/--c");
  if (by_volume && !(std::isfinite(*o.volume) && *o.volume > 0.0)) throw UsageError("volume must be positive");
  if (by_similarity) {
    if (!o.alpha || !o.c) throw UsageError("--alpha and --c must be given together");
    if (!(*o.alpha > 0.0 && *o.alpha < 1.0)) throw UsageError("alpha must lie in (0, 1)");
    if (!(std::isfinite(*o.c) && *o.c > 0.0)) throw UsageError("c must be positive");
  }

  // The file is validated in both modes so a broken space never passes silently.
  auto [doc, weights] = load(o.common);
  double r = 0.0;
  std::string mode;
  if (by_volume) {
    r = radius_from_volume(doc.spec, weights, *o.volume);
    mode = "volume";
  } else {
    r = radius_from_similarity(SimilarityParams{*o.c}, *o.alpha);
    mode = "similarity";
  }
  if (o.common.json) {
    json j{{"mode", mode}, {"radius", r}, {"weighted", weights.has_value()}};
    if (by_volume) j["volume"] = *o.volume;
    else {
      j["alpha"] = *o.alpha;
      j["c"] = *o.c;
    }
    out << j.dump() << '\n';
  } else {
    print_lines(out, {{"mode", mode}, {"radius", num(r)}});
  }
  return kSuccess;
}

int cmd_distance(const Options& o, std::ostream& out, bool with_similarity) {
  if (!o.x || !o.y) throw UsageError("--x and --y are required");
  const double c = o.c.value_or(1.0);
  if (with_similarity && !(std::isfinite(c) && c > 0.0)) throw UsageError("c must be positive");
  auto [doc, weights] = load(o.common);
  const Point x = parse_point(*o.x, doc.spec, "--x");
  const Point y = parse_point(*o.y, doc.spec, "--y");
  const CombinedMetric metric = weights ? CombinedMetric(doc.spec, *weights) : CombinedMetric::unweighted(doc.spec);
  const double d = metric.distance(x.coords(), y.coords());

  std::vector<double> per_domain;
  for (std::size_t i = 0; i < doc.spec.domain_count(); ++i) {
    per_domain.push_back(metric.domain_distance(i, x.coords(), y.coords()));
  }
  const double sim = with_similarity ? similarity_from_distance(SimilarityParams{c}, d) : 0.0;

  if (o.common.json) {
    json domains = json::object();
    for (std::size_t i = 0; i < per_domain.size(); ++i) domains[doc.spec.domain(i).name] = per_domain[i];
    json j{{"distance", d}, {"domain_distances", domains}, {"weighted", weights.has_value()}};
    if (with_similarity) {
      j["c"] = c;
      j["similarity"] = sim;
    }
    out << j.dump() << '\n';
    return kSuccess;
  }
  for (std::size_t i = 0; i < per_domain.size(); ++i) {
    out << "domain " << doc.spec.domain(i).name << ": " << num(per_domain[i]) << '\n';
  }
  out << "distance: " << num(d) << '\n';
  if (with_similarity) {
    out << "c: " << num(c) << '\n';
    out << "similarity: " << num(sim) << '\n';
  }
  return kSuccess;
}

int cmd_estimate(const Options& o, std::ostream& out, std::ostream& err) {
  const double r = require_radius(o.r);
  if (o.trials < 1) throw UsageError("trials must be >= 1");
  if (o.chunk < 1) throw UsageError("chunk must be >= 1");
  auto [doc, weights] = load(o.common);
  const BallQuery query{doc.spec, r, weights};
  const McConfig config{static_cast<std::uint64_t>(o.trials), o.seed, static_cast<std::uint64_t>(o.chunk),
                        o.threads};

  const double predicted_hits = expected_hit_rate(query) * static_cast<double>(config.trials);
  if (predicted_hits < 100.0) {
    err << "warning: only about " << num(predicted_hits)
        << " hits expected in the bounding box; increase --trials for a usable estimate\n";
  }

  const EstimateReport report = mc_volume(query, config);
  const double exact = ball_volume(query).value();
  const bool has_z = report.std_error > 0.0;
  const double z = has_z ? (report.volume_estimate - exact) / report.std_error : 0.0;
  if (o.common.json) {
    json j{{"trials", report.trials},
           {"seed", report.seed},
           {"chunk", config.chunk_size},
           {"hits", report.hits},
           {"bounding_box_volume", report.bounding_box_volume},
           {"estimate", report.volume_estimate},
           {"std_error", report.std_error},
           {"exact", exact},
           {"z_score", has_z ? json(z) : json(nullptr)},
           {"weighted", weights.has_value()}};
    out << j.dump() << '\n';
    return kSuccess;
  }
  print_lines(out, {{"trials", std::to_string(report.trials)},
                    {"seed", std::to_string(report.seed)},
                    {"chunk", std::to_string(config.chunk_size)},
                    {"hits", std::to_string(report.hits)},
                    {"hit rate", num(report.hit_rate())},
                    {"bounding box volume", num(report.bounding_box_volume)},
                    {"estimate", num(report.volume_estimate)},
                    {"std error", num(report.std_error)},
                    {"exact", num(exact)},
                    {"z-score", has_z ? num(z) : "undefined (zero standard error)"}});
  return kSuccess;
}

int cmd_sample(const Options& o, std::ostream& out) {
  const double r = require_radius(o.r);
  if (o.count < 1) throw UsageError("count must be >= 1");
  if (o.chunk < 1) throw UsageError("chunk must be >= 1");
  auto [doc, weights] = load(o.common);
  const BallQuery query{doc.spec, r, weights};
  const auto points = sample_in_ball(query, static_cast<std::size_t>(o.count), o.seed,
                                     SampleOptions{static_cast<std::uint64_t>(o.chunk), o.threads});
  if (!o.out_path) {
    write_samples_csv(out, doc.spec, points);
    return kSuccess;
  }
  std::ofstream file(*o.out_path, std::ios::binary);
  if (!file) throw IoError("cannot open " + *o.out_path + " for writing");
  write_samples_csv(file, doc.spec, points);
  file.close();
  if (!file) throw IoError("cannot write " + *o.out_path);
  if (o.common.json) {
    out << json{{"count", points.size()}, {"out", *o.out_path}, {"seed", o.seed}}.dump() << '\n';
  } else {
    out << "wrote " << points.size() << " points to " << *o.out_path << '\n';
  }
  return kSuccess;
}

int cmd_check(const Options& o, std::ostream& out) {
  const SpaceAudit audit = audit_space(read_text_file(o.common.space_path));
  if (o.common.json) {
    json checks = json::array();
    for (const auto& c : audit.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    out << json{{"ok", audit.ok()}, {"checks", checks}}.dump() << '\n';
  } else {
    for (const auto& c : audit.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) out << ": " << c.detail;
      out << '\n';
    }
  }
  return audit.ok() ? kSuccess : kConstraint;
}

CLI::App* add_subcommand(CLI::App& app, const std::string& name, const std::string& description, Options& o) {
  CLI::App* sub = app.add_subcommand(name, description);
  sub->add_option("--space", o.common.space_path, "Space-definition JSON file")->required();
  sub->add_flag("--json", o.common.json, "Machine-readable output");
  return sub;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Geometry of conceptual spaces: combined-metric distances and ball volumes", "csgeom"};
  app.require_subcommand(1);

  auto* volume = add_subcommand(app, "volume", "Closed-form ball volume", o);
  volume->add_option("--r", o.r, "Ball radius");
  volume->add_flag("--weighted", o.common.weighted, "Use the file's weights (uniform if absent)");

  auto* radius = add_subcommand(app, "radius", "Radius for a target volume or minimal similarity", o);
  radius->add_option("--volume", o.volume, "Target volume");
  radius->add_option("--alpha", o.alpha, "Minimal similarity in (0, 1)");
  radius->add_option("--c", o.c, "Similarity sensitivity constant");
  radius->add_flag("--weighted", o.common.weighted, "Use the file's weights (uniform if absent)");

  auto* distance = add_subcommand(app, "distance", "Combined distance of two points", o);
  auto* similarity = add_subcommand(app, "similarity", "Similarity exp(-c d) of two points", o);
  for (auto* sub : {distance, similarity}) {
    sub->add_option("--x", o.x, "First point, comma-separated coordinates");
    sub->add_option("--y", o.y, "Second point, comma-separated coordinates");
    sub->add_flag("--weighted", o.common.weighted, "Use the file's weights (uniform if absent)");
  }
  similarity->add_option("--c", o.c, "Similarity sensitivity constant (default 1)");

  auto* estimate = add_subcommand(app, "estimate", "Monte-Carlo volume estimate against the closed form", o);
  estimate->add_option("--r", o.r, "Ball radius");
  estimate->add_option("--trials", o.trials, "Number of trials")->capture_default_str();
  estimate->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  estimate->add_option("--chunk", o.chunk, "Trials per independent random stream")->capture_default_str();
  estimate->add_option("--threads", o.threads, "Worker threads (0 = hardware); does not change results");
  estimate->add_flag("--weighted", o.common.weighted, "Use the file's weights (uniform if absent)");

  auto* sample = add_subcommand(app, "sample", "Uniform samples inside the ball, as CSV", o);
  sample->add_option("--r", o.r, "Ball radius");
  sample->add_option("--count", o.count, "Number of points")->capture_default_str();
  sample->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  sample->add_option("--chunk", o.chunk, "Points per independent random stream");
  sample->add_option("--threads", o.threads, "Worker threads (0 = hardware); does not change results");
  sample->add_option("--out", o.out_path, "CSV output path (default: standard output)");
  sample->add_flag("--weighted", o.common.weighted, "Use the file's weights (uniform if absent)");

  auto* check = add_subcommand(app, "check", "Validate a space-definition file", o);

  std::vector<std::string> argv_storage{"csgeom"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (volume->parsed()) return cmd_volume(o, out);
    if (radius->parsed()) return cmd_radius(o, out);
    if (distance->parsed()) return cmd_distance(o, out, false);
    if (similarity->parsed()) return cmd_distance(o, out, true);
    if (estimate->parsed()) return cmd_estimate(o, out, err);
    if (sample->parsed()) return cmd_sample(o, out);
    if (check->parsed()) return cmd_check(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoOrParse;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kIoOrParse;
  } catch (const ConstraintError& e) {
    err << "error: " << e.what() << '\n';
    return kConstraint;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << "error: no subcommand\n";
  return kUsage;
}

}  // namespace csgeom::cli
