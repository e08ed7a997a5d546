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

#include "csgeom/space.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "format.hpp"

namespace csgeom {
namespace {

using nlohmann::json;

ConstraintCheck pass(std::string name, std::string detail = {}) {
  return {std::move(name), true, std::move(detail)};
}

ConstraintCheck fail(std::string name, std::string detail) {
  return {std::move(name), false, std::move(detail)};
}

const ConstraintCheck* first_failure(const std::vector<ConstraintCheck>& checks) {
  auto it = std::find_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; });
  return it == checks.end() ? nullptr : &*it;
}

void throw_on_failure(const std::vector<ConstraintCheck>& checks) {
  if (const auto* failed = first_failure(checks)) {
    throw ConstraintError(failed->name + ": " + failed->detail);
  }
}

std::string backticked(std::string_view s) { return "`" + std::string(s) + "`"; }

// Raw document content before any constraint is applied.
struct RawWeights {
  std::optional<std::map<std::string, double, std::less<>>> domains;
  std::optional<std::map<std::string, double, std::less<>>> dimensions;
};

struct RawDocument {
  std::vector<DomainSpec> domains;
  std::optional<RawWeights> weights;
};

[[noreturn]] void shape_error(const std::string& path, const std::string& what) {
  throw ParseError("invalid space document at " + path + ": " + what, ParseError::npos, path);
}

std::map<std::string, double, std::less<>> read_weight_map(const json& node, const std::string& path) {
  if (!node.is_object()) shape_error(path, "expected an object of name -> number");
  std::map<std::string, double, std::less<>> out;
  for (const auto& [key, value] : node.items()) {
    if (!value.is_number()) shape_error(path + "/" + key, "expected a number");
    out.emplace(key, value.get<double>());
  }
  return out;
}

RawDocument read_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("syntax error: ") + e.what(), e.byte);
  }

  if (!root.is_object()) shape_error("/", "expected a JSON object");
  for (const auto& [key, value] : root.items()) {
    if (key != "domains" && key != "weights") shape_error("/" + key, "unknown key");
  }
  const auto domains_it = root.find("domains");
  if (domains_it == root.end()) shape_error("/domains", "missing required key");
  if (!domains_it->is_array()) shape_error("/domains", "expected an array");

  RawDocument doc;
  for (std::size_t i = 0; i < domains_it->size(); ++i) {
    const json& node = (*domains_it)[i];
    const std::string path = "/domains/" + std::to_string(i);
    if (!node.is_object()) shape_error(path, "expected an object");
    const auto name = node.find("name");
    if (name == node.end() || !name->is_string()) shape_error(path + "/name", "expected a string");
    const auto dims = node.find("dimensions");
    if (dims == node.end() || !dims->is_array()) shape_error(path + "/dimensions", "expected an array");
    DomainSpec domain{name->get<std::string>(), {}};
    for (std::size_t j = 0; j < dims->size(); ++j) {
      if (!(*dims)[j].is_string()) {
        shape_error(path + "/dimensions/" + std::to_string(j), "expected a string");
      }
      domain.dimensions.push_back((*dims)[j].get<std::string>());
    }
    doc.domains.push_back(std::move(domain));
  }

  if (const auto weights = root.find("weights"); weights != root.end()) {
    if (!weights->is_object()) shape_error("/weights", "expected an object");
    RawWeights raw;
    for (const auto& [key, value] : weights->items()) {
      if (key == "domains") {
        raw.domains = read_weight_map(value, "/weights/domains");
      } else if (key == "dimensions") {
        raw.dimensions = read_weight_map(value, "/weights/dimensions");
      } else {
        shape_error("/weights/" + key, "unknown key");
      }
    }
    doc.weights = std::move(raw);
  }
  return doc;
}

// A missing half of the weights section falls back to the uniform default.
WeightSet resolve_weights(const SpaceSpec& spec, const RawWeights& raw) {
  WeightSet w = WeightSet::uniform(spec);
  if (raw.domains) w.domain_weights = *raw.domains;
  if (raw.dimensions) w.dimension_weights = *raw.dimensions;
  return w;
}

}  // namespace

std::vector<ConstraintCheck> check_structure(std::span<const DomainSpec> domains) {
  std::vector<ConstraintCheck> checks;
  if (domains.empty()) {
    checks.push_back(fail("at least one domain", "the space has no domains"));
  } else {
    checks.push_back(pass("at least one domain", std::to_string(domains.size()) + " domain(s)"));
  }

  for (const auto& d : domains) {
    const std::string name = "domain " + backticked(d.name) + " non-empty";
    if (d.dimensions.empty()) {
      checks.push_back(fail(name, "domain " + backticked(d.name) + " has no dimensions"));
    } else {
      checks.push_back(pass(name, std::to_string(d.dimensions.size()) + " dimension(s)"));
    }
  }

  std::set<std::string_view> seen_domains;
  std::vector<std::string> duplicate_domains;
  for (const auto& d : domains) {
    if (d.name.empty()) duplicate_domains.push_back("(empty name)");
    if (!seen_domains.insert(d.name).second) duplicate_domains.push_back(backticked(d.name));
  }
  if (duplicate_domains.empty()) {
    checks.push_back(pass("unique domain names"));
  } else {
    checks.push_back(fail("unique domain names", "duplicate domain name " + duplicate_domains.front()));
  }

  std::set<std::string_view> seen_dims;
  std::vector<std::string> duplicate_dims;
  for (const auto& d : domains) {
    for (const auto& dim : d.dimensions) {
      if (dim.empty()) duplicate_dims.push_back("(empty name)");
      if (!seen_dims.insert(dim).second) duplicate_dims.push_back(backticked(dim));
    }
  }
  if (duplicate_dims.empty()) {
    checks.push_back(pass("unique dimension names"));
  } else {
    checks.push_back(fail("unique dimension names", "duplicate dimension name " + duplicate_dims.front()));
  }
  return checks;
}

SpaceSpec::SpaceSpec(std::vector<DomainSpec> domains) : domains_(std::move(domains)) {
  throw_on_failure(check_structure(domains_));
  offsets_.reserve(domains_.size() + 1);
  offsets_.push_back(0);
  for (const auto& d : domains_) offsets_.push_back(offsets_.back() + d.dimensions.size());
}

std::vector<int> SpaceSpec::domain_sizes() const {
  std::vector<int> sizes;
  sizes.reserve(domains_.size());
  for (const auto& d : domains_) sizes.push_back(static_cast<int>(d.dimensions.size()));
  return sizes;
}

std::optional<std::size_t> SpaceSpec::find_domain(std::string_view name) const {
  for (std::size_t i = 0; i < domains_.size(); ++i) {
    if (domains_[i].name == name) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> SpaceSpec::find_dimension(std::string_view name) const {
  for (std::size_t i = 0; i < domains_.size(); ++i) {
    const auto& dims = domains_[i].dimensions;
    for (std::size_t j = 0; j < dims.size(); ++j) {
      if (dims[j] == name) return offsets_[i] + j;
    }
  }
  return std::nullopt;
}

std::vector<std::string> SpaceSpec::dimension_names() const {
  std::vector<std::string> names;
  names.reserve(dimension_count());
  for (const auto& d : domains_) names.insert(names.end(), d.dimensions.begin(), d.dimensions.end());
  return names;
}

WeightSet WeightSet::uniform(const SpaceSpec& spec) {
  WeightSet w;
  for (const auto& d : spec.domains()) {
    w.domain_weights[d.name] = 1.0;
    const double share = 1.0 / static_cast<double>(d.dimensions.size());
    for (const auto& dim : d.dimensions) w.dimension_weights[dim] = share;
  }
  return w;
}

std::vector<ConstraintCheck> check_weights(const SpaceSpec& spec, const WeightSet& weights) {
  std::vector<ConstraintCheck> checks;

  std::vector<std::string> missing;
  for (const auto& d : spec.domains()) {
    if (!weights.domain_weights.contains(d.name)) missing.push_back("domain " + backticked(d.name));
    for (const auto& dim : d.dimensions) {
      if (!weights.dimension_weights.contains(dim)) missing.push_back("dimension " + backticked(dim));
    }
  }
  std::vector<std::string> unknown;
  for (const auto& [name, value] : weights.domain_weights) {
    if (!spec.find_domain(name)) unknown.push_back("domain " + backticked(name));
  }
  for (const auto& [name, value] : weights.dimension_weights) {
    if (!spec.find_dimension(name)) unknown.push_back("dimension " + backticked(name));
  }
  if (!missing.empty()) {
    checks.push_back(fail("weights cover space", "no weight given for " + missing.front()));
  } else if (!unknown.empty()) {
    checks.push_back(fail("weights cover space", "weight given for unknown " + unknown.front()));
  } else {
    checks.push_back(pass("weights cover space"));
  }

  auto positive = [&](const std::string& kind, const std::string& name, double value) {
    const std::string label = kind + " weight " + backticked(name) + " positive";
    if (std::isfinite(value) && value > 0.0) {
      checks.push_back(pass(label, detail::format_real(value)));
    } else {
      checks.push_back(fail(label, "nonpositive weight " + detail::format_real(value) + " for " + kind + " " +
                                       backticked(name)));
    }
  };
  for (const auto& d : spec.domains()) {
    if (auto it = weights.domain_weights.find(d.name); it != weights.domain_weights.end()) {
      positive("domain", d.name, it->second);
    }
    for (const auto& dim : d.dimensions) {
      if (auto it = weights.dimension_weights.find(dim); it != weights.dimension_weights.end()) {
        positive("dimension", dim, it->second);
      }
    }
  }

  for (const auto& d : spec.domains()) {
    double sum = 0.0;
    for (const auto& dim : d.dimensions) {
      if (auto it = weights.dimension_weights.find(dim); it != weights.dimension_weights.end()) sum += it->second;
    }
    const double residual = sum - 1.0;
    const std::string label = "dimension weights of " + backticked(d.name) + " sum to 1";
    if (std::abs(residual) <= kWeightSumTolerance) {
      checks.push_back(pass(label, "sum " + detail::format_real(sum)));
    } else {
      checks.push_back(fail(label, "dimension weights in domain " + backticked(d.name) + " sum to " +
                                       detail::format_real(sum) + " != 1 (residual " +
                                       detail::format_real(residual) + ")"));
    }
  }

  double sum = 0.0;
  for (const auto& d : spec.domains()) {
    if (auto it = weights.domain_weights.find(d.name); it != weights.domain_weights.end()) sum += it->second;
  }
  const double k = static_cast<double>(spec.domain_count());
  const double residual = sum - k;
  const std::string label = "domain weights sum to " + detail::format_real(k);
  if (std::abs(residual) <= kWeightSumTolerance) {
    checks.push_back(pass(label, "sum " + detail::format_real(sum)));
  } else {
    checks.push_back(fail(label, "domain weights sum to " + detail::format_real(sum) + " != " +
                                     detail::format_real(k) + " (residual " + detail::format_real(residual) + ")"));
  }
  return checks;
}

void validate_weights(const SpaceSpec& spec, const WeightSet& weights) {
  throw_on_failure(check_weights(spec, weights));
}

WeightSet normalize_weights(const SpaceSpec& spec, const WeightSet& weights) {
  validate_weights(spec, weights);
  WeightSet out;
  double domain_sum = 0.0;
  for (const auto& d : spec.domains()) {
    domain_sum += weights.domain_weights.find(d.name)->second;
    double dim_sum = 0.0;
    for (const auto& dim : d.dimensions) dim_sum += weights.dimension_weights.find(dim)->second;
    for (const auto& dim : d.dimensions) {
      out.dimension_weights[dim] = weights.dimension_weights.find(dim)->second / dim_sum;
    }
  }
  const double scale = static_cast<double>(spec.domain_count()) / domain_sum;
  for (const auto& d : spec.domains()) {
    out.domain_weights[d.name] = weights.domain_weights.find(d.name)->second * scale;
  }
  return out;
}

void check_conforms(const SpaceSpec& spec, const Point& p) {
  if (p.size() != spec.dimension_count()) {
    throw std::invalid_argument("point has " + std::to_string(p.size()) + " coordinates, space has " +
                                std::to_string(spec.dimension_count()) + " dimensions");
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!std::isfinite(p[i])) {
      throw std::invalid_argument("point coordinate " + std::to_string(i) + " is not finite");
    }
  }
}

SpaceDocument parse_space(std::string_view text) {
  RawDocument raw = read_document(text);
  SpaceSpec spec(std::move(raw.domains));
  std::optional<WeightSet> weights;
  if (raw.weights) weights = normalize_weights(spec, resolve_weights(spec, *raw.weights));
  return SpaceDocument{std::move(spec), std::move(weights)};
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return buffer.str();
}

SpaceDocument load_space(const std::filesystem::path& path) { return parse_space(read_text_file(path)); }

std::string serialize_space(const SpaceSpec& spec, const std::optional<WeightSet>& weights) {
  json root;
  root["domains"] = json::array();
  for (const auto& d : spec.domains()) {
    root["domains"].push_back({{"name", d.name}, {"dimensions", d.dimensions}});
  }
  if (weights) {
    json domain_weights = json::object();
    json dimension_weights = json::object();
    for (const auto& [name, value] : weights->domain_weights) domain_weights[name] = value;
    for (const auto& [name, value] : weights->dimension_weights) dimension_weights[name] = value;
    root["weights"] = {{"domains", domain_weights}, {"dimensions", dimension_weights}};
  }
  return root.dump(2) + "\n";
}

bool SpaceAudit::ok() const { return first_failure(checks) == nullptr; }

SpaceAudit audit_space(std::string_view text) {
  RawDocument raw = read_document(text);
  SpaceAudit audit;
  audit.checks = check_structure(raw.domains);
  if (!audit.ok()) return audit;

  const SpaceSpec spec(std::move(raw.domains));
  if (!raw.weights) {
    audit.checks.push_back(pass("weights", "no weights section; uniform default applies"));
    return audit;
  }
  auto weight_checks = check_weights(spec, resolve_weights(spec, *raw.weights));
  audit.checks.insert(audit.checks.end(), weight_checks.begin(), weight_checks.end());
  return audit;
}

}  // namespace csgeom
