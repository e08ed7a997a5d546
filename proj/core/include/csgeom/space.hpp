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
#include <filesystem>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "csgeom/error.hpp"

/// @file space.hpp
///
/// Domain structure of a conceptual space, its weights and points, and the
/// JSON space-definition format.

namespace csgeom {

/// Absolute tolerance applied to the weight-sum constraints.
inline constexpr double kWeightSumTolerance = 1e-9;

/// A named group of dimensions whose distances combine in a Euclidean way.
struct DomainSpec {
  std::string name;
  std::vector<std::string> dimensions;

  friend bool operator==(const DomainSpec&, const DomainSpec&) = default;
};

/// Outcome of one named constraint, as reported by the audit functions.
struct ConstraintCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

/// Runs every structural check (non-empty, unique names) on a candidate
/// domain list without throwing.
std::vector<ConstraintCheck> check_structure(std::span<const DomainSpec> domains);

/**
 * @brief Ordered partition of the dimensions of a space into domains.
 *
 * The file order of domains and of dimensions inside each domain is
 * canonical: point coordinates are laid out domain by domain in that order.
 * Instances are immutable once constructed.
 */
class SpaceSpec {
 public:
  /// Throws ConstraintError naming the first violated structural check.
  explicit SpaceSpec(std::vector<DomainSpec> domains);
  SpaceSpec(std::initializer_list<DomainSpec> domains) : SpaceSpec(std::vector<DomainSpec>(domains)) {}

  const std::vector<DomainSpec>& domains() const noexcept { return domains_; }
  const DomainSpec& domain(std::size_t index) const { return domains_.at(index); }

  /// Total number of dimensions.
  std::size_t dimension_count() const noexcept { return offsets_.back(); }
  std::size_t domain_count() const noexcept { return domains_.size(); }

  /// Index of the first coordinate of `domain`; `domain_offset(k)` is n.
  std::size_t domain_offset(std::size_t domain) const { return offsets_.at(domain); }
  std::size_t domain_size(std::size_t domain) const {
    return offsets_.at(domain + 1) - offsets_.at(domain);
  }
  std::vector<int> domain_sizes() const;

  std::optional<std::size_t> find_domain(std::string_view name) const;
  std::optional<std::size_t> find_dimension(std::string_view name) const;

  /// Dimension names in coordinate order.
  std::vector<std::string> dimension_names() const;

  friend bool operator==(const SpaceSpec& a, const SpaceSpec& b) { return a.domains_ == b.domains_; }

 private:
  std::vector<DomainSpec> domains_;
  std::vector<std::size_t> offsets_;
};

/**
 * @brief Domain weights and per-domain dimension weights, keyed by name.
 *
 * A WeightSet is plain data; validate_weights() checks it against a space.
 * Constraints: every weight is positive, dimension weights sum to one inside
 * each domain, and domain weights sum to the number of domains.
 */
struct WeightSet {
  std::map<std::string, double, std::less<>> domain_weights;
  std::map<std::string, double, std::less<>> dimension_weights;

  /// w_d = 1/n_delta for every dimension and w_delta = 1 for every domain.
  static WeightSet uniform(const SpaceSpec& spec);

  friend bool operator==(const WeightSet&, const WeightSet&) = default;
};

/// Evaluates every weight constraint, in a fixed order, without throwing.
std::vector<ConstraintCheck> check_weights(const SpaceSpec& spec, const WeightSet& weights);

/// Throws ConstraintError describing the first violated weight constraint.
void validate_weights(const SpaceSpec& spec, const WeightSet& weights);

/// Validates, then rescales so the sum constraints hold exactly.
WeightSet normalize_weights(const SpaceSpec& spec, const WeightSet& weights);

/// Coordinates of an instance, in SpaceSpec dimension order.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<double> coords) : coords_(coords) {}

  std::span<const double> coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

/// Throws std::invalid_argument unless `p` has n finite coordinates.
void check_conforms(const SpaceSpec& spec, const Point& p);

/// Result of reading a space-definition document.
struct SpaceDocument {
  SpaceSpec spec;
  /// Present iff the document has a `weights` section; stored normalized.
  std::optional<WeightSet> weights;

  /// The document weights, or the uniform default when none were given.
  WeightSet effective_weights() const { return weights ? *weights : WeightSet::uniform(spec); }
};

/// Parses and validates a JSON space definition.
///
/// Throws ParseError for malformed JSON or a wrong document shape and
/// ConstraintError for duplicate names, empty domains, or weight violations.
SpaceDocument parse_space(std::string_view text);

/// Reads a file and parses it; throws IoError if it cannot be read.
SpaceDocument load_space(const std::filesystem::path& path);

/// Reads a file's full contents; throws IoError on failure.
std::string read_text_file(const std::filesystem::path& path);

/// Emits the document format accepted by parse_space().
std::string serialize_space(const SpaceSpec& spec, const std::optional<WeightSet>& weights = std::nullopt);

/// Every structural and weight check on a document.
struct SpaceAudit {
  std::vector<ConstraintCheck> checks;
  bool ok() const;
};

/// Like parse_space() but collects constraint outcomes instead of throwing
/// on the first one. Syntax and shape errors still throw ParseError.
SpaceAudit audit_space(std::string_view text);

}  // namespace csgeom
