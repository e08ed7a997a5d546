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
#include <stdexcept>
#include <string>
#include <utility>

namespace csgeom {

/// Base class for failures caused by input documents rather than by
/// programming errors. Argument preconditions raise std::invalid_argument.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file could not be opened or read.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A space-definition document is not well-formed. `position` is the byte
/// offset reported by the JSON reader, or npos for shape errors that are
/// located by `path` instead.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position, std::string path = {})
      : Error(message), position_(position), path_(std::move(path)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& path() const noexcept { return path_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t position_;
  std::string path_;
};

/// A structural or weight constraint of the space does not hold.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

}  // namespace csgeom
