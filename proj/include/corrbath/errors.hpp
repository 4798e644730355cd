// Copyright 2026 the corrbath authors
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

#include <stdexcept>
#include <string>
#include <vector>

namespace corrbath {

// Incompatible or non-sensical matrix dimensions.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Request exceeds the hard size limits of the dense superoperator path.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// User-facing input rejected; carries every violated check, not just the
// first one. Maps to exit code 1 in the CLI.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> errors)
      : std::runtime_error(join(errors)), errors_(std::move(errors)) {}
  explicit ValidationError(const std::string& one)
      : ValidationError(std::vector<std::string>{one}) {}

  const std::vector<std::string>& errors() const { return errors_; }

 private:
  static std::string join(const std::vector<std::string>& es) {
    std::string out = "validation failed:";
    for (const auto& e : es) out += "\n  - " + e;
    return out;
  }
  std::vector<std::string> errors_;
};

// A computation produced results outside its certified quality bounds
// (solver non-convergence, positivity violated beyond tolerance, ...).
// Maps to exit code 2 in the CLI.
class NumericalQualityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency guarantee failed (e.g. a trace-preserving
// generator without a kernel); indicates a bug upstream, not bad input.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace corrbath
