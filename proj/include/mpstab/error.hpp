// Copyright (c) 2026 The mpstab Authors. All Rights Reserved.
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

namespace mpstab {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit the operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A value lies outside the domain of the operation (e.g. ε where a finite
/// entry is required, or NaN/+inf at construction).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Invalid argument combination (alpha > beta, bad mode index, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A generator column has no finite entry.
class DegenerateGeneratorError : public Error {
 public:
  using Error::Error;
};

/// The Kleene star does not exist because the maximum cycle mean is positive.
class StarDivergenceError : public Error {
 public:
  StarDivergenceError(double cycle_mean, const std::string& what)
      : Error(what), cycle_mean_(cycle_mean) {}
  double cycle_mean() const noexcept { return cycle_mean_; }

 private:
  double cycle_mean_;
};

/// The cone {x | Q ⊗ x <= x} is empty.
class EmptyConeError : public Error {
 public:
  using Error::Error;
};

/// A switching automaton cannot produce a sequence of the requested length.
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// Malformed model file. Carries a location string (line:column or a JSON
/// path) when one is known.
class ModelError : public Error {
 public:
  ModelError(const std::string& what, std::string location = {})
      : Error(location.empty() ? what : location + ": " + what),
        location_(std::move(location)) {}
  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

}  // namespace mpstab
