// Copyright 2026 the umetrics developers
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

namespace umetrics {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Incompatible matrix/vector shapes; the message names both shapes.
class DimensionMismatch final : public Error {
 public:
  using Error::Error;
};

/// Input failed the unitarity gate; carries the measured Frobenius defect.
class UnitarityViolation final : public Error {
 public:
  UnitarityViolation(const std::string& msg, double defect)
      : Error(msg), defect_(defect) {}
  double defect() const { return defect_; }

 private:
  double defect_;
};

/// Input failed the hermiticity gate; carries the measured Frobenius defect.
class HermiticityViolation final : public Error {
 public:
  HermiticityViolation(const std::string& msg, double defect)
      : Error(msg), defect_(defect) {}
  double defect() const { return defect_; }

 private:
  double defect_;
};

/// An eigensolver failed to converge or a computed result missed its
/// residual contract.
class NumericalFailure final : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON input (matrices, index sets, reports).
class ParseError final : public Error {
 public:
  using Error::Error;
};

/// A norm description that violates its own invariants (p < 1, k out of
/// range, all-zero weight vector, ...).
class InvalidNormSpec final : public Error {
 public:
  using Error::Error;
};

/// An index triple or index-set family that is malformed or inadmissible.
class InvalidIndexSet final : public Error {
 public:
  using Error::Error;
};

}  // namespace umetrics
