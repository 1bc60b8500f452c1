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

#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "umetrics/linalg.hpp"
#include "umetrics/rng.hpp"
#include "umetrics/tolerances.hpp"

namespace umetrics::norms {

/// Declarative description of a symmetric norm on R^n (a norm invariant
/// under coordinate permutations and sign flips). Three built-in
/// families:
///   - Lp        (sum |v_j|^p)^(1/p), p in [1, inf]; p = inf is a
///               distinguished marker evaluated as max |v_j|, never as
///               arithmetic on an infinite exponent.
///   - KyFan(k)  sum of the k largest |v_j|, 1 <= k <= n.
///   - MuWeighted(mu)  max over permutations of sum |mu_j v_{i_j}|;
///               requires at least one nonzero weight, otherwise the
///               formula yields only a seminorm.
class SymmetricNormSpec {
 public:
  enum class Kind { Lp, KyFan, MuWeighted };

  static SymmetricNormSpec lp(double p, int n);
  static SymmetricNormSpec lp_infinity(int n);
  static SymmetricNormSpec ky_fan(int k, int n);
  static SymmetricNormSpec mu_weighted(std::vector<double> mu);

  Kind kind() const { return kind_; }
  int dim() const { return n_; }

  double p() const { return p_; }  // Lp only; +inf for the max norm
  bool p_is_infinite() const { return std::isinf(p_); }
  int k() const { return k_; }                          // KyFan only
  const std::vector<double>& mu() const { return mu_; } // MuWeighted only

  /// Canonical text form; round-trips through parse_norm_spec.
  std::string to_string() const;

 private:
  SymmetricNormSpec() = default;
  Kind kind_ = Kind::Lp;
  int n_ = 0;
  double p_ = 2.0;
  int k_ = 1;
  std::vector<double> mu_;
};

/// Parses "l1", "l2", "linf", "lp:2.5", "kyfan:3", "mu:1,0.5,0.25" for
/// ambient dimension n. Throws InvalidNormSpec on malformed text or a
/// spec incompatible with n.
SymmetricNormSpec parse_norm_spec(std::string_view text, int n);

/// Evaluates the norm. Throws DimensionMismatch if v.size() != spec.dim().
double evaluate(const SymmetricNormSpec& spec, std::span<const double> v);

/// Sum of the k largest *signed* entries. This is the proof-internal
/// functional on vectors that are already nonnegative; it deliberately
/// does not take absolute values, unlike the KyFan norm family.
double ky_fan_vector(std::span<const double> v, int k);

/// Ky Fan k-norm of a matrix: the sum of its k largest singular values.
/// Hermitian inputs go through |eigenvalues|; general inputs through the
/// square roots of the eigenvalues of M*M.
double ky_fan_matrix(const ComplexMatrix& m, int k, const Tolerances& tol = {});

/// Result of the randomized norm-axiom self-test. Failures are report
/// content, not errors; counterexample vectors are recorded verbatim.
struct NormValidationReport {
  long trials = 0;
  long violations = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  std::vector<std::string> failures;  // capped human-readable records
  bool ok() const { return violations == 0; }
};

/// Randomized check of the symmetric-norm axioms for an arbitrary
/// functional: triangle inequality, absolute homogeneity, permutation
/// invariance, sign-flip invariance, positivity on nonzero vectors.
NormValidationReport validate_norm_function(
    const std::function<double(std::span<const double>)>& fn, int n,
    RandomStream& rng, long trials, double slack = 1e-10);

/// The same check specialized to a built-in spec.
NormValidationReport validate_symmetric_norm(const SymmetricNormSpec& spec,
                                             RandomStream& rng, long trials,
                                             double slack = 1e-10);

}  // namespace umetrics::norms
