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

#include <functional>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "umetrics/rng.hpp"

namespace umetrics::majorization {

/// Result of a weak sub-majorization test between two sequences.
struct SubmajorizationCheck {
  bool holds = false;
  double min_margin = 0.0;  // smallest prefix-sum slack observed
  int violating_k = 0;      // 1-based prefix where it first fails; 0 if none
};

/// Tests whether u is weakly sub-majorized by v: every k-prefix sum of
/// the descending rearrangement of u is at most the matching prefix sum
/// of v, with slack >= -tol. Inputs are copied and sorted internally.
SubmajorizationCheck weakly_submajorized(std::span<const double> u,
                                         std::span<const double> v,
                                         double tol = 1e-10);

/// Samples a pair (u, u') with u weakly sub-majorized by u': u' is a
/// sorted nonnegative vector and u is u' minus a random nonnegative
/// transfer, re-sorted. Occasionally returns boundary pairs (zero
/// transfer, or transfer touching only trailing entries) so equality
/// cases are exercised.
std::pair<std::vector<double>, std::vector<double>> sample_submajorized_pair(
    int n, RandomStream& rng);

/// Report of the randomized isotonicity check.
struct SchurConvexityReport {
  long trials = 0;
  long violations = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  std::string worst_case;  // first/worst violating pair, verbatim
  bool ok() const { return violations == 0; }
};

/// Randomized check that h is isotone under weak sub-majorization:
/// h(u) <= h(u') + tol whenever u is weakly sub-majorized by u'. Every
/// generated pair is itself validated with weakly_submajorized before
/// use. Violations are report content, not errors.
SchurConvexityReport check_schur_convex(
    const std::function<double(std::span<const double>)>& h, int n, long trials,
    RandomStream& rng, double tol = 1e-9);

/// A pair of strictly increasing 1-based index sequences (j, k) of equal
/// length p with the admissibility constraint j_p + k_p - p <= n.
struct IndexTriple {
  std::vector<int> j_seq;
  std::vector<int> k_seq;
  int p() const { return static_cast<int>(j_seq.size()); }
  std::string to_string() const;
};

/// Validates shape and admissibility for ambient dimension n; throws
/// InvalidIndexSet otherwise.
void validate_triple(const IndexTriple& triple, int n);

/// lhs = sum_l c[j_l + k_l - l], rhs = sum_l (a[j_l] + b[k_l]), all
/// indices 1-based on descending-sorted inputs of equal length.
std::pair<double, double> lidskii_lhs_rhs(const IndexTriple& triple,
                                          std::span<const double> c,
                                          std::span<const double> a,
                                          std::span<const double> b);

/// All admissible triples for fixed (n, p), lexicographic in (j, k).
std::vector<IndexTriple> enumerate_triples(int n, int p);

/// Index-set family (I, J, K) of equal cardinality for inequalities of
/// the form sum_K lambda(A+B) <= sum_I lambda(A) + sum_J lambda(B).
/// Whether a given family is a *true* inequality is the caller's
/// responsibility; only well-formedness is validated here.
struct GeneralIndexSets {
  std::vector<int> I;
  std::vector<int> J;
  std::vector<int> K;
  std::string to_string() const;
};

void validate_sets(const GeneralIndexSets& sets, int n);

}  // namespace umetrics::majorization
