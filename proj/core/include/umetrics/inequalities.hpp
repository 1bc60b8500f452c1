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

#include <cstdint>
#include <nlohmann/json.hpp>
#include <span>
#include <string>
#include <vector>

#include "umetrics/majorization.hpp"
#include "umetrics/norms.hpp"

namespace umetrics::suites {

/// Common knobs for every randomized checker. Reports are deterministic
/// functions of (seed, trials, n, spec): per-trial sub-seeds derive from
/// the master seed and the trial index, and reductions are order
/// independent, so any thread count yields the identical report.
struct SuiteRun {
  long trials = 100;
  std::uint64_t seed = 0;
  int threads = 1;
};

/// Outcome of one randomized suite. Margins are raw slack: rhs - lhs for
/// inequalities, -|difference| for equalities. A trial violates when its
/// margin drops below -tol, so violations == 0 iff worst_margin >= -tol.
struct TrialReport {
  std::string suite;
  int n = 0;
  std::string context;  // norm string / functional name / index sets
  long trials = 0;
  long violations = 0;
  double worst_margin = 0.0;
  std::uint64_t seed = 0;
  long worst_trial = -1;
  nlohmann::json worst_case;  // inputs reproducing worst_margin

  bool ok() const { return violations == 0; }
};

nlohmann::json report_to_json(const TrialReport& report);

// ---------------------------------------------------------------------------
// Suites. Each check_* samples `run.trials` random instances and asserts
// the named inequalities per trial; each *_trial function is the exact
// single-trial path used internally, exposed so a reported worst case
// can be replayed from its sub-seed.
// ---------------------------------------------------------------------------

/// Ky Fan chain on eigenphases of unitary quotients: for Haar X, Y, Z
/// with phase vectors a, b, c of X Y*, Y Z*, X Z*, the k-largest sums of
/// |c| never exceed those of the descending-paired |a| + |b|.
TrialReport check_kyfan_chain(int n, const SuiteRun& run, double tol = 1e-9);
double kyfan_chain_trial(int n, std::uint64_t subseed,
                         nlohmann::json* record = nullptr);

/// Metric axioms for the norm-induced metric: nonnegativity, symmetry,
/// triangle inequality, vanishing on equal arguments, positivity on
/// separated arguments, left invariance.
TrialReport check_metric_axioms(const norms::SymmetricNormSpec& g,
                                const SuiteRun& run, double tol = 1e-8);
double metric_axioms_trial(const norms::SymmetricNormSpec& g,
                           std::uint64_t subseed,
                           nlohmann::json* record = nullptr);

/// Pseudo-metric axioms: symmetry, triangle inequality, global-phase
/// invariance, zero on phase multiples, and pseudo <= metric. With
/// oracle_grid_points > 0 each trial also cross-checks the solver
/// against the independent grid oracle.
TrialReport check_pseudo_metric_axioms(const norms::SymmetricNormSpec& g,
                                       const SuiteRun& run, double tol = 1e-6,
                                       long oracle_grid_points = 0);
double pseudo_metric_axioms_trial(const norms::SymmetricNormSpec& g,
                                  long oracle_grid_points,
                                  std::uint64_t subseed,
                                  nlohmann::json* record = nullptr);

/// Lidskii-type bound for unitary products: absolute phase sums of X Y
/// against those of X and Y over every admissible index triple with
/// p in [p_lo, p_hi].
TrialReport check_unitary_lidskii(int n, int p_lo, int p_hi,
                                  const SuiteRun& run, double tol = 1e-9);
double unitary_lidskii_trial(int n, int p_lo, int p_hi, std::uint64_t subseed,
                             nlohmann::json* record = nullptr);

/// Lidskii inequality for Hermitian sums over every admissible triple
/// with p in [p_lo, p_hi], plus the trace identity
/// sum lambda(A+B) = sum lambda(A) + sum lambda(B) (margin normalized
/// per dimension so the suite tolerance applies uniformly).
TrialReport check_hermitian_lidskii(int n, int p_lo, int p_hi,
                                    const SuiteRun& run, double tol = 1e-9);
double hermitian_lidskii_trial(int n, int p_lo, int p_hi,
                               std::uint64_t subseed,
                               nlohmann::json* record = nullptr);

/// A transfer functional h(c, a, b): nonpositive on singular-value
/// triples of Hermitian sums, and isotone in its first argument, hence
/// transferable to absolute eigenphases of unitary products.
struct TransferFunctional {
  enum class Form { KyFan, Lidskii };
  Form form = Form::KyFan;
  int k = 1;                          // KyFan form
  majorization::IndexTriple triple;   // Lidskii form

  std::string name() const;
  double operator()(std::span<const double> c, std::span<const double> a,
                    std::span<const double> b) const;
};

/// The built-in transfer family for dimension n: Ky Fan forms for every
/// k, Lidskii forms for the leading triples of every length, and all
/// admissible length-1 triples.
std::vector<TransferFunctional> builtin_transfer_functionals(int n);

/// Three-stage transfer check: (i) the functional is isotone in its
/// first argument on generated sub-majorized pairs, (ii) it is
/// nonpositive on singular values of Hermitian sums, (iii) it is
/// nonpositive on absolute phases of unitary products. A failure at an
/// earlier stage skips the later ones (the transfer premise is unmet).
TrialReport check_schur_transfer(const TransferFunctional& h, int n,
                                 const SuiteRun& run, double tol = 1e-9);
double schur_transfer_base_trial(const TransferFunctional& h, int n,
                                 std::uint64_t subseed,
                                 nlohmann::json* record = nullptr);
double schur_transfer_unitary_trial(const TransferFunctional& h, int n,
                                    std::uint64_t subseed,
                                    nlohmann::json* record = nullptr);

/// Empirical probe of a user-supplied index family on random Hermitian
/// pairs. Violations are a legitimate outcome: they signal that the
/// family is not a valid inequality (its admissibility is never assumed).
TrialReport check_general_lidskii(const majorization::GeneralIndexSets& sets,
                                  int n, const SuiteRun& run,
                                  double tol = 1e-9);
double general_lidskii_trial(const majorization::GeneralIndexSets& sets, int n,
                             std::uint64_t subseed,
                             nlohmann::json* record = nullptr);

/// Perturbation bound: X = exp(iA) with the spectrum of A inside
/// (-pi+eps, pi-eps) and E = exp(iB) with the spectrum of B inside
/// [-eps, eps]; the sorted eigenphases of X E stay within eps of those
/// of X, entry by entry.
TrialReport check_perturbation(int n, double eps, const SuiteRun& run,
                               double tol = 1e-9);
double perturbation_trial(int n, double eps, std::uint64_t subseed,
                          nlohmann::json* record = nullptr);

/// Cost-function constraints for cost(X) = pseudo-metric distance from
/// the identity: global-phase invariance, inverse symmetry, conjugation
/// invariance, sub-additivity, and zero cost of the identity.
TrialReport check_cost_constraints(const norms::SymmetricNormSpec& g,
                                   const SuiteRun& run, double tol = 1e-8);
double cost_constraints_trial(const norms::SymmetricNormSpec& g,
                              std::uint64_t subseed,
                              nlohmann::json* record = nullptr);

}  // namespace umetrics::suites
