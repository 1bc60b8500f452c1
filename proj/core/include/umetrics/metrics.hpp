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

#include <span>
#include <vector>

#include "umetrics/linalg.hpp"
#include "umetrics/norms.hpp"
#include "umetrics/tolerances.hpp"

namespace umetrics::metrics {

/// Principal eigenphases of a unitary: every entry in (-pi, pi] after
/// branch snapping, sorted descending.
class PhaseVector {
 public:
  explicit PhaseVector(std::vector<double> sorted_descending);
  const std::vector<double>& values() const { return phases_; }
  int size() const { return static_cast<int>(phases_.size()); }

 private:
  std::vector<double> phases_;
};

/// Absolute eigenphases: entries in [0, pi], sorted descending.
class AbsPhaseVector {
 public:
  explicit AbsPhaseVector(std::vector<double> sorted_descending);
  const std::vector<double>& values() const { return abs_phases_; }
  int size() const { return static_cast<int>(abs_phases_.size()); }

 private:
  std::vector<double> abs_phases_;
};

/// Outcome of the global phase minimization.
struct PhaseMinimum {
  double r_star = 0.0;       // minimizer in [0, 2pi)
  double value = 0.0;        // minimum of the objective
  int segment_count = 0;     // convex segments examined
  long evaluations = 0;      // objective evaluations spent
};

/// Eigenphases of a unitary, sorted descending in (-pi, pi].
PhaseVector eigenphases(const ComplexMatrix& u, const Tolerances& tol = {});

/// |eigenphases|, re-sorted descending.
AbsPhaseVector abs_phases(const ComplexMatrix& u, const Tolerances& tol = {});

/// The metric induced by a symmetric norm g: the norm of the absolute
/// eigenphases of x y*. Symmetric in its arguments; zero only when the
/// two unitaries coincide (up to the tolerance envelope).
double metric(const norms::SymmetricNormSpec& g, const ComplexMatrix& x,
              const ComplexMatrix& y, const Tolerances& tol = {});

/// The pseudo-metric: the minimum over a global phase r of the metric
/// between e^{ir} x and y. Vanishes exactly on pairs that differ by a
/// global phase. Solved by the segment method: the objective is convex
/// between consecutive phase-wrap breakpoints, so each segment is
/// golden-section searched and breakpoints are evaluated directly.
PhaseMinimum pseudo_metric(const norms::SymmetricNormSpec& g,
                           const ComplexMatrix& x, const ComplexMatrix& y,
                           const Tolerances& tol = {});

/// Brute-force verifier for pseudo_metric: uniform grid over [0, 2pi)
/// followed by golden-section refinement around every discrete local
/// minimum. Slower and entirely independent of the segment method.
PhaseMinimum pseudo_metric_grid_oracle(const norms::SymmetricNormSpec& g,
                                       const ComplexMatrix& x,
                                       const ComplexMatrix& y,
                                       long grid_points,
                                       const Tolerances& tol = {});

/// Evolution cost of a unitary: its pseudo-metric distance from the
/// identity. Phase-invariant, inverse-invariant, conjugation-invariant
/// and sub-additive.
double cost(const norms::SymmetricNormSpec& g, const ComplexMatrix& x,
            const Tolerances& tol = {});

/// Core of pseudo_metric, exposed for direct solver tests: minimizes
/// r -> g(|wrap(a_j + r)|) over the circle for a fixed phase vector.
PhaseMinimum minimize_wrapped_norm(const norms::SymmetricNormSpec& g,
                                   std::span<const double> phases);

/// The same objective evaluated pointwise (used by the grid oracle and
/// by tests): g applied to |wrap(a_j + r)|.
double wrapped_norm_objective(const norms::SymmetricNormSpec& g,
                              std::span<const double> phases, double r);

}  // namespace umetrics::metrics
