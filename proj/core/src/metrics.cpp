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

#include "umetrics/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "umetrics/errors.hpp"

namespace umetrics::metrics {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Golden-section interval tolerance of the segment solver.
constexpr double kSolverTolR = 1e-12;
// The grid oracle refines a touch finer so that refinement noise stays
// below the 1e-12 comparisons made against it.
constexpr double kOracleTolR = 5e-14;

double wrap_principal(double a) {
  // remainder() lands in [-pi, pi]; only the absolute value is consumed
  // here, so the -pi vs +pi choice at the cut is immaterial.
  return std::remainder(a, kTwoPi);
}

double wrap_into_period(double r) {
  double w = std::fmod(r, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  return w;
}

void require_sorted_descending(const std::vector<double>& v, const char* who) {
  for (size_t i = 1; i < v.size(); ++i) {
    if (v[i - 1] < v[i]) {
      throw Error(std::string(who) + ": entries not sorted descending");
    }
  }
}

struct GoldenResult {
  double r = 0.0;
  double value = 0.0;
  long evaluations = 0;
};

// Minimizes f over [lo, hi]; returns the best evaluated point, which for
// a convex f is within curvature * tol_r of the true segment minimum.
template <typename F>
GoldenResult golden_section(F&& f, double lo, double hi, double tol_r) {
  constexpr double inv_phi = 0.6180339887498949;  // 1/golden ratio
  GoldenResult best;
  double a = lo, b = hi;
  double c = b - (b - a) * inv_phi;
  double d = a + (b - a) * inv_phi;
  double fc = f(c);
  double fd = f(d);
  best.evaluations = 2;
  if (fc <= fd) {
    best.r = c;
    best.value = fc;
  } else {
    best.r = d;
    best.value = fd;
  }
  while (b - a > tol_r) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * inv_phi;
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * inv_phi;
      fd = f(d);
    }
    ++best.evaluations;
    if (fc < best.value) {
      best.value = fc;
      best.r = c;
    }
    if (fd < best.value) {
      best.value = fd;
      best.r = d;
    }
  }
  return best;
}

std::vector<double> sorted_phases_of(const ComplexMatrix& u, const Tolerances& tol) {
  const auto sys = linalg::eig_unitary(u, tol);
  std::vector<double> phases(static_cast<size_t>(sys.values.size()));
  for (Eigen::Index j = 0; j < sys.values.size(); ++j) {
    double a = std::arg(sys.values(j));
    if (a <= -kPi + tol.branch) a = kPi;
    phases[static_cast<size_t>(j)] = a;
  }
  std::sort(phases.begin(), phases.end(), std::greater<>());
  return phases;
}

void require_same_dim(const norms::SymmetricNormSpec& g, const ComplexMatrix& x,
                      const ComplexMatrix& y, const char* who) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    std::ostringstream os;
    os << who << ": mismatched operands " << x.rows() << "x" << x.cols()
       << " vs " << y.rows() << "x" << y.cols();
    throw DimensionMismatch(os.str());
  }
  if (g.dim() != x.rows()) {
    std::ostringstream os;
    os << who << ": norm dimension " << g.dim() << " != matrix dimension "
       << x.rows();
    throw DimensionMismatch(os.str());
  }
}

}  // namespace

PhaseVector::PhaseVector(std::vector<double> sorted_descending)
    : phases_(std::move(sorted_descending)) {
  require_sorted_descending(phases_, "PhaseVector");
  for (double a : phases_) {
    if (!(a > -kPi - 1e-15) || !(a <= kPi + 1e-15)) {
      throw Error("PhaseVector: entry outside (-pi, pi]");
    }
  }
}

AbsPhaseVector::AbsPhaseVector(std::vector<double> sorted_descending)
    : abs_phases_(std::move(sorted_descending)) {
  require_sorted_descending(abs_phases_, "AbsPhaseVector");
  for (double a : abs_phases_) {
    if (!(a >= 0.0) || !(a <= kPi + 1e-15)) {
      throw Error("AbsPhaseVector: entry outside [0, pi]");
    }
  }
}

PhaseVector eigenphases(const ComplexMatrix& u, const Tolerances& tol) {
  return PhaseVector(sorted_phases_of(u, tol));
}

AbsPhaseVector abs_phases(const ComplexMatrix& u, const Tolerances& tol) {
  std::vector<double> phases = sorted_phases_of(u, tol);
  for (double& a : phases) a = std::abs(a);
  std::sort(phases.begin(), phases.end(), std::greater<>());
  return AbsPhaseVector(std::move(phases));
}

double metric(const norms::SymmetricNormSpec& g, const ComplexMatrix& x,
              const ComplexMatrix& y, const Tolerances& tol) {
  require_same_dim(g, x, y, "metric");
  const AbsPhaseVector a = abs_phases(x * y.adjoint(), tol);
  return norms::evaluate(g, a.values());
}

double wrapped_norm_objective(const norms::SymmetricNormSpec& g,
                              std::span<const double> phases, double r) {
  std::vector<double> shifted(phases.size());
  for (size_t j = 0; j < phases.size(); ++j) {
    shifted[j] = std::abs(wrap_principal(phases[j] + r));
  }
  return norms::evaluate(g, shifted);
}

PhaseMinimum minimize_wrapped_norm(const norms::SymmetricNormSpec& g,
                                   std::span<const double> phases) {
  const auto objective = [&](double r) {
    return wrapped_norm_objective(g, phases, r);
  };

  PhaseMinimum out;
  // Breakpoints: r where some phase wraps across the cut, i.e.
  // r = pi - a_j (mod 2pi). Between consecutive breakpoints every
  // |wrap(a_j + r)| is a convex V, and a symmetric norm is monotone on
  // the nonnegative orthant, so the objective is convex per segment.
  std::vector<double> breakpoints;
  breakpoints.reserve(phases.size() + 1);
  for (double a : phases) breakpoints.push_back(wrap_into_period(kPi - a));
  // r = 0 is evaluated explicitly so value <= metric holds exactly.
  breakpoints.push_back(0.0);
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end(),
                                [](double a, double b) { return b - a <= 1e-12; }),
                    breakpoints.end());

  out.r_star = breakpoints.front();
  out.value = objective(out.r_star);
  out.evaluations = 1;
  for (size_t i = 1; i < breakpoints.size(); ++i) {
    const double v = objective(breakpoints[i]);
    ++out.evaluations;
    if (v < out.value) {
      out.value = v;
      out.r_star = breakpoints[i];
    }
  }

  const size_t count = breakpoints.size();
  for (size_t i = 0; i < count; ++i) {
    const double lo = breakpoints[i];
    const double hi = (i + 1 < count) ? breakpoints[i + 1] : breakpoints[0] + kTwoPi;
    if (hi - lo <= 1e-12) continue;
    ++out.segment_count;
    const GoldenResult seg = golden_section(objective, lo, hi, kSolverTolR);
    out.evaluations += seg.evaluations;
    if (seg.value < out.value) {
      out.value = seg.value;
      out.r_star = wrap_into_period(seg.r);
    }
  }

  // Pin the reported value to a direct evaluation at the reported point.
  out.value = objective(out.r_star);
  ++out.evaluations;
  return out;
}

PhaseMinimum pseudo_metric(const norms::SymmetricNormSpec& g,
                           const ComplexMatrix& x, const ComplexMatrix& y,
                           const Tolerances& tol) {
  require_same_dim(g, x, y, "pseudo_metric");
  const PhaseVector a = eigenphases(x * y.adjoint(), tol);
  return minimize_wrapped_norm(g, a.values());
}

PhaseMinimum pseudo_metric_grid_oracle(const norms::SymmetricNormSpec& g,
                                       const ComplexMatrix& x,
                                       const ComplexMatrix& y,
                                       long grid_points,
                                       const Tolerances& tol) {
  if (grid_points < 3) {
    throw Error("pseudo_metric_grid_oracle: need at least 3 grid points");
  }
  require_same_dim(g, x, y, "pseudo_metric_grid_oracle");
  const PhaseVector a = eigenphases(x * y.adjoint(), tol);
  const auto objective = [&](double r) {
    return wrapped_norm_objective(g, a.values(), r);
  };

  const double h = kTwoPi / static_cast<double>(grid_points);
  std::vector<double> grid(static_cast<size_t>(grid_points));
  for (long i = 0; i < grid_points; ++i) {
    grid[static_cast<size_t>(i)] = objective(h * static_cast<double>(i));
  }

  PhaseMinimum out;
  out.evaluations = grid_points;
  out.r_star = 0.0;
  out.value = grid[0];
  for (long i = 1; i < grid_points; ++i) {
    if (grid[static_cast<size_t>(i)] < out.value) {
      out.value = grid[static_cast<size_t>(i)];
      out.r_star = h * static_cast<double>(i);
    }
  }

  // Refine every discrete local minimum (one representative per plateau
  // run); the objective has at most n+1 basins, so this stays cheap and
  // does not miss a basin whose sampled value barely loses to another.
  const auto at = [&](long i) {
    return grid[static_cast<size_t>(((i % grid_points) + grid_points) % grid_points)];
  };
  for (long i = 0; i < grid_points; ++i) {
    if (at(i) > at(i - 1) || at(i) > at(i + 1)) continue;
    // Interior of an exactly flat run; the run edges are enough.
    if (at(i) == at(i - 1) && at(i) == at(i + 1)) continue;
    const double center = h * static_cast<double>(i);
    ++out.segment_count;
    const GoldenResult refined =
        golden_section(objective, center - h, center + h, kOracleTolR);
    out.evaluations += refined.evaluations;
    if (refined.value < out.value) {
      out.value = refined.value;
      out.r_star = wrap_into_period(refined.r);
    }
  }

  out.value = objective(out.r_star);
  ++out.evaluations;
  return out;
}

double cost(const norms::SymmetricNormSpec& g, const ComplexMatrix& x,
            const Tolerances& tol) {
  const ComplexMatrix identity = ComplexMatrix::Identity(x.rows(), x.cols());
  return pseudo_metric(g, x, identity, tol).value;
}

}  // namespace umetrics::metrics
