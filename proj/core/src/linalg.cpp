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

#include "umetrics/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <cmath>
#include <complex>
#include <sstream>
#include <utility>
#include <vector>

#include "umetrics/errors.hpp"

namespace umetrics::linalg {
namespace {

using std::complex;

// Eigenvalue gap below which a projected eigenbasis is treated as one
// cluster and re-mixed against the complementary Hermitian part. Above
// this gap, first-stage eigenvectors are accurate enough that neglected
// cross terms stay under the residual contract.
constexpr double kSimdiagGap = 1e-5;

std::string shape_of(const ComplexMatrix& m) {
  std::ostringstream os;
  os << m.rows() << "x" << m.cols();
  return os.str();
}

void require_square(const ComplexMatrix& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw DimensionMismatch(std::string(who) + ": expected a square matrix, got " +
                            shape_of(m));
  }
}

// Maximal runs of consecutive (ascending) values with gaps <= gap.
std::vector<std::pair<Eigen::Index, Eigen::Index>> cluster_runs(
    const Eigen::VectorXd& ascending, double gap) {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> runs;
  const Eigen::Index n = ascending.size();
  Eigen::Index lo = 0;
  for (Eigen::Index i = 1; i <= n; ++i) {
    if (i == n || ascending(i) - ascending(i - 1) > gap) {
      runs.emplace_back(lo, i);
      lo = i;
    }
  }
  return runs;
}

void enforce_residual(const ComplexMatrix& m, const EigenSystem& sys,
                      const Tolerances& tol, const char* who) {
  const double residual =
      (m * sys.vectors - sys.vectors * sys.values.asDiagonal()).norm();
  const double bound =
      tol.residual_factor * static_cast<double>(m.rows()) * m.norm();
  if (residual > bound) {
    std::ostringstream os;
    os << who << ": eigendecomposition residual " << residual
       << " exceeds contract " << bound;
    throw NumericalFailure(os.str());
  }
}

}  // namespace

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matmul: cannot multiply " + shape_of(a) + " by " +
                            shape_of(b));
  }
  return a * b;
}

ComplexMatrix adjoint(const ComplexMatrix& m) { return m.adjoint(); }

double unitarity_defect(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  return (u * u.adjoint() -
          ComplexMatrix::Identity(u.rows(), u.cols()))
      .norm();
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).norm();
}

EigenSystem eig_hermitian(const ComplexMatrix& h, const Tolerances& tol) {
  require_square(h, "eig_hermitian");
  const double defect = hermiticity_defect(h);
  if (!(defect <= tol.hermiticity)) {
    std::ostringstream os;
    os << "eig_hermitian: hermiticity defect " << defect << " exceeds tolerance "
       << tol.hermiticity;
    throw HermiticityViolation(os.str(), defect);
  }

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("eig_hermitian: eigensolver did not converge");
  }

  // Eigen returns ascending order; the library contract is descending.
  const Eigen::Index n = h.rows();
  EigenSystem sys;
  sys.values.resize(n);
  sys.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    sys.values(i) = complex<double>(solver.eigenvalues()(n - 1 - i), 0.0);
    sys.vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  enforce_residual(h, sys, tol, "eig_hermitian");
  return sys;
}

EigenSystem eig_unitary(const ComplexMatrix& u, const Tolerances& tol) {
  require_square(u, "eig_unitary");
  const double defect = unitarity_defect(u);
  if (!(defect <= tol.unitarity)) {
    std::ostringstream os;
    os << "eig_unitary: unitarity defect " << defect << " exceeds tolerance "
       << tol.unitarity;
    throw UnitarityViolation(os.str(), defect);
  }

  const Eigen::Index n = u.rows();
  // Commuting Hermitian pair: U = H + iK with H = (U+U*)/2, K = (U-U*)/(2i).
  const ComplexMatrix h = 0.5 * (u + u.adjoint());
  const ComplexMatrix k = (u - u.adjoint()) * complex<double>(0.0, -0.5);

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> stage1(h);
  if (stage1.info() != Eigen::Success) {
    throw NumericalFailure("eig_unitary: Hermitian-part eigensolver did not converge");
  }
  ComplexMatrix basis = stage1.eigenvectors();

  for (const auto& [lo, hi] : cluster_runs(stage1.eigenvalues(), kSimdiagGap)) {
    const Eigen::Index m = hi - lo;
    if (m < 2) continue;

    // H is near-scalar on this cluster; split it by the skew part.
    auto cols = basis.middleCols(lo, m);
    const ComplexMatrix kc = cols.adjoint() * k * cols;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> stage2(kc);
    if (stage2.info() != Eigen::Success) {
      throw NumericalFailure("eig_unitary: cluster eigensolver did not converge");
    }
    const ComplexMatrix rotated = cols * stage2.eigenvectors();
    basis.middleCols(lo, m) = rotated;

    // Joint near-degeneracies: both projections collapsed. Re-diagonalize
    // whichever part has the wider spread; the other is near-scalar there,
    // so the rotation cannot push its residual past the narrow spread.
    for (const auto& [slo, shi] : cluster_runs(stage2.eigenvalues(), kSimdiagGap)) {
      const Eigen::Index sm = shi - slo;
      if (sm < 2) continue;
      auto sub = basis.middleCols(lo + slo, sm);
      const ComplexMatrix hs = sub.adjoint() * h * sub;
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> stage3(hs);
      if (stage3.info() != Eigen::Success) {
        throw NumericalFailure("eig_unitary: cluster eigensolver did not converge");
      }
      const double h_spread =
          stage3.eigenvalues()(sm - 1) - stage3.eigenvalues()(0);
      const double k_spread =
          stage2.eigenvalues()(shi - 1) - stage2.eigenvalues()(slo);
      if (h_spread > k_spread) {
        const ComplexMatrix fixed = sub * stage3.eigenvectors();
        basis.middleCols(lo + slo, sm) = fixed;
      }
    }
  }

  EigenSystem sys;
  sys.vectors = std::move(basis);
  sys.values.resize(n);
  const ComplexMatrix uv = u * sys.vectors;
  for (Eigen::Index j = 0; j < n; ++j) {
    // Rayleigh quotient: the residual-minimizing eigenvalue per column.
    sys.values(j) = sys.vectors.col(j).dot(uv.col(j));
  }
  enforce_residual(u, sys, tol, "eig_unitary");
  return sys;
}

ComplexMatrix exp_i_hermitian(const ComplexMatrix& h, const Tolerances& tol) {
  const EigenSystem sys = eig_hermitian(h, tol);
  const Eigen::Index n = h.rows();
  Eigen::VectorXcd phases(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double lambda = sys.values(j).real();
    phases(j) = complex<double>(std::cos(lambda), std::sin(lambda));
  }
  return sys.vectors * phases.asDiagonal() * sys.vectors.adjoint();
}

ComplexMatrix log_unitary(const ComplexMatrix& u, const Tolerances& tol) {
  const EigenSystem sys = eig_unitary(u, tol);
  const Eigen::Index n = u.rows();
  Eigen::VectorXd phases(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double a = std::arg(sys.values(j));
    if (a <= -std::numbers::pi + tol.branch) a = std::numbers::pi;
    phases(j) = a;
  }
  const ComplexMatrix log_raw =
      sys.vectors * phases.cast<complex<double>>().asDiagonal() *
      sys.vectors.adjoint();
  return 0.5 * (log_raw + log_raw.adjoint());
}

ComplexMatrix haar_unitary(int n, RandomStream& rng) {
  if (n < 1) throw Error("haar_unitary: dimension must be >= 1");
  ComplexMatrix ginibre(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      ginibre(i, j) = rng.complex_normal();
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(ginibre);
  ComplexMatrix q = qr.householderQ();
  // Fix the gauge: rescale each column so the matching R diagonal entry
  // becomes real positive. Without this the distribution is not Haar.
  for (int j = 0; j < n; ++j) {
    const complex<double> r = qr.matrixQR()(j, j);
    const double mag = std::abs(r);
    q.col(j) *= (mag == 0.0) ? complex<double>(1.0, 0.0) : r / mag;
  }
  return q;
}

ComplexMatrix gue_hermitian(int n, double scale, RandomStream& rng) {
  if (n < 1) throw Error("gue_hermitian: dimension must be >= 1");
  if (scale < 0.0) throw Error("gue_hermitian: scale must be nonnegative");
  ComplexMatrix ginibre(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      ginibre(i, j) = rng.complex_normal();
    }
  }
  // Entrywise (g_ij + conj(g_ji))/2 is Hermitian exactly in floating point.
  return (0.5 * scale) * (ginibre + ginibre.adjoint());
}

}  // namespace umetrics::linalg
