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

#include <Eigen/Dense>

#include "umetrics/rng.hpp"
#include "umetrics/tolerances.hpp"

namespace umetrics::linalg {

/// Dense complex matrix, the universal carrier (unitary, Hermitian,
/// general). Backed by Eigen; JSON I/O lives in matrix_io.hpp.
using ComplexMatrix = Eigen::MatrixXcd;

/// An eigendecomposition M V = V diag(values). For normal inputs the
/// column basis is unitary; construction enforces the residual contract
/// ||M V - V diag(values)||_F <= residual_factor * n * ||M||_F.
struct EigenSystem {
  Eigen::VectorXcd values;
  ComplexMatrix vectors;
};

/// Checked product. Throws DimensionMismatch naming both shapes.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose. Exact involution: adjoint(adjoint(m)) == m.
ComplexMatrix adjoint(const ComplexMatrix& m);

/// ||U U* - I||_F, the unitarity defect.
double unitarity_defect(const ComplexMatrix& u);

/// ||M - M*||_F, the hermiticity defect.
double hermiticity_defect(const ComplexMatrix& m);

/// Eigendecomposition of a unitary (hence normal) matrix. All
/// eigenvalues returned lie on the unit circle to eigensolver accuracy
/// and the basis is unitary. The input is gated on tol.unitarity;
/// failures throw UnitarityViolation with the measured defect. A missed
/// residual contract throws NumericalFailure.
///
/// Internally U is split into the commuting Hermitian pair
/// H = (U + U*)/2, K = (U - U*)/(2i) and the pair is simultaneously
/// diagonalized: diagonalize H, re-diagonalize K inside near-degenerate
/// H-clusters, then re-diagonalize H inside joint clusters when that is
/// the better-conditioned direction.
EigenSystem eig_unitary(const ComplexMatrix& u, const Tolerances& tol = {});

/// Eigendecomposition of a Hermitian matrix. Values are real (zero
/// imaginary part) and sorted descending. Gated on tol.hermiticity.
EigenSystem eig_hermitian(const ComplexMatrix& h, const Tolerances& tol = {});

/// V diag(exp(i lambda_k)) V* from eig_hermitian(h). The result passes
/// the unitarity gate of eig_unitary.
ComplexMatrix exp_i_hermitian(const ComplexMatrix& h, const Tolerances& tol = {});

/// Principal logarithm: the Hermitian A with eigenvalues in (-pi, pi]
/// such that exp_i_hermitian(A) reproduces u. Eigenphases within
/// tol.branch of -pi map to +pi.
ComplexMatrix log_unitary(const ComplexMatrix& u, const Tolerances& tol = {});

/// Haar-distributed random unitary: QR of an i.i.d. complex Gaussian
/// matrix with each Q column rephased so the matching R diagonal entry
/// is real positive. Deterministic given the stream state.
ComplexMatrix haar_unitary(int n, RandomStream& rng);

/// GUE-style random Hermitian: H = scale * (G + G*)/2 with G an i.i.d.
/// complex Gaussian matrix. Hermitian exactly, by construction.
ComplexMatrix gue_hermitian(int n, double scale, RandomStream& rng);

}  // namespace umetrics::linalg

namespace umetrics {
using linalg::ComplexMatrix;
}  // namespace umetrics
