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

namespace umetrics {

/// Central numerical tolerance record. Every gate and contract in the
/// library reads from one of these, so test suites can tighten or loosen
/// uniformly instead of chasing scattered magic numbers.
struct Tolerances {
  /// Largest accepted ||U U* - I||_F for matrices claimed unitary.
  double unitarity = 1e-8;

  /// Largest accepted ||H - H*||_F for matrices claimed Hermitian.
  double hermiticity = 1e-8;

  /// Eigendecomposition residual contract:
  /// ||M V - V diag(lambda)||_F <= residual_factor * n * ||M||_F.
  double residual_factor = 1e-10;

  /// Eigenphases within this distance of -pi snap to +pi, making the
  /// half-open principal interval (-pi, pi] deterministic at the cut.
  double branch = 1e-12;
};

}  // namespace umetrics
