// Copyright 2026 The adaptlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "adaptlab/core/operator.hpp"
#include "adaptlab/core/state.hpp"

#include <functional>

namespace adaptlab {

struct Eigensystem {
  Eigen::VectorXd values;  // ascending
  Matrix vectors;          // column i pairs with values[i]
  int sweeps = 0;
};

/// Cyclic complex Jacobi. Sweeps until the off-diagonal Frobenius norm drops
/// below 1e-12 (scaled up for large-norm inputs), then sorts ascending with a
/// stable order on ties.
Eigensystem eigh(const DenseOperator& m);
Eigensystem eigh(const Matrix& m);

inline constexpr double kDegeneracyGap = 1e-10;

struct GroundState {
  double energy = 0.0;
  QuantumState state = QuantumState::basis(1, 0);
  bool degenerate = false;
  int multiplicity = 1;
  double gap = 0.0;  // E1 - E0
};

/// Lowest eigenpair. On a degenerate ground level the lowest-index eigenvector
/// is returned and `degenerate` is set. The vector's global phase is fixed so
/// its largest-magnitude amplitude is real and positive.
GroundState ground_state(const DenseOperator& h);

/// Rescales a vector so the first amplitude of maximal modulus is real
/// positive.
Vector fix_global_phase(Vector v);

/// U f(Lambda) U^dagger. Eigenvalues in (-1e-10, 0) are clamped to 0; anything
/// below -1e-8 throws ContractViolation. Eigenvalues in [-1e-8, -1e-10] are
/// also treated as not PSD.
DenseOperator matrix_function_psd(const DensityMatrix& rho, const std::function<double(double)>& f);
/// Same for a bare PSD matrix (used by the slow concurrence path where the
/// argument is not unit trace).
Matrix matrix_function_psd(const Matrix& m, const std::function<double(double)>& f);

}  // namespace adaptlab
