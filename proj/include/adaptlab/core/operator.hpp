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

#include "adaptlab/core/state.hpp"

#include <span>
#include <string_view>

namespace adaptlab {

inline constexpr double kHermitianTolerance = 1e-12;

/// Square complex matrix acting on a register. Carries H and generic
/// observables; nothing here assumes Hermiticity until asked.
class DenseOperator {
 public:
  DenseOperator() = default;
  explicit DenseOperator(Matrix entries);

  static DenseOperator zero(Eigen::Index dim);
  static DenseOperator identity(Eigen::Index dim);

  Eigen::Index dim() const { return entries_.rows(); }
  const Matrix& matrix() const { return entries_; }

  /// max |M - M^dagger| entry.
  double hermiticity_defect() const;
  bool is_hermitian(double tol = kHermitianTolerance) const {
    return hermiticity_defect() < tol;
  }
  /// Throws ContractViolation naming `context` if not Hermitian.
  void require_hermitian(std::string_view context) const;

 private:
  Matrix entries_;
};

/// Hermitian, unit-trace operator. PSD-ness is only checked where a spectral
/// function is taken (see matrix_function_psd).
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix entries);

  Eigen::Index dim() const { return entries_.rows(); }
  const Matrix& matrix() const { return entries_; }
  double purity() const;

 private:
  Matrix entries_;
};

/// <psi|H|psi>. H must be Hermitian; a leftover imaginary part above 1e-10
/// is a contract violation.
double expectation(const QuantumState& state, const DenseOperator& h);
double expectation(const Vector& psi, const Matrix& h);

/// Coefficient matrix a_{jk} of |psi> = sum a_{jk} |j>_A |k>_B.
/// Row index enumerates `side_a` bits in the given order, column index the
/// remaining qubits in increasing order.
Matrix bipartition_matrix(const QuantumState& state, std::span<const int> side_a);

/// Reduced state on `keep` (strictly increasing). Output qubit order follows
/// `keep`.
DensityMatrix partial_trace(const QuantumState& state, std::span<const int> keep);

}  // namespace adaptlab
