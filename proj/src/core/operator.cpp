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

#include "adaptlab/core/operator.hpp"

#include "adaptlab/errors.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace adaptlab {

DenseOperator::DenseOperator(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) throw DimensionError("operator must be square");
}

DenseOperator DenseOperator::zero(Eigen::Index dim) { return DenseOperator(Matrix::Zero(dim, dim)); }

DenseOperator DenseOperator::identity(Eigen::Index dim) {
  return DenseOperator(Matrix::Identity(dim, dim));
}

double DenseOperator::hermiticity_defect() const {
  if (entries_.size() == 0) return 0.0;
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

void DenseOperator::require_hermitian(std::string_view context) const {
  const double defect = hermiticity_defect();
  if (!(defect < kHermitianTolerance)) {
    throw ContractViolation(std::string(context) + ": operator is not Hermitian (defect " +
                            std::to_string(defect) + ")");
  }
}

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw DimensionError("density matrix must be square and nonempty");
  }
  if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw ContractViolation("density matrix is not Hermitian");
  }
  const Complex tr = entries_.trace();
  if (std::abs(tr - 1.0) > 1e-10) {
    throw ContractViolation("density matrix trace " + std::to_string(tr.real()) + " != 1");
  }
}

double DensityMatrix::purity() const {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return entries_.squaredNorm();
}

double expectation(const Vector& psi, const Matrix& h) {
  const Complex e = psi.dot(h * psi);
  if (std::abs(e.imag()) > 1e-10) {
    throw ContractViolation("expectation value has imaginary part " + std::to_string(e.imag()));
  }
  return e.real();
}

double expectation(const QuantumState& state, const DenseOperator& h) {
  if (h.dim() != state.dim()) throw DimensionError("expectation: dimension mismatch");
  h.require_hermitian("expectation");
  return expectation(state.amplitudes(), h.matrix());
}

Matrix bipartition_matrix(const QuantumState& state, std::span<const int> side_a) {
  const int n = state.num_qubits();
  const int na = static_cast<int>(side_a.size());
  if (na < 1 || na > n) throw DimensionError("bipartition side must be nonempty");
  std::vector<bool> in_a(static_cast<std::size_t>(n), false);
  for (int q : side_a) {
    if (q < 0 || q >= n || in_a[static_cast<std::size_t>(q)]) {
      throw DimensionError("bipartition side has repeated or out-of-range qubits");
    }
    in_a[static_cast<std::size_t>(q)] = true;
  }
  std::vector<int> side_b;
  for (int q = 0; q < n; ++q) {
    if (!in_a[static_cast<std::size_t>(q)]) side_b.push_back(q);
  }
  const int nb = static_cast<int>(side_b.size());
  Matrix m = Matrix::Zero(Eigen::Index{1} << na, Eigen::Index{1} << nb);
  for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(state.dim()); ++b) {
    Eigen::Index row = 0;
    Eigen::Index col = 0;
    for (int q : side_a) row = (row << 1) | ((b & bit_of_qubit(n, q)) ? 1 : 0);
    for (int q : side_b) col = (col << 1) | ((b & bit_of_qubit(n, q)) ? 1 : 0);
    m(row, col) = state[static_cast<Eigen::Index>(b)];
  }
  return m;
}

DensityMatrix partial_trace(const QuantumState& state, std::span<const int> keep) {
  if (keep.empty()) throw DimensionError("partial_trace: keep set is empty");
  for (std::size_t i = 1; i < keep.size(); ++i) {
    if (keep[i] <= keep[i - 1]) throw DimensionError("partial_trace: keep must be strictly increasing");
  }
  const Matrix m = bipartition_matrix(state, keep);
  Matrix rho = m * m.adjoint();
  // Exact Hermitian symmetrization; the product is Hermitian up to roundoff.
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(std::move(rho));
}

}  // namespace adaptlab
