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

#include "adaptlab/core/random.hpp"
#include "adaptlab/core/state.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include <gtest/gtest.h>

namespace adaptlab::testing {

inline Matrix random_hermitian(int dim, Rng& rng) {
  Matrix a(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) a(i, j) = rng.complex_normal();
  }
  return 0.5 * (a + a.adjoint());
}

// Independent oracle for exp(-i theta M), M Hermitian.
inline Matrix oracle_expm(const Matrix& m, double theta) {
  const Matrix arg = Complex(0.0, -theta) * m;
  return arg.exp();
}

inline Eigen::VectorXd oracle_eigenvalues(const Matrix& m) {
  return Eigen::SelfAdjointEigenSolver<Matrix>(m).eigenvalues();
}

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
}

// Equality of kets up to a global phase.
inline double phase_distance(const Vector& a, const Vector& b) {
  const Complex ov = b.dot(a);
  const Complex ph = std::abs(ov) > 0 ? ov / std::abs(ov) : Complex(1.0);
  return (a - ph * b).norm();
}

inline QuantumState ghz4() {
  Vector v = Vector::Zero(16);
  v[0] = v[15] = 1.0;
  return QuantumState(4, v);
}

}  // namespace adaptlab::testing
