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

#include "adaptlab/core/random.hpp"

#include "adaptlab/errors.hpp"

#include <cmath>
#include <numbers>

namespace adaptlab {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(phi);
  has_spare_ = true;
  return r * std::cos(phi);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) * std::numbers::sqrt2 * 0.5;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
}

Matrix haar_random_unitary(int dim, Rng& rng) {
  if (dim < 1) throw DimensionError("haar_random_unitary: dim must be >= 1");
  Matrix z(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) z(i, j) = rng.complex_normal();
  }
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix& r = qr.matrixQR();
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

std::vector<Matrix> haar_local_unitaries(int num_qubits, Rng& rng) {
  std::vector<Matrix> us;
  us.reserve(static_cast<std::size_t>(num_qubits));
  for (int q = 0; q < num_qubits; ++q) us.push_back(haar_random_unitary(2, rng));
  return us;
}

void apply_single_qubit(Vector& v, int num_qubits, int qubit, const Eigen::Matrix2cd& u) {
  const std::uint64_t bit = bit_of_qubit(num_qubits, qubit);
  for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(v.size()); ++b) {
    if (b & bit) continue;
    const auto i0 = static_cast<Eigen::Index>(b);
    const auto i1 = static_cast<Eigen::Index>(b | bit);
    const Complex a0 = v[i0];
    const Complex a1 = v[i1];
    v[i0] = u(0, 0) * a0 + u(0, 1) * a1;
    v[i1] = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

QuantumState apply_local_unitaries(const QuantumState& state, std::span<const Matrix> us) {
  const int n = state.num_qubits();
  if (static_cast<int>(us.size()) != n) {
    throw DimensionError("apply_local_unitaries: need one 2x2 factor per qubit");
  }
  for (const Matrix& u : us) {
    if (u.rows() != 2 || u.cols() != 2) throw DimensionError("local unitary must be 2x2");
    if ((u.adjoint() * u - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() > 1e-10) {
      throw ContractViolation("apply_local_unitaries: factor is not unitary");
    }
  }
  Vector v = state.amplitudes();
  for (int q = 0; q < n; ++q) {
    apply_single_qubit(v, n, q, us[static_cast<std::size_t>(q)]);
  }
  return QuantumState(n, std::move(v));
}

QuantumState random_state(int num_qubits, Rng& rng) {
  if (num_qubits < 1 || num_qubits > 16) throw DimensionError("qubit count out of range");
  Vector v(Eigen::Index{1} << num_qubits);
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = rng.complex_normal();
  return QuantumState(num_qubits, std::move(v));
}

}  // namespace adaptlab
