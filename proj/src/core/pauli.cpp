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

#include "adaptlab/core/pauli.hpp"

#include "adaptlab/core/operator.hpp"
#include "adaptlab/errors.hpp"

#include <bit>
#include <cmath>

namespace adaptlab {
namespace {

int letter_rank(char c) {
  switch (c) {
    case 'I': return 0;
    case 'X': return 1;
    case 'Y': return 2;
    case 'Z': return 3;
    default: return -1;
  }
}

Complex i_power(int k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

inline double parity_sign(std::uint64_t b, std::uint32_t z) {
  return (std::popcount(b & z) & 1) ? -1.0 : 1.0;
}

void check_size(const PauliString& p, Eigen::Index dim) {
  if ((Eigen::Index{1} << p.num_qubits()) != dim) {
    throw DimensionError("Pauli string on " + std::to_string(p.num_qubits()) +
                         " qubits applied to a vector of dimension " + std::to_string(dim));
  }
}

}  // namespace

PauliString::PauliString(int num_qubits, std::uint32_t x, std::uint32_t z)
    : num_qubits_(num_qubits), x_mask_(x), z_mask_(z),
      y_phase_(i_power(std::popcount(x & z))) {}

PauliString::PauliString(std::string_view letters) {
  const int n = static_cast<int>(letters.size());
  if (n < 1 || n > 16) throw DimensionError("Pauli string length must be in [1, 16]");
  std::uint32_t x = 0;
  std::uint32_t z = 0;
  for (int q = 0; q < n; ++q) {
    const std::uint32_t bit = std::uint32_t{1} << (n - 1 - q);
    switch (letters[static_cast<std::size_t>(q)]) {
      case 'I': break;
      case 'X': x |= bit; break;
      case 'Y': x |= bit; z |= bit; break;
      case 'Z': z |= bit; break;
      default:
        throw DimensionError("invalid Pauli letter in '" + std::string(letters) + "'");
    }
  }
  *this = PauliString(n, x, z);
}

PauliString PauliString::identity(int num_qubits) {
  if (num_qubits < 1 || num_qubits > 16) throw DimensionError("qubit count out of range");
  return PauliString(num_qubits, 0, 0);
}

char PauliString::letter(int qubit) const {
  const std::uint32_t bit = std::uint32_t{1} << (num_qubits_ - 1 - qubit);
  const bool x = x_mask_ & bit;
  const bool z = z_mask_ & bit;
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

std::string PauliString::to_string() const {
  std::string s(static_cast<std::size_t>(num_qubits_), 'I');
  for (int q = 0; q < num_qubits_; ++q) s[static_cast<std::size_t>(q)] = letter(q);
  return s;
}

std::strong_ordering PauliString::operator<=>(const PauliString& other) const {
  if (auto c = num_qubits_ <=> other.num_qubits_; c != 0) return c;
  for (int q = 0; q < num_qubits_; ++q) {
    if (auto c = letter_rank(letter(q)) <=> letter_rank(other.letter(q)); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

void apply_pauli(const PauliString& p, const Vector& in, Vector& out) {
  check_size(p, in.size());
  out.resize(in.size());
  const Complex phase = p.y_phase();
  const std::uint32_t x = p.x_mask();
  const std::uint32_t z = p.z_mask();
  for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(in.size()); ++b) {
    out[static_cast<Eigen::Index>(b ^ x)] = phase * parity_sign(b, z) * in[static_cast<Eigen::Index>(b)];
  }
}

void apply_pauli_exponential_inplace(const PauliString& p, double theta, Vector& v,
                                     Vector& scratch) {
  apply_pauli(p, v, scratch);
  const double c = std::cos(theta);
  const Complex minus_i_s(0.0, -std::sin(theta));
  v = c * v + minus_i_s * scratch;
}

Complex pauli_matrix_element(const PauliString& p, const Vector& a, const Vector& b) {
  check_size(p, a.size());
  check_size(p, b.size());
  const std::uint32_t x = p.x_mask();
  const std::uint32_t z = p.z_mask();
  Complex acc{0.0, 0.0};
  for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(b.size()); ++k) {
    acc += std::conj(a[static_cast<Eigen::Index>(k ^ x)]) * parity_sign(k, z) *
           b[static_cast<Eigen::Index>(k)];
  }
  return p.y_phase() * acc;
}

QuantumState apply_pauli_string(const QuantumState& state, const PauliString& p) {
  Vector out;
  apply_pauli(p, state.amplitudes(), out);
  return QuantumState(state.num_qubits(), std::move(out));
}

QuantumState apply_pauli_exponential(const QuantumState& state, const PauliString& p,
                                     double theta) {
  Vector v = state.amplitudes();
  Vector scratch;
  apply_pauli_exponential_inplace(p, theta, v, scratch);
  return QuantumState(state.num_qubits(), std::move(v));
}

double commutator_gradient(const Vector& psi, const Vector& h_psi, const PauliString& a) {
  // <psi|A H|psi> = <A psi | H psi> since A is Hermitian.
  return -2.0 * pauli_matrix_element(a, psi, h_psi).imag();
}

double commutator_gradient(const QuantumState& state, const PauliString& a,
                           const DenseOperator& h) {
  if (h.dim() != state.dim()) throw DimensionError("commutator_gradient: operator dimension mismatch");
  h.require_hermitian("commutator_gradient");
  const Vector h_psi = h.matrix() * state.amplitudes();
  return commutator_gradient(state.amplitudes(), h_psi, a);
}

Matrix pauli_to_matrix(const PauliString& p) {
  const Eigen::Index dim = Eigen::Index{1} << p.num_qubits();
  Matrix m = Matrix::Zero(dim, dim);
  for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(dim); ++b) {
    m(static_cast<Eigen::Index>(b ^ p.x_mask()), static_cast<Eigen::Index>(b)) =
        p.y_phase() * parity_sign(b, p.z_mask());
  }
  return m;
}

}  // namespace adaptlab
