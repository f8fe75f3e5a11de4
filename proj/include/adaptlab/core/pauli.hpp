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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace adaptlab {

class DenseOperator;

/// Tensor product of single-qubit Paulis, e.g. "XIZY".
///
/// Stored in symplectic form: bit (n-1-q) of x_mask is set for X/Y on qubit
/// q, of z_mask for Z/Y. Acting on a basis state,
///     P|b> = i^{#Y} (-1)^{popcount(b & z_mask)} |b ^ x_mask>.
class PauliString {
 public:
  explicit PauliString(std::string_view letters);

  static PauliString identity(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  std::uint32_t x_mask() const { return x_mask_; }
  std::uint32_t z_mask() const { return z_mask_; }
  bool is_identity() const { return x_mask_ == 0 && z_mask_ == 0; }

  char letter(int qubit) const;
  std::string to_string() const;

  /// The global phase i^{#Y} in the action formula above.
  Complex y_phase() const { return y_phase_; }

  bool operator==(const PauliString& other) const {
    return num_qubits_ == other.num_qubits_ && x_mask_ == other.x_mask_ &&
           z_mask_ == other.z_mask_;
  }
  /// Canonical order: lexicographic over letters with I < X < Y < Z.
  std::strong_ordering operator<=>(const PauliString& other) const;

 private:
  PauliString(int num_qubits, std::uint32_t x, std::uint32_t z);

  int num_qubits_ = 0;
  std::uint32_t x_mask_ = 0;
  std::uint32_t z_mask_ = 0;
  Complex y_phase_{1.0, 0.0};
};

/// out = P in. `out` must not alias `in`.
void apply_pauli(const PauliString& p, const Vector& in, Vector& out);

/// v <- exp(-i theta P) v = cos(theta) v - i sin(theta) P v. `scratch` is
/// resized as needed.
void apply_pauli_exponential_inplace(const PauliString& p, double theta, Vector& v,
                                     Vector& scratch);

/// <a| P |b>.
Complex pauli_matrix_element(const PauliString& p, const Vector& a, const Vector& b);

QuantumState apply_pauli_string(const QuantumState& state, const PauliString& p);
QuantumState apply_pauli_exponential(const QuantumState& state, const PauliString& p,
                                     double theta);

/// Energy gradient of appending exp(-i theta A) at theta = 0:
///     i <psi|[A, H]|psi> = -2 Im <psi| A H |psi>.
double commutator_gradient(const QuantumState& state, const PauliString& a,
                           const DenseOperator& h);

/// Same quantity given a precomputed H|psi>. Used by the pool kernels.
double commutator_gradient(const Vector& psi, const Vector& h_psi, const PauliString& a);

Matrix pauli_to_matrix(const PauliString& p);

}  // namespace adaptlab
