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

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string_view>

namespace adaptlab {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

inline constexpr double kNormTolerance = 1e-12;

/// Normalized statevector over `num_qubits` qubits.
///
/// Qubit 0 is the leftmost ket symbol: the basis index of |q0 q1 ... q_{n-1}>
/// is sum_i q_i * 2^(n-1-i), so "|1010>" is amplitude index 10.
class QuantumState {
 public:
  /// Takes ownership of `amplitudes` and rescales them to unit norm.
  /// Throws DimensionError if the length is not 2^num_qubits or the vector
  /// is zero.
  QuantumState(int num_qubits, Vector amplitudes);

  static QuantumState basis(int num_qubits, std::uint64_t index);
  /// Parses a ket label such as "0110".
  static QuantumState ket(std::string_view bits);
  /// (|0> + |1>)^{⊗n} / 2^{n/2}.
  static QuantumState uniform(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  Eigen::Index dim() const { return amplitudes_.size(); }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex operator[](Eigen::Index i) const { return amplitudes_[i]; }

  double norm() const { return amplitudes_.norm(); }

  /// Amplitude of the basis state with the given per-qubit bits
  /// (bits[0] is qubit 0).
  Complex amplitude(std::span<const int> bits) const;

 private:
  int num_qubits_;
  Vector amplitudes_;
};

/// |<a|b>|^2.
double fidelity(const QuantumState& a, const QuantumState& b);

/// Relabels qubits: qubit i of the result is qubit perm[i] of `state`.
/// Any two-body quantity then satisfies f_out(i, j) = f_in(perm[i], perm[j]).
QuantumState permute_qubits(const QuantumState& state, std::span<const int> perm);

inline std::uint64_t bit_of_qubit(int num_qubits, int qubit) {
  return std::uint64_t{1} << (num_qubits - 1 - qubit);
}

}  // namespace adaptlab
