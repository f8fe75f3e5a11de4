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

#include "adaptlab/core/state.hpp"

#include "adaptlab/errors.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace adaptlab {

QuantumState::QuantumState(int num_qubits, Vector amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  if (num_qubits < 1 || num_qubits > 16) {
    throw DimensionError("qubit count must be in [1, 16], got " + std::to_string(num_qubits));
  }
  if (amplitudes_.size() != (Eigen::Index{1} << num_qubits)) {
    throw DimensionError("amplitude vector of length " + std::to_string(amplitudes_.size()) +
                         " does not match " + std::to_string(num_qubits) + " qubits");
  }
  const double n = amplitudes_.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw DimensionError("state vector has zero or non-finite norm");
  }
  amplitudes_ /= n;
}

QuantumState QuantumState::basis(int num_qubits, std::uint64_t index) {
  if (num_qubits < 1 || num_qubits > 16 || index >= (std::uint64_t{1} << num_qubits)) {
    throw DimensionError("basis index out of range");
  }
  Vector v = Vector::Zero(Eigen::Index{1} << num_qubits);
  v[static_cast<Eigen::Index>(index)] = 1.0;
  return QuantumState(num_qubits, std::move(v));
}

QuantumState QuantumState::ket(std::string_view bits) {
  std::uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw DimensionError("ket label must be a 0/1 string: " + std::string(bits));
    index = (index << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return basis(static_cast<int>(bits.size()), index);
}

QuantumState QuantumState::uniform(int num_qubits) {
  if (num_qubits < 1 || num_qubits > 16) throw DimensionError("qubit count out of range");
  const Eigen::Index dim = Eigen::Index{1} << num_qubits;
  return QuantumState(num_qubits, Vector::Constant(dim, Complex(1.0, 0.0)));
}

Complex QuantumState::amplitude(std::span<const int> bits) const {
  if (static_cast<int>(bits.size()) != num_qubits_) throw DimensionError("bit string length mismatch");
  Eigen::Index index = 0;
  for (int b : bits) index = (index << 1) | (b ? 1 : 0);
  return amplitudes_[index];
}

double fidelity(const QuantumState& a, const QuantumState& b) {
  if (a.num_qubits() != b.num_qubits()) throw DimensionError("fidelity: qubit count mismatch");
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

QuantumState permute_qubits(const QuantumState& state, std::span<const int> perm) {
  const int n = state.num_qubits();
  if (static_cast<int>(perm.size()) != n) throw DimensionError("permutation length mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) {
      throw DimensionError("not a permutation of the qubit indices");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
  Vector out(state.dim());
  for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(state.dim()); ++b) {
    std::uint64_t src = 0;
    for (int i = 0; i < n; ++i) {
      if (b & bit_of_qubit(n, i)) src |= bit_of_qubit(n, perm[static_cast<std::size_t>(i)]);
    }
    out[static_cast<Eigen::Index>(b)] = state[static_cast<Eigen::Index>(src)];
  }
  return QuantumState(n, std::move(out));
}

}  // namespace adaptlab
