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

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace adaptlab {

/// Reproducible generator: std::mt19937_64 for the bit stream, with
/// hand-rolled conversions so results do not depend on the standard library's
/// distribution implementations.
///
///   uniform(): top 53 bits / 2^53, in [0, 1).
///   normal():  Box-Muller on (1 - u1, u2), second variate cached.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();
  Complex complex_normal();  // (N(0,1) + i N(0,1)) / sqrt(2)

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Seed for stream `index` of an experiment with master seed `master`.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Haar-distributed dim x dim unitary: complex Gaussian matrix, QR, columns
/// rescaled by the phases of diag(R).
Matrix haar_random_unitary(int dim, Rng& rng);

std::vector<Matrix> haar_local_unitaries(int num_qubits, Rng& rng);

/// (U_0 ⊗ U_1 ⊗ ... ⊗ U_{n-1}) |psi>, contracted one qubit at a time. Each U
/// must be 2x2 and unitary within 1e-10.
QuantumState apply_local_unitaries(const QuantumState& state, std::span<const Matrix> us);

/// Applies a 2x2 matrix to one qubit, no checks.
void apply_single_qubit(Vector& v, int num_qubits, int qubit, const Eigen::Matrix2cd& u);

/// Haar-random pure state on n qubits.
QuantumState random_state(int num_qubits, Rng& rng);

}  // namespace adaptlab
