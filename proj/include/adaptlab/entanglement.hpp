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

#include <array>
#include <string_view>
#include <vector>

namespace adaptlab {

/// Pair order used everywhere: AB AC AD BC BD CD, with A..D = qubits 0..3.
inline constexpr std::array<std::array<int, 2>, 6> kQubitPairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Index into kQubitPairs for an unordered pair.
int pair_index(int i, int j);

/// The eleven continuous invariants.
struct InvariantVector {
  std::array<Complex, 4> h{};
  std::array<double, 6> concurrence{};  // kQubitPairs order
  double c_gm = 0.0;

  /// |h1| |h2| |h3| |h4| C_AB C_AC C_AD C_BC C_BD C_CD C_GM.
  std::array<double, 11> magnitudes() const;
  static const std::array<std::string_view, 11>& names();
};

struct Bipartition {
  std::vector<int> side_a;
};

/// Every bipartition of n qubits once: |A| < n/2, or |A| = n/2 with qubit 0
/// in A. For n = 4 that is the 4 one-vs-three and 3 two-vs-two cuts.
std::vector<Bipartition> all_bipartitions(int num_qubits);

enum class ConcurrenceMethod {
  kPairAmplitudes,  // singular values of M^T (Y⊗Y) M, M = pair|rest reshape
  kSpinFlipEigen,   // sqrt of eig(sqrt(rho) rho~ sqrt(rho)) = eig(rho rho~)
  kRMatrix,         // eigenvalues of R = sqrt(sqrt(rho) rho~ sqrt(rho))
};

/// Wootters concurrence of the (i, j) marginal, clamped to [0, 1]. The
/// default path never forms rho; the other two exist as cross-checks.
double concurrence_pair(const QuantumState& state, int i, int j,
                        ConcurrenceMethod method = ConcurrenceMethod::kPairAmplitudes);

/// Wootters concurrence of an arbitrary two-qubit density matrix.
double concurrence_from_density(const DensityMatrix& rho,
                                ConcurrenceMethod method = ConcurrenceMethod::kSpinFlipEigen);

/// Squared Schmidt coefficients across the cut, descending.
Eigen::VectorXd schmidt_probabilities(const QuantumState& state, const Bipartition& cut);

/// min over cuts of sqrt(2 (1 - Tr rho_A^2)).
double gm_concurrence(const QuantumState& state);

/// h1..h4 on the amplitudes v_{jklm}; four-qubit states only.
std::array<Complex, 4> polynomial_invariants(const QuantumState& state);

/// -Tr(rho_q ln rho_q) for each qubit q.
std::vector<double> single_qubit_entropies(const QuantumState& state);

/// Mean single-qubit von Neumann entropy, in nats.
double avg_von_neumann_entropy(const QuantumState& state);

/// dim H_A - rank(a_jk), rank counting singular values above 1e-10.
int kernel_dimension(const QuantumState& state, const Bipartition& cut);

InvariantVector invariant_vector(const QuantumState& state);

}  // namespace adaptlab
