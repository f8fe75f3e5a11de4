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
#include "adaptlab/core/pauli.hpp"
#include "adaptlab/core/state.hpp"
#include "adaptlab/optimizer.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace adaptlab {

struct OperatorPool {
  std::vector<PauliString> operators;
  std::size_t size() const { return operators.size(); }
};

/// All 4^n - 1 non-identity strings, lexicographic with I < X < Y < Z.
OperatorPool build_full_pool(int num_qubits);

/// g_k = -2 Im <A_k psi | H psi> for every pool entry (OpenMP over k).
Eigen::VectorXd gradient_vector(const QuantumState& state, const OperatorPool& pool,
                                const DenseOperator& h);
/// Reference twin of gradient_vector: same arithmetic, one thread.
Eigen::VectorXd gradient_vector_serial(const QuantumState& state, const OperatorPool& pool,
                                       const DenseOperator& h);

enum class TieBreak { kLowestIndex };

/// argmax |g_k|; entries within 1e-12 of the maximum resolve to the lowest
/// index. Throws on an empty or identically zero vector: the caller must
/// stop at the threshold before selecting.
std::size_t select_operator(const Eigen::VectorXd& g, TieBreak rule = TieBreak::kLowestIndex);

struct AnsatzElement {
  PauliString op;
  double theta = 0.0;
};

struct Ansatz {
  QuantumState reference;
  std::vector<AnsatzElement> elements;

  Eigen::VectorXd thetas() const;
  void set_thetas(const Eigen::VectorXd& t);
};

/// prod_j exp(-i theta_j A_j) |ref>, first element applied first.
QuantumState ansatz_state(const Ansatz& a);

struct EnergyGradient {
  double energy = 0.0;
  Eigen::VectorXd gradient;
};

/// Energy and exact dE/dtheta via one forward and one backward sweep.
EnergyGradient ansatz_energy_gradient(const Ansatz& a, const DenseOperator& h);

struct AdaptConfig {
  double epsilon = 1e-2;
  int max_operators = 30;
  BfgsOptions inner{};
  TieBreak tie_break = TieBreak::kLowestIndex;
  std::uint64_t seed = 0;  // feeds the inner-optimizer restart perturbations
};

struct InnerResult {
  Ansatz ansatz;
  double energy = 0.0;
  int iterations = 0;
  int restarts = 0;
  bool converged = false;
};

/// Re-optimizes every theta from the current values (warm start). Never
/// returns an energy above the starting one.
InnerResult inner_vqe(const Ansatz& a, const DenseOperator& h, const AdaptConfig& cfg, Rng& rng);

struct AdaptIteration {
  int j = 0;
  double energy = 0.0;
  double entropy = 0.0;
  double grad_norm = 0.0;  // ||g||_2 of the pool gradient at psi_j
  std::string op;          // operator appended to reach psi_j ("" for j = 0)
  int op_index = -1;
  double op_gradient = 0.0;  // its g_k at selection time
  std::vector<double> thetas;
  int inner_iterations = 0;
};

struct AdaptFinal {
  double energy = 0.0;
  double exact = 0.0;
  double exact_entropy = 0.0;
  double pct_error = 0.0;
  int n_ops = 0;
  std::string reason;  // threshold | cap | stalled
  int level_tag = -1;  // exact level with overlap > 0.99, -1 if none
  std::vector<double> level_energies;
  std::vector<double> level_overlaps;  // weight of the final state per level
  bool degenerate_ground = false;
  int repeats = 0;              // consecutive re-selections of the same operator
  int threshold_iteration = -1;  // first j with ||g|| < epsilon
  int accurate_iteration = -1;   // first j with pct error < 1e-6
};

struct AdaptTrace {
  AdaptConfig config;
  std::vector<AdaptIteration> iterations;
  AdaptFinal final;
  QuantumState final_state = QuantumState::basis(1, 0);
};

double percent_error(double energy, double exact);

AdaptTrace run_adapt(const DenseOperator& h, const QuantumState& reference, const AdaptConfig& cfg);

}  // namespace adaptlab
