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
#include "adaptlab/optimizer.hpp"

#include <cstdint>
#include <vector>

namespace adaptlab {

/// Hardware-efficient ansatz: (reps + 1) rotation layers, each RY then RZ on
/// every qubit, separated by a linear CX chain (control q, target q + 1).
///
/// Parameter layout: theta[l * 2n + 2q] is the RY angle of qubit q in layer l,
/// theta[l * 2n + 2q + 1] the RZ angle. RY(t) = exp(-i t Y / 2).
struct LayeredAnsatz {
  int num_qubits = 4;
  int reps = 3;

  int parameter_count() const { return 2 * num_qubits * (reps + 1); }
};

QuantumState apply_layered_ansatz(const QuantumState& init, const LayeredAnsatz& a,
                                  const Eigen::VectorXd& thetas);

/// Energy and its gradient by the parameter-shift rule (exact for these
/// gates: dE/dt = [E(t + pi/2) - E(t - pi/2)] / 2).
double layered_energy(const QuantumState& init, const LayeredAnsatz& a, const Eigen::VectorXd& thetas,
                      const DenseOperator& h, Eigen::VectorXd* gradient = nullptr);

struct VqeOptions {
  int restarts = 5;
  double init_window = 0.1;  // theta_0 ~ U[-w, w]
  BfgsOptions bfgs{.grad_tol = 1e-10, .max_iterations = 500, .max_restarts = 0};
};

struct VqeResult {
  double energy = 0.0;
  Eigen::VectorXd thetas;
  double exact = 0.0;
  double pct_error = 0.0;
  int best_restart = 0;
  std::vector<double> restart_energies;
};

/// Restart r draws its start from Rng(derive_seed(seed, r)); the lowest
/// energy across restarts is reported. Restarts run on the OpenMP team.
VqeResult run_vqe(const DenseOperator& h, const QuantumState& init, const LayeredAnsatz& a,
                  std::uint64_t seed, const VqeOptions& options = {});
/// Reference twin of run_vqe: restarts in sequence.
VqeResult run_vqe_serial(const DenseOperator& h, const QuantumState& init, const LayeredAnsatz& a,
                         std::uint64_t seed, const VqeOptions& options = {});

}  // namespace adaptlab
