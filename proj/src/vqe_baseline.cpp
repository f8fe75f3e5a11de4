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

#include "adaptlab/vqe_baseline.hpp"

#include "adaptlab/adapt_vqe.hpp"
#include "adaptlab/core/linalg.hpp"
#include "adaptlab/core/random.hpp"
#include "adaptlab/errors.hpp"
#include "adaptlab/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace adaptlab {
namespace {

Eigen::Matrix2cd ry(double t) {
  const double c = std::cos(0.5 * t);
  const double s = std::sin(0.5 * t);
  Eigen::Matrix2cd m;
  m << c, -s, s, c;
  return m;
}

Eigen::Matrix2cd rz(double t) {
  const Complex e(std::cos(0.5 * t), -std::sin(0.5 * t));
  Eigen::Matrix2cd m;
  m << e, 0.0, 0.0, std::conj(e);
  return m;
}

void cx(Vector& v, int n, int control, int target) {
  const std::uint64_t cb = bit_of_qubit(n, control);
  const std::uint64_t tb = bit_of_qubit(n, target);
  for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(v.size()); ++b) {
    if ((b & cb) && !(b & tb)) std::swap(v[static_cast<Eigen::Index>(b)], v[static_cast<Eigen::Index>(b | tb)]);
  }
}

struct Attempt {
  double energy;
  Eigen::VectorXd thetas;
};

Attempt one_restart(const DenseOperator& h, const QuantumState& init, const LayeredAnsatz& a,
                    std::uint64_t seed, int r, const VqeOptions& opt) {
  Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
  Eigen::VectorXd x0(a.parameter_count());
  for (Eigen::Index i = 0; i < x0.size(); ++i) x0[i] = rng.uniform(-opt.init_window, opt.init_window);
  const Objective f = [&](const Eigen::VectorXd& x, Eigen::VectorXd& g) {
    return layered_energy(init, a, x, h, &g);
  };
  BfgsResult res = minimize_bfgs(f, x0, opt.bfgs, rng);
  return {res.value, std::move(res.x)};
}

VqeResult assemble(const DenseOperator& h, std::vector<Attempt>& attempts) {
  VqeResult out;
  out.exact = ground_state(h).energy;
  for (std::size_t r = 0; r < attempts.size(); ++r) {
    out.restart_energies.push_back(attempts[r].energy);
    if (r == 0 || attempts[r].energy < out.energy) {
      out.energy = attempts[r].energy;
      out.best_restart = static_cast<int>(r);
    }
  }
  out.thetas = std::move(attempts[static_cast<std::size_t>(out.best_restart)].thetas);
  out.pct_error = percent_error(out.energy, out.exact);
  return out;
}

void validate(const DenseOperator& h, const QuantumState& init, const LayeredAnsatz& a, const VqeOptions& opt) {
  if (init.num_qubits() != a.num_qubits) throw DimensionError("ansatz and state qubit counts differ");
  if (h.dim() != init.dim()) throw DimensionError("Hamiltonian and state dimensions differ");
  h.require_hermitian("run_vqe");
  if (opt.restarts < 1) throw ConfigError("run_vqe needs at least one restart");
}

}  // namespace

QuantumState apply_layered_ansatz(const QuantumState& init, const LayeredAnsatz& a,
                                  const Eigen::VectorXd& thetas) {
  const int n = a.num_qubits;
  if (init.num_qubits() != n) throw DimensionError("ansatz and state qubit counts differ");
  if (a.reps < 0) throw DimensionError("reps must be >= 0");
  if (thetas.size() != a.parameter_count()) {
    throw DimensionError("expected " + std::to_string(a.parameter_count()) + " parameters, got " +
                         std::to_string(thetas.size()));
  }
  Vector v = init.amplitudes();
  for (int layer = 0; layer <= a.reps; ++layer) {
    if (layer > 0) {
      for (int q = 0; q + 1 < n; ++q) cx(v, n, q, q + 1);
    }
    for (int q = 0; q < n; ++q) {
      const Eigen::Index base = layer * 2 * n + 2 * q;
      apply_single_qubit(v, n, q, ry(thetas[base]));
      apply_single_qubit(v, n, q, rz(thetas[base + 1]));
    }
  }
  return QuantumState(n, std::move(v));
}

double layered_energy(const QuantumState& init, const LayeredAnsatz& a, const Eigen::VectorXd& thetas,
                      const DenseOperator& h, Eigen::VectorXd* gradient) {
  const auto energy = [&](const Eigen::VectorXd& t) {
    const QuantumState s = apply_layered_ansatz(init, a, t);
    return expectation(s.amplitudes(), h.matrix());
  };
  const double e = energy(thetas);
  if (gradient) {
    gradient->resize(thetas.size());
    Eigen::VectorXd shifted = thetas;
    constexpr double kShift = std::numbers::pi / 2.0;
    for (Eigen::Index i = 0; i < thetas.size(); ++i) {
      shifted[i] = thetas[i] + kShift;
      const double plus = energy(shifted);
      shifted[i] = thetas[i] - kShift;
      const double minus = energy(shifted);
      shifted[i] = thetas[i];
      (*gradient)[i] = 0.5 * (plus - minus);
    }
  }
  return e;
}

VqeResult run_vqe_serial(const DenseOperator& h, const QuantumState& init, const LayeredAnsatz& a,
                         std::uint64_t seed, const VqeOptions& options) {
  validate(h, init, a, options);
  std::vector<Attempt> attempts;
  for (int r = 0; r < options.restarts; ++r) attempts.push_back(one_restart(h, init, a, seed, r, options));
  return assemble(h, attempts);
}

VqeResult run_vqe(const DenseOperator& h, const QuantumState& init, const LayeredAnsatz& a,
                  std::uint64_t seed, const VqeOptions& options) {
  validate(h, init, a, options);
  std::vector<Attempt> attempts(static_cast<std::size_t>(options.restarts));
  parallel_for(options.restarts, [&](std::int64_t r) {
    attempts[static_cast<std::size_t>(r)] = one_restart(h, init, a, seed, static_cast<int>(r), options);
  });
  return assemble(h, attempts);
}

}  // namespace adaptlab
