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

#include "adaptlab/adapt_vqe.hpp"

#include "adaptlab/core/linalg.hpp"
#include "adaptlab/entanglement.hpp"
#include "adaptlab/errors.hpp"
#include "adaptlab/parallel.hpp"

#include <cmath>

namespace adaptlab {
namespace {

void check_dims(const QuantumState& s, const DenseOperator& h) {
  if (s.dim() != h.dim()) throw DimensionError("state and operator dimensions differ");
}

constexpr double kLevelTolerance = 1e-8;
constexpr double kLevelTagOverlap = 0.99;

}  // namespace

OperatorPool build_full_pool(int num_qubits) {
  if (num_qubits < 1 || num_qubits > 8) throw DimensionError("pool size is 4^n - 1; n must be in [1, 8]");
  static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
  const std::uint64_t count = std::uint64_t{1} << (2 * num_qubits);
  OperatorPool pool;
  pool.operators.reserve(count - 1);
  std::string word(static_cast<std::size_t>(num_qubits), 'I');
  for (std::uint64_t k = 1; k < count; ++k) {
    // Base-4 digits, qubit 0 most significant: counting order is lexicographic.
    for (int q = 0; q < num_qubits; ++q) {
      word[static_cast<std::size_t>(q)] = kLetters[(k >> (2 * (num_qubits - 1 - q))) & 3u];
    }
    pool.operators.emplace_back(word);
  }
  return pool;
}

Eigen::VectorXd gradient_vector_serial(const QuantumState& state, const OperatorPool& pool,
                                       const DenseOperator& h) {
  check_dims(state, h);
  h.require_hermitian("gradient_vector");
  const Vector h_psi = h.matrix() * state.amplitudes();
  Eigen::VectorXd g(static_cast<Eigen::Index>(pool.size()));
  for (std::size_t k = 0; k < pool.size(); ++k) {
    g[static_cast<Eigen::Index>(k)] = commutator_gradient(state.amplitudes(), h_psi, pool.operators[k]);
  }
  return g;
}

Eigen::VectorXd gradient_vector(const QuantumState& state, const OperatorPool& pool,
                                const DenseOperator& h) {
  check_dims(state, h);
  h.require_hermitian("gradient_vector");
  const Vector h_psi = h.matrix() * state.amplitudes();
  Eigen::VectorXd g(static_cast<Eigen::Index>(pool.size()));
  parallel_for(static_cast<std::int64_t>(pool.size()), [&](std::int64_t k) {
    g[k] = commutator_gradient(state.amplitudes(), h_psi, pool.operators[static_cast<std::size_t>(k)]);
  });
  return g;
}

std::size_t select_operator(const Eigen::VectorXd& g, TieBreak) {
  if (g.size() == 0) throw DimensionError("select_operator: empty gradient vector");
  const double top = g.cwiseAbs().maxCoeff();
  if (!(top > 0.0)) {
    throw ContractViolation("select_operator: zero gradient; the threshold check must stop first");
  }
  for (Eigen::Index k = 0; k < g.size(); ++k) {
    if (std::abs(g[k]) >= top - 1e-12) return static_cast<std::size_t>(k);
  }
  return 0;  // unreachable
}

Eigen::VectorXd Ansatz::thetas() const {
  Eigen::VectorXd t(static_cast<Eigen::Index>(elements.size()));
  for (std::size_t k = 0; k < elements.size(); ++k) t[static_cast<Eigen::Index>(k)] = elements[k].theta;
  return t;
}

void Ansatz::set_thetas(const Eigen::VectorXd& t) {
  if (t.size() != static_cast<Eigen::Index>(elements.size())) throw DimensionError("theta count mismatch");
  for (std::size_t k = 0; k < elements.size(); ++k) elements[k].theta = t[static_cast<Eigen::Index>(k)];
}

QuantumState ansatz_state(const Ansatz& a) {
  Vector v = a.reference.amplitudes();
  Vector scratch;
  for (const AnsatzElement& e : a.elements) apply_pauli_exponential_inplace(e.op, e.theta, v, scratch);
  return QuantumState(a.reference.num_qubits(), std::move(v));
}

EnergyGradient ansatz_energy_gradient(const Ansatz& a, const DenseOperator& h) {
  check_dims(a.reference, h);
  Vector psi = a.reference.amplitudes();
  Vector scratch;
  for (const AnsatzElement& e : a.elements) apply_pauli_exponential_inplace(e.op, e.theta, psi, scratch);

  EnergyGradient out;
  Vector lambda = h.matrix() * psi;
  out.energy = psi.dot(lambda).real();
  out.gradient.resize(static_cast<Eigen::Index>(a.elements.size()));
  // Walk back: at step m, psi = phi_{m+1} and lambda = (U_{M-1}..U_{m+1})^† H psi.
  for (std::size_t m = a.elements.size(); m-- > 0;) {
    const AnsatzElement& e = a.elements[m];
    out.gradient[static_cast<Eigen::Index>(m)] = 2.0 * pauli_matrix_element(e.op, lambda, psi).imag();
    apply_pauli_exponential_inplace(e.op, -e.theta, psi, scratch);
    apply_pauli_exponential_inplace(e.op, -e.theta, lambda, scratch);
  }
  return out;
}

InnerResult inner_vqe(const Ansatz& a, const DenseOperator& h, const AdaptConfig& cfg, Rng& rng) {
  Ansatz work = a;
  const Objective f = [&](const Eigen::VectorXd& x, Eigen::VectorXd& grad) {
    work.set_thetas(x);
    EnergyGradient eg = ansatz_energy_gradient(work, h);
    grad = std::move(eg.gradient);
    return eg.energy;
  };
  const BfgsResult r = minimize_bfgs(f, a.thetas(), cfg.inner, rng);
  InnerResult out{a, r.value, r.iterations, r.restarts, r.converged};
  out.ansatz.set_thetas(r.x);
  return out;
}

double percent_error(double energy, double exact) {
  const double diff = std::abs(energy - exact);
  if (exact == 0.0) return 100.0 * diff;
  return 100.0 * diff / std::abs(exact);
}

AdaptTrace run_adapt(const DenseOperator& h, const QuantumState& reference, const AdaptConfig& cfg) {
  check_dims(reference, h);
  h.require_hermitian("run_adapt");
  if (!(cfg.epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  if (cfg.max_operators < 1) throw ConfigError("max_operators must be >= 1");

  const OperatorPool pool = build_full_pool(reference.num_qubits());
  const Eigensystem es = eigh(h);
  const GroundState exact = ground_state(h);

  AdaptTrace trace;
  trace.config = cfg;
  trace.final.exact = exact.energy;
  trace.final.exact_entropy = avg_von_neumann_entropy(exact.state);
  trace.final.degenerate_ground = exact.degenerate;

  Ansatz ansatz{reference, {}};
  QuantumState psi = reference;
  const auto record = [&](int j, double energy, const std::string& op, int op_index, double op_g,
                          int inner_its) {
    AdaptIteration it;
    it.j = j;
    it.energy = energy;
    it.entropy = avg_von_neumann_entropy(psi);
    it.op = op;
    it.op_index = op_index;
    it.op_gradient = op_g;
    const Eigen::VectorXd t = ansatz.thetas();
    it.thetas.assign(t.data(), t.data() + t.size());
    it.inner_iterations = inner_its;
    trace.iterations.push_back(std::move(it));
  };
  record(0, expectation(psi.amplitudes(), h.matrix()), "", -1, 0.0, 0);

  int previous_index = -1;
  for (int j = 0;; ++j) {
    const Eigen::VectorXd g = gradient_vector(psi, pool, h);
    const double gnorm = g.norm();
    trace.iterations.back().grad_norm = gnorm;
    if (gnorm < cfg.epsilon) {
      trace.final.reason = "threshold";
      trace.final.threshold_iteration = j;
      break;
    }
    if (static_cast<int>(ansatz.elements.size()) >= cfg.max_operators) {
      trace.final.reason = "cap";
      break;
    }
    const std::size_t k = select_operator(g, cfg.tie_break);
    const double previous_energy = trace.iterations.back().energy;
    ansatz.elements.push_back({pool.operators[k], 0.0});

    Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(j)));
    InnerResult inner = inner_vqe(ansatz, h, cfg, rng);
    ansatz = std::move(inner.ansatz);
    psi = ansatz_state(ansatz);
    record(j + 1, inner.energy, pool.operators[k].to_string(), static_cast<int>(k), g[static_cast<Eigen::Index>(k)],
           inner.iterations);

    const bool repeated = static_cast<int>(k) == previous_index;
    if (repeated) ++trace.final.repeats;
    previous_index = static_cast<int>(k);
    // Re-selecting the same generator without any progress means the loop
    // cannot move; bail out instead of burning the cap.
    if (repeated && inner.energy > previous_energy - 1e-12) {
      trace.final.reason = "stalled";
      trace.iterations.back().grad_norm = gradient_vector(psi, pool, h).norm();
      break;
    }
  }

  trace.final_state = psi;
  trace.final.energy = trace.iterations.back().energy;
  trace.final.n_ops = static_cast<int>(ansatz.elements.size());
  trace.final.pct_error = percent_error(trace.final.energy, exact.energy);
  for (const AdaptIteration& it : trace.iterations) {
    if (percent_error(it.energy, exact.energy) < 1e-6) {
      trace.final.accurate_iteration = it.j;
      break;
    }
  }

  // Group the spectrum into levels and measure the final state's weight in each.
  const Vector coeffs = es.vectors.adjoint() * psi.amplitudes();
  for (Eigen::Index i = 0; i < es.values.size(); ++i) {
    if (trace.final.level_energies.empty() ||
        es.values[i] - trace.final.level_energies.back() > kLevelTolerance) {
      trace.final.level_energies.push_back(es.values[i]);
      trace.final.level_overlaps.push_back(0.0);
    }
    trace.final.level_overlaps.back() += std::norm(coeffs[i]);
  }
  for (std::size_t l = 0; l < trace.final.level_overlaps.size(); ++l) {
    if (trace.final.level_overlaps[l] > kLevelTagOverlap) {
      trace.final.level_tag = static_cast<int>(l);
      break;
    }
  }
  return trace;
}

}  // namespace adaptlab
