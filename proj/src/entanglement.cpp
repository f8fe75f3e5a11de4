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

#include "adaptlab/entanglement.hpp"

#include "adaptlab/core/linalg.hpp"
#include "adaptlab/errors.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

namespace adaptlab {
namespace {

constexpr double kRankThreshold = 1e-10;

// Y⊗Y in the computational basis (real).
Matrix spin_flip() {
  Matrix yy = Matrix::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  return yy;
}

double wootters(Eigen::VectorXd lambdas) {
  std::sort(lambdas.data(), lambdas.data() + lambdas.size(), std::greater<>());
  double c = lambdas.size() > 0 ? lambdas[0] : 0.0;
  for (Eigen::Index k = 1; k < lambdas.size(); ++k) c -= lambdas[k];
  return std::clamp(c, 0.0, 1.0);
}

Eigen::VectorXd singular_values(const Matrix& m) {
  return Eigen::JacobiSVD<Matrix>(m).singularValues();
}

void require_four(const QuantumState& s, const char* what) {
  if (s.num_qubits() != 4) throw DimensionError(std::string(what) + " is defined for 4 qubits only");
}

}  // namespace

int pair_index(int i, int j) {
  if (i > j) std::swap(i, j);
  for (int k = 0; k < 6; ++k) {
    if (kQubitPairs[static_cast<std::size_t>(k)][0] == i &&
        kQubitPairs[static_cast<std::size_t>(k)][1] == j) {
      return k;
    }
  }
  throw DimensionError("pair_index: not a pair of distinct qubits in 0..3");
}

std::array<double, 11> InvariantVector::magnitudes() const {
  std::array<double, 11> m{};
  for (int k = 0; k < 4; ++k) m[static_cast<std::size_t>(k)] = std::abs(h[static_cast<std::size_t>(k)]);
  for (int k = 0; k < 6; ++k) m[static_cast<std::size_t>(4 + k)] = concurrence[static_cast<std::size_t>(k)];
  m[10] = c_gm;
  return m;
}

const std::array<std::string_view, 11>& InvariantVector::names() {
  static const std::array<std::string_view, 11> kNames{
      "h1", "h2", "h3", "h4", "C_AB", "C_AC", "C_AD", "C_BC", "C_BD", "C_CD", "C_GM"};
  return kNames;
}

std::vector<Bipartition> all_bipartitions(int num_qubits) {
  std::vector<Bipartition> cuts;
  const std::uint32_t full = (std::uint32_t{1} << num_qubits) - 1;
  for (int size = 1; 2 * size <= num_qubits; ++size) {
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      if (std::popcount(mask) != size) continue;
      if (2 * size == num_qubits && !(mask & 1u)) continue;
      Bipartition b;
      for (int q = 0; q < num_qubits; ++q) {
        if (mask & (1u << q)) b.side_a.push_back(q);
      }
      cuts.push_back(std::move(b));
    }
  }
  return cuts;
}

double concurrence_from_density(const DensityMatrix& rho, ConcurrenceMethod method) {
  if (rho.dim() != 4) throw DimensionError("concurrence needs a two-qubit density matrix");
  const Matrix yy = spin_flip();
  const Matrix rho_tilde = yy * rho.matrix().conjugate() * yy;
  const Matrix sqrt_rho = matrix_function_psd(rho.matrix(), [](double x) { return std::sqrt(x); });
  Matrix inner = sqrt_rho * rho_tilde * sqrt_rho;
  inner = 0.5 * (inner + inner.adjoint()).eval();
  Eigen::VectorXd lambdas(4);
  if (method == ConcurrenceMethod::kRMatrix) {
    const Matrix r = matrix_function_psd(inner, [](double x) { return std::sqrt(x); });
    Matrix rh = 0.5 * (r + r.adjoint());
    const Eigensystem es = eigh(rh);
    for (int k = 0; k < 4; ++k) lambdas[k] = std::max(0.0, es.values[k]);
  } else {
    const Eigensystem es = eigh(inner);
    for (int k = 0; k < 4; ++k) lambdas[k] = std::sqrt(std::max(0.0, es.values[k]));
  }
  return wootters(lambdas);
}

double concurrence_pair(const QuantumState& state, int i, int j, ConcurrenceMethod method) {
  const int n = state.num_qubits();
  if (i == j) throw DimensionError("concurrence_pair: qubits must differ");
  if (i < 0 || j < 0 || i >= n || j >= n) throw DimensionError("concurrence_pair: qubit out of range");
  if (n < 2) throw DimensionError("concurrence_pair: need at least 2 qubits");
  const std::array<int, 2> pair{std::min(i, j), std::max(i, j)};
  if (method != ConcurrenceMethod::kPairAmplitudes) {
    return concurrence_from_density(partial_trace(state, pair), method);
  }
  const Matrix m = bipartition_matrix(state, pair);  // 4 x 2^{n-2}
  const Matrix tau = m.transpose() * spin_flip() * m;
  Eigen::VectorXd lambdas = Eigen::VectorXd::Zero(4);
  const Eigen::VectorXd sv = singular_values(tau);
  for (Eigen::Index k = 0; k < std::min<Eigen::Index>(4, sv.size()); ++k) lambdas[k] = sv[k];
  return wootters(lambdas);
}

Eigen::VectorXd schmidt_probabilities(const QuantumState& state, const Bipartition& cut) {
  const Eigen::VectorXd sv = singular_values(bipartition_matrix(state, cut.side_a));
  return sv.cwiseAbs2();
}

double gm_concurrence(const QuantumState& state) {
  double best = std::numeric_limits<double>::infinity();
  for (const Bipartition& cut : all_bipartitions(state.num_qubits())) {
    const Eigen::VectorXd p = schmidt_probabilities(state, cut);
    // 1 - sum p^2 = 2 sum_{i<j} p_i p_j: no cancellation against 1, so a
    // product cut gives O(eps^2) rather than O(eps).
    const double total = p.sum();
    double mixed = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      for (Eigen::Index j = i + 1; j < p.size(); ++j) mixed += p[i] * p[j];
    }
    best = std::min(best, std::sqrt(4.0 * mixed / (total * total)));
  }
  return std::isfinite(best) ? best : 0.0;
}

std::array<Complex, 4> polynomial_invariants(const QuantumState& state) {
  require_four(state, "polynomial_invariants");
  auto v = [&](int j, int k, int l, int m) { return state[8 * j + 4 * k + 2 * l + m]; };

  const Complex h1 = v(0, 0, 0, 0) * v(1, 1, 1, 1) - v(0, 0, 0, 1) * v(1, 1, 1, 0) -
                     v(0, 0, 1, 0) * v(1, 1, 0, 1) + v(0, 0, 1, 1) * v(1, 1, 0, 0) -
                     v(0, 1, 0, 0) * v(1, 0, 1, 1) + v(0, 1, 0, 1) * v(1, 0, 1, 0) +
                     v(0, 1, 1, 0) * v(1, 0, 0, 1) - v(0, 1, 1, 1) * v(1, 0, 0, 0);

  Eigen::Matrix4cd m2;
  m2 << v(0, 0, 0, 0), v(0, 1, 0, 0), v(1, 0, 0, 0), v(1, 1, 0, 0),
        v(0, 0, 0, 1), v(0, 1, 0, 1), v(1, 0, 0, 1), v(1, 1, 0, 1),
        v(0, 0, 1, 0), v(0, 1, 1, 0), v(1, 0, 1, 0), v(1, 1, 1, 0),
        v(0, 0, 1, 1), v(0, 1, 1, 1), v(1, 0, 1, 1), v(1, 1, 1, 1);

  Eigen::Matrix4cd m3;
  m3 << v(0, 0, 0, 0), v(1, 0, 0, 0), v(0, 0, 1, 0), v(1, 0, 1, 0),
        v(0, 0, 0, 1), v(1, 0, 0, 1), v(0, 0, 1, 1), v(1, 0, 1, 1),
        v(0, 1, 0, 0), v(1, 1, 0, 0), v(0, 1, 1, 0), v(1, 1, 1, 0),
        v(0, 1, 0, 1), v(1, 1, 0, 1), v(0, 1, 1, 1), v(1, 1, 1, 1);

  Eigen::Matrix3cd m4;
  m4(0, 0) = -v(0, 0, 0, 1) * v(0, 0, 1, 0) + v(0, 0, 0, 0) * v(0, 0, 1, 1);
  m4(0, 1) = v(0, 0, 1, 1) * v(0, 1, 0, 0) - v(0, 0, 1, 0) * v(0, 1, 0, 1) -
             v(0, 0, 0, 1) * v(0, 1, 1, 0) + v(0, 0, 0, 0) * v(0, 1, 1, 1);
  m4(0, 2) = -v(0, 1, 0, 1) * v(0, 1, 1, 0) + v(0, 1, 0, 0) * v(0, 1, 1, 1);
  m4(1, 0) = v(0, 0, 1, 1) * v(1, 0, 0, 0) - v(0, 0, 1, 0) * v(1, 0, 0, 1) -
             v(0, 0, 0, 1) * v(1, 0, 1, 0) + v(0, 0, 0, 0) * v(1, 0, 1, 1);
  m4(1, 1) = v(0, 1, 1, 1) * v(1, 0, 0, 0) - v(0, 1, 1, 0) * v(1, 0, 0, 1) -
             v(0, 1, 0, 1) * v(1, 0, 1, 0) + v(0, 1, 0, 0) * v(1, 0, 1, 1) +
             v(0, 0, 1, 1) * v(1, 1, 0, 0) - v(0, 0, 1, 0) * v(1, 1, 0, 1) -
             v(0, 0, 0, 1) * v(1, 1, 1, 0) + v(0, 0, 0, 0) * v(1, 1, 1, 1);
  m4(1, 2) = v(0, 1, 1, 1) * v(1, 1, 0, 0) - v(0, 1, 1, 0) * v(1, 1, 0, 1) -
             v(0, 1, 0, 1) * v(1, 1, 1, 0) + v(0, 1, 0, 0) * v(1, 1, 1, 1);
  m4(2, 0) = -v(1, 0, 0, 1) * v(1, 0, 1, 0) + v(1, 0, 0, 0) * v(1, 0, 1, 1);
  m4(2, 1) = v(1, 0, 1, 1) * v(1, 1, 0, 0) - v(1, 0, 1, 0) * v(1, 1, 0, 1) -
             v(1, 0, 0, 1) * v(1, 1, 1, 0) + v(1, 0, 0, 0) * v(1, 1, 1, 1);
  m4(2, 2) = -v(1, 1, 0, 1) * v(1, 1, 1, 0) + v(1, 1, 0, 0) * v(1, 1, 1, 1);

  return {h1, m2.determinant(), m3.determinant(), m4.determinant()};
}

std::vector<double> single_qubit_entropies(const QuantumState& state) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(state.num_qubits()));
  for (int q = 0; q < state.num_qubits(); ++q) {
    const Eigen::VectorXd p = schmidt_probabilities(state, Bipartition{{q}});
    double s = 0.0;
    for (Eigen::Index k = 0; k < p.size(); ++k) {
      if (p[k] > 0.0) s -= p[k] * std::log(p[k]);
    }
    out.push_back(std::max(0.0, s));
  }
  return out;
}

double avg_von_neumann_entropy(const QuantumState& state) {
  const std::vector<double> s = single_qubit_entropies(state);
  double total = 0.0;
  for (double x : s) total += x;
  return total / static_cast<double>(s.size());
}

int kernel_dimension(const QuantumState& state, const Bipartition& cut) {
  const int na = static_cast<int>(cut.side_a.size());
  if (na < 1 || na >= state.num_qubits()) throw DimensionError("bipartition side must be a proper nonempty subset");
  const Eigen::VectorXd sv = singular_values(bipartition_matrix(state, cut.side_a));
  int rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv[k] > kRankThreshold) ++rank;
  }
  return (1 << na) - rank;
}

InvariantVector invariant_vector(const QuantumState& state) {
  require_four(state, "invariant_vector");
  InvariantVector iv;
  iv.h = polynomial_invariants(state);
  for (int k = 0; k < 6; ++k) {
    const auto& p = kQubitPairs[static_cast<std::size_t>(k)];
    iv.concurrence[static_cast<std::size_t>(k)] = concurrence_pair(state, p[0], p[1]);
  }
  iv.c_gm = gm_concurrence(state);
  return iv;
}

}  // namespace adaptlab
