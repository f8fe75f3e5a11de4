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
#include "adaptlab/classes.hpp"
#include "adaptlab/core/linalg.hpp"
#include "adaptlab/errors.hpp"
#include "adaptlab/hamiltonians.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

namespace adaptlab {
namespace {

using testing::max_abs;
using testing::oracle_eigenvalues;
using testing::oracle_expm;

DenseOperator xy(double gamma) { return to_dense(HamiltonianSpec{.model = "xy", .gamma = gamma}.build()); }
DenseOperator xxz(double delta) { return to_dense(HamiltonianSpec{.model = "xxz", .delta = delta}.build()); }

double energy_of(const QuantumState& s, const DenseOperator& h) { return expectation(s, h); }

TEST(Pool, SizesAndOrder) {
  EXPECT_EQ(build_full_pool(1).size(), 3u);
  EXPECT_EQ(build_full_pool(2).size(), 15u);
  const OperatorPool pool = build_full_pool(4);
  ASSERT_EQ(pool.size(), 255u);
  EXPECT_EQ(pool.operators.front().to_string(), "IIIX");
  EXPECT_EQ(pool.operators.back().to_string(), "ZZZZ");
  EXPECT_TRUE(std::is_sorted(pool.operators.begin(), pool.operators.end()));
  std::set<std::string> unique;
  for (const auto& p : pool.operators) {
    EXPECT_FALSE(p.is_identity());
    unique.insert(p.to_string());
  }
  EXPECT_EQ(unique.size(), 255u);
  EXPECT_THROW(build_full_pool(0), DimensionError);
}

TEST(PoolGradient, MatchesSerialTwinAndFiniteDifferences) {
  const DenseOperator h = xy(1.0);
  const OperatorPool pool = build_full_pool(4);
  Rng rng(5);
  const QuantumState psi = random_state(4, rng);
  const Eigen::VectorXd g = gradient_vector(psi, pool, h);
  const Eigen::VectorXd g_serial = gradient_vector_serial(psi, pool, h);
  ASSERT_EQ(g.size(), 255);
  EXPECT_EQ((g - g_serial).cwiseAbs().maxCoeff(), 0.0);

  // Oracle: central difference of E(exp(-i t A) psi), via dense matrices.
  const double step = 1e-5;
  for (std::size_t k = 0; k < pool.size(); k += 7) {
    const Matrix a = pauli_to_matrix(pool.operators[k]);
    const Vector plus = oracle_expm(a, step) * psi.amplitudes();
    const Vector minus = oracle_expm(a, -step) * psi.amplitudes();
    const double fd = (plus.dot(h.matrix() * plus).real() - minus.dot(h.matrix() * minus).real()) / (2 * step);
    EXPECT_NEAR(g[static_cast<Eigen::Index>(k)], fd, 1e-7) << pool.operators[k].to_string();
  }
}

TEST(PoolGradient, VanishesOnEigenstates) {
  const DenseOperator h = xxz(3.0);
  const GroundState gs = ground_state(h);
  const Eigen::VectorXd g = gradient_vector(gs.state, build_full_pool(4), h);
  EXPECT_LT(g.norm(), 1e-10);
}

TEST(Select, LargestMagnitudeLowestIndexOnTies) {
  Eigen::VectorXd g(4);
  g << 0.1, -0.3, 0.3, 0.2;
  EXPECT_EQ(select_operator(g), 1u);
  g << 0.1, 0.3 - 5e-13, -0.3, 0.0;
  EXPECT_EQ(select_operator(g), 1u);
  g << 0.0, 0.0, 0.0, -1e-3;
  EXPECT_EQ(select_operator(g), 3u);
  EXPECT_THROW(select_operator(Eigen::VectorXd()), DimensionError);
  EXPECT_THROW(select_operator(Eigen::VectorXd::Zero(4)), ContractViolation);
}

TEST(Ansatz, StateMatchesDenseProduct) {
  Ansatz a{QuantumState::uniform(4), {}};
  a.elements = {{PauliString("XYII"), 0.3}, {PauliString("IZZY"), -1.1}, {PauliString("YIIX"), 0.7}};
  Vector oracle = a.reference.amplitudes();
  for (const auto& e : a.elements) oracle = oracle_expm(pauli_to_matrix(e.op), e.theta) * oracle;
  EXPECT_LT(max_abs(ansatz_state(a).amplitudes() - oracle), 1e-13);

  const Ansatz empty{QuantumState::ket("0101"), {}};
  EXPECT_EQ(max_abs(ansatz_state(empty).amplitudes() - empty.reference.amplitudes()), 0.0);
}

TEST(Ansatz, SingleYRotationOnOneQubit) {
  // exp(-i t Y)|0> = cos t |0> + sin t |1>.
  const Ansatz a{QuantumState::ket("0"), {{PauliString("Y"), 0.4}}};
  const QuantumState s = ansatz_state(a);
  EXPECT_NEAR(s[0].real(), std::cos(0.4), 1e-15);
  EXPECT_NEAR(s[1].real(), std::sin(0.4), 1e-15);
}

TEST(Ansatz, ThetaRoundTrip) {
  Ansatz a{QuantumState::uniform(2), {{PauliString("XY"), 0.1}, {PauliString("ZZ"), 0.2}}};
  Eigen::VectorXd t(2);
  t << -0.5, 0.25;
  a.set_thetas(t);
  EXPECT_EQ(a.thetas(), t);
  EXPECT_THROW(a.set_thetas(Eigen::VectorXd::Zero(3)), DimensionError);
}

TEST(AnsatzGradient, MatchesFiniteDifferences) {
  const DenseOperator h = xy(3.0);
  Rng rng(17);
  Ansatz a{QuantumState::uniform(4), {}};
  const OperatorPool pool = build_full_pool(4);
  for (int k = 0; k < 6; ++k) {
    a.elements.push_back({pool.operators[static_cast<std::size_t>(rng.next_u64() % pool.size())], rng.uniform(-1, 1)});
  }
  const EnergyGradient eg = ansatz_energy_gradient(a, h);
  EXPECT_NEAR(eg.energy, energy_of(ansatz_state(a), h), 1e-12);
  const double step = 1e-5;
  for (Eigen::Index m = 0; m < eg.gradient.size(); ++m) {
    Ansatz p = a;
    Ansatz q = a;
    p.elements[static_cast<std::size_t>(m)].theta += step;
    q.elements[static_cast<std::size_t>(m)].theta -= step;
    const double fd = (energy_of(ansatz_state(p), h) - energy_of(ansatz_state(q), h)) / (2 * step);
    EXPECT_NEAR(eg.gradient[m], fd, 1e-7) << m;
  }
}

TEST(AnsatzGradient, LastZeroAngleEqualsCommutatorGradient) {
  const DenseOperator h = xxz(-0.1);
  Ansatz a{representative_state("C19"), {{PauliString("XXYI"), 0.3}}};
  const QuantumState before = ansatz_state(a);
  a.elements.push_back({PauliString("IYZX"), 0.0});
  const EnergyGradient eg = ansatz_energy_gradient(a, h);
  EXPECT_NEAR(eg.gradient[1], commutator_gradient(before, PauliString("IYZX"), h), 1e-12);
}

TEST(InnerVqe, RotatesToTheMinimumOfMinusZ) {
  // H = Z on one qubit; from |0>, exp(-i t Y) reaches |1> at t = pi/2.
  const DenseOperator z(pauli_to_matrix(PauliString("Z")));
  const Ansatz a{QuantumState::ket("0"), {{PauliString("Y"), 0.1}}};
  Rng rng(1);
  const InnerResult r = inner_vqe(a, z, AdaptConfig{}, rng);
  EXPECT_NEAR(r.energy, -1.0, 1e-12);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(std::abs(std::sin(r.ansatz.elements[0].theta)), 1.0, 1e-6);
}

TEST(InnerVqe, NeverRaisesTheEnergy) {
  const DenseOperator minus_z(-pauli_to_matrix(PauliString("Z")));
  const Ansatz a{QuantumState::ket("0"), {{PauliString("Y"), 0.0}}};
  Rng rng(1);
  const InnerResult r = inner_vqe(a, minus_z, AdaptConfig{}, rng);
  EXPECT_LE(r.energy, -1.0 + 1e-15);
}

TEST(RunAdapt, MonotoneVariationalAndConsistent) {
  const DenseOperator h = xxz(3.0);
  AdaptConfig cfg;
  cfg.seed = 99;
  const AdaptTrace t = run_adapt(h, QuantumState::ket("0000"), cfg);
  ASSERT_FALSE(t.iterations.empty());
  EXPECT_EQ(t.iterations.front().j, 0);
  EXPECT_EQ(t.iterations.front().op, "");
  EXPECT_EQ(static_cast<int>(t.iterations.size()), t.final.n_ops + 1);
  const double exact = oracle_eigenvalues(h.matrix())[0];
  EXPECT_NEAR(t.final.exact, exact, 1e-10);
  for (std::size_t j = 0; j < t.iterations.size(); ++j) {
    const auto& it = t.iterations[j];
    EXPECT_EQ(it.j, static_cast<int>(j));
    EXPECT_EQ(it.thetas.size(), j);
    EXPECT_GE(it.energy, exact - 1e-10);
    if (j > 0) EXPECT_LE(it.energy, t.iterations[j - 1].energy + 1e-12) << j;
  }
  EXPECT_EQ(t.final.energy, t.iterations.back().energy);
  EXPECT_NEAR(t.final.pct_error, percent_error(t.final.energy, exact), 1e-12);
  EXPECT_NEAR(energy_of(t.final_state, h), t.final.energy, 1e-10);
  EXPECT_TRUE(t.final.reason == "threshold" || t.final.reason == "cap" || t.final.reason == "stalled");
  if (t.final.reason == "threshold") EXPECT_LT(t.iterations.back().grad_norm, cfg.epsilon);
  double weight = 0.0;
  for (double w : t.final.level_overlaps) weight += w;
  EXPECT_NEAR(weight, 1.0, 1e-10);
}

TEST(RunAdapt, EigenstateIsAFixedPoint) {
  const DenseOperator h = xy(3.0);
  const GroundState gs = ground_state(h);
  const AdaptTrace t = run_adapt(h, gs.state, AdaptConfig{});
  EXPECT_EQ(t.final.n_ops, 0);
  EXPECT_EQ(t.final.reason, "threshold");
  EXPECT_EQ(t.final.level_tag, 0);
  EXPECT_LT(t.final.pct_error, 1e-10);
}

TEST(RunAdapt, OperatorCapIsHonored) {
  AdaptConfig cfg;
  cfg.max_operators = 2;
  cfg.epsilon = 1e-12;
  const AdaptTrace t = run_adapt(xy(1.0), QuantumState::uniform(4), cfg);
  EXPECT_EQ(t.final.n_ops, 2);
  EXPECT_EQ(t.final.reason, "cap");
}

TEST(RunAdapt, Deterministic) {
  AdaptConfig cfg;
  cfg.seed = 4242;
  const DenseOperator h = xy(1.0);
  const AdaptTrace a = run_adapt(h, representative_state("C31"), cfg);
  const AdaptTrace b = run_adapt(h, representative_state("C31"), cfg);
  ASSERT_EQ(a.iterations.size(), b.iterations.size());
  for (std::size_t j = 0; j < a.iterations.size(); ++j) {
    EXPECT_EQ(a.iterations[j].energy, b.iterations[j].energy);
    EXPECT_EQ(a.iterations[j].op, b.iterations[j].op);
  }
}

TEST(PercentError, Definition) {
  EXPECT_DOUBLE_EQ(percent_error(-9.0, -10.0), 10.0);
  EXPECT_DOUBLE_EQ(percent_error(-10.0, -10.0), 0.0);
}

}  // namespace
}  // namespace adaptlab
