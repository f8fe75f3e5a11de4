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

#include "adaptlab/hamiltonians.hpp"

#include "adaptlab/errors.hpp"

#include <bit>
#include <cstdio>

namespace adaptlab {
namespace {

PauliString two_site(int n, int a, int b, char letter) {
  std::string s(static_cast<std::size_t>(n), 'I');
  s[static_cast<std::size_t>(a)] = letter;
  s[static_cast<std::size_t>(b)] = letter;
  return PauliString(s);
}

PauliString one_site(int n, int a, char letter) {
  std::string s(static_cast<std::size_t>(n), 'I');
  s[static_cast<std::size_t>(a)] = letter;
  return PauliString(s);
}

void require_chain(int n) {
  if (n < 2 || n > 16) throw DimensionError("spin chain needs 2 <= n <= 16 sites");
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

}  // namespace

PauliSum::PauliSum(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > 16) throw DimensionError("qubit count out of range");
}

void PauliSum::add(double coefficient, const PauliString& p) {
  if (p.num_qubits() != num_qubits_) throw DimensionError("PauliSum: term length mismatch");
  if (coefficient == 0.0) return;
  terms_.push_back({coefficient, p});
}

PauliSum build_xy(int n, double gamma, double lambda) {
  require_chain(n);
  PauliSum h(n);
  // A two-site ring would double-count its single bond; keep the literal sum.
  for (int j = 0; j < n; ++j) {
    const int k = (j + 1) % n;
    h.add(0.5 * (1.0 + gamma), two_site(n, j, k, 'X'));
    h.add(0.5 * (1.0 - gamma), two_site(n, j, k, 'Y'));
    h.add(lambda, one_site(n, j, 'Z'));
  }
  return h;
}

PauliSum build_xxz(int n, double j_coupling, double delta, double lambda) {
  require_chain(n);
  PauliSum h(n);
  for (int j = 0; j < n; ++j) {
    const int k = (j + 1) % n;
    h.add(j_coupling, two_site(n, j, k, 'X'));
    h.add(j_coupling, two_site(n, j, k, 'Y'));
    h.add(delta, two_site(n, j, k, 'Z'));
    h.add(lambda, one_site(n, j, 'Z'));
  }
  return h;
}

DenseOperator to_dense(const PauliSum& h) {
  const Eigen::Index dim = Eigen::Index{1} << h.num_qubits();
  Matrix m = Matrix::Zero(dim, dim);
  for (const PauliTerm& t : h.terms()) {
    const std::uint32_t x = t.string.x_mask();
    const std::uint32_t z = t.string.z_mask();
    const Complex phase = t.coefficient * t.string.y_phase();
    for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(dim); ++b) {
      const double sign = (std::popcount(b & z) & 1) ? -1.0 : 1.0;
      m(static_cast<Eigen::Index>(b ^ x), static_cast<Eigen::Index>(b)) += sign * phase;
    }
  }
  return DenseOperator(std::move(m));
}

PauliSum HamiltonianSpec::build() const {
  if (model == "xy") return build_xy(n, gamma, lambda);
  if (model == "xxz") return build_xxz(n, j, delta, lambda);
  throw ConfigError("unknown model '" + model + "' (expected xy or xxz)");
}

std::string HamiltonianSpec::tag() const {
  if (model == "xy") return "xy(gamma=" + fmt(gamma) + ")";
  return "xxz(delta=" + fmt(delta) + ")";
}

}  // namespace adaptlab
