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

#include <string>
#include <vector>

namespace adaptlab {

struct PauliTerm {
  double coefficient;
  PauliString string;
};

/// Real-weighted sum of Pauli strings; Hermitian by construction.
class PauliSum {
 public:
  explicit PauliSum(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Appends a term; exact zeros are dropped.
  void add(double coefficient, const PauliString& p);

 private:
  int num_qubits_;
  std::vector<PauliTerm> terms_;
};

/// Periodic XY chain:
///   sum_j (1+g)/2 X_j X_{j+1} + (1-g)/2 Y_j Y_{j+1} + lambda Z_j.
PauliSum build_xy(int n, double gamma, double lambda);

/// Periodic XXZ chain:
///   sum_j J (X_j X_{j+1} + Y_j Y_{j+1}) + delta Z_j Z_{j+1} + lambda Z_j.
PauliSum build_xxz(int n, double j_coupling, double delta, double lambda);

DenseOperator to_dense(const PauliSum& h);

/// Serializable model description, as found in experiment configs.
struct HamiltonianSpec {
  std::string model = "xy";  // "xy" | "xxz"
  int n = 4;
  double gamma = 1.0;
  double delta = 0.0;
  double lambda = 1.0;
  double j = 1.0;

  PauliSum build() const;
  /// Short human-readable tag such as "xy(gamma=1)".
  std::string tag() const;
};

}  // namespace adaptlab
