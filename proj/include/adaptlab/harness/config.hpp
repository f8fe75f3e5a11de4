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

#include "adaptlab/adapt_vqe.hpp"
#include "adaptlab/hamiltonians.hpp"
#include "adaptlab/vqe_baseline.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace adaptlab {

struct InitialStateSpec {
  std::string kind = "uniform";  // uniform | class | amplitudes
  std::string label;             // kind == class
  std::optional<double> c;       // C33 only
  std::vector<Complex> amplitudes;

  QuantumState build(int num_qubits) const;
  std::string tag() const;
};

struct GridSpec {
  double min = -3.0;
  double max = 3.0;
  double step = 0.05;
};

struct ExperimentConfig {
  std::string kind;
  HamiltonianSpec hamiltonian;
  InitialStateSpec initial;
  AdaptConfig adapt;
  VqeOptions vqe;
  LayeredAnsatz ansatz;
  int ensemble = 100;
  std::uint64_t seed = 0;
  std::string out;
  std::optional<GridSpec> grid;
  std::vector<double> epsilons;
  std::vector<std::string> classes;  // empty: command default
  double zero_tol = 1e-8;
};

inline constexpr std::uint64_t kDefaultSeed = 20240607;

/// Seed precedence: explicit value > ADAPTLAB_SEED > kDefaultSeed.
std::uint64_t fallback_seed();

/// Parses and validates a config document. Unknown keys are rejected.
/// Throws ConfigError on any problem.
ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig load_config(const std::string& path);

/// Checks ranges after overrides have been applied.
void validate_config(const ExperimentConfig& cfg);

nlohmann::json to_json(const ExperimentConfig& cfg);

/// The four model settings used throughout: XY gamma 1 and 3, XXZ delta -0.1
/// and 3, all with lambda = J = 1.
std::vector<HamiltonianSpec> standard_models();

}  // namespace adaptlab
