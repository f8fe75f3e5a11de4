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
#include "adaptlab/harness/config.hpp"
#include "adaptlab/harness/io.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace adaptlab {

struct EnsembleSample {
  int index = 0;
  double energy = 0.0;
  double pct_error = 0.0;
  int n_ops = 0;
  std::string reason;
  int level_tag = -1;
};

struct EnsembleStats {
  std::string label;
  std::string model;
  double epsilon = 0.0;
  std::vector<EnsembleSample> samples;  // sorted by index
  double mean_pct_error = 0.0;
  double median_pct_error = 0.0;
  double max_pct_error = 0.0;
  double mean_ops = 0.0;
};

double median(std::vector<double> values);

/// `size` Haar-LU images of a class representative, one ADAPT run each.
/// Sample i of class L draws its unitaries from
///     derive_seed(derive_seed(seed, ordinal(L)), i)
/// so the same images are reused across models and epsilons.
EnsembleStats lu_ensemble(const HamiltonianSpec& model, const std::string& label, std::optional<double> c,
                          int size, std::uint64_t seed, const AdaptConfig& adapt);
/// Reference twin: samples in sequence.
EnsembleStats lu_ensemble_serial(const HamiltonianSpec& model, const std::string& label,
                                 std::optional<double> c, int size, std::uint64_t seed,
                                 const AdaptConfig& adapt);

nlohmann::json trace_to_json(const AdaptTrace& trace, const nlohmann::json& config);

struct ExperimentOutput {
  Table table;
  std::optional<nlohmann::json> document;  // written next to the CSV
  std::string document_extension = ".json";
};

ExperimentOutput cmd_class_scan(const ExperimentConfig& cfg);
ExperimentOutput cmd_adapt_run(const ExperimentConfig& cfg);
ExperimentOutput cmd_lu_ensemble(const ExperimentConfig& cfg);
ExperimentOutput cmd_epsilon_sweep(const ExperimentConfig& cfg);
ExperimentOutput cmd_representative_table(const ExperimentConfig& cfg);
ExperimentOutput cmd_entropy_table(const ExperimentConfig& cfg);
ExperimentOutput cmd_vqe_baseline(const ExperimentConfig& cfg);

const std::vector<std::string>& experiment_kinds();

/// Dispatches on cfg.kind.
ExperimentOutput run_experiment(const ExperimentConfig& cfg);

/// CSV to `out` (stdout when empty); the JSON document, if any, beside it.
void write_outputs(const ExperimentOutput& output, const std::string& out);

}  // namespace adaptlab
