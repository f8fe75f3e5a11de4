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

// adaptlab: batch driver for the ADAPT-VQE / entanglement-class experiments.
//
//   adaptlab <command> --config FILE [--model xy|xxz] [--gamma G] [--delta D]
//            [--class LABEL] [--epsilon E] [--seed S] [--out PATH]
//
// Exit codes: 0 ok, 2 usage or config error, 3 numerical contract violation.

#include "adaptlab/errors.hpp"
#include "adaptlab/harness/config.hpp"
#include "adaptlab/harness/experiments.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitContract = 3;

struct Overrides {
  std::string config_path;
  std::optional<std::string> model;
  std::optional<double> gamma;
  std::optional<double> delta;
  std::optional<std::string> label;
  std::optional<double> epsilon;
  std::optional<std::string> seed;
  std::optional<std::string> out;
};

adaptlab::ExperimentConfig resolve(const std::string& command, const Overrides& o) {
  adaptlab::ExperimentConfig cfg = adaptlab::load_config(o.config_path);
  if (!cfg.kind.empty() && cfg.kind != command) {
    throw adaptlab::ConfigError("config is for '" + cfg.kind + "' but command is '" + command + "'");
  }
  cfg.kind = command;
  if (o.model) cfg.hamiltonian.model = *o.model;
  if (o.gamma) cfg.hamiltonian.gamma = *o.gamma;
  if (o.delta) cfg.hamiltonian.delta = *o.delta;
  if (o.label) {
    // A class on the command line sets the initial state and narrows the
    // class list of the batch commands.
    cfg.initial.kind = "class";
    cfg.initial.label = *o.label;
    cfg.classes = {*o.label};
  }
  if (o.epsilon) {
    cfg.adapt.epsilon = *o.epsilon;
    cfg.epsilons = {*o.epsilon};
  }
  if (o.seed) cfg.seed = adaptlab::parse_config({{"seed", *o.seed}}).seed;
  if (o.out) cfg.out = *o.out;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adaptlab: qubit-ADAPT-VQE and four-qubit entanglement-class experiments"};
  app.require_subcommand(1);

  Overrides o;
  for (const std::string& kind : adaptlab::experiment_kinds()) {
    CLI::App* sub = app.add_subcommand(kind, "run the " + kind + " experiment");
    sub->add_option("--config", o.config_path, "experiment JSON (see docs/config.schema.json)")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--model", o.model, "xy or xxz")->check(CLI::IsMember({"xy", "xxz"}));
    sub->add_option("--gamma", o.gamma, "XY anisotropy");
    sub->add_option("--delta", o.delta, "XXZ anisotropy");
    sub->add_option("--class", o.label, "entanglement class label, e.g. C19");
    sub->add_option("--epsilon", o.epsilon, "gradient-norm threshold");
    sub->add_option("--seed", o.seed, "master seed (default: config, then $ADAPTLAB_SEED)");
    sub->add_option("--out", o.out, "output CSV path (stdout if omitted)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const adaptlab::ExperimentConfig cfg = resolve(command, o);
    const adaptlab::ExperimentOutput out = adaptlab::run_experiment(cfg);
    adaptlab::write_outputs(out, cfg.out);
  } catch (const adaptlab::ContractViolation& e) {
    std::cerr << "adaptlab: numerical contract violation: " << e.what() << '\n';
    return kExitContract;
  } catch (const std::invalid_argument& e) {
    std::cerr << "adaptlab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "adaptlab: internal error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}
