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

#include "adaptlab/harness/config.hpp"
#include "adaptlab/harness/experiments.hpp"
#include "adaptlab/harness/io.hpp"
#include "adaptlab/errors.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <sys/wait.h>

namespace adaptlab {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

TEST(Config, ParsesFullDocument) {
  const json doc = json::parse(R"({
    "experiment": "adapt-run",
    "hamiltonian": {"model": "xxz", "delta": 3, "n": 4},
    "initial_state": {"kind": "class", "label": "C33", "c": 2},
    "adapt": {"epsilon": 0.001, "max_operators": 12, "max_restarts": 1},
    "vqe": {"restarts": 2, "reps": 1},
    "seed": 7, "ensemble": 5, "classes": ["C1", "C9"], "epsilons": [0.1, 0.01]
  })");
  const ExperimentConfig cfg = parse_config(doc);
  EXPECT_EQ(cfg.kind, "adapt-run");
  EXPECT_EQ(cfg.hamiltonian.model, "xxz");
  EXPECT_EQ(cfg.hamiltonian.delta, 3.0);
  EXPECT_EQ(cfg.initial.label, "C33");
  EXPECT_EQ(cfg.initial.c, 2.0);
  EXPECT_EQ(cfg.adapt.epsilon, 1e-3);
  EXPECT_EQ(cfg.adapt.max_operators, 12);
  EXPECT_EQ(cfg.adapt.inner.max_restarts, 1);
  EXPECT_EQ(cfg.vqe.restarts, 2);
  EXPECT_EQ(cfg.ansatz.reps, 1);
  EXPECT_EQ(cfg.seed, 7u);
  EXPECT_EQ(cfg.classes.size(), 2u);
  EXPECT_NO_THROW(validate_config(cfg));

  // to_json is accepted back by the parser.
  const ExperimentConfig again = parse_config(to_json(cfg));
  EXPECT_EQ(to_json(again), to_json(cfg));
}

TEST(Config, RejectsUnknownKeysAndBadTypes) {
  EXPECT_THROW(parse_config(json::parse(R"({"experimnt": "adapt-run"})")), ConfigError);
  EXPECT_THROW(parse_config(json::parse(R"({"hamiltonian": {"gama": 1}})")), ConfigError);
  EXPECT_THROW(parse_config(json::parse(R"({"adapt": {"epsilon": "small"}})")), ConfigError);
  EXPECT_THROW(parse_config(json::parse(R"({"experiment": 3})")), ConfigError);
  EXPECT_THROW(parse_config(json::parse(R"({"seed": -1})")), ConfigError);
  EXPECT_THROW(parse_config(json::parse(R"({"grid": {"min": 0, "max": 1}})")), ConfigError);
  EXPECT_THROW(parse_config(json::parse("[1, 2]")), ConfigError);
}

TEST(Config, ValidationCatchesRanges) {
  ExperimentConfig cfg = parse_config(json::object());
  EXPECT_NO_THROW(validate_config(cfg));
  cfg.adapt.epsilon = 0.0;
  EXPECT_THROW(validate_config(cfg), ConfigError);
  cfg = parse_config(json::object());
  cfg.hamiltonian.model = "heisenberg";
  EXPECT_THROW(validate_config(cfg), ConfigError);
  cfg = parse_config(json::object());
  cfg.classes = {"C2"};
  EXPECT_THROW(validate_config(cfg), ConfigError);
}

TEST(Config, SeedPrecedence) {
  ::unsetenv("ADAPTLAB_SEED");
  EXPECT_EQ(parse_config(json::object()).seed, kDefaultSeed);
  ::setenv("ADAPTLAB_SEED", "12345", 1);
  EXPECT_EQ(parse_config(json::object()).seed, 12345u);
  EXPECT_EQ(parse_config(json::parse(R"({"seed": 9})")).seed, 9u);
  ::setenv("ADAPTLAB_SEED", "twelve", 1);
  EXPECT_THROW(parse_config(json::object()), ConfigError);
  ::unsetenv("ADAPTLAB_SEED");
}

TEST(Config, AmplitudeInitialState) {
  const ExperimentConfig cfg =
      parse_config(json::parse(R"({"initial_state": {"kind": "amplitudes", "amplitudes": [1, [0, 1], 0, 0]}})"));
  const QuantumState s = cfg.initial.build(2);
  EXPECT_NEAR(s[1].imag(), std::sqrt(0.5), 1e-15);
  EXPECT_THROW(cfg.initial.build(3), ConfigError);
}

TEST(Config, ShippedExamplesLoad) {
  int count = 0;
  for (const auto& entry : fs::directory_iterator(ADAPTLAB_EXAMPLES_DIR)) {
    if (entry.path().extension() != ".json") continue;
    const ExperimentConfig cfg = load_config(entry.path().string());
    EXPECT_NO_THROW(validate_config(cfg)) << entry.path();
    const auto& kinds = experiment_kinds();
    EXPECT_NE(std::find(kinds.begin(), kinds.end(), cfg.kind), kinds.end()) << entry.path();
    ++count;
  }
  EXPECT_GE(count, 7);
}

TEST(Io, NumberFormatting) {
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(std::stod(format_number(1.0 / 3.0)), 1.0 / 3.0);
  EXPECT_THROW(format_number(std::numeric_limits<double>::quiet_NaN()), ContractViolation);
}

TEST(Io, CsvQuoting) {
  const Table t{{"a", "b"}, {{"x,y", "say \"hi\""}, {"1", "2"}}};
  std::ostringstream out;
  write_csv(t, out);
  EXPECT_EQ(out.str(), "a,b\n\"x,y\",\"say \"\"hi\"\"\"\n1,2\n");
}

TEST(Io, ReplaceExtension) {
  EXPECT_EQ(replace_extension("runs/scan.csv", ".json"), "runs/scan.json");
  EXPECT_EQ(replace_extension("runs/scan", ".json"), "runs/scan.json");
  EXPECT_EQ(replace_extension("runs.d/scan", ".json"), "runs.d/scan.json");
}

TEST(Experiments, MedianOfEvenAndOdd) {
  EXPECT_EQ(median({3.0, 1.0, 2.0}), 2.0);
  EXPECT_EQ(median({4.0, 1.0, 2.0, 3.0}), 2.5);
}

TEST(Experiments, EnsembleSerialTwinAgrees) {
  AdaptConfig adapt;
  adapt.max_operators = 6;
  const HamiltonianSpec model{.model = "xy", .gamma = 3.0};
  const EnsembleStats a = lu_ensemble(model, "C9", std::nullopt, 3, 11, adapt);
  const EnsembleStats b = lu_ensemble_serial(model, "C9", std::nullopt, 3, 11, adapt);
  ASSERT_EQ(a.samples.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(a.samples[i].index, static_cast<int>(i));
    EXPECT_EQ(a.samples[i].energy, b.samples[i].energy);
    EXPECT_EQ(a.samples[i].n_ops, b.samples[i].n_ops);
  }
  EXPECT_EQ(a.mean_pct_error, b.mean_pct_error);
}

TEST(Experiments, EntropyTableShape) {
  ExperimentConfig cfg = parse_config(json::parse(R"({"experiment": "entropy-table"})"));
  const ExperimentOutput out = run_experiment(cfg);
  EXPECT_EQ(out.table.header, (std::vector<std::string>{"class", "entropy", "ln2"}));
  EXPECT_EQ(out.table.rows.size(), 26u);
}

TEST(Experiments, UnknownKindIsConfigError) {
  ExperimentConfig cfg = parse_config(json::parse(R"({"experiment": "nope"})"));
  EXPECT_THROW(run_experiment(cfg), ConfigError);
}

// The CLI binary: exit codes and file output.
int run_cli(const std::string& args) {
  const std::string cmd = std::string(ADAPTLAB_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("adaptlab_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  fs::path dir_;
};

TEST_F(Cli, ExitCodes) {
  const std::string scan = write("scan.json", R"({"experiment": "class-scan", "hamiltonian": {"model": "xy"},
                                                  "grid": {"min": -1, "max": 1, "step": 0.5}})");
  const std::string out = (dir_ / "scan.csv").string();
  EXPECT_EQ(run_cli("class-scan --config " + scan + " --out " + out), 0);
  ASSERT_TRUE(fs::exists(out));
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "parameter,class_labels,degenerate,marginal_invariants");

  EXPECT_EQ(run_cli(""), 2);
  EXPECT_EQ(run_cli("no-such-command"), 2);
  EXPECT_EQ(run_cli("class-scan"), 2);
  EXPECT_EQ(run_cli("class-scan --config " + (dir_ / "missing.json").string()), 2);
  EXPECT_EQ(run_cli("adapt-run --config " + scan), 2);  // kind mismatch
  EXPECT_EQ(run_cli("class-scan --config " + scan + " --model heisenberg"), 2);
  EXPECT_EQ(run_cli("class-scan --config " + scan + " --seed abc"), 2);
  const std::string bad = write("bad.json", R"({"experiment": "class-scan", "colour": 1})");
  EXPECT_EQ(run_cli("class-scan --config " + bad), 2);
  EXPECT_EQ(run_cli("class-scan --help"), 0);
}

TEST_F(Cli, EntropyTableToStdoutWithEnvSeed) {
  const std::string cfg = write("ent.json", R"({"experiment": "entropy-table"})");
  EXPECT_EQ(run_cli("entropy-table --config " + cfg), 0);
  const std::string env_cmd = "env ADAPTLAB_SEED=bogus " + std::string(ADAPTLAB_CLI_PATH) + " entropy-table --config " +
                              cfg + " >/dev/null 2>&1";
  const int status = std::system(env_cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
}

}  // namespace
}  // namespace adaptlab
