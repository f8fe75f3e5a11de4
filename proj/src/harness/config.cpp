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

#include "adaptlab/classes.hpp"
#include "adaptlab/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>

namespace adaptlab {
namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + " must be a JSON object");
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

double finite_number(const json& v, const std::string& name) {
  if (!v.is_number()) throw ConfigError(name + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(name + " must be finite");
  return x;
}

int integer(const json& v, const std::string& name) {
  if (!v.is_number_integer()) throw ConfigError(name + " must be an integer");
  return v.get<int>();
}

std::uint64_t parse_seed(const std::string& text) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    throw ConfigError("seed '" + text + "' is not an unsigned integer");
  }
  if (used != text.size()) throw ConfigError("seed '" + text + "' is not an unsigned integer");
  return v;
}

ExperimentConfig parse_document(const json& doc);

}  // namespace

QuantumState InitialStateSpec::build(int num_qubits) const {
  if (kind == "uniform") return QuantumState::uniform(num_qubits);
  if (kind == "class") {
    if (num_qubits != 4) throw ConfigError("class representatives are four-qubit states");
    return representative_state(label, c);
  }
  if (kind == "amplitudes") {
    Vector v(static_cast<Eigen::Index>(amplitudes.size()));
    for (std::size_t i = 0; i < amplitudes.size(); ++i) v[static_cast<Eigen::Index>(i)] = amplitudes[i];
    if (v.size() != (Eigen::Index{1} << num_qubits)) {
      throw ConfigError("amplitude list length does not match 2^n");
    }
    return QuantumState(num_qubits, std::move(v));
  }
  throw ConfigError("unknown initial-state kind '" + kind + "'");
}

std::string InitialStateSpec::tag() const {
  if (kind == "class") return label;
  return kind;
}

std::uint64_t fallback_seed() {
  if (const char* env = std::getenv("ADAPTLAB_SEED")) {
    if (*env) return parse_seed(env);
  }
  return kDefaultSeed;
}

ExperimentConfig parse_config(const json& doc) {
  try {
    return parse_document(doc);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed config value: ") + e.what());
  }
}

namespace {

ExperimentConfig parse_document(const json& doc) {
  reject_unknown(doc, {"experiment", "hamiltonian", "initial_state", "adapt", "vqe", "ensemble", "seed",
                       "out", "grid", "epsilons", "classes", "zero_tol"},
                 "config");
  ExperimentConfig cfg;
  cfg.seed = fallback_seed();
  if (doc.contains("experiment")) cfg.kind = doc["experiment"].get<std::string>();

  if (doc.contains("hamiltonian")) {
    const json& h = doc["hamiltonian"];
    reject_unknown(h, {"model", "gamma", "delta", "lambda", "j", "n"}, "hamiltonian");
    if (h.contains("model")) cfg.hamiltonian.model = h["model"].get<std::string>();
    if (h.contains("gamma")) cfg.hamiltonian.gamma = finite_number(h["gamma"], "gamma");
    if (h.contains("delta")) cfg.hamiltonian.delta = finite_number(h["delta"], "delta");
    if (h.contains("lambda")) cfg.hamiltonian.lambda = finite_number(h["lambda"], "lambda");
    if (h.contains("j")) cfg.hamiltonian.j = finite_number(h["j"], "j");
    if (h.contains("n")) cfg.hamiltonian.n = integer(h["n"], "n");
  }

  if (doc.contains("initial_state")) {
    const json& s = doc["initial_state"];
    reject_unknown(s, {"kind", "label", "c", "amplitudes"}, "initial_state");
    if (s.contains("kind")) cfg.initial.kind = s["kind"].get<std::string>();
    if (s.contains("label")) cfg.initial.label = s["label"].get<std::string>();
    if (s.contains("c")) cfg.initial.c = finite_number(s["c"], "c");
    if (s.contains("amplitudes")) {
      for (const json& a : s["amplitudes"]) {
        if (a.is_number()) {
          cfg.initial.amplitudes.emplace_back(finite_number(a, "amplitude"), 0.0);
        } else if (a.is_array() && a.size() == 2) {
          cfg.initial.amplitudes.emplace_back(finite_number(a[0], "amplitude"), finite_number(a[1], "amplitude"));
        } else {
          throw ConfigError("amplitudes must be numbers or [re, im] pairs");
        }
      }
    }
  }

  if (doc.contains("adapt")) {
    const json& a = doc["adapt"];
    reject_unknown(a, {"epsilon", "max_operators", "grad_tol", "max_iterations", "max_restarts"}, "adapt");
    if (a.contains("epsilon")) cfg.adapt.epsilon = finite_number(a["epsilon"], "epsilon");
    if (a.contains("max_operators")) cfg.adapt.max_operators = integer(a["max_operators"], "max_operators");
    if (a.contains("grad_tol")) cfg.adapt.inner.grad_tol = finite_number(a["grad_tol"], "grad_tol");
    if (a.contains("max_iterations")) cfg.adapt.inner.max_iterations = integer(a["max_iterations"], "max_iterations");
    if (a.contains("max_restarts")) cfg.adapt.inner.max_restarts = integer(a["max_restarts"], "max_restarts");
  }

  if (doc.contains("vqe")) {
    const json& v = doc["vqe"];
    reject_unknown(v, {"restarts", "init_window", "reps"}, "vqe");
    if (v.contains("restarts")) cfg.vqe.restarts = integer(v["restarts"], "restarts");
    if (v.contains("init_window")) cfg.vqe.init_window = finite_number(v["init_window"], "init_window");
    if (v.contains("reps")) cfg.ansatz.reps = integer(v["reps"], "reps");
  }

  if (doc.contains("ensemble")) cfg.ensemble = integer(doc["ensemble"], "ensemble");
  if (doc.contains("seed")) {
    const json& s = doc["seed"];
    if (s.is_number_unsigned()) {
      cfg.seed = s.get<std::uint64_t>();
    } else if (s.is_string()) {
      cfg.seed = parse_seed(s.get<std::string>());
    } else {
      throw ConfigError("seed must be a non-negative integer");
    }
  }
  if (doc.contains("out")) cfg.out = doc["out"].get<std::string>();
  if (doc.contains("grid")) {
    const json& g = doc["grid"];
    reject_unknown(g, {"min", "max", "step"}, "grid");
    GridSpec grid;
    if (!g.contains("min") || !g.contains("max") || !g.contains("step")) {
      throw ConfigError("grid needs min, max and step");
    }
    grid.min = finite_number(g["min"], "grid.min");
    grid.max = finite_number(g["max"], "grid.max");
    grid.step = finite_number(g["step"], "grid.step");
    cfg.grid = grid;
  }
  if (doc.contains("epsilons")) {
    for (const json& e : doc["epsilons"]) cfg.epsilons.push_back(finite_number(e, "epsilons[]"));
  }
  if (doc.contains("classes")) {
    for (const json& c : doc["classes"]) cfg.classes.push_back(c.get<std::string>());
  }
  if (doc.contains("zero_tol")) cfg.zero_tol = finite_number(doc["zero_tol"], "zero_tol");
  return cfg;
}

}  // namespace

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_config(doc);
}

void validate_config(const ExperimentConfig& cfg) {
  const auto& h = cfg.hamiltonian;
  if (h.model != "xy" && h.model != "xxz") throw ConfigError("model must be 'xy' or 'xxz'");
  if (h.n < 2 || h.n > 10) throw ConfigError("n must be in [2, 10]");
  if (!(cfg.adapt.epsilon > 0.0)) throw ConfigError("epsilon must be > 0");
  if (cfg.adapt.max_operators < 1) throw ConfigError("max_operators must be >= 1");
  if (cfg.adapt.inner.max_iterations < 1 || cfg.adapt.inner.max_restarts < 0) {
    throw ConfigError("inner optimizer limits must be positive");
  }
  if (cfg.ensemble < 1) throw ConfigError("ensemble must be >= 1");
  if (cfg.vqe.restarts < 1) throw ConfigError("vqe.restarts must be >= 1");
  if (cfg.ansatz.reps < 0) throw ConfigError("vqe.reps must be >= 0");
  if (!(cfg.zero_tol > 0.0)) throw ConfigError("zero_tol must be > 0");
  for (double e : cfg.epsilons) {
    if (!(e > 0.0)) throw ConfigError("every epsilon must be > 0");
  }
  for (const auto& c : cfg.classes) find_class(c);
  if (cfg.initial.kind == "class") {
    find_class(cfg.initial.label);
  } else if (cfg.initial.kind != "uniform" && cfg.initial.kind != "amplitudes") {
    throw ConfigError("initial_state.kind must be uniform, class or amplitudes");
  }
}

nlohmann::json to_json(const ExperimentConfig& cfg) {
  json j;
  j["experiment"] = cfg.kind;
  j["hamiltonian"] = {{"model", cfg.hamiltonian.model}, {"n", cfg.hamiltonian.n},
                      {"gamma", cfg.hamiltonian.gamma}, {"delta", cfg.hamiltonian.delta},
                      {"lambda", cfg.hamiltonian.lambda}, {"j", cfg.hamiltonian.j}};
  json init = {{"kind", cfg.initial.kind}};
  if (cfg.initial.kind == "class") init["label"] = cfg.initial.label;
  if (cfg.initial.c) init["c"] = *cfg.initial.c;
  j["initial_state"] = init;
  j["adapt"] = {{"epsilon", cfg.adapt.epsilon}, {"max_operators", cfg.adapt.max_operators},
                {"grad_tol", cfg.adapt.inner.grad_tol}, {"max_iterations", cfg.adapt.inner.max_iterations},
                {"max_restarts", cfg.adapt.inner.max_restarts}};
  j["vqe"] = {{"restarts", cfg.vqe.restarts}, {"init_window", cfg.vqe.init_window}, {"reps", cfg.ansatz.reps}};
  j["ensemble"] = cfg.ensemble;
  j["seed"] = cfg.seed;
  if (cfg.grid) j["grid"] = {{"min", cfg.grid->min}, {"max", cfg.grid->max}, {"step", cfg.grid->step}};
  if (!cfg.epsilons.empty()) j["epsilons"] = cfg.epsilons;
  if (!cfg.classes.empty()) j["classes"] = cfg.classes;
  j["zero_tol"] = cfg.zero_tol;
  return j;
}

std::vector<HamiltonianSpec> standard_models() {
  HamiltonianSpec xy1{.model = "xy", .gamma = 1.0};
  HamiltonianSpec xy3{.model = "xy", .gamma = 3.0};
  HamiltonianSpec xxz_a{.model = "xxz", .delta = -0.1};
  HamiltonianSpec xxz_b{.model = "xxz", .delta = 3.0};
  return {xy1, xy3, xxz_a, xxz_b};
}

}  // namespace adaptlab
