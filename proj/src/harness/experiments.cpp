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

#include "adaptlab/harness/experiments.hpp"

#include "adaptlab/classes.hpp"
#include "adaptlab/core/linalg.hpp"
#include "adaptlab/core/random.hpp"
#include "adaptlab/entanglement.hpp"
#include "adaptlab/errors.hpp"
#include "adaptlab/parallel.hpp"
#include "adaptlab/vqe_baseline.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numbers>

namespace adaptlab {
namespace {

using nlohmann::json;

constexpr const char* kReproductionNote =
    "statistical reproduction: optimizer and sampling details differ from any reference run, "
    "compare with tolerance bands rather than exact values";

std::string num(double x) { return format_number(x); }
std::string num(int x) { return std::to_string(x); }

std::uint64_t class_ordinal(const std::string& label) {
  const auto cs = entanglement_classes();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].label == label) return i;
  }
  throw ConfigError("unknown entanglement class '" + label + "'");
}

EnsembleSample one_sample(const DenseOperator& h, const QuantumState& rep, std::uint64_t class_seed, int i,
                          const AdaptConfig& adapt) {
  Rng rng(derive_seed(class_seed, static_cast<std::uint64_t>(i)));
  const std::vector<Matrix> us = haar_local_unitaries(rep.num_qubits(), rng);
  const QuantumState start = apply_local_unitaries(rep, us);
  AdaptConfig cfg = adapt;
  cfg.seed = rng.next_u64();
  const AdaptTrace t = run_adapt(h, start, cfg);
  return {i, t.final.energy, t.final.pct_error, t.final.n_ops, t.final.reason, t.final.level_tag};
}

EnsembleStats summarize(EnsembleStats s) {
  std::sort(s.samples.begin(), s.samples.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
  std::vector<double> errs;
  double ops = 0.0;
  for (const auto& x : s.samples) {
    errs.push_back(x.pct_error);
    ops += x.n_ops;
  }
  const double n = static_cast<double>(s.samples.size());
  double total = 0.0;
  for (double e : errs) total += e;
  s.mean_pct_error = total / n;
  s.max_pct_error = *std::max_element(errs.begin(), errs.end());
  s.median_pct_error = median(errs);
  s.mean_ops = ops / n;
  return s;
}

EnsembleStats ensemble_impl(const HamiltonianSpec& model, const std::string& label, std::optional<double> c,
                            int size, std::uint64_t seed, const AdaptConfig& adapt, bool parallel) {
  if (size < 1) throw ConfigError("ensemble size must be >= 1");
  const DenseOperator h = to_dense(model.build());
  const QuantumState rep = representative_state(label, c);
  const std::uint64_t class_seed = derive_seed(seed, class_ordinal(label));
  EnsembleStats s;
  s.label = label;
  s.model = model.tag();
  s.epsilon = adapt.epsilon;
  s.samples.resize(static_cast<std::size_t>(size));
  const auto body = [&](std::int64_t i) {
    s.samples[static_cast<std::size_t>(i)] = one_sample(h, rep, class_seed, static_cast<int>(i), adapt);
  };
  if (parallel) {
    parallel_for(size, body);
  } else {
    for (int i = 0; i < size; ++i) body(i);
  }
  return summarize(std::move(s));
}

std::optional<double> c_for(const ExperimentConfig& cfg, const std::string& label) {
  if (label == "C33" && cfg.initial.kind == "class" && cfg.initial.label == "C33") return cfg.initial.c;
  return std::nullopt;
}

std::vector<std::string> classes_or(const ExperimentConfig& cfg, std::vector<std::string> fallback) {
  return cfg.classes.empty() ? fallback : cfg.classes;
}

json ensemble_json(const EnsembleStats& s) {
  json samples = json::array();
  for (const auto& x : s.samples) {
    samples.push_back({{"index", x.index}, {"energy", x.energy}, {"pct_error", x.pct_error},
                       {"n_ops", x.n_ops}, {"reason", x.reason}, {"level_tag", x.level_tag}});
  }
  return {{"class", s.label}, {"model", s.model}, {"epsilon", s.epsilon}, {"mean_pct_error", s.mean_pct_error},
          {"median_pct_error", s.median_pct_error}, {"mean_ops", s.mean_ops}, {"samples", samples}};
}

}  // namespace

double median(std::vector<double> v) {
  if (v.empty()) throw DimensionError("median of an empty set");
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

EnsembleStats lu_ensemble(const HamiltonianSpec& model, const std::string& label, std::optional<double> c,
                          int size, std::uint64_t seed, const AdaptConfig& adapt) {
  return ensemble_impl(model, label, c, size, seed, adapt, true);
}

EnsembleStats lu_ensemble_serial(const HamiltonianSpec& model, const std::string& label,
                                 std::optional<double> c, int size, std::uint64_t seed,
                                 const AdaptConfig& adapt) {
  return ensemble_impl(model, label, c, size, seed, adapt, false);
}

json trace_to_json(const AdaptTrace& trace, const json& config) {
  json its = json::array();
  for (const auto& it : trace.iterations) {
    its.push_back({{"j", it.j}, {"energy", it.energy}, {"entropy", it.entropy}, {"grad_norm", it.grad_norm},
                   {"op", it.op}, {"thetas", it.thetas}});
  }
  const auto& f = trace.final;
  json final = {{"energy", f.energy},
                {"exact", f.exact},
                {"exact_entropy", f.exact_entropy},
                {"pct_error", f.pct_error},
                {"n_ops", f.n_ops},
                {"n_iterations", static_cast<int>(trace.iterations.size()) - 1},
                {"reason", f.reason},
                {"level_tag", f.level_tag},
                {"level_energies", f.level_energies},
                {"level_overlaps", f.level_overlaps},
                {"degenerate_ground", f.degenerate_ground},
                {"repeats", f.repeats},
                {"threshold_iteration", f.threshold_iteration},
                {"accurate_iteration", f.accurate_iteration}};
  return {{"config", config}, {"iterations", its}, {"final", final}};
}

ExperimentOutput cmd_class_scan(const ExperimentConfig& cfg) {
  if (!cfg.grid) throw ConfigError("class-scan needs a grid {min, max, step}");
  const std::vector<double> grid = linear_grid(cfg.grid->min, cfg.grid->max, cfg.grid->step);
  const std::vector<ScanRow> rows = class_scan(cfg.hamiltonian, grid, cfg.zero_tol);
  ExperimentOutput out;
  out.table.header = {"parameter", "class_labels", "degenerate", "marginal_invariants"};
  for (const ScanRow& r : rows) {
    std::string marginal;
    for (const auto& m : r.result.marginal) marginal += (marginal.empty() ? "" : ";") + m;
    out.table.rows.push_back({num(r.parameter), r.result.joined_labels(), r.degenerate ? "true" : "false", marginal});
  }
  return out;
}

ExperimentOutput cmd_adapt_run(const ExperimentConfig& cfg) {
  const DenseOperator h = to_dense(cfg.hamiltonian.build());
  const QuantumState ref = cfg.initial.build(cfg.hamiltonian.n);
  AdaptConfig a = cfg.adapt;
  a.seed = cfg.seed;
  const AdaptTrace t = run_adapt(h, ref, a);
  ExperimentOutput out;
  out.table.header = {"j", "energy", "entropy", "grad_norm", "op", "exact_energy", "exact_entropy"};
  for (const auto& it : t.iterations) {
    out.table.rows.push_back({num(it.j), num(it.energy), num(it.entropy), num(it.grad_norm), it.op,
                              num(t.final.exact), num(t.final.exact_entropy)});
  }
  out.document = trace_to_json(t, to_json(cfg));
  return out;
}

ExperimentOutput cmd_lu_ensemble(const ExperimentConfig& cfg) {
  ExperimentOutput out;
  out.table.header = {"model", "class", "ensemble", "mean_pct_error", "median_pct_error", "max_pct_error",
                      "mean_ops", "rounded_ops"};
  json all = json::array();
  for (const auto& label : classes_or(cfg, class_labels())) {
    const EnsembleStats s = lu_ensemble(cfg.hamiltonian, label, c_for(cfg, label), cfg.ensemble, cfg.seed, cfg.adapt);
    out.table.rows.push_back({s.model, label, num(cfg.ensemble), num(s.mean_pct_error), num(s.median_pct_error),
                              num(s.max_pct_error), num(s.mean_ops), num(static_cast<int>(std::lround(s.mean_ops)))});
    all.push_back(ensemble_json(s));
  }
  out.document = json{{"config", to_json(cfg)}, {"note", kReproductionNote}, {"ensembles", all}};
  out.document_extension = ".samples.json";
  return out;
}

ExperimentOutput cmd_epsilon_sweep(const ExperimentConfig& cfg) {
  const std::vector<double> eps =
      cfg.epsilons.empty() ? std::vector<double>{1e-1, 3e-2, 1e-2, 3e-3, 1e-3} : cfg.epsilons;
  ExperimentOutput out;
  out.table.header = {"model", "class", "epsilon", "mean_pct_error", "mean_ops"};
  json all = json::array();
  for (const auto& label : classes_or(cfg, {"C1", "C9", "C26", "C31", "C33", "C60"})) {
    for (double e : eps) {
      AdaptConfig a = cfg.adapt;
      a.epsilon = e;
      const EnsembleStats s = lu_ensemble(cfg.hamiltonian, label, c_for(cfg, label), cfg.ensemble, cfg.seed, a);
      out.table.rows.push_back({s.model, label, num(e), num(s.mean_pct_error), num(s.mean_ops)});
      all.push_back(ensemble_json(s));
    }
  }
  out.document = json{{"config", to_json(cfg)}, {"note", kReproductionNote}, {"ensembles", all}};
  out.document_extension = ".samples.json";
  return out;
}

ExperimentOutput cmd_representative_table(const ExperimentConfig& cfg) {
  const std::vector<HamiltonianSpec> models = standard_models();
  const std::vector<std::string> labels = classes_or(cfg, class_labels());
  struct Cell {
    std::string model, label;
    AdaptTrace trace;
  };
  std::vector<Cell> cells;
  for (const auto& label : labels) {
    for (const auto& m : models) cells.push_back({m.tag(), label, {}});
  }
  parallel_for(static_cast<std::int64_t>(cells.size()), [&](std::int64_t i) {
    Cell& cell = cells[static_cast<std::size_t>(i)];
    const HamiltonianSpec& m = models[static_cast<std::size_t>(i) % models.size()];
    AdaptConfig a = cfg.adapt;
    a.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(i));
    cell.trace = run_adapt(to_dense(m.build()), representative_state(cell.label, c_for(cfg, cell.label)), a);
  });
  ExperimentOutput out;
  out.table.header = {"model", "class", "pct_error", "n_ops", "reason", "level_tag"};
  for (const Cell& c : cells) {
    const auto& f = c.trace.final;
    out.table.rows.push_back({c.model, c.label, num(f.pct_error), num(f.n_ops), f.reason, num(f.level_tag)});
  }
  return out;
}

ExperimentOutput cmd_entropy_table(const ExperimentConfig& cfg) {
  ExperimentOutput out;
  out.table.header = {"class", "entropy", "ln2"};
  for (const auto& label : classes_or(cfg, class_labels())) {
    const double s = avg_von_neumann_entropy(representative_state(label, c_for(cfg, label)));
    out.table.rows.push_back({label, num(s), num(std::numbers::ln2)});
  }
  return out;
}

ExperimentOutput cmd_vqe_baseline(const ExperimentConfig& cfg) {
  const std::vector<HamiltonianSpec> models = standard_models();
  ExperimentOutput out;
  out.table.header = {"model", "class", "energy", "exact", "pct_error", "n_params", "best_restart"};
  json runs = json::array();
  for (const auto& label : classes_or(cfg, class_labels())) {
    for (std::size_t m = 0; m < models.size(); ++m) {
      const DenseOperator h = to_dense(models[m].build());
      const std::uint64_t seed = derive_seed(derive_seed(cfg.seed, class_ordinal(label)), m);
      const VqeResult r = run_vqe(h, representative_state(label, c_for(cfg, label)), cfg.ansatz, seed, cfg.vqe);
      out.table.rows.push_back({models[m].tag(), label, num(r.energy), num(r.exact), num(r.pct_error),
                                num(cfg.ansatz.parameter_count()), num(r.best_restart)});
      std::vector<double> thetas(r.thetas.data(), r.thetas.data() + r.thetas.size());
      runs.push_back({{"model", models[m].tag()},
                      {"class", label},
                      {"final",
                       {{"energy", r.energy},
                        {"exact", r.exact},
                        {"pct_error", r.pct_error},
                        {"n_params", cfg.ansatz.parameter_count()},
                        {"thetas", thetas},
                        {"restart_energies", r.restart_energies},
                        {"best_restart", r.best_restart}}}});
    }
  }
  out.document = json{{"config", to_json(cfg)}, {"note", kReproductionNote}, {"runs", runs}};
  return out;
}

const std::vector<std::string>& experiment_kinds() {
  static const std::vector<std::string> kKinds{"class-scan",           "adapt-run",     "lu-ensemble",
                                               "epsilon-sweep",        "representative-table",
                                               "entropy-table",        "vqe-baseline"};
  return kKinds;
}

ExperimentOutput run_experiment(const ExperimentConfig& cfg) {
  validate_config(cfg);
  if (cfg.kind == "class-scan") return cmd_class_scan(cfg);
  if (cfg.kind == "adapt-run") return cmd_adapt_run(cfg);
  if (cfg.kind == "lu-ensemble") return cmd_lu_ensemble(cfg);
  if (cfg.kind == "epsilon-sweep") return cmd_epsilon_sweep(cfg);
  if (cfg.kind == "representative-table") return cmd_representative_table(cfg);
  if (cfg.kind == "entropy-table") return cmd_entropy_table(cfg);
  if (cfg.kind == "vqe-baseline") return cmd_vqe_baseline(cfg);
  throw ConfigError("unknown experiment '" + cfg.kind + "'");
}

void write_outputs(const ExperimentOutput& output, const std::string& out) {
  if (out.empty()) {
    write_csv(output.table, std::cout);
    return;
  }
  write_csv_file(output.table, out);
  if (output.document) write_json_file(*output.document, replace_extension(out, output.document_extension));
}

}  // namespace adaptlab
