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

#include "adaptlab/classes.hpp"

#include "adaptlab/core/linalg.hpp"
#include "adaptlab/errors.hpp"
#include "adaptlab/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace adaptlab {
namespace {

struct RawRow {
  std::string_view label;
  std::string_view bits;  // "h1h2h3h4 AB..CD GM"
};

// Nonvanishing-invariant patterns, one row per class.
constexpr RawRow kPatterns[] = {
    {"C1", "0000 000000 0"},
    {"C3", "0000 010000 0"},
    {"C9", "1100 010010 0"},
    {"C11", "0000 110100 0"},
    {"C15", "0000 000000 0"},
    {"C19", "0000 111111 1"},
    {"C22", "0000 000010 1"},
    {"C26", "1000 000000 1"},
    {"C28", "1100 111111 1"},
    {"C31", "1101 101101 1"},
    {"C33", "1111 011110 1"},
    {"C36", "0000 001010 1"},
    {"C39", "1000 010010 1"},
    {"C43", "1100 010010 1"},
    {"C48", "0100 000000 1"},
    {"C50", "0000 000000 1"},
    {"C57", "1000 110011 1"},
    {"C60", "1001 111111 1"},
    {"C62", "0100 101101 1"},
    {"C65", "1101 111111 1"},
    {"C67", "1110 010010 1"},
    {"C68", "1000 110100 1"},
    {"C72", "0001 000000 1"},
    {"C75", "0100 011001 1"},
    {"C80", "0101 010000 1"},
    {"C82", "1111 110011 1"},
};

struct RawState {
  std::string_view label;
  std::string_view terms;  // signed kets, equal weights
};

// C33 is parametric and built separately.
constexpr RawState kRepresentatives[] = {
    {"C1", "+0000"},
    {"C3", "+0000 +1010"},
    {"C9", "+0000 +0101 +1010 +1111"},
    {"C11", "+0000 +1010 +1100"},
    {"C15", "+0000 +1110"},
    {"C19", "+0000 +1001 +1010 +1100"},
    {"C22", "+0000 +0101 +1110"},
    {"C26", "+0000 +1111"},
    {"C28", "+0000 +0011 +0110 +1001 +1100"},
    {"C31", "+0000 -0001 -0010 -0100 +0101 +0111 -1000 +1010 +1011 +1101 +1110 +1111"},
    {"C36", "+0000 +0010 +0111 +1001"},
    {"C39", "+0000 +0101 +1010"},
    {"C43", "+0000 +0001 +0100 +1011 +1110"},
    {"C48", "+0000 +0111 +1010 +1101"},
    {"C50", "+0000 +0111 +1010 +1100"},
    {"C57", "+0000 +0011 +0110 +1100"},
    {"C60", "+0000 +0101 +0110 +1001 +1010 +1111"},
    {"C62", "+0000 +0001 +0110 +1000 +1011 +1100"},
    {"C65", "+0000 +0001 +0011 +0101 +0110 +1000 +1010 +1101 +1110 +1111"},
    {"C67", "+0000 +0001 +0010 -0100 +0101 -1000 +1010 +1100 +1111"},
    {"C68", "+0000 +0010 +0100 +1000 +1111"},
    {"C72", "+0000 +0111 +1001 +1010 +1100"},
    {"C75", "+0000 +0011 +0100 +1001 +1110"},
    {"C80", "+0000 +0010 +0101 +1000 +1011 +1110"},
    {"C82", "+0000 +0011 +0100 +0101 +1000 +1010 +1111"},
};

InvariantMask parse_mask(std::string_view bits) {
  InvariantMask m{};
  std::size_t k = 0;
  for (char ch : bits) {
    if (ch == ' ') continue;
    m[k++] = ch == '1';
  }
  return m;
}

std::vector<EntanglementClass> build_classes() {
  std::vector<EntanglementClass> out;
  for (const RawRow& r : kPatterns) out.push_back({r.label, parse_mask(r.bits)});
  return out;
}

QuantumState parse_terms(std::string_view terms) {
  Vector v = Vector::Zero(16);
  std::size_t pos = 0;
  while (pos < terms.size()) {
    if (terms[pos] == ' ') {
      ++pos;
      continue;
    }
    const double sign = terms[pos] == '-' ? -1.0 : 1.0;
    std::uint64_t index = 0;
    for (std::size_t k = 1; k <= 4; ++k) index = (index << 1) | static_cast<std::uint64_t>(terms[pos + k] - '0');
    v[static_cast<Eigen::Index>(index)] += sign;
    pos += 5;
  }
  return QuantumState(4, std::move(v));
}

QuantumState c33_state(double c) {
  Vector v = Vector::Zero(16);
  v[0b0000] = 1.0;
  v[0b0011] = c;
  v[0b0101] = -(1.0 + c);
  v[0b1010] = -(1.0 + c);
  v[0b1100] = c;
  v[0b1111] = 1.0;
  return QuantumState(4, std::move(v));
}

std::vector<std::array<int, 4>> all_permutations() {
  std::vector<std::array<int, 4>> perms;
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return perms;
}

InvariantMask permuted(const InvariantMask& m, const std::array<int, 4>& sigma) {
  InvariantMask out = m;
  for (int k = 0; k < 6; ++k) {
    const auto& pr = kQubitPairs[static_cast<std::size_t>(k)];
    const int src = pair_index(sigma[static_cast<std::size_t>(pr[0])], sigma[static_cast<std::size_t>(pr[1])]);
    out[static_cast<std::size_t>(4 + k)] = m[static_cast<std::size_t>(4 + src)];
  }
  return out;
}

}  // namespace

std::span<const EntanglementClass> entanglement_classes() {
  static const std::vector<EntanglementClass> kClasses = build_classes();
  return kClasses;
}

std::vector<std::string> class_labels() {
  std::vector<std::string> out;
  for (const auto& c : entanglement_classes()) out.emplace_back(c.label);
  return out;
}

bool is_class_label(std::string_view label) {
  const auto cs = entanglement_classes();
  return std::any_of(cs.begin(), cs.end(), [&](const auto& c) { return c.label == label; });
}

const EntanglementClass& find_class(std::string_view label) {
  for (const auto& c : entanglement_classes()) {
    if (c.label == label) return c;
  }
  throw ConfigError("unknown entanglement class '" + std::string(label) + "'");
}

QuantumState representative_state(std::string_view label, std::optional<double> c) {
  find_class(label);
  if (label == "C33") {
    const double value = c.value_or(kDefaultC33);
    if (!std::isfinite(value) || value == 0.0 || value == -1.0 || value == -2.0) {
      throw ConfigError("C33 parameter c must be real and not in {-2, -1, 0}");
    }
    return c33_state(value);
  }
  if (c.has_value()) throw ConfigError("parameter c applies to C33 only");
  for (const RawState& r : kRepresentatives) {
    if (r.label == label) return parse_terms(r.terms);
  }
  throw ConfigError("no representative for '" + std::string(label) + "'");
}

std::vector<std::string> ClassificationResult::labels() const {
  std::vector<std::string> out;
  for (const auto& m : matches) out.push_back(m.label);
  return out;
}

std::string ClassificationResult::joined_labels() const {
  std::string s;
  for (const auto& m : matches) {
    if (!s.empty()) s += ';';
    s += m.label;
  }
  return s;
}

bool ClassificationResult::contains(std::string_view label) const {
  return std::any_of(matches.begin(), matches.end(), [&](const auto& m) { return m.label == label; });
}

InvariantMask invariant_mask(const InvariantVector& iv, double zero_tol) {
  const auto mags = iv.magnitudes();
  InvariantMask m{};
  for (std::size_t k = 0; k < mags.size(); ++k) m[k] = mags[k] > zero_tol;
  return m;
}

ClassificationResult classify(const QuantumState& state, double zero_tol) {
  if (state.num_qubits() != 4) throw DimensionError("classify: four-qubit states only");
  static const std::vector<std::array<int, 4>> kPerms = all_permutations();

  ClassificationResult r;
  r.invariants = invariant_vector(state);
  r.mask = invariant_mask(r.invariants, zero_tol);
  r.entropies = single_qubit_entropies(state);

  const auto mags = r.invariants.magnitudes();
  for (std::size_t k = 0; k < mags.size(); ++k) {
    if (mags[k] >= zero_tol && mags[k] <= kMarginalCeiling) {
      r.marginal.emplace_back(InvariantVector::names()[k]);
    }
  }

  for (const auto& cls : entanglement_classes()) {
    for (const auto& sigma : kPerms) {
      if (permuted(r.mask, sigma) == cls.pattern) {
        r.matches.push_back({std::string(cls.label), sigma});
        break;
      }
    }
  }

  if (r.contains("C1") && r.contains("C15")) {
    const auto entangled = std::count_if(r.entropies.begin(), r.entropies.end(),
                                         [&](double s) { return s > zero_tol; });
    std::string_view drop;
    if (entangled == 0) drop = "C15";
    if (entangled == 3) drop = "C1";
    if (!drop.empty()) {
      std::erase_if(r.matches, [&](const ClassMatch& m) { return m.label == drop; });
    }
  }
  return r;
}

std::vector<double> linear_grid(double min, double max, double step) {
  if (!std::isfinite(min) || !std::isfinite(max) || !std::isfinite(step) || !(step > 0.0) ||
      max < min) {
    throw ConfigError("grid needs finite min <= max and step > 0");
  }
  std::vector<double> grid;
  for (long k = 0;; ++k) {
    const double x = min + static_cast<double>(k) * step;
    if (x > max + 1e-9) break;
    grid.push_back(std::round(x * 1e12) / 1e12);
  }
  return grid;
}

HamiltonianSpec with_parameter(const HamiltonianSpec& base, double value) {
  HamiltonianSpec h = base;
  if (h.model == "xy") {
    h.gamma = value;
  } else if (h.model == "xxz") {
    h.delta = value;
  } else {
    throw ConfigError("unknown model '" + h.model + "'");
  }
  return h;
}

ScanRow scan_point(const HamiltonianSpec& base, double value, double zero_tol) {
  const DenseOperator h = to_dense(with_parameter(base, value).build());
  const Eigensystem es = eigh(h);
  int mult = 1;
  while (mult < es.values.size() && es.values[mult] - es.values[0] < kDegeneracyGap) ++mult;

  ScanRow row;
  row.parameter = value;
  row.energy = es.values[0];
  row.multiplicity = mult;
  row.degenerate = mult > 1;

  const int n = base.n;
  QuantumState chosen(n, fix_global_phase(es.vectors.col(0)));
  double best = avg_von_neumann_entropy(chosen);
  for (int k = 1; k < mult; ++k) {
    QuantumState candidate(n, fix_global_phase(es.vectors.col(k)));
    const double s = avg_von_neumann_entropy(candidate);
    if (s < best - 1e-12) {
      best = s;
      chosen = std::move(candidate);
    }
  }
  row.entropy = best;
  row.result = classify(chosen, zero_tol);
  row.result.degenerate_ground_state = row.degenerate;
  return row;
}

std::vector<ScanRow> class_scan_serial(const HamiltonianSpec& base, std::span<const double> grid,
                                       double zero_tol) {
  if (grid.empty()) throw ConfigError("class_scan: empty grid");
  std::vector<ScanRow> rows;
  rows.reserve(grid.size());
  for (double x : grid) rows.push_back(scan_point(base, x, zero_tol));
  return rows;
}

std::vector<ScanRow> class_scan(const HamiltonianSpec& base, std::span<const double> grid,
                                double zero_tol) {
  if (grid.empty()) throw ConfigError("class_scan: empty grid");
  std::vector<ScanRow> rows(grid.size());
  parallel_for(static_cast<std::int64_t>(grid.size()), [&](std::int64_t i) {
    rows[static_cast<std::size_t>(i)] = scan_point(base, grid[static_cast<std::size_t>(i)], zero_tol);
  });
  return rows;
}

}  // namespace adaptlab
