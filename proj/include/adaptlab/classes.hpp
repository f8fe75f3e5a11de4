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

#include "adaptlab/core/state.hpp"
#include "adaptlab/entanglement.hpp"
#include "adaptlab/hamiltonians.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace adaptlab {

/// Nonzero pattern over |h1| |h2| |h3| |h4| C_AB C_AC C_AD C_BC C_BD C_CD C_GM.
using InvariantMask = std::array<bool, 11>;

struct EntanglementClass {
  std::string_view label;  // "C1", "C3", ..., "C82"
  InvariantMask pattern;
};

/// The 26 state-carrying classes in table order.
std::span<const EntanglementClass> entanglement_classes();
std::vector<std::string> class_labels();
bool is_class_label(std::string_view label);
const EntanglementClass& find_class(std::string_view label);

/// Classes whose representatives need markedly fewer ADAPT operators than
/// |0000> on XXZ(delta = 3).
inline constexpr std::array<std::string_view, 5> kAdvantagedClasses{"C9", "C26", "C31", "C33", "C60"};

inline constexpr double kDefaultC33 = 1.0;

/// Normalized representative of a class. `c` parametrizes C33 only (amplitudes
/// 1, c, -(1+c), -(1+c), c, 1 on 0000 0011 0101 1010 1100 1111) and must not
/// be one of -2, -1, 0.
QuantumState representative_state(std::string_view label, std::optional<double> c = std::nullopt);

inline constexpr double kZeroTolerance = 1e-8;
inline constexpr double kMarginalCeiling = 1e-4;

struct ClassMatch {
  std::string label;
  std::array<int, 4> permutation;  // first permutation under which it matched
};

struct ClassificationResult {
  InvariantVector invariants;
  InvariantMask mask{};
  std::vector<double> entropies;
  std::vector<ClassMatch> matches;
  std::vector<std::string> marginal;  // invariant names in [zero_tol, 1e-4]
  bool degenerate_ground_state = false;

  std::vector<std::string> labels() const;
  /// Labels joined with ';' ("" when nothing matched).
  std::string joined_labels() const;
  bool contains(std::string_view label) const;
};

InvariantMask invariant_mask(const InvariantVector& iv, double zero_tol = kZeroTolerance);

/// Matches the nonzero pattern against every table row up to relabeling of
/// the qubits: for each of the 24 permutations sigma, concurrence bit (i, j)
/// is read from the state's pair (sigma[i], sigma[j]). The h-bits and C_GM are
/// compared as they are. C1 and C15 share a row; they are told apart by the
/// number of qubits with nonzero single-qubit entropy (0 vs 3).
ClassificationResult classify(const QuantumState& state, double zero_tol = kZeroTolerance);

struct ScanRow {
  double parameter = 0.0;
  double energy = 0.0;
  bool degenerate = false;
  int multiplicity = 1;
  double entropy = 0.0;
  ClassificationResult result;
};

/// Evenly spaced grid min, min+step, ..., <= max (+1e-9 slack). Values are
/// rounded to 1e-12 so that symmetric grids stay exactly symmetric.
std::vector<double> linear_grid(double min, double max, double step);

/// Which HamiltonianSpec field a scan varies: gamma for xy, delta for xxz.
HamiltonianSpec with_parameter(const HamiltonianSpec& base, double value);

/// Exact ground state + classify at every grid point. On a degenerate ground
/// level the row is flagged and the least-entangled (min S̄) eigenvector the
/// eigensolver returns within the level is classified.
std::vector<ScanRow> class_scan(const HamiltonianSpec& base, std::span<const double> grid,
                                 double zero_tol = kZeroTolerance);
std::vector<ScanRow> class_scan_serial(const HamiltonianSpec& base, std::span<const double> grid,
                                       double zero_tol = kZeroTolerance);
ScanRow scan_point(const HamiltonianSpec& base, double value, double zero_tol = kZeroTolerance);

}  // namespace adaptlab
