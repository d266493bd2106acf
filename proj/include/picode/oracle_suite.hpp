// Copyright 2026 The picode Authors
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

#include <cstdint>
#include <string>
#include <vector>

#include "picode/code_parameters.hpp"
#include "picode/dense_oracle.hpp"

namespace picode::oracle {

struct OracleCheck {
  std::string name;
  double computed = 0.0;
  double reference = 0.0;
  double tolerance = 0.0;
  /// When set, pass means computed >= reference - tolerance rather than
  /// |computed - reference| <= tolerance.
  bool one_sided = false;

  double delta() const;
  bool passed() const;
};

struct OracleReport {
  unsigned m = 0;
  double gamma = 0.0;
  std::uint64_t seed = 0;
  std::vector<OracleCheck> checks;
  std::vector<std::string> notes;

  bool all_passed() const;
};

/// Two-state and three-state toy codes whose supports sit inside m = 8
/// qubits with no two supported weights adjacent, so every image under
/// {K0, K_1..K_m} is orthogonal:
///   n = (3, 2),    g = (2, 4)      weights {2, 6} and {4}
///   n = (4, 2),    g = (2, 4)      weights {2, 6} and {4}
///   n = (3, 2, 2), g = (2, 4, 8)   weights {2, 6}, {4}, {8}
std::vector<CodeParameters> standard_toy_codes(unsigned m = 8);

/// Dense realization of every logical state of a toy code.
std::vector<DenseState> dense_code_basis(const CodeParameters& params);

/// Result of comparing F_e(ρ, R∘A) with Σ_A λ_A on one toy code.
struct RecoveryComparison {
  double fidelity = 0.0;                     // with completion
  double fidelity_without_completion = 0.0;  // truncated recovery only
  double lambda_sum = 0.0;                   // analytic, exact then rounded
  double lambda_sum_dense = 0.0;             // eigenvalue route
  double completeness = 0.0;                 // ||Σ R^dag R - I|| on random vectors
};

/// ρ in code coordinates; γ the damping rate.
RecoveryComparison compare_recovery(const CodeParameters& toy, double gamma, const Eigen::MatrixXcd& rho,
                                    std::uint64_t seed);

/// Every kernel, Fourier, completeness, symmetry and recovery check at (m, γ).
OracleReport run_oracle_suite(unsigned m, double gamma, std::uint64_t seed);

}  // namespace picode::oracle
