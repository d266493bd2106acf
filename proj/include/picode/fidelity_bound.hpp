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

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "picode/code_builder.hpp"
#include "picode/damping_analytics.hpp"
#include "picode/exact_poly.hpp"

namespace picode {

class GridOutOfRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operators whose worst-case deformation enters the bound (K0, K_1, K_l for
/// l >= 2), plus the two raw single-decay products.
enum class LambdaLabel { K0, K1, Kl, F1F1, F1Fm };

std::string to_string(LambdaLabel label);

const GammaPolynomial& expectation_of(const DampingReport& report, LambdaLabel label);

struct LambdaValue {
  BigRational value;
  std::size_t argmin_d = 1;
};

/// min over d of <d_L|A^dag A|d_L> at gamma in [0, 1); ties go to the smaller d.
LambdaValue lambda_min(LambdaLabel label, const DampingAnalytics& analytics, const BigRational& gamma);

/// The d that attains the minimum for all sufficiently small gamma > 0: the
/// lexicographically smallest coefficient sequence, ties to the smaller d.
std::size_t asymptotic_argmin(std::span<const GammaPolynomial> per_d);
std::size_t asymptotic_argmin(LambdaLabel label, const DampingAnalytics& analytics);

struct BoundPoint {
  BigRational gamma;
  BigRational raw_bound;         // λ_K0 + λ_K1 + (m-1) λ_Kl
  BigRational discounted_bound;  // raw_bound * (1 - D * max overlap)
  BigRational lambda_k0;
  BigRational lambda_k1;
  BigRational lambda_kl;
  std::array<std::size_t, 3> argmin{1, 1, 1};  // K0, K1, Kl
};

/// Bound at a single gamma in [0, 1).
BoundPoint bound_at(const DampingAnalytics& analytics, const BigRational& max_overlap,
                    const BigRational& gamma);

struct FidelityReport {
  std::vector<BoundPoint> points;
  BigRational gram_correction;  // max off-diagonal overlap (rational upper bound)
  /// Bound values never increase along the (sorted) grid.
  bool monotone = true;
  /// d at which argmin changes along the grid, as (grid index, label, new d).
  struct ArgminSwitch {
    std::size_t index;
    LambdaLabel label;
    std::size_t d;
  };
  std::vector<ArgminSwitch> argmin_switches;
};

/// Requires every gamma in (0, 1); throws GridOutOfRange otherwise.
FidelityReport fidelity_lower_bound(const DampingAnalytics& analytics, const GramMatrix& gram,
                                    std::span<const BigRational> gamma_grid);
FidelityReport fidelity_lower_bound(const CodeParameters& params, std::span<const BigRational> gamma_grid);

/// `count` points from lo to hi inclusive, log or linear spacing, each rounded
/// to 6 significant digits so that printed and evaluated values coincide.
std::vector<BigRational> gamma_grid(double lo, double hi, std::size_t count, bool log_spacing);

/// Closed-form constants of the leading-order fidelity bound
///   1 - (N g_1 / 4m) γ - (c N^2 / 8) γ^2.
struct ClosedFormConstants {
  BigRational first_order;         // -N g_1 / (4m)
  BigRational c;                   // 1 + (2g_D - g_1)/N - 2/N + 3g_1/m + 4g_1/N
  BigRational c_prime;             // c without the 3g_1/m term
  BigRational second_order;        // -c N^2 / 8
  BigRational second_order_prime;  // -c' N^2 / 8
  BigRational q_scaling;           // -1 / (4 N^(q-2)); zero for legacy parameters
};

ClosedFormConstants closed_form_constants(const CodeParameters& params);

/// One way of picking the minimizing logical state for each bound term.
struct Assembly {
  std::string name;
  std::array<std::size_t, 3> d{1, 1, 1};  // K0, K1, Kl; 0 means "chosen per order"
  BigRational coefficient;
  BigRational delta;   // coefficient - reference value
  bool equal = false;  // delta == 0
  bool at_least_reference = false;
};

struct TaylorComparison {
  unsigned order = 1;
  BigRational reference_value;
  /// "per_term": asymptotic argmin for each bound term (the true expansion
  /// of the bound at small gamma);
  /// "uniform": one d for the whole bound;
  /// "per_order": separate argmin of this order's coefficient per term.
  std::vector<Assembly> assemblies;
  ClosedFormConstants constants;

  const Assembly& assembly(const std::string& name) const;
};

/// Extracts the exact gamma^order coefficient (order 1 or 2) of the assembled
/// bound and reports its difference from the closed form. Works for any N
/// since only a truncated expansion is built.
TaylorComparison taylor_comparison(const CodeParameters& params, unsigned order);

}  // namespace picode
