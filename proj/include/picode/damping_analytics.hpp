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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "picode/code_builder.hpp"
#include "picode/code_parameters.hpp"
#include "picode/exact_poly.hpp"

namespace picode {

/// Operator products whose expectations on Dicke states are needed:
/// K0^dag K0, F1^dag F1 and F1^dag Fm.
enum class KrausPair { K0K0, F1F1, F1Fm };

std::string to_string(KrausPair pair);

/// Largest Dicke weight for which untruncated expectation polynomials are
/// built. Degrees reach the weight and coefficients grow like C(w, w/2), so
/// larger codes must pass a truncation order.
inline constexpr unsigned long kMaxFullExpansionWeight = 4096;

/// Expectation of `pair` on |D^m_w>:
///   K0K0 -> (1-γ)^w
///   F1F1 -> γ (1-γ)^(w-1) w/m
///   F1Fm -> γ (1-γ)^(w-1) w(m-w)/(m(m-1))
GammaPolynomial dicke_pair_expectation(const BigInt& w, const BigInt& m, KrausPair pair,
                                       std::size_t max_order = kFullExpansion);

/// <d_L|K0^dag K0|d_L> as a polynomial in γ.
GammaPolynomial k0_expectation(std::size_t d, const CodeParameters& params,
                               std::size_t max_order = kFullExpansion);
GammaPolynomial f1f1_expectation(std::size_t d, const CodeParameters& params,
                                 std::size_t max_order = kFullExpansion);
GammaPolynomial f1fm_expectation(std::size_t d, const CodeParameters& params,
                                 std::size_t max_order = kFullExpansion);

struct DampingReport {
  std::size_t d = 0;
  GammaPolynomial k0k0;
  GammaPolynomial f1f1;
  GammaPolynomial f1fm;
  GammaPolynomial fourier_diag_l1;    // <K_1^dag K_1>   = f1f1 + (m-1) f1fm
  GammaPolynomial fourier_diag_lgt1;  // <K_l^dag K_l>, l >= 2 = f1f1 - f1fm
};

DampingReport damping_report(std::size_t d, const CodeParameters& params,
                             std::size_t max_order = kFullExpansion);

/// Per-d reports for a whole code, computed once.
class DampingAnalytics {
 public:
  explicit DampingAnalytics(CodeParameters params, std::size_t max_order = kFullExpansion);

  const CodeParameters& params() const { return params_; }
  std::size_t max_order() const { return max_order_; }
  const DampingReport& report(std::size_t d) const { return reports_.at(d - 1); }
  const std::vector<DampingReport>& reports() const { return reports_; }

 private:
  CodeParameters params_;
  std::size_t max_order_;
  std::vector<DampingReport> reports_;
};

/// <d_L|K_l^dag K_l2|d_L> for 1 <= l, l2 <= m, from the diagonalized form:
/// zero unless l == l2, then the l = 1 or l >= 2 diagonal value.
GammaPolynomial fourier_expectation(const DampingReport& report, const BigInt& l, const BigInt& l2,
                                    const BigInt& m);
GammaPolynomial fourier_expectation(std::size_t d, const BigInt& l, const BigInt& l2,
                                    const CodeParameters& params);

struct CollisionWitness {
  BigInt t;   // index in I_d
  BigInt t2;  // index in I_d2
  BigInt weight;
};

struct CrossTermVerdict {
  bool vanishes = true;
  std::optional<CollisionWitness> witness;
};

/// Whether <d_L|A^dag B|d2_L> vanishes for every operator pair that shifts the
/// Dicke weight by `shift` (0 or ±1 for K0, F_j, K_l products): no supported
/// weights satisfy g_d t = g_d2 t2 + shift.
CrossTermVerdict cross_term_vanishes(std::size_t d, std::size_t d2, long shift,
                                     const CodeParameters& params);

/// <d_L|K_l^dag K_l|d2_L> for d != d2 (the l2 != l value is identically zero):
/// a sum over colliding weights w of a_w b_w times the Dicke diagonal value.
/// Each term is (squared amplitude product, polynomial).
struct CrossFourierTerm {
  BigInt weight;
  BigRational amplitude_product_squared;
  GammaPolynomial diagonal;
};

struct CrossFourierExpectation {
  std::vector<CrossFourierTerm> terms;
  /// Exact polynomial when every amplitude product is rational.
  std::optional<GammaPolynomial> rational() const;
};

CrossFourierExpectation cross_fourier_expectation(std::size_t d, std::size_t d2, bool l_is_one,
                                                  const CodeParameters& params);

}  // namespace picode
