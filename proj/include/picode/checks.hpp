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

#include <string>
#include <vector>

#include "picode/code_builder.hpp"
#include "picode/damping_analytics.hpp"
#include "picode/fidelity_bound.hpp"
#include "picode/number_theory.hpp"

namespace picode {

struct PairOverlap {
  std::size_t d = 0;
  std::size_t d2 = 0;
  Overlap overlap;
};

struct ShiftVerdict {
  std::size_t d = 0;
  std::size_t d2 = 0;
  long shift = 0;
  bool solvable = false;  // gcd(g_d, g_d2) | shift
  CrossTermVerdict verdict;
};

/// Orthogonality and Diophantine analysis of a code.
struct CodeCheckReport {
  std::vector<PairOverlap> overlaps;
  CollisionReport collisions;
  std::vector<ShiftVerdict> verdicts;  // every pair d < d2, shift in {-1, 0, +1}
  BigRational max_overlap;             // rational upper bound
  BigRational overlap_envelope;        // 2^-(n_1 - 1)
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Fails when a nonzero shift has a collision, when a zero-shift collision
/// sits anywhere but weight N, when the lcm/gcd identities break, or when the
/// largest overlap exceeds 2^-(n_1 - 1).
CodeCheckReport check_code(const CodeParameters& params);

struct TaylorReport {
  TaylorComparison first;
  TaylorComparison second;
  /// -1/(4 N^(q-2)) and whether the per-term first-order coefficient is at
  /// least that.
  BigRational q_scaling;
  bool q_scaling_holds = false;
  /// N g_1/(4m) == 1/(4 n_1 N^(q-2)) exactly.
  bool first_order_closed_form_consistent = false;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

TaylorReport taylor_report(const CodeParameters& params);

}  // namespace picode
