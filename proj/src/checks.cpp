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

#include "picode/checks.hpp"

namespace picode {

CodeCheckReport check_code(const CodeParameters& params) {
  CodeCheckReport r;
  const std::size_t D = params.D();
  for (std::size_t d = 1; d <= D; ++d) {
    for (std::size_t d2 = d + 1; d2 <= D; ++d2) {
      r.overlaps.push_back({d, d2, overlap(d, d2, params)});
      for (long s : {-1L, 0L, 1L}) {
        ShiftVerdict v{d, d2, s, diophantine_solvable(params.g_at(d), params.g_at(d2), BigInt(s)),
                       cross_term_vanishes(d, d2, s, params)};
        if (!v.verdict.vanishes) {
          const auto& w = v.verdict.witness->weight;
          if (s != 0) {
            r.failures.push_back("ShiftCollision: (" + std::to_string(d) + "," + std::to_string(d2) +
                                 ") s=" + std::to_string(s) + " at weight " + w.get_str());
          } else if (w != params.N) {
            r.failures.push_back("InteriorCollision: (" + std::to_string(d) + "," + std::to_string(d2) +
                                 ") at weight " + w.get_str());
          }
        }
        r.verdicts.push_back(std::move(v));
      }
    }
  }
  r.collisions = verify_no_interior_collision(params);
  if (!r.collisions.all_hold()) r.failures.push_back("CollisionFound: " + r.collisions.describe_failures());

  r.max_overlap = gram_matrix(params).max_off_diagonal_upper();
  BigInt env;
  mpz_ui_pow_ui(env.get_mpz_t(), 2, params.n.front() - 1);
  r.overlap_envelope = ratio(1, env);
  if (r.max_overlap > r.overlap_envelope) {
    r.failures.push_back("OverlapTooLarge: " + r.max_overlap.get_str() + " > " + r.overlap_envelope.get_str());
  }
  return r;
}

TaylorReport taylor_report(const CodeParameters& params) {
  TaylorReport r;
  r.first = taylor_comparison(params, 1);
  r.second = taylor_comparison(params, 2);
  const auto& pc = r.first.constants;
  r.q_scaling = pc.q_scaling;
  const Assembly& first = r.first.assembly("per_term");
  if (!first.at_least_reference) {
    r.failures.push_back("FirstOrderBelowBound: " + first.coefficient.get_str() + " < " + r.first.reference_value.get_str());
  }
  if (params.q >= 2) {
    r.q_scaling_holds = first.coefficient >= r.q_scaling;
    if (!r.q_scaling_holds) {
      r.failures.push_back("QScaling: " + first.coefficient.get_str() + " < " + r.q_scaling.get_str());
    }
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), params.N.get_mpz_t(), params.q - 2);
    const BigRational closed = -ratio(1, 4 * BigInt(static_cast<unsigned long>(params.n.front())) * p);
    r.first_order_closed_form_consistent = closed == pc.first_order;
    if (!r.first_order_closed_form_consistent) {
      r.failures.push_back("FirstOrderClosedForm: " + pc.first_order.get_str() + " != " + closed.get_str());
    }
  }
  return r;
}

}  // namespace picode
