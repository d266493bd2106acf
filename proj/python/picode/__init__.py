# Copyright 2026 The picode Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact-arithmetic permutation-invariant codes under amplitude damping.

Big integers come back as ``int`` and exact rationals as ``fractions.Fraction``.
Polynomials in gamma are lists of coefficients, constant term first.
"""

from ._core import (
    CodeParameters,
    binomial,
    build_coprime_sequence,
    check_code,
    cli,
    code_descriptor,
    cross_term_vanishes,
    damping_report,
    dicke_pair_expectation,
    diophantine_solvable,
    fidelity_bound,
    gram_matrix,
    index_set,
    is_prime,
    logical_state,
    min_positive_solution,
    moment_sum,
    nth_prime,
    run_oracle_suite,
    taylor_comparison,
    toy_parameters,
    validate,
)

__all__ = [
    "CodeParameters",
    "binomial",
    "build_coprime_sequence",
    "check_code",
    "cli",
    "code_descriptor",
    "cross_term_vanishes",
    "damping_report",
    "dicke_pair_expectation",
    "diophantine_solvable",
    "fidelity_bound",
    "gram_matrix",
    "index_set",
    "is_prime",
    "logical_state",
    "min_positive_solution",
    "moment_sum",
    "nth_prime",
    "run_oracle_suite",
    "taylor_comparison",
    "toy_parameters",
    "validate",
]
