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

import json
from fractions import Fraction
from math import comb, gcd

import pytest

import picode


def odd_weights(n, g):
    return {g * t: Fraction(comb(n, t), 2 ** (n - 1)) for t in range(1, n + 1, 2)}


@pytest.fixture(scope="module")
def code():
    return picode.validate([5, 6, 7], 3)


def test_parameters(code):
    assert code.N == 210
    assert code.g == [42, 35, 30]
    assert code.m == 9261000
    assert code.D == 3


def test_validation_error_message():
    with pytest.raises(ValueError, match=r"NotCoprime: \(4,6\)"):
        picode.validate([4, 6, 7], 3)


def test_number_theory():
    assert picode.is_prime(7919)
    assert not picode.is_prime(1)
    assert picode.binomial(64, 32) == comb(64, 32)
    assert picode.moment_sum(5, 3) == 800
    assert picode.build_coprime_sequence(6, 4) == [13, 14, 17, 19]
    assert picode.min_positive_solution(42, 35) == (5, 6)
    assert not picode.diophantine_solvable(42, 35, 1)
    for g in range(1, 30):
        for g2 in range(1, 30):
            assert picode.diophantine_solvable(g, g2, 1) == (gcd(g, g2) == 1)


def test_logical_states_match_binomials(code):
    for d, (n, g) in enumerate(zip(code.n, code.g), start=1):
        assert picode.logical_state(d, code) == odd_weights(n, g)


def test_gram(code):
    gm = picode.gram_matrix(code)
    assert gm[0][2] == Fraction(1, 32)
    assert gm[0][1] == 0 and gm[1][2] == 0


def test_damping_coefficients(code):
    r = picode.damping_report(3, code)
    assert r["k0k0"][:3] == [1, -105, Fraction(12495, 2)]
    assert r["f1f1"][1] == Fraction(1, 88200)
    assert picode.damping_report(1, code, max_order=2)["k0k0"][:2] == [1, -105]


def test_kernel_value():
    poly = picode.dicke_pair_expectation(2, 4, "F1Fm")
    x = Fraction(1, 5)
    assert sum(c * x**j for j, c in enumerate(poly)) == Fraction(4, 75)


def test_fidelity_bound(code):
    rows = picode.fidelity_bound(code, [Fraction(1, 1000), "0.01"])
    assert rows[0]["raw_bound"] > rows[1]["raw_bound"]
    assert rows[0]["discounted_bound"] == rows[0]["raw_bound"] * (1 - Fraction(3, 32))
    with pytest.raises(ValueError, match="GridOutOfRange"):
        picode.fidelity_bound(code, [0])


def test_taylor(code):
    t1 = picode.taylor_comparison(code, 1)
    assert t1["reference"] == Fraction(-1, 4200)
    assert t1["assemblies"]["per_term"]["coefficient"] >= Fraction(-1, 4200)
    assert t1["c_prime"] == Fraction(197, 105)


def test_cross_terms(code):
    assert picode.cross_term_vanishes(1, 2, 1, code) == (True, None)
    assert picode.cross_term_vanishes(1, 3, 0, code) == (False, (5, 7, 210))


def test_descriptor_and_cli(code):
    doc = json.loads(picode.code_descriptor(code))
    assert doc["m"] == "9261000"
    status, out, err = picode.cli(["build", "--n", "4,6,7"])
    assert status == 2
    assert err.strip().splitlines()[-1].startswith("error: ")


def test_oracle_suite():
    checks = picode.run_oracle_suite(6, 0.1, 3)
    assert checks and all(c["passed"] for c in checks)
