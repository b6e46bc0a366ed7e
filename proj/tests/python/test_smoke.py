# Copyright 2026 The qcw Authors
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

"""Smoke tests for the Python bindings."""

import itertools
import math
from fractions import Fraction

import numpy as np
import pytest

import qcw

HAMMING = np.array([[1, 0, 1, 0, 1, 0, 1], [0, 1, 1, 0, 0, 1, 1], [0, 0, 0, 1, 1, 1, 1]], dtype=np.uint8)


def test_rank_and_nullspace():
    assert qcw.rank(HAMMING) == 3
    ns = qcw.nullspace(HAMMING)
    assert ns.shape == (4, 7)
    assert not ((HAMMING.astype(int) @ ns.T.astype(int)) % 2).any()


def test_steane_parameters_and_distance():
    code = qcw.CssCode(HAMMING, HAMMING)
    assert (code.n, code.k) == (7, 1)
    assert code.params()["w"] == 4
    assert qcw.exact_distance(code) == 3
    assert qcw.certify_distance(code, 3)["verified"]
    refuted = qcw.certify_distance(code, 4)
    assert not refuted["verified"] and len(refuted["witness"]) == 3
    est = qcw.estimate_distance(code, trials=200, seed=1)
    assert est["d"] == 3


def test_commutation_violation_raises():
    bad = HAMMING.copy()
    bad[0, 5] ^= 1
    with pytest.raises(ValueError):
        qcw.CssCode(HAMMING, bad)


def test_macwilliams_against_enumeration():
    words = [np.array(w, dtype=np.uint8) for w in itertools.product([0, 1], repeat=7)]
    code = [0] * 8
    dual = [0] * 8
    for w in words:
        if not ((HAMMING.astype(int) @ w) % 2).any():
            code[int(w.sum())] += 1
    for coeffs in itertools.product([0, 1], repeat=3):
        v = (np.array(coeffs) @ HAMMING) % 2
        dual[int(v.sum())] += 1
    assert qcw.macwilliams_transform(code, 2) == [Fraction(x) for x in dual]
    assert qcw.krawtchouk(2, 0, 3, 2) == 3


def test_lp_bounds():
    assert qcw.max_feasible_k("css", 7, 3, 4) >= 1
    rows = qcw.bound_table("css", [5, 6, 7], [2, 3], [4])
    assert len(rows) == 6
    assert {"n", "d", "w", "k_final", "status"} <= set(rows[0])


def test_subsystem_round_trip():
    a = np.array([[0, 1, 1], [1, 0, 1], [1, 1, 0]], dtype=np.uint8)
    assert qcw.matrix_distances(a) == (2, 2, 2)
    gauge = qcw.subsystem_from_matrix(a)
    assert qcw.matrix_distances(qcw.matrix_from_gauge(gauge)) == (2, 2, 2)
    n, k, d = qcw.subsystem_parameters(gauge)
    assert (k, d) == (2, 2)
    assert d <= math.sqrt(n) and k * d <= n


def test_surface_recognition():
    rep = qcw.check_surface(qcw.toric_code(3))
    assert rep["recognized"]
    assert rep["components"][0]["euler"] == 0 and rep["components"][0]["k"] == 2
    with pytest.raises(ValueError):
        qcw.check_surface(qcw.steane_code())


def test_tanner_code_on_cyclic_group():
    rep4 = np.array([[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]], dtype=np.uint8)
    parity4 = np.array([[1, 1, 1, 1]], dtype=np.uint8)
    group = "cyclic(8)"
    code = qcw.tanner_code(group, ["r", "r^7", "r^2", "r^6"], ["e", "r^4", "r^3", "r^5"], rep4, parity4,
                           allow_identity=True)
    assert code.n == 64
    assert code.params()["w"] == 8


def test_falsifier():
    rep = qcw.falsify_weight3(n_exhaustive=4, trials=2000)
    assert rep["counterexamples"] == []
