# Copyright 2026 The ionc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import numpy as np
import pytest

import ionc


def test_cnot_cost():
    c = ionc.Circuit(2).add("cnot", [0, 1])
    r = ionc.compile(c).report
    assert r.pulses_2q == 1
    assert r.pulses_1q <= 4
    assert r.duration_us == pytest.approx(275.0)
    assert r.e1 == "4 × ε + 1 × E"
    assert r.verified


def test_toffoli_on_fixed_ions():
    c = ionc.parse_circuit("qubits 3\ntoffoli 0 1 2\n")
    r = ionc.compile(c, mapping=[1, 3, 4]).report
    assert r.pulses_2q == 5
    assert r.duration_us == pytest.approx(1285.0)
    assert r.e1 == "4 × 0.707107ε + 4 × ε + 3 × 0.707107E + 2 × E"


def test_error_objective_toffoli():
    c = ionc.benchmark("toffoli")
    r = ionc.compile(c, mapping=[1, 3, 4], objective="error").report
    assert r.pulses_1q == 9
    assert r.duration_us <= 1295.0 + 1e-9


def test_schedule_roundtrip():
    res = ionc.compile(ionc.benchmark("qft4"))
    text = res.schedule()
    back = ionc.parse_circuit(text)
    u = res.circuit.unitary()
    v = back.unitary()
    assert np.max(np.abs(u - v)) < 1e-9


def test_grover_success_probability():
    psi = ionc.simulate(ionc.benchmark("grover-101"))
    probs = np.abs(psi) ** 2
    # Data qubits are the three most significant bits; sum over the rest.
    marked = probs.reshape(8, 4)[0b101].sum()
    assert marked == pytest.approx(0.78125, abs=1e-9)


def test_template_example():
    c, d = ionc.template_cd(math.pi / 2, -math.pi / 2)
    assert c == pytest.approx(math.pi)
    assert d == pytest.approx(-math.pi / 4)


def test_parse_error_has_position():
    with pytest.raises(ionc.ParseError, match="2:1"):
        ionc.parse_circuit("qubits 2\nfoo 0 1\n")


def test_machine_roundtrip():
    m = ionc.default_machine()
    again = ionc.parse_machine(str(m))
    assert again.n == 5
    assert again.chi_sign(0, 2) == -1
    assert again.tau2q == pytest.approx(235.0)
