import math

import numpy as np
import pytest

from itc import mat
from itc.benchmarks import BENCHMARKS, build_benchmark
from itc.sim import marginal, norm_error, simulate
from conftest import circuit_unitary


@pytest.mark.parametrize("name", BENCHMARKS)
def test_benchmarks_build_and_normalize(name):
    c = build_benchmark(name)
    assert c.n_qubits == 3
    assert norm_error(simulate(c)) < 1e-10
    assert c.measured_qubits()  # every benchmark observes something


def test_ghz_gates_and_state():
    c = build_benchmark("ghz")
    assert [(g.name, g.qubits) for g in c.gates[:3]] == \
        [("H", (0,)), ("CNOT", (0, 1)), ("CNOT", (1, 2))]
    probs = np.abs(simulate(c).reshape(-1)) ** 2
    assert probs[0b000] == pytest.approx(0.5)
    assert probs[0b111] == pytest.approx(0.5)


def test_ghz_generalizes():
    c = build_benchmark("ghz", 5)
    probs = np.abs(simulate(c).reshape(-1)) ** 2
    assert probs[0] == pytest.approx(0.5) and probs[-1] == pytest.approx(0.5)


def test_bv_measures_secret():
    c = build_benchmark("bv")
    assert c.measured_qubits() == [0, 1]
    dist = marginal(simulate(c), [0, 1])
    assert dist == pytest.approx({"11": 1.0}, abs=1e-12)


def test_grover_marks_target_states():
    c = build_benchmark("grover")
    dist = marginal(simulate(c), [0, 1, 2])
    mass = dist.get("101", 0.0) + dist.get("110", 0.0)
    assert mass >= 0.7
    # two marked states out of eight make one iteration exact
    assert mass == pytest.approx(1.0, abs=1e-10)


def test_grover_oracle_phase_pattern():
    # check the bare oracle against the marking rule
    from itc.ir import Circuit
    oracle = Circuit(3)
    oracle.add("CZ", 0, 1)
    oracle.add("CZ", 0, 2)
    u = circuit_unitary(oracle)
    signs = np.real(np.diag(u))
    marked = [int(b, 2) for b in ("101", "110")]
    for idx in range(8):
        assert signs[idx] == pytest.approx(-1.0 if idx in marked else 1.0)


def test_qft_matches_fourier_matrix():
    c = build_benchmark("qft")
    n = 8
    omega = np.exp(2j * math.pi / n)
    dft = np.array([[omega ** (j * k) for k in range(n)]
                    for j in range(n)]) / math.sqrt(n)
    assert mat.phase_distance(circuit_unitary(c), dft) < 1e-10


def test_vqe_ansatz_state():
    c = build_benchmark("vqe_ansatz")
    assert c.measured_qubits() == [0, 2]
    state = simulate(c).reshape(-1)
    # exp(-i t/2 Y0 X2)|100> = cos(t/2)|100> - sin(t/2)|001| at t = 0.5
    expect = np.zeros(8, dtype=complex)
    expect[0b100] = math.cos(0.25)
    expect[0b001] = -math.sin(0.25)
    assert abs(np.vdot(expect, state)) == pytest.approx(1.0, abs=1e-10)


def test_unknown_benchmark():
    with pytest.raises(ValueError):
        build_benchmark("nope")
    with pytest.raises(ValueError):
        build_benchmark("grover", 4)
