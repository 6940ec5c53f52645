import math

import numpy as np
import pytest

from itc import mat
from conftest import haar_unitary

PI = math.pi


def test_rphi_zero_angle_is_identity():
    np.testing.assert_allclose(mat.rphi(0.0, 0.0), np.eye(2), atol=1e-15)


def test_rphi_at_pi_half_azimuth_is_ry():
    # direct evaluation: equal to [[s, -s], [s, s]] with s = sqrt(1/2)
    s = math.sqrt(0.5)
    expect = np.array([[s, -s], [s, s]])
    np.testing.assert_allclose(mat.rphi(PI / 2, PI / 2), expect, atol=1e-12)


def test_rphi_pi_is_minus_i_x():
    np.testing.assert_allclose(mat.rphi(0.0, PI), -1j * mat.X, atol=1e-12)


@pytest.mark.parametrize("phi,theta", [(0.0, 0.3), (1.2, -2.5), (-3.0, 7.1),
                                       (PI, PI / 2), (0.5, 11.0)])
def test_rphi_unitary(phi, theta):
    assert mat.is_unitary(mat.rphi(phi, theta), tol=1e-12)


def test_rphi_same_axis_composition(rng):
    for _ in range(50):
        phi, t1, t2 = rng.uniform(-2 * PI, 2 * PI, 3)
        lhs = mat.rphi(phi, t1) @ mat.rphi(phi, t2)
        np.testing.assert_allclose(lhs, mat.rphi(phi, t1 + t2), atol=1e-10)


def test_rphi_axis_conventions(rng):
    for theta in rng.uniform(-2 * PI, 2 * PI, 20):
        np.testing.assert_allclose(mat.rphi(0.0, theta), mat.rx(theta), atol=1e-12)
        np.testing.assert_allclose(mat.rphi(PI / 2, theta), mat.ry(theta), atol=1e-12)


def test_xx_zero_is_identity():
    np.testing.assert_allclose(mat.xx(0.0), np.eye(4), atol=1e-15)


def test_xx_native_angle():
    m = mat.xx(PI / 4)
    s = math.sqrt(0.5)
    for i in range(4):
        assert abs(m[i, i] - s) < 1e-12
        assert abs(m[i, 3 - i] - (-1j * s)) < 1e-12


def test_xx_quarter_turn():
    m = mat.xx(PI / 2)
    assert np.max(np.abs(np.diag(m))) < 1e-12
    for i in range(4):
        assert abs(m[i, 3 - i] + 1j) < 1e-12


def test_xx_commutes_with_rx_on_either_qubit(rng):
    for _ in range(20):
        alpha, theta = rng.uniform(-PI, PI, 2)
        g = mat.xx(alpha)
        for u in (np.kron(mat.rx(theta), np.eye(2)),
                  np.kron(np.eye(2), mat.rx(theta))):
            assert np.max(np.abs(g @ u - u @ g)) < 1e-10


def test_xx_does_not_commute_with_ry():
    g = mat.xx(PI / 4)
    u = np.kron(mat.ry(PI / 2), np.eye(2))
    assert np.max(np.abs(g @ u - u @ g)) > 0.1


def test_standard_gates():
    rz = mat.standard_gate_matrix("RZ", [0.7])
    np.testing.assert_allclose(
        rz, np.diag([np.exp(-0.35j), np.exp(0.35j)]), atol=1e-15)
    cnot = mat.standard_gate_matrix("CNOT")
    expect = np.zeros((4, 4))
    expect[0, 0] = expect[1, 1] = expect[2, 3] = expect[3, 2] = 1
    np.testing.assert_allclose(cnot, expect, atol=0)
    h = mat.standard_gate_matrix("H")
    np.testing.assert_allclose(h, np.array([[1, 1], [1, -1]]) / math.sqrt(2),
                               atol=1e-15)


def test_standard_gate_errors():
    with pytest.raises(ValueError):
        mat.standard_gate_matrix("FOO")
    with pytest.raises(ValueError):
        mat.standard_gate_matrix("RX", [])
    with pytest.raises(ValueError):
        mat.standard_gate_matrix("H", [0.1])


def test_phase_distance_basics():
    assert mat.phase_distance(mat.H, mat.H) == pytest.approx(0.0, abs=1e-12)
    assert mat.phase_distance(
        np.eye(2, dtype=complex),
        np.exp(1j * PI / 7) * np.eye(2)) == pytest.approx(0.0, abs=1e-12)
    assert mat.phase_distance(np.eye(2, dtype=complex), mat.Z) == pytest.approx(4.0)


def test_phase_distance_dimension_mismatch():
    with pytest.raises(ValueError):
        mat.phase_distance(mat.H, mat.CNOT)


def test_phase_distance_symmetric_and_phase_invariant(rng):
    for _ in range(30):
        u = haar_unitary(rng)
        v = haar_unitary(rng)
        d = mat.phase_distance(u, v)
        assert d >= -1e-12
        assert mat.phase_distance(v, u) == pytest.approx(d, abs=1e-10)
        gamma = rng.uniform(0, 2 * PI)
        assert mat.phase_distance(u * np.exp(1j * gamma), v) == \
            pytest.approx(d, abs=1e-10)


def test_phase_distance_zero_iff_phase_equal(rng):
    for _ in range(20):
        u = haar_unitary(rng)
        assert mat.phase_distance(u, np.exp(0.3j) * u) < 1e-10
        v = haar_unitary(rng)
        if mat.phase_distance(u, v) < 1e-10:
            # align phases and compare elementwise
            t = np.sum(u.conj() * v)
            np.testing.assert_allclose(v, (t / abs(t)) * u, atol=1e-8)


def test_canonical_angle():
    assert mat.canonical_angle(0.0) == 0.0
    assert mat.canonical_angle(3 * PI) == pytest.approx(PI)
    assert mat.canonical_angle(-PI) == pytest.approx(PI)
    assert mat.canonical_angle(2 * PI + 0.25) == pytest.approx(0.25)
    for x in np.linspace(-9, 9, 61):
        w = mat.canonical_angle(x)
        assert -PI < w <= PI + 1e-15
        assert abs((w - x) % (2 * PI)) < 1e-9 or \
            abs((w - x) % (2 * PI) - 2 * PI) < 1e-9
