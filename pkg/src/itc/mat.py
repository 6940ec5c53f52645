"""
Small dense complex matrices for gates and equivalence metrics.

Everything here is 2x2 or 4x4 complex128. Global phase is never tracked;
two unitaries are considered equal when phase_distance() vanishes.
"""

import math

import numpy as np

SQRT_HALF = math.sqrt(0.5)

I2 = np.eye(2, dtype=np.complex128)
X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
H = np.array([[1, 1], [1, -1]], dtype=np.complex128) * SQRT_HALF
S = np.array([[1, 0], [0, 1j]], dtype=np.complex128)
T = np.array([[1, 0], [0, np.exp(1j * math.pi / 4)]], dtype=np.complex128)

CNOT = np.array([[1, 0, 0, 0],
                 [0, 1, 0, 0],
                 [0, 0, 0, 1],
                 [0, 0, 1, 0]], dtype=np.complex128)
CZ = np.diag([1, 1, 1, -1]).astype(np.complex128)
SWAP = np.array([[1, 0, 0, 0],
                 [0, 0, 1, 0],
                 [0, 1, 0, 0],
                 [0, 0, 0, 1]], dtype=np.complex128)


def rphi(phi: float, theta: float) -> np.ndarray:
    """Rotation by theta about the equatorial Bloch axis at azimuth phi.

    rphi(0, t) = RX(t) and rphi(pi/2, t) = RY(t).
    """
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    e = np.exp(1j * phi)
    return np.array([[c, -1j * s / e], [-1j * s * e, c]], dtype=np.complex128)


def rx(theta: float) -> np.ndarray:
    """RX(t) = exp(-i t X / 2)"""
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=np.complex128)


def ry(theta: float) -> np.ndarray:
    """RY(t) = exp(-i t Y / 2)"""
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return np.array([[c, -s], [s, c]], dtype=np.complex128)


def rz(theta: float) -> np.ndarray:
    """RZ(t) = diag(exp(-i t/2), exp(i t/2))"""
    return np.array([[np.exp(-1j * theta / 2), 0],
                     [0, np.exp(1j * theta / 2)]], dtype=np.complex128)


def xx(alpha: float) -> np.ndarray:
    """Ising coupling gate exp(-i alpha X(x)X): cos(alpha) on the diagonal,
    -i sin(alpha) on the anti-diagonal."""
    c, s = math.cos(alpha), math.sin(alpha)
    m = np.eye(4, dtype=np.complex128) * c
    for i in range(4):
        m[i, 3 - i] += -1j * s
    return m


_FIXED = {"H": H, "X": X, "Y": Y, "Z": Z, "S": S, "T": T,
          "CNOT": CNOT, "CZ": CZ, "SWAP": SWAP}
_PARAM = {"RX": (rx, 1), "RY": (ry, 1), "RZ": (rz, 1),
          "RPHI": (rphi, 2), "XX": (xx, 1)}


def standard_gate_matrix(name: str, params: list[float] | tuple[float, ...] = ()) -> np.ndarray:
    """Unitary matrix of a named gate from the logical gateset."""
    name = name.upper()
    if name in _FIXED:
        if params:
            raise ValueError(f"{name} takes no parameters, got {len(params)}")
        return _FIXED[name].copy()
    if name in _PARAM:
        fn, arity = _PARAM[name]
        if len(params) != arity:
            raise ValueError(f"{name} takes {arity} parameter(s), got {len(params)}")
        return fn(*params)
    raise ValueError(f"unknown gate {name!r}")


def phase_distance(u: np.ndarray, v: np.ndarray) -> float:
    """d^2 - |tr(U^dag V)|^2: zero exactly when V = e^{i gamma} U."""
    if u.shape != v.shape:
        raise ValueError(f"dimension mismatch: {u.shape} vs {v.shape}")
    d = u.shape[0]
    t = np.sum(u.conj() * v)
    return float(d * d - (t.real * t.real + t.imag * t.imag))


def is_unitary(u: np.ndarray, tol: float = 1e-10) -> bool:
    """U^dag U = I within absolute tolerance."""
    d = u.shape[0]
    return bool(np.max(np.abs(u.conj().T @ u - np.eye(d))) <= tol)


def canonical_angle(phi: float) -> float:
    """Reduce an angle to (-pi, pi]."""
    w = math.remainder(phi, math.tau)
    if w <= -math.pi:  # remainder's ties can land on -pi
        w = math.pi
    return w
