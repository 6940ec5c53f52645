import numpy as np
import pytest

from itc.ir import Circuit
from itc.mat import standard_gate_matrix


def haar_unitary(rng: np.random.Generator, dim: int = 2) -> np.ndarray:
    """Haar-random U(dim) via QR of a complex Ginibre matrix."""
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    return q @ np.diag(r.diagonal() / np.abs(r.diagonal()))


def embed(u: np.ndarray, qubits: tuple[int, ...], n: int) -> np.ndarray:
    """Lift a 2x2 or 4x4 gate matrix to the full 2^n register.

    Brute-force index arithmetic, qubit 0 as the most significant bit;
    deliberately independent of the simulator's tensor contraction path.
    """
    dim = 2 ** n
    full = np.zeros((dim, dim), dtype=complex)
    k = len(qubits)
    for col in range(dim):
        bits = [(col >> (n - 1 - q)) & 1 for q in range(n)]
        sub_col = 0
        for q in qubits:
            sub_col = (sub_col << 1) | bits[q]
        for sub_row in range(2 ** k):
            amp = u[sub_row, sub_col]
            if amp == 0:
                continue
            new_bits = list(bits)
            for i, q in enumerate(qubits):
                new_bits[q] = (sub_row >> (k - 1 - i)) & 1
            row = 0
            for b in new_bits:
                row = (row << 1) | b
            full[row, col] += amp
    return full


def circuit_unitary(circuit: Circuit) -> np.ndarray:
    """Full unitary of a circuit by explicit matrix products (oracle)."""
    dim = 2 ** circuit.n_qubits
    u = np.eye(dim, dtype=complex)
    for g in circuit.gates:
        if g.name == "MEASURE":
            continue
        u = embed(standard_gate_matrix(g.name, g.params), g.qubits,
                  circuit.n_qubits) @ u
    return u


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
