"""
Dense state-vector simulation and measurement-distribution checks.

Qubit 0 is the leftmost bit of a rendered bitstring (most significant).
MEASURE gates are recorded, never collapsed; distributions are computed
exactly from the final amplitudes.
"""

import math

import numpy as np

from .ir import Circuit
from .mat import standard_gate_matrix
from .schedule import NativeTable, serialize

MAX_QUBITS = 12


def simulate(circuit: Circuit) -> np.ndarray:
    """Final state of |0...0> under the circuit, shape (2,)*n."""
    n = circuit.n_qubits
    if n > MAX_QUBITS:
        raise ValueError(f"register of {n} exceeds simulator limit {MAX_QUBITS}")
    psi = np.zeros((2,) * n, dtype=np.complex128)
    psi[(0,) * n] = 1.0
    for g in circuit.gates:
        if g.name == "MEASURE":
            continue
        u = standard_gate_matrix(g.name, g.params)
        if len(g.qubits) == 1:
            q = g.qubits[0]
            psi = np.tensordot(u, psi, axes=([1], [q]))
            psi = np.moveaxis(psi, 0, q)
        else:
            a, b = g.qubits
            u4 = u.reshape(2, 2, 2, 2)
            psi = np.tensordot(u4, psi, axes=([2, 3], [a, b]))
            psi = np.moveaxis(psi, (0, 1), (a, b))
    return psi


def simulate_table(table: NativeTable, n_ions: int | None = None) -> np.ndarray:
    """Replay a native table serially; ops within a row commute (disjoint
    ions) so listed order is as good as any."""
    circuit = serialize(table)
    if n_ions is not None and n_ions != table.n_ions:
        raise ValueError(f"table spans {table.n_ions} ions, asked for {n_ions}")
    return simulate(circuit)


def marginal(state: np.ndarray, measured: list[int],
             relabel: list[int] | None = None) -> dict[str, float]:
    """Distribution over the measured qubits' bitstrings, ascending qubit
    order, qubit 0 leftmost.

    relabel maps each logical qubit to the state axis (physical ion) holding
    it, for states produced after routing. Keys always name logical qubits.
    """
    n = state.ndim
    if not measured:
        raise ValueError("no measured qubits")
    axes = []
    for q in sorted(measured):
        axis = relabel[q] if relabel is not None else q
        if not 0 <= axis < n:
            raise ValueError(f"qubit {q} maps to axis {axis} outside state")
        axes.append(axis)
    probs = np.abs(state) ** 2
    keep = sorted(axes)
    drop = tuple(i for i in range(n) if i not in keep)
    reduced = probs.sum(axis=drop) if drop else probs
    # reduced axes are in ascending physical order; permute to measured order
    order = [keep.index(a) for a in axes]
    reduced = np.transpose(reduced, order)
    out: dict[str, float] = {}
    for idx in np.ndindex(*reduced.shape):
        p = float(reduced[idx])
        if p > 1e-15:
            out["".join(str(b) for b in idx)] = p
    return out


def tvd(a: dict[str, float], b: dict[str, float]) -> float:
    """Total variation distance: half the L1 difference; missing keys count
    as probability zero."""
    keys = set(a) | set(b)
    return 0.5 * sum(abs(a.get(k, 0.0) - b.get(k, 0.0)) for k in keys)


def sample(dist: dict[str, float], shots: int, seed: int = 0) -> dict[str, int]:
    """Draw shot counts from an exact distribution (demo output only)."""
    rng = np.random.default_rng(seed)
    keys = sorted(dist)
    p = np.array([dist[k] for k in keys])
    p = p / p.sum()
    counts = rng.multinomial(shots, p)
    return {k: int(c) for k, c in zip(keys, counts) if c > 0}


def format_distribution(dist: dict[str, float]) -> str:
    """JSON object text with probabilities at 12 significant digits."""
    items = ", ".join(f'"{k}": {float(f"{v:.12g}")!r}'
                      for k, v in sorted(dist.items()))
    return "{" + items + "}"


def norm_error(state: np.ndarray) -> float:
    return abs(math.sqrt(float(np.sum(np.abs(state) ** 2))) - 1.0)
