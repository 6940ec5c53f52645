"""
Built-in benchmark circuits, all on three qubits.

ghz        H on qubit 0 and a CNOT chain; readout checks qubit 0.
bv         Bernstein-Vazirani with secret string 11: ancilla on qubit 2 is
           prepared with X and never measured, so its final Hadamard is
           dead weight the compiler may drop.
grover     One iteration marking |101> and |110>. The phase oracle is
           CZ(0,1) CZ(0,2) (flips exactly the x0=1, odd-parity-x1x2 states);
           the diffusion uses a doubly-controlled Z built from six CNOTs
           and pi/4 Z-rotations.
qft        Textbook quantum Fourier transform with controlled phases
           expanded into CNOTs and RZ, plus the final qubit-order SWAP.
vqe_ansatz A pair-coupling ansatz exp(-i t/2 Y0 X2) at t = 0.5 on the
           |100> reference state; qubits 0 and 2 carry the observable.
"""

import math

from .ir import Circuit

BENCHMARKS = ("ghz", "bv", "grover", "qft", "vqe_ansatz")

_PI = math.pi


def _ghz(n: int) -> Circuit:
    c = Circuit(n)
    c.add("H", 0)
    for i in range(n - 1):
        c.add("CNOT", i, i + 1)
    c.add("MEASURE", 0)
    return c


def _bv(secret: str = "11") -> Circuit:
    anc = len(secret)
    c = Circuit(anc + 1)
    c.add("X", anc)
    for q in range(anc + 1):
        c.add("H", q)
    for i, bit in enumerate(secret):
        if bit == "1":
            c.add("CNOT", i, anc)
    for q in range(anc + 1):
        c.add("H", q)
    for q in range(anc):
        c.add("MEASURE", q)
    return c


def _ccz(c: Circuit, a: int, b: int, t: int) -> None:
    """Doubly-controlled Z: six CNOTs and +-pi/4 Z-rotations."""
    quarter, back = (_PI / 4,), (-_PI / 4,)
    c.add("CNOT", b, t)
    c.add("RZ", t, params=back)
    c.add("CNOT", a, t)
    c.add("RZ", t, params=quarter)
    c.add("CNOT", b, t)
    c.add("RZ", t, params=back)
    c.add("CNOT", a, t)
    c.add("RZ", b, params=quarter)
    c.add("RZ", t, params=quarter)
    c.add("CNOT", a, b)
    c.add("RZ", a, params=quarter)
    c.add("RZ", b, params=back)
    c.add("CNOT", a, b)


def _grover() -> Circuit:
    c = Circuit(3)
    for q in range(3):
        c.add("H", q)
    # phase oracle for {101, 110}: (-1)^(x0 x1) (-1)^(x0 x2)
    c.add("CZ", 0, 1)
    c.add("CZ", 0, 2)
    # inversion about the mean
    for q in range(3):
        c.add("H", q)
    for q in range(3):
        c.add("X", q)
    _ccz(c, 0, 1, 2)
    for q in range(3):
        c.add("X", q)
    for q in range(3):
        c.add("H", q)
    for q in range(3):
        c.add("MEASURE", q)
    return c


def _qft(n: int) -> Circuit:
    c = Circuit(n)
    for j in range(n):
        c.add("H", j)
        for k in range(j + 1, n):
            theta = _PI / (2 ** (k - j))
            # controlled phase on (k, j)
            c.add("RZ", k, params=(theta / 2,))
            c.add("RZ", j, params=(theta / 2,))
            c.add("CNOT", k, j)
            c.add("RZ", j, params=(-theta / 2,))
            c.add("CNOT", k, j)
    for j in range(n // 2):
        c.add("SWAP", j, n - 1 - j)
    for q in range(n):
        c.add("MEASURE", q)
    return c


def _vqe_ansatz(theta: float = 0.5) -> Circuit:
    c = Circuit(3)
    c.add("X", 0)
    c.add("RX", 0, params=(_PI / 2,))
    c.add("H", 2)
    c.add("CNOT", 0, 2)
    c.add("RZ", 2, params=(theta,))
    c.add("CNOT", 0, 2)
    c.add("RX", 0, params=(-_PI / 2,))
    c.add("H", 2)
    c.add("MEASURE", 0)
    c.add("MEASURE", 2)
    return c


def build_benchmark(name: str, n: int = 3) -> Circuit:
    """One of the named three-qubit benchmarks (ghz and qft take any n >= 2)."""
    if name == "ghz":
        if n < 2:
            raise ValueError("ghz needs at least 2 qubits")
        return _ghz(n)
    if name == "qft":
        if n < 2:
            raise ValueError("qft needs at least 2 qubits")
        return _qft(n)
    if n != 3:
        raise ValueError(f"{name} is defined for 3 qubits")
    if name == "bv":
        return _bv()
    if name == "grover":
        return _grover()
    if name == "vqe_ansatz":
        return _vqe_ansatz()
    raise ValueError(f"unknown benchmark {name!r}; choose from {BENCHMARKS}")
