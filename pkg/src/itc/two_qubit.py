"""
Two-qubit lowering pass: rewrite CZ and SWAP into CNOTs, then expand every
CNOT into the native pattern

    RY(-pi/2) control | XX(pi/4) | RY(pi/2) control, RZ(pi/2) control,
    RX(pi/2) target

which equals CNOT up to a global phase of exp(-i pi/4). After this pass the
only two-qubit gates left are XX(pi/4).
"""

import math

from .ir import Circuit, Gate, SINGLE_QUBIT_GATES

_PI_2 = math.pi / 2
_PI_4 = math.pi / 4


def _cnot(control: int, target: int) -> list[Gate]:
    return [
        Gate("RY", (-_PI_2,), (control,)),
        Gate("XX", (_PI_4,), (control, target)),
        Gate("RY", (_PI_2,), (control,)),
        Gate("RZ", (_PI_2,), (control,)),
        Gate("RX", (_PI_2,), (target,)),
    ]


def _cz(a: int, b: int) -> list[Gate]:
    return [Gate("H", (), (b,))] + _cnot(a, b) + [Gate("H", (), (b,))]


def _swap(a: int, b: int) -> list[Gate]:
    return _cnot(a, b) + _cnot(b, a) + _cnot(a, b)


def lower_two_qubit(circuit: Circuit) -> Circuit:
    """Expand CNOT/CZ/SWAP; pass single-qubit gates, XX(pi/4) and MEASURE
    through unchanged."""
    out: list[Gate] = []
    for g in circuit.gates:
        if g.name in SINGLE_QUBIT_GATES or g.name == "MEASURE":
            out.append(g)
        elif g.name == "CNOT":
            out.extend(_cnot(*g.qubits))
        elif g.name == "CZ":
            out.extend(_cz(*g.qubits))
        elif g.name == "SWAP":
            out.extend(_swap(*g.qubits))
        elif g.name == "XX":
            if abs(g.params[0] - _PI_4) > 1e-12:
                raise ValueError(
                    f"only XX(pi/4) is native; got XX({g.params[0]!r})")
            out.append(g)
        else:
            raise ValueError(f"unsupported two-qubit gate {g.name}")
    return Circuit(circuit.n_qubits, out)
