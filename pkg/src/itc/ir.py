"""
Circuit intermediate representation: a qubit register plus a flat, ordered
gate list. Measurement is an explicit gate and terminal per qubit.
"""

from dataclasses import dataclass, field

# name -> (number of qubits, number of parameters)
GATE_SIGNATURES = {
    "H": (1, 0), "X": (1, 0), "Y": (1, 0), "Z": (1, 0), "S": (1, 0), "T": (1, 0),
    "RX": (1, 1), "RY": (1, 1), "RZ": (1, 1), "RPHI": (1, 2),
    "CNOT": (2, 0), "CZ": (2, 0), "SWAP": (2, 0), "XX": (2, 1),
    "MEASURE": (1, 0),
}

SINGLE_QUBIT_GATES = frozenset(n for n, (q, _) in GATE_SIGNATURES.items()
                               if q == 1 and n != "MEASURE")
TWO_QUBIT_GATES = frozenset(n for n, (q, _) in GATE_SIGNATURES.items() if q == 2)


class CircuitError(ValueError):
    """Malformed gate or circuit."""


@dataclass(frozen=True)
class Gate:
    name: str
    params: tuple[float, ...] = ()
    qubits: tuple[int, ...] = ()

    def __post_init__(self):
        sig = GATE_SIGNATURES.get(self.name)
        if sig is None:
            raise CircuitError(f"unknown gate {self.name!r}")
        n_qubits, n_params = sig
        if len(self.qubits) != n_qubits:
            raise CircuitError(
                f"{self.name} expects {n_qubits} qubit(s), got {len(self.qubits)}")
        if len(self.params) != n_params:
            raise CircuitError(
                f"{self.name} expects {n_params} parameter(s), got {len(self.params)}")
        if len(set(self.qubits)) != len(self.qubits):
            raise CircuitError(f"{self.name} acts twice on qubit {self.qubits}")


@dataclass
class Circuit:
    n_qubits: int
    gates: list[Gate] = field(default_factory=list)

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        if self.n_qubits < 1:
            raise CircuitError(f"register size must be positive, got {self.n_qubits}")
        measured: set[int] = set()
        for g in self.gates:
            for q in g.qubits:
                if not 0 <= q < self.n_qubits:
                    raise CircuitError(
                        f"{g.name} targets qubit {q} outside register of {self.n_qubits}")
                if q in measured:
                    raise CircuitError(f"{g.name} on qubit {q} after its MEASURE")
            if g.name == "MEASURE":
                measured.add(g.qubits[0])

    def add(self, name: str, *qubits: int, params: tuple[float, ...] = ()) -> "Circuit":
        self.gates.append(Gate(name, params, tuple(qubits)))
        return self

    def measured_qubits(self) -> list[int]:
        """Qubits carrying a MEASURE marker, ascending."""
        return sorted(g.qubits[0] for g in self.gates if g.name == "MEASURE")

    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for g in self.gates:
            out[g.name] = out.get(g.name, 0) + 1
        return out

    def __eq__(self, other) -> bool:
        return (isinstance(other, Circuit)
                and self.n_qubits == other.n_qubits
                and self.gates == other.gates)
