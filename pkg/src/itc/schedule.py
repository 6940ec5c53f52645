"""
Native-operation table: the row-per-cycle format handed to the control
software. Each XX(pi/4) owns a row; rphi(., pi/2) rotations either get one
row each (serial hardware) or are packed greedily into shared rows across
distinct ions (parallel hardware). Measured ions ride along as a trailer.
"""

import math
from dataclasses import dataclass, field

from .ir import Circuit
from .mat import canonical_angle

_PI_2 = math.pi / 2


@dataclass(frozen=True)
class NativeOp:
    kind: str  # "R" or "XX"
    ions: tuple[int, ...]
    phi: float | None = None  # R only; XX is pinned at alpha = pi/4

    def __post_init__(self):
        if self.kind == "R":
            if len(self.ions) != 1 or self.phi is None:
                raise ValueError("R takes one ion and an azimuth")
        elif self.kind == "XX":
            if len(self.ions) != 2 or self.ions[0] == self.ions[1] or self.phi is not None:
                raise ValueError("XX takes two distinct ions and no azimuth")
        else:
            raise ValueError(f"unknown native op kind {self.kind!r}")


@dataclass
class NativeTable:
    n_ions: int
    rows: list[list[NativeOp]] = field(default_factory=list)
    measured: list[int] = field(default_factory=list)

    def xx_count(self) -> int:
        return sum(1 for row in self.rows if row[0].kind == "XX")

    def r_ops(self) -> int:
        return sum(len(row) for row in self.rows if row[0].kind == "R")


def to_table(circuit: Circuit, parallel_1q: bool = False) -> NativeTable:
    """Greedy row construction in circuit order; no reordering across rows."""
    table = NativeTable(circuit.n_qubits)
    open_row: list[NativeOp] | None = None
    open_ions: set[int] = set()

    def flush():
        nonlocal open_row
        open_row = None
        open_ions.clear()

    for g in circuit.gates:
        if g.name == "MEASURE":
            table.measured.append(g.qubits[0])
        elif g.name == "XX":
            flush()
            table.rows.append([NativeOp("XX", g.qubits)])
        elif g.name == "RPHI":
            phi, theta = g.params
            if abs(theta - _PI_2) > 1e-12:
                raise ValueError(f"native rotations have theta = pi/2, got {theta!r}")
            op = NativeOp("R", g.qubits, phi)
            ion = g.qubits[0]
            if parallel_1q and open_row is not None and ion not in open_ions:
                open_row.append(op)
                open_ions.add(ion)
            else:
                table.rows.append([op])
                if parallel_1q:
                    open_row = table.rows[-1]
                    open_ions.clear()
                    open_ions.add(ion)
                else:
                    flush()
        else:
            raise ValueError(f"non-native gate {g.name} in table input")
    table.measured.sort()
    return table


def cycle_counts(table: NativeTable) -> tuple[int, int, int]:
    """(xx_cycles, r_cycles, r_ops): XX rows, rotation rows, total rotations."""
    xx_cycles = table.xx_count()
    r_cycles = len(table.rows) - xx_cycles
    return xx_cycles, r_cycles, table.r_ops()


def serialize(table: NativeTable) -> Circuit:
    """Replay the table one op at a time (row ops in listed order)."""
    c = Circuit(table.n_ions)
    for row in table.rows:
        for op in row:
            if op.kind == "XX":
                c.add("XX", *op.ions, params=(math.pi / 4,))
            else:
                c.add("RPHI", op.ions[0], params=(op.phi, _PI_2))
    for ion in table.measured:
        c.add("MEASURE", ion)
    return c


def format_table(table: NativeTable) -> str:
    """Tab-separated text: one row per line, azimuths wrapped to (-pi, pi]."""
    lines = []
    for row in table.rows:
        if row[0].kind == "XX":
            lines.append(f"XX\t{row[0].ions[0]},{row[0].ions[1]}")
        else:
            ops = ",".join(f"{op.ions[0]}:{canonical_angle(op.phi)!r}" for op in row)
            lines.append(f"R\t{ops}")
    if table.measured:
        lines.append("MEASURE\t" + ",".join(str(i) for i in table.measured))
    return "\n".join(lines) + ("\n" if lines else "")
