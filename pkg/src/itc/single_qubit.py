"""
Single-qubit merge-and-resynthesize pass.

Maximal runs of adjacent single-qubit gates on one qubit are multiplied into
a 2x2 goal (later gates on the left) and handed to the numerical
decomposer. The boundary freedom depends on what closes the run: an XX gate
(a trailing RX may be commuted across it and joins the qubit's next run), a
MEASURE (a trailing RZ is invisible and dropped), or nothing. Runs at the
end of the circuit on unmeasured qubits can be dropped wholesale.

Emitted rotations are placed at the position of the run's first original
gate, so the output interleaves across qubits the same way the input did.
"""

import math
from dataclasses import dataclass

import numpy as np

from .ir import Circuit, Gate, SINGLE_QUBIT_GATES
from .mat import rx, standard_gate_matrix
from .synth import Context, GoalUnitary, OptFlags, decompose

_PI_2 = math.pi / 2


@dataclass
class PassStats:
    decompositions: int = 0
    rotations_emitted: int = 0
    fallbacks: int = 0
    discarded_runs: int = 0
    carried_rx: int = 0


@dataclass
class _Run:
    goal: np.ndarray | None = None  # None = empty (identity)
    first_pos: int | None = None

    def absorb(self, m: np.ndarray, pos: int) -> None:
        self.goal = m if self.goal is None else m @ self.goal
        if self.first_pos is None:
            self.first_pos = pos

    @property
    def empty(self) -> bool:
        return self.goal is None


def run_single_qubit_pass(circuit: Circuit, opts: OptFlags,
                          tolerance: float = 1e-4,
                          seed: int = 0) -> tuple[Circuit, PassStats]:
    """Collapse single-qubit runs into rphi(., pi/2) rotations.

    Expects a circuit already lowered to single-qubit gates, XX(pi/4) and
    MEASURE. Output contains only RPHI(phi, pi/2), XX(pi/4) and MEASURE.
    """
    n = circuit.n_qubits
    runs = [_Run() for _ in range(n)]
    carry: list[float | None] = [None] * n
    fresh = [True] * n
    measured = [False] * n
    stats = PassStats()
    # (sort position, 0=emitted rotations | 1=original gate, payload)
    tagged: list[tuple[int, int, Gate]] = []

    def close_run(q: int, context: Context, pos: int) -> None:
        run = runs[q]
        if run.empty and carry[q] is None:
            return
        goal = run.goal if run.goal is not None else np.eye(2, dtype=complex)
        if carry[q] is not None:
            goal = goal @ rx(carry[q])  # carried rotation acts first
            carry[q] = None
        result = decompose(GoalUnitary(goal, context, fresh[q]), opts,
                           tolerance, seed)
        stats.decompositions += 1
        stats.fallbacks += int(result.used_fallback)
        emit_pos = run.first_pos if run.first_pos is not None else pos
        for phi in result.core_phis:
            tagged.append((emit_pos, 0, Gate("RPHI", (phi, _PI_2), (q,))))
            stats.rotations_emitted += 1
        if result.trailing_kind == "rx":
            carry[q] = result.trailing_angle
            stats.carried_rx += 1
        runs[q] = _Run()

    for pos, g in enumerate(circuit.gates):
        if g.name in SINGLE_QUBIT_GATES:
            runs[g.qubits[0]].absorb(standard_gate_matrix(g.name, g.params), pos)
        elif g.name == "XX":
            for q in g.qubits:
                close_run(q, Context.BEFORE_XX, pos)
            tagged.append((pos, 1, g))
            for q in g.qubits:
                fresh[q] = False
        elif g.name == "MEASURE":
            q = g.qubits[0]
            close_run(q, Context.BEFORE_MEASURE, pos)
            fresh[q] = False
            measured[q] = True
            tagged.append((pos, 1, g))
        else:
            raise ValueError(
                f"{g.name} left in circuit: run the two-qubit pass first")

    end = len(circuit.gates)
    for q in range(n):
        if runs[q].empty and carry[q] is None:
            continue
        assert not measured[q]  # circuit invariant: MEASURE is terminal
        if opts.discard_trailing:
            runs[q] = _Run()
            carry[q] = None
            stats.discarded_runs += 1
        else:
            close_run(q, Context.BEFORE_OTHER, end)

    tagged.sort(key=lambda item: (item[0], item[1]))
    return Circuit(n, [g for _, _, g in tagged]), stats
