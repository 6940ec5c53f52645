"""
Qubit-to-ion placement and SWAP insertion.

The initial placement is the identity. Gates are scanned in order; when a
two-qubit gate lands on non-adjacent ions, the lesser-indexed ion is walked
stepwise along a shortest path toward the other until the pair sits on a
coupling-map edge. No swap-back is attempted. MEASURE markers are re-emitted
at the end of the routed circuit, mapped through the final placement.
"""

from dataclasses import dataclass, field

from .ir import Circuit, Gate, TWO_QUBIT_GATES


@dataclass(frozen=True)
class CouplingMap:
    n_ions: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for a, b in self.edges:
            if not (0 <= a < b < self.n_ions):
                raise ValueError(f"bad edge ({a}, {b}) for {self.n_ions} ions")
        if self.n_ions > 1 and not self._connected():
            raise ValueError("coupling map is not connected")

    @classmethod
    def linear(cls, n_ions: int) -> "CouplingMap":
        return cls(n_ions, frozenset((i, i + 1) for i in range(n_ions - 1)))

    @classmethod
    def full(cls, n_ions: int) -> "CouplingMap":
        return cls(n_ions, frozenset((i, j) for i in range(n_ions)
                                     for j in range(i + 1, n_ions)))

    def adjacent(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def neighbors(self, a: int) -> list[int]:
        out = [b for x, b in self.edges if x == a]
        out += [x for x, b in self.edges if b == a]
        return sorted(out)

    def _connected(self) -> bool:
        seen, stack = {0}, [0]
        while stack:
            for nb in self.neighbors(stack.pop()):
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        return len(seen) == self.n_ions

    def shortest_path(self, a: int, b: int) -> list[int]:
        """BFS path from ion a to ion b, inclusive."""
        prev = {a: a}
        frontier = [a]
        while frontier and b not in prev:
            nxt = []
            for u in frontier:
                for v in self.neighbors(u):
                    if v not in prev:
                        prev[v] = u
                        nxt.append(v)
            frontier = nxt
        path = [b]
        while path[-1] != a:
            path.append(prev[path[-1]])
        return path[::-1]


@dataclass
class RouteResult:
    circuit: Circuit  # over physical ions, two-qubit gates on edges only
    logical_to_physical: list[int]  # final placement
    swaps_inserted: int = 0
    measured_logical: list[int] = field(default_factory=list)


def route(circuit: Circuit, cmap: CouplingMap) -> RouteResult:
    """Map the circuit onto ions. Under a fully connected map the circuit
    passes through unchanged with the identity placement."""
    if circuit.n_qubits > cmap.n_ions:
        raise ValueError(
            f"register of {circuit.n_qubits} exceeds {cmap.n_ions} ions")
    if len(cmap.edges) == cmap.n_ions * (cmap.n_ions - 1) // 2:
        return RouteResult(circuit, list(range(cmap.n_ions)), 0,
                           circuit.measured_qubits())

    l2p = list(range(cmap.n_ions))
    p2l = list(range(cmap.n_ions))
    out: list[Gate] = []
    swaps = 0
    measured: list[int] = []

    def do_swap(pa: int, pb: int) -> None:
        nonlocal swaps
        out.append(Gate("SWAP", (), (pa, pb)))
        la, lb = p2l[pa], p2l[pb]
        p2l[pa], p2l[pb] = lb, la
        l2p[la], l2p[lb] = pb, pa
        swaps += 1

    for g in circuit.gates:
        if g.name == "MEASURE":
            measured.append(g.qubits[0])
            continue
        if g.name in TWO_QUBIT_GATES:
            pa, pb = l2p[g.qubits[0]], l2p[g.qubits[1]]
            if not cmap.adjacent(pa, pb):
                lo, hi = min(pa, pb), max(pa, pb)
                path = cmap.shortest_path(lo, hi)
                # walk the lesser ion down the path until one hop remains
                for step in path[1:-1]:
                    do_swap(lo, step)
                    lo = step
                pa, pb = l2p[g.qubits[0]], l2p[g.qubits[1]]
            out.append(Gate(g.name, g.params, (pa, pb)))
        else:
            out.append(Gate(g.name, g.params, (l2p[g.qubits[0]],)))

    for q in measured:
        out.append(Gate("MEASURE", (), (l2p[q],)))
    return RouteResult(Circuit(cmap.n_ions, out), list(l2p), swaps,
                       sorted(measured))
