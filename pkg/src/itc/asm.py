"""
Text assembly dialect for circuits.

Grammar (one instruction per line, whitespace-separated tokens, angles in
radians, '#' starts a comment):

    program  := "qreg" INT  line*
    line     := mnemonic args
    h|x|y|z|s|t QUBIT
    rx|ry|rz FLOAT QUBIT
    rphi FLOAT FLOAT QUBIT
    cnot|cz|swap QUBIT QUBIT
    xx FLOAT QUBIT QUBIT
    measure QUBIT
"""

from .ir import GATE_SIGNATURES, Circuit, CircuitError, Gate


class AsmError(ValueError):
    """Syntax or semantic error in assembly text, with a line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_asm(text: str) -> Circuit:
    """Parse the dialect into a Circuit. Raises AsmError with a line number."""
    n_qubits = None
    gates: list[Gate] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        tokens = line.split()
        mnemonic, args = tokens[0].lower(), tokens[1:]
        if n_qubits is None:
            if mnemonic != "qreg":
                raise AsmError(lineno, f"expected 'qreg N' header, got {mnemonic!r}")
            try:
                n_qubits = int(args[0]) if len(args) == 1 else None
            except ValueError:
                n_qubits = None
            if n_qubits is None or n_qubits < 1:
                raise AsmError(lineno, "qreg needs one positive integer")
            continue
        if mnemonic == "qreg":
            raise AsmError(lineno, "duplicate qreg header")
        name = mnemonic.upper()
        sig = GATE_SIGNATURES.get(name)
        if sig is None:
            raise AsmError(lineno, f"unknown mnemonic {mnemonic!r}")
        want_qubits, want_params = sig
        if len(args) != want_params + want_qubits:
            raise AsmError(lineno, f"{mnemonic} expects {want_params} angle(s) "
                                   f"and {want_qubits} qubit(s)")
        try:
            params = tuple(float(a) for a in args[:want_params])
            qubits = tuple(int(a) for a in args[want_params:])
        except ValueError as exc:
            raise AsmError(lineno, str(exc)) from exc
        for q in qubits:
            if not 0 <= q < n_qubits:
                raise AsmError(lineno, f"qubit {q} out of range for qreg {n_qubits}")
        try:
            gates.append(Gate(name, params, qubits))
        except CircuitError as exc:
            raise AsmError(lineno, str(exc)) from exc
    if n_qubits is None:
        raise AsmError(1, "empty program: missing 'qreg N' header")
    try:
        return Circuit(n_qubits, gates)
    except CircuitError as exc:
        raise AsmError(len(text.splitlines()), str(exc)) from exc


def print_asm(circuit: Circuit) -> str:
    """Emit the dialect; parse_asm(print_asm(c)) reproduces c."""
    lines = [f"qreg {circuit.n_qubits}"]
    for g in circuit.gates:
        parts = [g.name.lower()]
        parts += [repr(p) for p in g.params]
        parts += [str(q) for q in g.qubits]
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"
