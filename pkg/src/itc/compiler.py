"""
Compile pipeline: route -> two-qubit lowering -> single-qubit resynthesis ->
native table, with distribution validation against the input circuit.
"""

from dataclasses import dataclass, field, replace

from .ir import Circuit
from .route import CouplingMap, route
from .schedule import NativeTable, cycle_counts, to_table
from .sim import marginal, simulate, simulate_table, tvd
from .single_qubit import run_single_qubit_pass
from .synth import OptFlags
from .two_qubit import lower_two_qubit

VALIDATION_TVD = 1e-6


@dataclass(frozen=True)
class CompileConfig:
    connectivity: str = "linear"  # "linear" | "full"
    parallel_1q: bool = False
    legacy_mode: bool = False
    opts: OptFlags = field(default_factory=OptFlags)
    tolerance: float = 1e-4
    seed: int = 0

    def __post_init__(self):
        if self.connectivity not in ("linear", "full"):
            raise ValueError(f"connectivity must be linear or full, "
                             f"got {self.connectivity!r}")
        if self.legacy_mode and (self.opts.rx_commute or self.opts.discard_trailing):
            # the pre-existing compiler had neither optimization
            object.__setattr__(self, "opts",
                               replace(self.opts, rx_commute=False,
                                       discard_trailing=False))


@dataclass
class CompileResult:
    table: NativeTable
    native_circuit: Circuit
    placement: list[int]  # logical -> ion
    measured_logical: list[int]
    stats: dict

    def report_entry(self) -> dict:
        return dict(self.stats)


class ValidationError(RuntimeError):
    """Compiled output disagrees with the source circuit's measurement
    distribution."""


def compile_circuit(circuit: Circuit, config: CompileConfig) -> CompileResult:
    """Run the full pipeline and collect per-pass counts."""
    cmap = (CouplingMap.linear(circuit.n_qubits)
            if config.connectivity == "linear"
            else CouplingMap.full(circuit.n_qubits))
    routed = route(circuit, cmap)
    lowered = lower_two_qubit(routed.circuit)
    native, pass_stats = run_single_qubit_pass(lowered, config.opts,
                                               config.tolerance, config.seed)
    table = to_table(native, config.parallel_1q)
    xx_cycles, r_cycles, r_ops = cycle_counts(table)
    stats = {
        "n_qubits": circuit.n_qubits,
        "input_gates": len(circuit.gates),
        "routed_gates": len(routed.circuit.gates),
        "lowered_gates": len(lowered.gates),
        "native_gates": len(native.gates),
        "swaps_inserted": routed.swaps_inserted,
        "xx_count": table.xx_count(),
        "r_ops": r_ops,
        "r_cycles": r_cycles,
        "xx_cycles": xx_cycles,
        "cycles": r_cycles + xx_cycles,
        "fallbacks": pass_stats.fallbacks,
        "discarded_runs": pass_stats.discarded_runs,
    }
    return CompileResult(table, native, routed.logical_to_physical,
                         routed.measured_logical, stats)


def validate(circuit: Circuit, result: CompileResult,
             threshold: float = VALIDATION_TVD) -> float:
    """Total variation distance between logical and native measurement
    marginals; raises ValidationError above the threshold.

    Circuits with no MEASURE markers have nothing observable and pass
    trivially.
    """
    measured = result.measured_logical
    if not measured:
        return 0.0
    logical = marginal(simulate(circuit), measured)
    native = marginal(simulate_table(result.table), measured,
                      relabel=result.placement)
    d = tvd(logical, native)
    if d > threshold:
        raise ValidationError(f"distribution mismatch: tvd = {d:.3e}")
    return d
