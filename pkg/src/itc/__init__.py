"""
itc: compiler from logical quantum circuits to a linear-chain ion-trap
gateset (equatorial pi/2 rotations plus the XX(pi/4) coupling gate), with
state-vector validation and benchmark studies.
"""

from .asm import AsmError, parse_asm, print_asm
from .benchmarks import BENCHMARKS, build_benchmark
from .compiler import (CompileConfig, CompileResult, ValidationError,
                       compile_circuit, validate)
from .ir import Circuit, CircuitError, Gate
from .mat import phase_distance, rphi, standard_gate_matrix, xx
from .route import CouplingMap, RouteResult, route
from .schedule import NativeOp, NativeTable, cycle_counts, format_table, to_table
from .sim import marginal, simulate, simulate_table, tvd
from .single_qubit import run_single_qubit_pass
from .synth import (Context, DecompositionFailed, DecompResult, GoalUnitary,
                    OptFlags, Variant, decompose, minimize, objective)
from .two_qubit import lower_two_qubit

__all__ = [
    "AsmError", "BENCHMARKS", "Circuit", "CircuitError", "CompileConfig",
    "CompileResult", "Context", "CouplingMap", "DecompResult",
    "DecompositionFailed", "Gate", "GoalUnitary", "NativeOp", "NativeTable",
    "OptFlags", "RouteResult", "ValidationError", "Variant",
    "build_benchmark", "compile_circuit", "cycle_counts", "decompose",
    "format_table", "lower_two_qubit", "marginal", "minimize", "objective",
    "parse_asm", "phase_distance", "print_asm", "route", "rphi",
    "run_single_qubit_pass", "simulate", "simulate_table",
    "standard_gate_matrix", "to_table", "tvd", "validate", "xx",
]

__version__ = "0.1.0"
