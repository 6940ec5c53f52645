"""
Benchmark suite: compile every built-in benchmark under the study
configurations, validate each result by simulation, and derive the
reduction metrics (rotation ops vs the legacy baseline, XX counts under
full connectivity, rotation cycles under hardware upgrades).
"""

import csv
import io
import json
from dataclasses import replace

from .benchmarks import BENCHMARKS, build_benchmark
from .compiler import CompileConfig, compile_circuit, validate
from .synth import OptFlags

# Single-qubit study: the legacy compiler with and without its RZ
# optimizations, ours with individual optimizations, and everything on.
OPT_CONFIGS: dict[str, CompileConfig] = {
    "old_noopt": CompileConfig(legacy_mode=True),
    "old_rz": CompileConfig(legacy_mode=True,
                            opts=OptFlags(up_to_rz=True, from_rz=True)),
    "ours_noopt": CompileConfig(),
    "only_trailing": CompileConfig(opts=OptFlags.only("discard_trailing")),
    "only_from_rz": CompileConfig(opts=OptFlags.only("from_rz")),
    "only_up_to_rz": CompileConfig(opts=OptFlags.only("up_to_rz")),
    "only_rx": CompileConfig(opts=OptFlags.only("rx_commute")),
    "only_skip_identity": CompileConfig(opts=OptFlags.only("skip_identity")),
    "all_opt": CompileConfig(opts=OptFlags.all()),
}

# Hardware study rows, all with every optimization on.
HW_CONFIGS: dict[str, CompileConfig] = {
    "all_opt_parallel": CompileConfig(opts=OptFlags.all(), parallel_1q=True),
    "all_opt_full": CompileConfig(opts=OptFlags.all(), connectivity="full"),
    "all_opt_full_parallel": CompileConfig(opts=OptFlags.all(),
                                           connectivity="full",
                                           parallel_1q=True),
}

R_BASELINE = "old_rz"  # denominator config for rotation-count reductions
CYCLE_BASELINE = "all_opt"  # linear serial, our compiler


def _round(x: float) -> float:
    return float(f"{x:.12g}")


def run_suite(seed: int = 0, tolerance: float = 1e-4,
              benchmarks: tuple[str, ...] = BENCHMARKS) -> dict:
    """Compile benchmarks x configurations, validate, compute reductions."""
    configs = {name: replace(cfg, seed=seed, tolerance=tolerance)
               for name, cfg in {**OPT_CONFIGS, **HW_CONFIGS}.items()}
    results: dict[str, dict[str, dict]] = {}
    for bench in benchmarks:
        circuit = build_benchmark(bench)
        results[bench] = {}
        for name, cfg in configs.items():
            res = compile_circuit(circuit, cfg)
            d = validate(circuit, res)  # raises on distribution mismatch
            entry = res.report_entry()
            entry["tvd"] = _round(d)
            results[bench][name] = entry

    def reduction(base: int, this: int) -> float | None:
        return _round(base / this) if this > 0 else None

    r_red = {}
    for bench in benchmarks:
        base = results[bench][R_BASELINE]["r_ops"]
        r_red[bench] = {name: reduction(base, results[bench][name]["r_ops"])
                        for name in configs}
    xx_red = {}
    for bench in benchmarks:
        lin = results[bench]["all_opt"]["xx_count"]
        ful = results[bench]["all_opt_full"]["xx_count"]
        xx_red[bench] = reduction(lin, ful)
    cyc_red = {}
    for bench in benchmarks:
        base = results[bench][CYCLE_BASELINE]["r_cycles"]
        cyc_red[bench] = {
            "parallel": reduction(base, results[bench]["all_opt_parallel"]["r_cycles"]),
            "full": reduction(base, results[bench]["all_opt_full"]["r_cycles"]),
            "full_parallel": reduction(
                base, results[bench]["all_opt_full_parallel"]["r_cycles"]),
        }

    def average(values: list[float | None]) -> float | None:
        vals = [v for v in values if v is not None]
        return _round(sum(vals) / len(vals)) if vals else None

    report = {
        "seed": seed,
        "tolerance": tolerance,
        "benchmarks": results,
        "reductions": {
            "r_ops_vs_old_rz": r_red,
            "r_ops_vs_old_rz_average": {
                name: average([r_red[b][name] for b in benchmarks])
                for name in configs},
            "xx_full_vs_linear": xx_red,
            "xx_full_vs_linear_average": average(list(xx_red.values())),
            "r_cycles_vs_linear_serial": cyc_red,
            "r_cycles_vs_linear_serial_average": {
                kind: average([cyc_red[b][kind] for b in benchmarks])
                for kind in ("parallel", "full", "full_parallel")},
        },
    }
    return report


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def report_csv(report: dict) -> str:
    """One row per (benchmark, config) with counts and reductions."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["benchmark", "config", "xx_count", "r_ops", "r_cycles",
                     "xx_cycles", "swaps_inserted", "fallbacks", "tvd",
                     "r_ops_reduction_vs_old_rz"])
    benches = sorted(report["benchmarks"])
    for bench in benches:
        for name in sorted(report["benchmarks"][bench]):
            e = report["benchmarks"][bench][name]
            red = report["reductions"]["r_ops_vs_old_rz"][bench][name]
            writer.writerow([bench, name, e["xx_count"], e["r_ops"],
                             e["r_cycles"], e["xx_cycles"],
                             e["swaps_inserted"], e["fallbacks"], e["tvd"],
                             "" if red is None else red])
    return buf.getvalue()


def report_text(report: dict) -> str:
    """Aligned human-readable summary of the suite."""
    lines = []
    benches = list(report["benchmarks"])
    names = list(OPT_CONFIGS) + list(HW_CONFIGS)
    lines.append(f"{'benchmark':<12}" + "".join(f"{n:>22}" for n in names))
    for metric in ("r_ops", "xx_count", "r_cycles"):
        lines.append(f"-- {metric} --")
        for bench in benches:
            row = report["benchmarks"][bench]
            lines.append(f"{bench:<12}"
                         + "".join(f"{row[n][metric]:>22}" for n in names))
    avg = report["reductions"]["r_ops_vs_old_rz_average"]["all_opt"]
    lines.append(f"rotation-op reduction, all optimizations vs legacy RZ"
                 f" baseline (average): {avg}")
    lines.append(f"XX reduction under full connectivity (average): "
                 f"{report['reductions']['xx_full_vs_linear_average']}")
    cyc = report["reductions"]["r_cycles_vs_linear_serial_average"]
    lines.append(f"rotation-cycle reduction (average): parallel "
                 f"{cyc['parallel']}, full {cyc['full']}, "
                 f"both {cyc['full_parallel']}")
    return "\n".join(lines) + "\n"
