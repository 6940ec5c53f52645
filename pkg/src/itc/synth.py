"""
Numerical decomposition of 2x2 unitaries into fixed-angle equatorial
rotations rphi(phi, pi/2).

A goal unitary G is approximated by a product A(phis) whose shape depends on
the chosen variant:

    exact           A = R_pn ... R_p2 R_p1
    up_to_x         A = RX(pn) R_p(n-1) ... R_p1       (RX commutes through XX)
    up_to_z         A = RZ(pn) R_p(n-1) ... R_p1       (RZ invisible to readout)
    from_z_exact    A = R_pn ... R_p2 RZ(p1)           (RZ fixes |0>)
    from_z_up_to_x  A = RX(pn) ... R_p2 RZ(p1)
    from_z_up_to_z  A = RZ(pn) ... R_p2 RZ(p1)

where R_p is shorthand for rphi(p, pi/2) and the rightmost factor acts first.
The objective is f(phis) = 4 - |tr(G^dag A(phis))|^2, which vanishes exactly
when A matches G up to a global phase. Minimization runs a BFGS quasi-Newton
iteration with analytic gradients, vectorized over a fixed set of random
restarts so a whole multi-start solve is a handful of array operations per
iteration.

decompose() searches n = 1, 2, 3, 4 rotations (plus n = 0 when the variant
has a boundary angle that can absorb G on its own). It accepts the first n
that reaches machine precision, settling for the first n that merely clears
the user tolerance only when nothing tighter exists by n = 4: a fit with
residual f leaks sqrt(f)/2 of operator error into the compiled circuit, so
near-tolerance fits are a last resort.
"""

import math
from dataclasses import dataclass, replace
from enum import Enum

import numpy as np

from .mat import I2, SQRT_HALF, phase_distance, rphi, rx, rz

RESTARTS = 8
_MAXITER = 100
_GTOL = 1e-11
_FSTOP = 1e-13  # a restart below this objective value is done


class Variant(Enum):
    EXACT = "exact"
    UP_TO_X = "up_to_x"
    UP_TO_Z = "up_to_z"
    FROM_Z_EXACT = "from_z_exact"
    FROM_Z_UP_TO_X = "from_z_up_to_x"
    FROM_Z_UP_TO_Z = "from_z_up_to_z"

    @property
    def leading_rz(self) -> bool:
        return self in (Variant.FROM_Z_EXACT, Variant.FROM_Z_UP_TO_X,
                        Variant.FROM_Z_UP_TO_Z)

    @property
    def trailing(self) -> str | None:
        if self in (Variant.UP_TO_X, Variant.FROM_Z_UP_TO_X):
            return "rx"
        if self in (Variant.UP_TO_Z, Variant.FROM_Z_UP_TO_Z):
            return "rz"
        return None

    @property
    def exact_ending(self) -> "Variant":
        """Same variant with the trailing freedom removed."""
        return Variant.FROM_Z_EXACT if self.leading_rz else Variant.EXACT

    def param_count(self, n_core: int) -> int:
        return n_core + int(self.leading_rz) + int(self.trailing is not None)


class Context(Enum):
    BEFORE_XX = "before_xx"
    BEFORE_MEASURE = "before_measure"
    BEFORE_OTHER = "before_other"


@dataclass(frozen=True)
class OptFlags:
    rx_commute: bool = False
    up_to_rz: bool = False
    from_rz: bool = False
    skip_identity: bool = False
    discard_trailing: bool = False

    NAMES = ("rx_commute", "up_to_rz", "from_rz", "skip_identity", "discard_trailing")

    @classmethod
    def all(cls) -> "OptFlags":
        return cls(True, True, True, True, True)

    @classmethod
    def none(cls) -> "OptFlags":
        return cls()

    @classmethod
    def only(cls, name: str) -> "OptFlags":
        if name not in cls.NAMES:
            raise ValueError(f"unknown optimization flag {name!r}")
        return cls(**{name: True})


@dataclass(frozen=True)
class GoalUnitary:
    matrix: np.ndarray
    context: Context = Context.BEFORE_OTHER
    fresh: bool = False  # True when the qubit is provably still in |0>


@dataclass(frozen=True)
class DecompResult:
    core_phis: tuple[float, ...]
    leading_rz: float | None
    trailing_kind: str | None  # "rx" or "rz"
    trailing_angle: float | None
    residual_f: float
    variant: Variant
    used_fallback: bool = False

    @property
    def n_rotations(self) -> int:
        return len(self.core_phis)

    def reconstruct(self) -> np.ndarray:
        """A(phis) per the variant's formula; matches the goal up to phase
        within residual_f."""
        a = I2.copy()
        if self.leading_rz is not None:
            a = rz(self.leading_rz) @ a
        for p in self.core_phis:
            a = rphi(p, math.pi / 2) @ a
        if self.trailing_kind == "rx":
            a = rx(self.trailing_angle) @ a
        elif self.trailing_kind == "rz":
            a = rz(self.trailing_angle) @ a
        return a


class DecompositionFailed(RuntimeError):
    """No variant reached the tolerance within four rotations."""


def _factor_kinds(variant: Variant, n_core: int) -> list[str]:
    kinds = ["rz"] if variant.leading_rz else []
    kinds += ["core"] * n_core
    if variant.trailing is not None:
        kinds.append(variant.trailing)
    return kinds


def _eval_batch(gconj: np.ndarray, kinds: list[str],
                x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Objective and gradient for a (restarts, n_params) batch of angles.

    Every factor kind is built from one half-angle phase table:
    eh = exp(i x/2) gives cos/sin for RX, its conjugate is RZ's diagonal,
    and its square is the azimuth phase of a core rotation.
    """
    n_batch, m = x.shape
    eh = np.exp(0.5j * x.T)  # (m, n_batch)
    fs = np.empty((m, n_batch, 2, 2), dtype=np.complex128)
    dfs = np.empty_like(fs)
    core = [j for j, k in enumerate(kinds) if k == "core"]
    if core:
        e = eh[core] * eh[core]  # exp(i phi)
        fs[core, :, 0, 0] = SQRT_HALF
        fs[core, :, 1, 1] = SQRT_HALF
        fs[core, :, 0, 1] = -1j * SQRT_HALF / e
        fs[core, :, 1, 0] = -1j * SQRT_HALF * e
        dfs[core, :, 0, 0] = 0
        dfs[core, :, 1, 1] = 0
        dfs[core, :, 0, 1] = -SQRT_HALF / e
        dfs[core, :, 1, 0] = SQRT_HALF * e
    for j, kind in enumerate(kinds):
        if kind == "rx":
            c, s = eh[j].real, eh[j].imag
            fs[j, :, 0, 0] = c
            fs[j, :, 1, 1] = c
            fs[j, :, 0, 1] = -1j * s
            fs[j, :, 1, 0] = -1j * s
            dfs[j, :, 0, 0] = -s / 2
            dfs[j, :, 1, 1] = -s / 2
            dfs[j, :, 0, 1] = -1j * c / 2
            dfs[j, :, 1, 0] = -1j * c / 2
        elif kind == "rz":
            e = eh[j].conj()
            fs[j, :, 0, 0] = e
            fs[j, :, 1, 1] = 1 / e
            fs[j, :, 0, 1] = 0
            fs[j, :, 1, 0] = 0
            dfs[j, :, 0, 0] = -0.5j * e
            dfs[j, :, 1, 1] = 0.5j / e
            dfs[j, :, 0, 1] = 0
            dfs[j, :, 1, 0] = 0

    if m == 1:
        a, da = fs[0], dfs
    elif m == 2:
        a = fs[1] @ fs[0]
        da = dfs
        np.matmul(fs[1], da[0], out=da[0])
        np.matmul(da[1], fs[0], out=da[1])
    else:
        # prefix[j] = F_j ... F_0, suffix[j] = F_{m-1} ... F_j
        prefix = np.empty_like(fs)
        suffix = np.empty_like(fs)
        prefix[0] = fs[0]
        for j in range(1, m):
            np.matmul(fs[j], prefix[j - 1], out=prefix[j])
        suffix[m - 1] = fs[m - 1]
        for j in range(m - 2, -1, -1):
            np.matmul(suffix[j + 1], fs[j], out=suffix[j])
        a = prefix[m - 1]
        da = dfs
        np.matmul(suffix[1], da[0], out=da[0])
        np.matmul(da[m - 1], prefix[m - 2], out=da[m - 1])
        for j in range(1, m - 1):
            np.matmul(suffix[j + 1], da[j] @ prefix[j - 1], out=da[j])

    t = np.einsum("ij,bij->b", gconj, a)
    f = 4.0 - (t.real * t.real + t.imag * t.imag)
    dt = np.einsum("ij,pbij->bp", gconj, da)
    grad = -2.0 * (t.real[:, None] * dt.real + t.imag[:, None] * dt.imag)
    return f, grad


def objective(goal: np.ndarray, variant: Variant,
              phis: list[float] | tuple[float, ...]) -> tuple[float, list[float]]:
    """f = 4 - |tr(G^dag A(phis))|^2 and its analytic gradient.

    phis is the full parameter vector in the variant's layout: leading RZ
    angle first (from_z variants), core rotation azimuths, trailing RX/RZ
    angle last (up_to variants).
    """
    m = len(phis)
    n_core = m - int(variant.leading_rz) - int(variant.trailing is not None)
    if n_core < 0:
        raise ValueError(f"{variant.value} needs at least "
                         f"{variant.param_count(0)} parameter(s), got {m}")
    if m == 0:
        return phase_distance(goal, I2), []
    kinds = _factor_kinds(variant, n_core)
    f, g = _eval_batch(goal.conj(), kinds, np.asarray(phis, dtype=float)[None, :])
    return float(f[0]), [float(v) for v in g[0]]


def _bfgs_multistart(gconj: np.ndarray, kinds: list[str],
                     x0: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """BFGS with Armijo backtracking, run on all restarts at once."""
    x = x0.copy()
    n_batch, m = x.shape
    f, g = _eval_batch(gconj, kinds, x)
    hinv = np.tile(np.eye(m), (n_batch, 1, 1))
    active = np.ones(n_batch, dtype=bool)
    for _ in range(_MAXITER):
        active &= (np.abs(g).max(axis=1) > _GTOL) & (f > _FSTOP)
        if not active.any():
            break
        p = -(hinv @ g[:, :, None])[:, :, 0]
        gtp = (g * p).sum(axis=1)
        bad = active & (gtp >= 0)
        if bad.any():  # not a descent direction: reset to steepest descent
            p[bad] = -g[bad]
            hinv[bad] = np.eye(m)
            gtp = (g * p).sum(axis=1)

        step = np.where(active, 1.0, 0.0)
        xn, fn, gn = x.copy(), f.copy(), g.copy()
        need = active.copy()
        for _ in range(30):
            xt = x + step[:, None] * p
            ft, gt = _eval_batch(gconj, kinds, xt)
            ok = need & (ft <= f + 1e-4 * step * gtp)
            xn[ok], fn[ok], gn[ok] = xt[ok], ft[ok], gt[ok]
            need &= ~ok
            if not need.any():
                break
            step = np.where(need, step * 0.5, step)
            if step[need].max() < 1e-13:
                break
        active &= ~need  # line search exhausted: converged as far as it goes
        # no measurable progress means the restart sits on its plateau
        active &= (f - fn) > 1e-15 * (1.0 + np.abs(fn))

        s = xn - x
        y = gn - g
        sy = (s * y).sum(axis=1)
        upd = active & (sy > 1e-14)
        if upd.any():
            hy = (hinv @ y[:, :, None])[:, :, 0]
            yhy = (y * hy).sum(axis=1)
            with np.errstate(divide="ignore", invalid="ignore"):
                t1 = (s[:, :, None] * s[:, None, :]) * \
                    ((sy + yhy) / (sy * sy))[:, None, None]
                t2 = (hy[:, :, None] * s[:, None, :]
                      + s[:, :, None] * hy[:, None, :]) / sy[:, None, None]
                hnew = hinv + t1 - t2
            hinv[upd] = hnew[upd]
        x, f, g = xn, fn, gn
    return x, f


_starts: dict[tuple[int, int], np.ndarray] = {}


def _start_points(seed: int, m: int) -> np.ndarray:
    key = (seed, m)
    if key not in _starts:
        rng = np.random.default_rng(seed)
        _starts[key] = rng.uniform(-math.pi, math.pi, size=(RESTARTS, m))
    return _starts[key]


_minimize_cache: dict[tuple, tuple[list[float], float]] = {}


def minimize(goal: np.ndarray, variant: Variant, n_core: int,
             seed: int = 0) -> tuple[list[float], float]:
    """Best (phis, f) over RESTARTS random starts, deterministic in seed.

    n_core is the number of rphi(., pi/2) factors; boundary angles are added
    per the variant. Ties go to the lowest restart index.
    """
    if not 0 <= n_core <= 5:
        raise ValueError(f"rotation count {n_core} outside 0..5")
    m = variant.param_count(n_core)
    if m == 0:
        return [], phase_distance(goal, I2)
    key = (goal.tobytes(), variant, n_core, seed)
    hit = _minimize_cache.get(key)
    if hit is not None:
        return list(hit[0]), hit[1]
    x0 = _start_points(seed, m)
    xs, fs = _bfgs_multistart(goal.conj(), _factor_kinds(variant, n_core), x0)
    best = int(np.argmin(fs))
    result = [float(v) for v in xs[best]], float(fs[best])
    _minimize_cache[key] = result
    return list(result[0]), result[1]


def _pack(variant: Variant, phis: list[float], f: float,
          used_fallback: bool = False) -> DecompResult:
    lead = phis[0] if variant.leading_rz else None
    core = phis[int(variant.leading_rz):len(phis) - int(variant.trailing is not None)]
    trail = phis[-1] if variant.trailing is not None else None
    return DecompResult(tuple(core), lead, variant.trailing, trail, f,
                        variant, used_fallback)


# Acceptance prefers machine-precision fits: a fit that merely clears the
# user tolerance carries sqrt(f)/2 of real operator error into the output,
# which compounds across runs. Only when no rotation count reaches _TIGHT
# do we settle for the first count under the tolerance.
_TIGHT = 1e-10


def _accept(goal: np.ndarray, variant: Variant, n_core: int, phis: list[float],
            f: float, bar: float, seed: int) -> DecompResult:
    if variant.trailing == "rx":
        # A commuted RX is free here but joins the next run on the qubit;
        # prefer an exact ending when it costs no extra rotations.
        sib = variant.exact_ending
        sphis, sf = minimize(goal, sib, n_core, seed)
        if sf < bar:
            return _pack(sib, sphis, sf)
    return _pack(variant, phis, f)


def _search(goal: np.ndarray, variant: Variant, tolerance: float,
            seed: int) -> DecompResult | None:
    has_boundary = variant.leading_rz or variant.trailing is not None
    strict = min(tolerance, _TIGHT)
    loose: tuple[int, list[float], float] | None = None
    for n_core in range(0 if has_boundary else 1, 5):
        phis, f = minimize(goal, variant, n_core, seed)
        if f < strict:
            return _accept(goal, variant, n_core, phis, f, strict, seed)
        if loose is None and f < tolerance:
            loose = (n_core, phis, f)
    if loose is not None:
        return _accept(goal, variant, loose[0], loose[1], loose[2],
                       tolerance, seed)
    return None


def select_variant(context: Context, fresh: bool, opts: OptFlags) -> Variant:
    from_z = fresh and opts.from_rz
    if context is Context.BEFORE_XX and opts.rx_commute:
        return Variant.FROM_Z_UP_TO_X if from_z else Variant.UP_TO_X
    if context is Context.BEFORE_MEASURE and opts.up_to_rz:
        return Variant.FROM_Z_UP_TO_Z if from_z else Variant.UP_TO_Z
    return Variant.FROM_Z_EXACT if from_z else Variant.EXACT


_cache: dict[tuple, DecompResult] = {}


def clear_cache() -> None:
    _cache.clear()
    _minimize_cache.clear()


def decompose(goal: GoalUnitary, opts: OptFlags, tolerance: float = 1e-4,
              seed: int = 0) -> DecompResult:
    """Decompose a run product into native rotations under the boundary
    freedoms allowed by its context.

    Order of business: skip outright if G is the identity (when enabled),
    pick the variant from context/freshness/flags, search n = 0..4, and for
    an up-to-RX variant that exhausts n = 4, fall back to its exact ending.
    """
    key = (goal.matrix.tobytes(), goal.context, goal.fresh, opts.rx_commute,
           opts.up_to_rz, opts.from_rz, opts.skip_identity, tolerance, seed)
    hit = _cache.get(key)
    if hit is not None:
        return hit

    g = goal.matrix
    result = None
    if opts.skip_identity:
        f_id = phase_distance(g, I2)
        if f_id < tolerance:
            result = DecompResult((), None, None, None, f_id, Variant.EXACT)
    if result is None:
        variant = select_variant(goal.context, goal.fresh, opts)
        result = _search(g, variant, tolerance, seed)
        if result is None and variant.trailing == "rx":
            fallback = _search(g, variant.exact_ending, tolerance, seed)
            if fallback is not None:
                result = replace(fallback, used_fallback=True)
    if result is None:
        raise DecompositionFailed(
            f"no decomposition under {tolerance} within four rotations "
            f"(context {goal.context.value}, fresh={goal.fresh})")
    _cache[key] = result
    return result
