"""Grid scans and derivative-free maximization over geometry parameters.

Measurement axes are parametrized by spherical angles so the unit-norm
constraint is built in; velocities are box-bounded below the speed of
light.  The optimizer is a deterministic multi-start Nelder-Mead: a fixed
unscrambled Sobol point set provides the starts (reproducibility over
marginal search power), each start is polished by chained simplex runs,
and for low-dimensional problems a coarse grid pre-scan seeds one extra
start so the result can never be worse than the best grid point.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

import numpy as np
from scipy.optimize import minimize
from scipy.stats import qmc

from .correlations import Geometry, Model, baseline, correlation, deviation
from .inequalities import bell_mermin, chsh
from . import presets

OBJECTIVES = ("correlation", "deviation", "chsh", "bell_mermin", "model_gap")

#: Velocity upper bound used in optimization; stays clear of the c.m. spin-1
#: singularity guard at |v| -> 1.
V_MAX = 1.0 - 1e-6

ANGLE_BOUNDS = (0.0, 2.0 * math.pi)
POLAR_BOUNDS = (0.0, math.pi)

DEFAULT_STARTS = 32
DEFAULT_RESTARTS = 3
PRESCAN_POINTS = 17
PRESCAN_MAX_DIM = 3


def sph_direction(azimuth: float, polar: float) -> np.ndarray:
    """Unit vector from spherical angles (azimuth about z, polar from +z)."""
    sin_pol = math.sin(polar)
    return np.array(
        [sin_pol * math.cos(azimuth), sin_pol * math.sin(azimuth), math.cos(polar)]
    )


def model_gap(model1: Model, model2: Model, geometry: Geometry) -> float:
    """Difference C_model1 - C_model2 at one geometry."""
    if model1.spin is not model2.spin:
        raise ValueError(
            f"models {model1.value} and {model2.value} live in different spin sectors"
        )
    return correlation(model1, geometry) - correlation(model2, geometry)


# ---------------------------------------------------------------------------
# Grid scans
# ---------------------------------------------------------------------------

_PRESET_PARAMS = {
    "fig2": ("theta", "v"),
    "fig5": ("omega", "v"),
    "fig9": ("v",),
    "fig10": ("v",),
}

# Which presets carry the geometry each objective needs.
_OBJECTIVE_PRESETS = {
    "correlation": ("fig2", "fig5"),
    "deviation": ("fig2", "fig5"),
    "model_gap": ("fig2", "fig5"),
    "chsh": ("fig10",),
    "bell_mermin": ("fig9",),
}


def _check_objective_preset(objective: str, preset: str) -> None:
    if objective not in OBJECTIVES:
        raise ValueError(f"unknown objective {objective!r}")
    if preset not in _PRESET_PARAMS:
        raise ValueError(f"unknown preset {preset!r}")
    if preset not in _OBJECTIVE_PRESETS[objective]:
        allowed = ", ".join(_OBJECTIVE_PRESETS[objective])
        raise ValueError(
            f"objective {objective!r} needs preset {allowed}, got {preset!r}"
        )


@dataclass(frozen=True)
class ScanSpec:
    """Dense-grid evaluation request.

    ``sweep`` maps parameter names to (start, stop, steps) inclusive ranges;
    insertion order defines the row-major sweep order (first entry is the
    outermost loop).  Parameters a preset needs but that are not swept must
    appear in ``fixed``.
    """

    models: tuple[Model, ...]
    preset: str
    objective: str
    sweep: dict[str, tuple[float, float, int]]
    fixed: dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "models", tuple(self.models))
        _check_objective_preset(self.objective, self.preset)
        if not self.models:
            raise ValueError("at least one model is required")
        if self.objective == "model_gap" and len(self.models) != 2:
            raise ValueError("model_gap scans need exactly two models")
        if not self.sweep:
            raise ValueError("sweep must name at least one parameter")
        for name, (start, stop, steps) in self.sweep.items():
            if steps < 2:
                raise ValueError(f"sweep {name!r} needs at least 2 steps, got {steps}")
            if not (math.isfinite(start) and math.isfinite(stop)) or stop < start:
                raise ValueError(f"sweep {name!r} has an empty or invalid range")
            if name == "v" and not (0.0 <= start and stop <= 1.0 - 1e-9):
                raise ValueError("v range must stay within [0, 1 - 1e-9]")
        needed = set(_PRESET_PARAMS[self.preset])
        supplied = set(self.sweep) | set(self.fixed)
        missing = needed - supplied
        if missing:
            raise ValueError(
                f"preset {self.preset!r} needs parameters {sorted(missing)}"
            )


@dataclass(frozen=True)
class ScanRow:
    params: dict[str, float]
    label: str
    value: float | None
    aux: dict[str, float] = field(default_factory=dict)
    error: str | None = None


def preset_geometry(preset: str, params: Mapping[str, float]):
    if preset == "fig2":
        return presets.fig2_geometry(params["theta"], params["v"])
    if preset == "fig5":
        return presets.fig5_geometry(params["omega"], params["v"])
    raise ValueError(f"preset {preset!r} does not define a correlation geometry")


def _point(objective: str, models: Sequence[Model],
           preset: str, params: Mapping[str, float]) -> tuple[str, float, dict]:
    """Evaluate one grid point; returns (label, value, companion columns)."""
    model = models[0]
    if objective == "chsh":
        result = chsh(model, presets.fig10_config(params["v"]))
        return model.value, result.value, {"margin": result.margin}
    if objective == "bell_mermin":
        result = bell_mermin(model, presets.fig9_config(params["v"]))
        return model.value, result.value, {"margin": result.margin}
    geom = preset_geometry(preset, params)
    if objective == "model_gap":
        gap = model_gap(models[0], models[1], geom)
        return f"gap({models[0].value},{models[1].value})", gap, {}
    corr = correlation(model, geom)
    dev = corr - baseline(geom, model.spin)
    if objective == "correlation":
        return model.value, corr, {"delta": dev}
    return model.value, dev, {"C": corr}


def scan(spec: ScanSpec) -> list[ScanRow]:
    """Evaluate the objective on the full grid, in deterministic sweep order.

    Singular points become error-flagged rows rather than being dropped.
    """
    names = list(spec.sweep)
    grids = [np.linspace(*spec.sweep[name]) for name in names]
    model_sets: list[tuple[Model, ...]]
    if spec.objective == "model_gap":
        model_sets = [spec.models]
    else:
        model_sets = [(m,) for m in spec.models]

    rows: list[ScanRow] = []
    for models in model_sets:
        for values in itertools.product(*grids):
            params = dict(spec.fixed)
            params.update(zip(names, (float(x) for x in values)))
            try:
                label, value, aux = _point(spec.objective, models, spec.preset, params)
                rows.append(ScanRow(params=params, label=label, value=value, aux=aux))
            except ValueError as exc:
                label = ",".join(m.value for m in models)
                rows.append(
                    ScanRow(params=params, label=label, value=None, error=str(exc))
                )
    return rows


# ---------------------------------------------------------------------------
# Derivative-free maximization
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OptResult:
    best_params: dict[str, float]
    best_value: float
    evaluations: int
    converged: bool
    trace: list[tuple[dict[str, float], float]] | None = None


def optimize(
    objective: Callable[[Mapping[str, float]], float],
    free_params: Sequence[str],
    bounds: Mapping[str, tuple[float, float]],
    *,
    n_starts: int = DEFAULT_STARTS,
    restarts: int = DEFAULT_RESTARTS,
    prescan: bool | None = None,
    xatol: float = 1e-10,
    fatol: float = 1e-13,
    maxiter: int | None = None,
    keep_trace: bool = False,
) -> OptResult:
    """Maximize ``objective`` over the named box-bounded parameters.

    Deterministic: the start set is a fixed Sobol sequence mapped into the
    bounds, ties are broken by lexicographic parameter order, and the
    returned ``best_value`` is the objective re-evaluated at
    ``best_params``.
    """
    names = list(free_params)
    ndim = len(names)
    if ndim == 0:
        raise ValueError("no free parameters to optimize")
    lo = np.array([bounds[n][0] for n in names], dtype=float)
    hi = np.array([bounds[n][1] for n in names], dtype=float)
    if np.any(hi < lo):
        raise ValueError("invalid bounds: upper end below lower end")
    if maxiter is None:
        maxiter = max(2000, 1000 * ndim)

    evaluations = 0

    def call(x: np.ndarray) -> float:
        nonlocal evaluations
        evaluations += 1
        point = np.clip(x, lo, hi)
        return float(objective(dict(zip(names, point.tolist()))))

    def negated(x: np.ndarray) -> float:
        try:
            return -call(x)
        except ValueError:
            return math.inf

    sobol = qmc.Sobol(d=ndim, scramble=False)
    starts = [lo + row * (hi - lo) for row in sobol.random(n_starts)]

    if prescan is None:
        prescan = ndim <= PRESCAN_MAX_DIM
    if prescan:
        axes = [np.linspace(lo[i], hi[i], PRESCAN_POINTS) for i in range(ndim)]
        grid_best, grid_best_x = -math.inf, None
        for point in itertools.product(*axes):
            x = np.array(point)
            try:
                value = call(x)
            except ValueError:
                continue
            if value > grid_best:
                grid_best, grid_best_x = value, x
        if grid_best_x is not None:
            starts.append(grid_best_x)

    candidates: list[tuple[float, tuple[float, ...], bool]] = []
    trace: list[tuple[dict[str, float], float]] = []
    for start in starts:
        try:
            call(start)
        except ValueError as exc:
            warnings.warn(f"discarding optimizer start {start}: {exc}", stacklevel=2)
            continue
        x = start
        converged = False
        for _ in range(restarts):
            result = minimize(
                negated,
                x,
                method="Nelder-Mead",
                options={
                    "xatol": xatol,
                    "fatol": fatol,
                    "maxiter": maxiter,
                    "maxfev": maxiter,
                },
            )
            x = np.clip(result.x, lo, hi)
            converged = bool(result.success)
        try:
            value = call(x)
        except ValueError:
            continue
        candidates.append((value, tuple(x.tolist()), converged))
        if keep_trace:
            trace.append((dict(zip(names, x.tolist())), value))

    if not candidates:
        raise RuntimeError("all optimizer starts failed")

    candidates.sort(key=lambda item: (-item[0], item[1]))
    _, best_x, converged = candidates[0]
    best_params = dict(zip(names, best_x))
    best_value = call(np.array(best_x))
    return OptResult(
        best_params=best_params,
        best_value=best_value,
        evaluations=evaluations,
        converged=converged,
        trace=trace if keep_trace else None,
    )


# ---------------------------------------------------------------------------
# Ready-made objectives for the CLI and notebooks
# ---------------------------------------------------------------------------

AXIS_ANGLE_PARAMS = (
    "a_az", "a_pol", "c_az", "c_pol", "b_az", "b_pol", "d_az", "d_pol",
)


def chsh_axes_objective(model: Model, v: float = 0.0):
    """CHSH value as a function of all four axes (spherical angles).

    Relativistic models use the coplanar two-observer velocity geometry
    scaled to speed ``v``; preferred-frame models ignore it.
    """
    from .inequalities import ChshConfig

    v_A = v * presets.FIG2_VA_HAT
    v_B = v * presets.FIG2_VB_HAT

    def objective(params: Mapping[str, float]) -> float:
        cfg = ChshConfig(
            a=sph_direction(params["a_az"], params["a_pol"]),
            c=sph_direction(params["c_az"], params["c_pol"]),
            b=sph_direction(params["b_az"], params["b_pol"]),
            d=sph_direction(params["d_az"], params["d_pol"]),
            v_A=v_A,
            v_B=v_B,
        )
        return chsh(model, cfg).value

    bounds = {}
    for name in AXIS_ANGLE_PARAMS:
        bounds[name] = POLAR_BOUNDS if name.endswith("_pol") else ANGLE_BOUNDS
    return objective, list(AXIS_ANGLE_PARAMS), bounds


def preset_objective(objective_name: str, models: Sequence[Model],
                     preset: str, fixed: Mapping[str, float]):
    """Objective over whichever preset parameters are not fixed."""
    _check_objective_preset(objective_name, preset)
    models = tuple(models)
    free = [p for p in _PRESET_PARAMS[preset] if p not in fixed]
    if not free:
        raise ValueError("all preset parameters are fixed; nothing to optimize")

    def objective(params: Mapping[str, float]) -> float:
        point = dict(fixed)
        point.update(params)
        _, value, _ = _point(objective_name, models, preset, point)
        return value

    bounds = {p: ((0.0, V_MAX) if p == "v" else ANGLE_BOUNDS) for p in free}
    return objective, free, bounds
