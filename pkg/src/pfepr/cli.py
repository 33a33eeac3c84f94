"""Command-line front end: correlations, inequalities, scans, optimization,
power studies, and figure-reproduction datasets.

All file output follows one row schema, ``v,param,model,C,delta,extra``
(``param`` is theta/omega in radians; ``extra`` holds the inequality margin,
the model gap, or an error message where applicable).  CSV files start with
a ``#`` comment header recording model, geometry, grid, seed, and tool
version; JSON files carry the same information under a ``meta`` key next to
the ``rows`` array.  Output is byte-deterministic for a given command line.

Exit codes: 0 success, 2 input validation, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import __version__, presets
from .correlations import (
    Model,
    PairGeometry,
    PfGeometry,
    Spin,
    baseline,
    correlation,
    pf_same_frame,
)
from .inequalities import ChshConfig, MerminConfig, bell_mermin, chsh
from .sampling import PowerSpec, required_events
from .search import (
    ScanSpec,
    chsh_axes_objective,
    optimize,
    preset_objective,
    scan,
)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_IO = 3

CSV_COLUMNS = ("v", "param", "model", "C", "delta", "extra")

DEFAULT_DIGITS = 9
DEFAULT_FIGURE_GRID = (0.0, 0.995, 201)

# Angle families for the deviation datasets; the spin-1 family mirrors the
# spin-1/2 one (recorded in the file headers).
FIGURE_ANGLES = (0.0, math.pi / 4.0, math.pi / 3.0, 2.0 * math.pi / 3.0)

_GEOMETRY_NOTES = {
    "fig2": "vA=v(-1/2,-sqrt3/2,0) vB=v(1/2,-sqrt3/2,0) a=(cos theta,sin theta,0) b=(1,0,0)",
    "fig5": "vA=v(-1,0,0) vB=v(1,0,0) a=b=(cos omega,sin omega,0)",
    "fig9": "a=(0,0,1) b=(sqrt3/2,0,-1/2) c=(-sqrt3/2,0,-1/2) vhat=(0,-1,0)",
    "fig10": "a=(-1,1,0)/sqrt2 c=(1,1,0)/sqrt2 b=(0,1,0) d=(1,0,0) with fig2 velocity geometry",
}


# ---------------------------------------------------------------------------
# Parsing and formatting helpers
# ---------------------------------------------------------------------------


def vector(text: str) -> np.ndarray:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"expected three comma-separated numbers, got {text!r}")
    try:
        return np.array([float(p) for p in parts])
    except ValueError:
        raise ValueError(f"non-numeric component in {text!r}") from None


def angle(text: str) -> float:
    stripped = text.strip()
    if stripped.endswith("deg"):
        return math.radians(float(stripped[:-3]))
    return float(stripped)


def grid_range(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"expected start:stop:steps, got {text!r}")
    return float(parts[0]), float(parts[1]), int(parts[2])


def model_arg(text: str) -> Model:
    return Model.from_name(text)


def model_list(text: str) -> tuple[Model, ...]:
    return tuple(Model.from_name(part.strip()) for part in text.split(","))


def format_number(value, digits: int) -> str:
    if value is None:
        return ""
    number = float(value)
    if number == 0.0:
        number = 0.0  # normalize -0.0
    return f"{number:.{digits}g}"


def _round_sig(value, digits: int):
    if value is None:
        return None
    return float(format_number(value, digits))


def vector_text(vec, digits: int) -> str:
    return ",".join(format_number(x, digits) for x in vec)


# ---------------------------------------------------------------------------
# Dataset writing
# ---------------------------------------------------------------------------


def _csv_cell(value, digits: int) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        if "," in value or '"' in value or "\n" in value:
            return '"' + value.replace('"', '""') + '"'
        return value
    return format_number(value, digits)


def render_dataset(meta: dict, rows: list[dict], fmt: str, digits: int) -> str:
    if fmt == "json":
        payload = {
            "meta": meta,
            "rows": [
                {
                    "v": _round_sig(row.get("v"), digits),
                    "param": _round_sig(row.get("param"), digits),
                    "model": row.get("model"),
                    "C": _round_sig(row.get("C"), digits),
                    "delta": _round_sig(row.get("delta"), digits),
                    "extra": row.get("extra")
                    if isinstance(row.get("extra"), str)
                    else _round_sig(row.get("extra"), digits),
                }
                for row in rows
            ],
        }
        return json.dumps(payload, indent=1) + "\n"
    lines = [f"# pfepr {__version__}"]
    for key, value in meta.items():
        lines.append(f"# {key}: {value}")
    lines.append(",".join(CSV_COLUMNS))
    for row in rows:
        lines.append(
            ",".join(_csv_cell(row.get(column), digits) for column in CSV_COLUMNS)
        )
    return "\n".join(lines) + "\n"


def write_dataset(path, meta: dict, rows: list[dict], fmt: str, digits: int) -> None:
    text = render_dataset(meta, rows, fmt, digits)
    with open(path, "w", newline="\n", encoding="utf-8") as handle:
        handle.write(text)


def _meta(dataset: str, model: str, geometry: str, grid: str, seed) -> dict:
    return {
        "dataset": dataset,
        "model": model,
        "geometry": geometry,
        "grid": grid,
        "seed": "none" if seed is None else str(seed),
        "version": __version__,
    }


# ---------------------------------------------------------------------------
# Geometry resolution shared by correlate/power
# ---------------------------------------------------------------------------


def _require(args, names: list[str]) -> None:
    missing = [name for name in names if getattr(args, name, None) is None]
    if missing:
        flags = ", ".join("--" + name.replace("_", "") for name in missing)
        raise ValueError(f"missing required input: {flags}")


def _resolve_geometry(args, model: Model):
    """Build the geometry a correlation-style command refers to.

    Returns (geometry, echo) where echo is a list of key=value strings.
    """
    if args.preset is not None:
        if args.preset == "fig2":
            _require(args, ["theta", "v"])
            geom = presets.fig2_geometry(args.theta, args.v)
            echo = [f"preset=fig2 theta={args.theta:g} v={args.v:g}"]
        elif args.preset == "fig5":
            _require(args, ["omega", "v"])
            geom = presets.fig5_geometry(args.omega, args.v)
            echo = [f"preset=fig5 omega={args.omega:g} v={args.v:g}"]
        else:
            raise ValueError(
                f"preset {args.preset!r} defines an inequality configuration; "
                "use the inequality command"
            )
        return geom, echo

    _require(args, ["a", "b"])
    digits = args.digits
    if model in (Model.PF_EXACT, Model.PF_SMALL_U):
        u_A = args.uA if args.uA is not None else np.zeros(3)
        v_rel = args.vrel if args.vrel is not None else np.zeros(3)
        geom = PfGeometry(a=args.a, b=args.b, u_A=u_A, v_rel=v_rel)
        echo = [
            f"a={vector_text(geom.a, digits)} b={vector_text(geom.b, digits)} "
            f"uA={vector_text(geom.u_A, digits)} vrel={vector_text(geom.v_rel, digits)}"
        ]
        return geom, echo
    v_A = args.vA if args.vA is not None else np.zeros(3)
    v_B = args.vB if args.vB is not None else np.zeros(3)
    geom = PairGeometry(a=args.a, b=args.b, v_A=v_A, v_B=v_B)
    echo = [
        f"a={vector_text(geom.a, digits)} b={vector_text(geom.b, digits)} "
        f"vA={vector_text(geom.v_A, digits)} vB={vector_text(geom.v_B, digits)}"
    ]
    return geom, echo


def _geometry_speed(geom) -> float:
    if isinstance(geom, PairGeometry):
        return float(np.linalg.norm(geom.v_A))
    return float(np.linalg.norm(geom.u_A))


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------


def cmd_correlate(args) -> int:
    model = Model.from_name(args.model)
    spin = Spin(args.spin)
    if model is Model.PF_SAME_FRAME and args.preset is None:
        _require(args, ["a", "b"])
        value = pf_same_frame(args.a, args.b, spin)
        delta = 0.0
        echo = [f"a={vector_text(args.a, args.digits)} b={vector_text(args.b, args.digits)}"]
        speed = 0.0
        param = None
    else:
        geom, echo = _resolve_geometry(args, model)
        value = correlation(model, geom)
        delta = value - baseline(geom, model.spin)
        speed = _geometry_speed(geom)
        param = args.theta if args.theta is not None else args.omega
    digits = args.digits
    print(
        f"model={model.value} " + " ".join(echo)
        + f" C={format_number(value, digits)} delta={format_number(delta, digits)}"
    )
    if args.out:
        row = {
            "v": speed,
            "param": param,
            "model": model.value,
            "C": value,
            "delta": delta,
            "extra": None,
        }
        meta = _meta(
            "correlate", model.value, " ".join(echo), "single point", args.seed
        )
        write_dataset(args.out, meta, [row], args.format, digits)
    return EXIT_OK


def cmd_inequality(args) -> int:
    model = Model.from_name(args.model)
    if model.spin is Spin.ONE:
        kind = "bell-mermin"
    elif model is Model.PF_SAME_FRAME:
        if args.preset == "fig9" or args.spin == "one":
            kind = "bell-mermin"
        else:
            kind = "chsh"
    else:
        kind = "chsh"

    v = args.v if args.v is not None else 0.0
    if kind == "bell-mermin":
        if args.preset == "fig9":
            cfg = presets.fig9_config(v)
            echo = f"preset=fig9 v={v:g}"
        elif args.preset is not None:
            raise ValueError(f"preset {args.preset!r} does not define a Bell-Mermin configuration")
        else:
            _require(args, ["a", "b", "c"])
            vel = args.vA if args.vA is not None else np.zeros(3)
            cfg = MerminConfig(a=args.a, b=args.b, c=args.c, v=vel)
            echo = (
                f"a={vector_text(cfg.a, args.digits)} b={vector_text(cfg.b, args.digits)} "
                f"c={vector_text(cfg.c, args.digits)} v={vector_text(cfg.v, args.digits)}"
            )
        result = bell_mermin(model, cfg)
    else:
        if args.preset == "fig10":
            cfg = presets.fig10_config(v)
            echo = f"preset=fig10 v={v:g} (fig2 velocity geometry)"
        elif args.preset is not None:
            raise ValueError(f"preset {args.preset!r} does not define a CHSH configuration")
        else:
            _require(args, ["a", "c", "b", "d"])
            cfg = ChshConfig(
                a=args.a,
                c=args.c,
                b=args.b,
                d=args.d,
                v_A=args.vA if args.vA is not None else np.zeros(3),
                v_B=args.vB if args.vB is not None else np.zeros(3),
                u_A=args.uA if args.uA is not None else np.zeros(3),
                v_rel=args.vrel if args.vrel is not None else np.zeros(3),
            )
            echo = f"axes a,c,b,d explicit"
        result = chsh(model, cfg)

    digits = args.digits
    print(
        f"inequality={kind} model={model.value} {echo} "
        f"value={format_number(result.value, digits)} "
        f"bound={format_number(result.bound, digits)} "
        f"margin={format_number(result.margin, digits)} "
        f"violated={'true' if result.violated else 'false'}"
    )
    if args.out:
        row = {
            "v": v,
            "param": None,
            "model": model.value,
            "C": result.value,
            "delta": None,
            "extra": result.margin,
        }
        meta = _meta(f"inequality-{kind}", model.value, echo, "single point", args.seed)
        write_dataset(args.out, meta, [row], args.format, digits)
    return EXIT_OK


def _scan_rows_to_schema(spec: ScanSpec, rows) -> list[dict]:
    out = []
    for row in rows:
        record = {
            "v": row.params.get("v"),
            "param": row.params.get("theta", row.params.get("omega")),
            "model": row.label,
            "C": None,
            "delta": None,
            "extra": None,
        }
        if row.error is not None:
            record["extra"] = f"error: {row.error}"
        elif spec.objective == "correlation":
            record["C"] = row.value
            record["delta"] = row.aux.get("delta")
        elif spec.objective == "deviation":
            record["C"] = row.aux.get("C")
            record["delta"] = row.value
        elif spec.objective in ("chsh", "bell_mermin"):
            record["C"] = row.value
            record["extra"] = row.aux.get("margin")
        else:  # model_gap
            record["C"] = row.value
        out.append(record)
    return out


def cmd_scan(args) -> int:
    models = model_list(args.model)
    objective = args.objective.replace("-", "_")
    fixed = {}
    if args.theta is not None:
        fixed["theta"] = args.theta
    if args.omega is not None:
        fixed["omega"] = args.omega
    spec = ScanSpec(
        models=models,
        preset=args.preset,
        objective=objective,
        sweep={"v": args.grid},
        fixed=fixed,
    )
    rows = _scan_rows_to_schema(spec, scan(spec))
    grid_text = f"{args.grid[0]:g}:{args.grid[1]:g}:{args.grid[2]}"
    fixed_text = " ".join(f"{k}={fixed[k]:g}" for k in sorted(fixed))
    meta = _meta(
        f"scan-{args.objective}",
        ",".join(m.value for m in models),
        (_GEOMETRY_NOTES[args.preset] + (" " + fixed_text if fixed_text else "")),
        grid_text,
        args.seed,
    )
    text = render_dataset(meta, rows, args.format, args.digits)
    if args.out:
        with open(args.out, "w", newline="\n", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_optimize(args) -> int:
    models = model_list(args.model)
    objective_name = args.objective.replace("-", "_")
    if objective_name == "chsh" and args.preset is None:
        objective, free, bounds = chsh_axes_objective(
            models[0], v=args.v if args.v is not None else 0.0
        )
    else:
        if args.preset is None:
            raise ValueError("--preset is required unless optimizing chsh over free axes")
        fixed = {}
        if args.theta is not None:
            fixed["theta"] = args.theta
        if args.omega is not None:
            fixed["omega"] = args.omega
        if args.v is not None:
            fixed["v"] = args.v
        objective, free, bounds = preset_objective(
            objective_name, models, args.preset, fixed
        )
    result = optimize(
        objective, free, bounds, n_starts=args.starts, restarts=args.restarts
    )
    digits = args.digits
    params_text = " ".join(
        f"{name}={format_number(value, digits)}"
        for name, value in result.best_params.items()
    )
    print(
        f"objective={args.objective} model={args.model} "
        f"best_value={format_number(result.best_value, digits)} {params_text} "
        f"evaluations={result.evaluations} "
        f"converged={'true' if result.converged else 'false'}"
    )
    return EXIT_OK


def cmd_power(args) -> int:
    model_alt = Model.from_name(args.model)
    model_null = Model.from_name(args.null)
    geom, echo = _resolve_geometry(args, model_alt)
    spec = PowerSpec(
        model_null=model_null,
        model_alt=model_alt,
        alpha=args.alpha,
        power=args.power,
    )
    events = required_events(spec, geom)
    c_null = correlation(model_null, geom)
    c_alt = correlation(model_alt, geom)
    digits = args.digits
    print(
        f"model_null={model_null.value} model_alt={model_alt.value} "
        + " ".join(echo)
        + f" C_null={format_number(c_null, digits)} C_alt={format_number(c_alt, digits)}"
        f" delta_C={format_number(c_alt - c_null, digits)}"
        f" alpha={args.alpha:g} power={args.power:g} required_events={events}"
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# Figure datasets
# ---------------------------------------------------------------------------


def _figure_fig4(grid: np.ndarray, panel: str) -> list[dict]:
    model = Model.NW_HALF if panel == "a" else Model.CM_HALF
    rows = []
    for theta in FIGURE_ANGLES:
        for v in grid:
            geom = presets.fig2_geometry(theta, float(v))
            value = correlation(model, geom)
            delta = value - baseline(geom, Spin.HALF)
            extra = None
            if panel == "b":
                extra = correlation(Model.NW_HALF, geom) - value
            rows.append(
                {
                    "v": float(v),
                    "param": theta,
                    "model": model.value,
                    "C": value,
                    "delta": delta,
                    "extra": extra,
                }
            )
    return rows


def _figure_fig7(grid: np.ndarray) -> list[dict]:
    rows = []
    for omega in FIGURE_ANGLES:
        for v in grid:
            geom = presets.fig5_geometry(omega, float(v))
            value = correlation(Model.NW_ONE, geom)
            delta = value - baseline(geom, Spin.ONE)
            gap = value - correlation(Model.CM_ONE, geom)
            rows.append(
                {
                    "v": float(v),
                    "param": omega,
                    "model": Model.NW_ONE.value,
                    "C": value,
                    "delta": delta,
                    "extra": gap,
                }
            )
    return rows


def _figure_fig9(grid: np.ndarray) -> list[dict]:
    rows = []
    for model in (Model.PF_SAME_FRAME, Model.NW_ONE):
        for v in grid:
            result = bell_mermin(model, presets.fig9_config(float(v)))
            rows.append(
                {
                    "v": float(v),
                    "param": None,
                    "model": model.value,
                    "C": result.value,
                    "delta": None,
                    "extra": result.margin,
                }
            )
    return rows


def _figure_fig10(grid: np.ndarray) -> list[dict]:
    rows = []
    for model in (Model.PF_SAME_FRAME, Model.NW_HALF, Model.CM_HALF):
        for v in grid:
            result = chsh(model, presets.fig10_config(float(v)))
            rows.append(
                {
                    "v": float(v),
                    "param": None,
                    "model": model.value,
                    "C": result.value,
                    "delta": None,
                    "extra": result.margin,
                }
            )
    return rows


def figure_datasets(grid_spec: tuple[float, float, int]) -> dict[str, tuple[str, list[dict]]]:
    """All figure panels as (geometry note, rows), keyed by dataset name."""
    start, stop, steps = grid_spec
    if steps < 2:
        raise ValueError(f"grid needs at least 2 steps, got {steps}")
    if not (0.0 <= start and stop <= 1.0 - 1e-9 and start <= stop):
        raise ValueError("v grid must stay within [0, 1 - 1e-9]")
    grid = np.linspace(start, stop, steps)
    angles = "angles {0, pi/4, pi/3, 2pi/3}"
    return {
        "fig4a": (_GEOMETRY_NOTES["fig2"] + f"; {angles}", _figure_fig4(grid, "a")),
        "fig4b": (
            _GEOMETRY_NOTES["fig2"] + f"; {angles}; extra=C_nw-C_cm",
            _figure_fig4(grid, "b"),
        ),
        "fig7": (
            _GEOMETRY_NOTES["fig5"] + f"; {angles}; extra=C_nw-C_cm",
            _figure_fig7(grid),
        ),
        "fig9": (_GEOMETRY_NOTES["fig9"] + "; extra=margin", _figure_fig9(grid)),
        "fig10": (_GEOMETRY_NOTES["fig10"] + "; extra=margin", _figure_fig10(grid)),
    }

_FIGURE_MODELS = {
    "fig4a": "nw-half",
    "fig4b": "cm-half",
    "fig7": "nw-one",
    "fig9": "pf-same-frame,nw-one",
    "fig10": "pf-same-frame,nw-half,cm-half",
}


def cmd_figures(args) -> int:
    datasets = figure_datasets(args.grid)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    extension = "json" if args.format == "json" else "csv"
    grid_text = f"{args.grid[0]:g}:{args.grid[1]:g}:{args.grid[2]}"
    for name, (geometry_note, rows) in datasets.items():
        meta = _meta(name, _FIGURE_MODELS[name], geometry_note, grid_text, args.seed)
        write_dataset(out_dir / f"{name}.{extension}", meta, rows, args.format, args.digits)
        print(f"wrote {out_dir / f'{name}.{extension}'} ({len(rows)} rows)")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pfepr",
        description=(
            "EPR spin correlations for relativistic pairs: preferred-frame vs "
            "relativistic quantum mechanics, Bell-type inequalities, and "
            "experiment planning."
        ),
    )
    parser.add_argument("--version", action="version", version=f"pfepr {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--out", help="output file (or directory for figures)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--digits", type=int, default=DEFAULT_DIGITS,
                       help="significant digits in output (default 9)")
        p.add_argument("--seed", type=int, default=None,
                       help="seed recorded in output metadata")

    def add_geometry(p, axes=("a", "b", "c", "d")):
        for name in axes:
            p.add_argument(f"--{name}", type=vector, help=f"axis {name} as x,y,z")
        p.add_argument("--vA", type=vector, help="particle A velocity as x,y,z")
        p.add_argument("--vB", type=vector, help="particle B velocity as x,y,z")
        p.add_argument("--uA", type=vector, help="preferred-frame velocity in Alice's frame")
        p.add_argument("--vrel", type=vector, help="Bob's velocity relative to Alice")
        p.add_argument("--preset", choices=presets.PRESET_NAMES)
        p.add_argument("--theta", type=angle, help="fig2 analyzer angle (radians; 'deg' suffix allowed)")
        p.add_argument("--omega", type=angle, help="fig5 analyzer angle (radians; 'deg' suffix allowed)")
        p.add_argument("--v", type=float, help="speed in units of c")

    p = sub.add_parser("correlate", help="evaluate one correlation function")
    p.add_argument("--model", required=True)
    p.add_argument("--spin", choices=("half", "one"), default="half",
                   help="spin sector for the pf-same-frame baseline")
    add_geometry(p, axes=("a", "b"))
    add_common(p)
    p.set_defaults(handler=cmd_correlate)

    p = sub.add_parser("inequality", help="evaluate CHSH or Bell-Mermin")
    p.add_argument("--model", required=True)
    p.add_argument("--spin", choices=("half", "one"), default="half")
    add_geometry(p)
    add_common(p)
    p.set_defaults(handler=cmd_inequality)

    p = sub.add_parser("scan", help="sweep v on a dense grid")
    p.add_argument("--model", required=True,
                   help="model name, or two comma-separated names for model-gap")
    p.add_argument("--objective", default="correlation",
                   choices=("correlation", "deviation", "chsh", "bell-mermin", "model-gap"))
    p.add_argument("--preset", required=True, choices=presets.PRESET_NAMES)
    p.add_argument("--theta", type=angle)
    p.add_argument("--omega", type=angle)
    p.add_argument("--grid", type=grid_range, required=True, help="v grid as start:stop:steps")
    add_common(p)
    p.set_defaults(handler=cmd_scan)

    p = sub.add_parser("optimize", help="maximize an objective")
    p.add_argument("--model", required=True)
    p.add_argument("--objective", required=True,
                   choices=("correlation", "deviation", "chsh", "bell-mermin", "model-gap"))
    p.add_argument("--preset", choices=presets.PRESET_NAMES)
    p.add_argument("--theta", type=angle)
    p.add_argument("--omega", type=angle)
    p.add_argument("--v", type=float)
    p.add_argument("--starts", type=int, default=32)
    p.add_argument("--restarts", type=int, default=3)
    add_common(p)
    p.set_defaults(handler=cmd_optimize)

    p = sub.add_parser("power", help="required events to discriminate two models")
    p.add_argument("--model", required=True, help="alternative-hypothesis model")
    p.add_argument("--null", default="pf-same-frame", help="null-hypothesis model")
    p.add_argument("--alpha", type=float, default=0.05)
    p.add_argument("--power", type=float, default=0.8)
    add_geometry(p, axes=("a", "b"))
    add_common(p)
    p.set_defaults(handler=cmd_power)

    p = sub.add_parser("figures", help="write the figure-reproduction datasets")
    p.add_argument("--grid", type=grid_range, default=DEFAULT_FIGURE_GRID,
                   help="v grid as start:stop:steps (default 0:0.995:201)")
    add_common(p)
    p.set_defaults(handler=cmd_figures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
