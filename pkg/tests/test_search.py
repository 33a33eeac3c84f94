import math

import numpy as np
import pytest

from pfepr.correlations import Model
from pfepr.presets import fig2_geometry, fig5_geometry
from pfepr.search import (
    ScanSpec,
    chsh_axes_objective,
    model_gap,
    optimize,
    preset_objective,
    scan,
    sph_direction,
)

X = np.array([1.0, 0.0, 0.0])
Z = np.array([0.0, 0.0, 1.0])


def fig2_theta0_oracle(v):
    correction = (3.0 * v**4 / 4.0) / (
        (2.0 - 1.5 * v * v) * (1.0 + math.sqrt(1.0 - v * v)) ** 2
    )
    return -1.0 + correction


def test_sph_direction_is_unit():
    rng = np.random.default_rng(67)
    for _ in range(200):
        vec = sph_direction(rng.uniform(0, 2 * math.pi), rng.uniform(0, math.pi))
        assert np.linalg.norm(vec) == pytest.approx(1.0, abs=1e-14)
    assert np.allclose(sph_direction(0.0, 0.0), [0, 0, 1], atol=1e-15)


# ---------------------------------------------------------------------------
# model_gap
# ---------------------------------------------------------------------------


def test_model_gap_vanishes_at_rest():
    geom = fig2_geometry(0.4, 0.0)
    assert model_gap(Model.NW_HALF, Model.CM_HALF, geom) == pytest.approx(0.0, abs=1e-15)


def test_model_gap_spin_one_perpendicular():
    geom = fig5_geometry(math.pi / 2.0, 0.8)  # a = b = y, v along x
    assert model_gap(Model.NW_ONE, Model.CM_ONE, geom) == pytest.approx(0.0, abs=1e-12)


def test_model_gap_spin_one_oblique_anchor():
    # omega = pi/4, v = 0.8: exact gap -2304/31331
    geom = fig5_geometry(math.pi / 4.0, 0.8)
    assert model_gap(Model.NW_ONE, Model.CM_ONE, geom) == pytest.approx(
        -2304.0 / 31331.0, abs=1e-12
    )


def test_model_gap_rejects_mixed_spin_sectors():
    with pytest.raises(ValueError, match="spin sectors"):
        model_gap(Model.NW_HALF, Model.NW_ONE, fig2_geometry(0.0, 0.1))


# ---------------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------------


def test_scan_fig2_deviation_grid():
    spec = ScanSpec(
        models=(Model.NW_HALF,),
        preset="fig2",
        objective="deviation",
        sweep={"v": (0.0, 0.8, 3)},
        fixed={"theta": 0.0},
    )
    rows = scan(spec)
    assert len(rows) == 3
    speeds = [row.params["v"] for row in rows]
    assert speeds == [0.0, 0.4, 0.8]
    for row, v in zip(rows, speeds):
        assert row.error is None
        assert row.value == pytest.approx(fig2_theta0_oracle(v) + 1.0, abs=1e-12)
    assert rows[2].value == pytest.approx(3.0 / 26.0, abs=1e-12)


def test_scan_is_deterministic():
    spec = ScanSpec(
        models=(Model.NW_ONE,),
        preset="fig9",
        objective="bell_mermin",
        sweep={"v": (0.0, 0.9, 11)},
    )
    first = scan(spec)
    second = scan(spec)
    assert first == second


def test_scan_fig9_grid_peaks_near_analytic_maximizer():
    spec = ScanSpec(
        models=(Model.NW_ONE,),
        preset="fig9",
        objective="bell_mermin",
        sweep={"v": (0.0, 0.99, 101)},
    )
    rows = scan(spec)
    assert len(rows) == 101
    best = max(rows, key=lambda row: row.value)
    grid = np.linspace(0.0, 0.99, 101)
    nearest = grid[np.argmin(np.abs(grid - (math.sqrt(2.0) - 1.0)))]
    assert best.params["v"] == pytest.approx(nearest, abs=1e-12)
    assert best.value == pytest.approx(3.0 / (2.0 * math.sqrt(2.0)), abs=1e-4)


def test_scan_flags_invalid_rows_instead_of_dropping():
    # spin-1 model on the non-back-to-back fig2 velocities fails pointwise
    spec = ScanSpec(
        models=(Model.NW_ONE,),
        preset="fig2",
        objective="correlation",
        sweep={"v": (0.1, 0.5, 3)},
        fixed={"theta": 0.0},
    )
    rows = scan(spec)
    assert len(rows) == 3
    for row in rows:
        assert row.value is None
        assert "c.m. frame" in row.error


def test_scan_spec_validation():
    with pytest.raises(ValueError, match="at least 2 steps"):
        ScanSpec(
            models=(Model.NW_HALF,),
            preset="fig2",
            objective="deviation",
            sweep={"v": (0.0, 0.8, 1)},
            fixed={"theta": 0.0},
        )
    with pytest.raises(ValueError, match="v range"):
        ScanSpec(
            models=(Model.NW_HALF,),
            preset="fig2",
            objective="deviation",
            sweep={"v": (0.0, 1.0, 5)},
            fixed={"theta": 0.0},
        )
    with pytest.raises(ValueError, match="needs parameters"):
        ScanSpec(
            models=(Model.NW_HALF,),
            preset="fig2",
            objective="deviation",
            sweep={"v": (0.0, 0.8, 5)},
        )
    with pytest.raises(ValueError, match="exactly two models"):
        ScanSpec(
            models=(Model.NW_HALF,),
            preset="fig2",
            objective="model_gap",
            sweep={"v": (0.0, 0.8, 5)},
            fixed={"theta": 0.0},
        )
    with pytest.raises(ValueError, match="needs preset"):
        ScanSpec(
            models=(Model.NW_ONE,),
            preset="fig2",
            objective="bell_mermin",
            sweep={"v": (0.0, 0.8, 5)},
        )


def test_scan_model_gap_rows():
    spec = ScanSpec(
        models=(Model.NW_ONE, Model.CM_ONE),
        preset="fig5",
        objective="model_gap",
        sweep={"v": (0.0, 0.8, 5)},
        fixed={"omega": math.pi / 4.0},
    )
    rows = scan(spec)
    assert len(rows) == 5
    assert rows[0].label == "gap(nw-one,cm-one)"
    assert rows[0].value == pytest.approx(0.0, abs=1e-15)
    assert rows[-1].value == pytest.approx(-2304.0 / 31331.0, abs=1e-12)


# ---------------------------------------------------------------------------
# optimize
# ---------------------------------------------------------------------------


def test_optimize_bell_mermin_over_velocity():
    objective, free, bounds = preset_objective(
        "bell_mermin", (Model.NW_ONE,), "fig9", {}
    )
    result = optimize(objective, free, bounds)
    assert result.best_value == pytest.approx(3.0 / (2.0 * math.sqrt(2.0)), abs=1e-6)
    assert result.best_params["v"] == pytest.approx(math.sqrt(2.0) - 1.0, abs=1e-4)
    assert result.converged


def test_optimize_reproduces_best_value_exactly():
    objective, free, bounds = preset_objective(
        "bell_mermin", (Model.NW_ONE,), "fig9", {}
    )
    result = optimize(objective, free, bounds)
    assert objective(result.best_params) == result.best_value


def test_optimize_deviation_at_rest_is_zero():
    objective, free, bounds = preset_objective(
        "deviation", (Model.NW_HALF,), "fig2", {"v": 0.0}
    )
    assert free == ["theta"]
    result = optimize(objective, free, bounds)
    assert result.best_value == pytest.approx(0.0, abs=1e-12)


def test_optimize_beats_coarse_grid():
    objective, free, bounds = preset_objective(
        "deviation", (Model.CM_HALF,), "fig2", {}
    )
    result = optimize(objective, free, bounds)
    grid_best = -math.inf
    for theta in np.linspace(*bounds["theta"], 17):
        for v in np.linspace(*bounds["v"], 17):
            grid_best = max(grid_best, objective({"theta": theta, "v": v}))
    assert result.best_value >= grid_best


def test_optimize_is_deterministic():
    objective, free, bounds = preset_objective(
        "bell_mermin", (Model.CM_ONE,), "fig9", {}
    )
    first = optimize(objective, free, bounds)
    second = optimize(objective, free, bounds)
    assert first.best_params == second.best_params
    assert first.best_value == second.best_value


def test_optimize_discards_failing_starts():
    calls = {"n": 0}

    def flaky(params):
        calls["n"] += 1
        if params["x"] < 0.5:
            raise ValueError("left half is invalid")
        return -((params["x"] - 0.7) ** 2)

    with pytest.warns(UserWarning, match="discarding optimizer start"):
        result = optimize(flaky, ["x"], {"x": (0.0, 1.0)}, n_starts=8, prescan=False)
    assert result.best_params["x"] == pytest.approx(0.7, abs=1e-6)


def test_optimize_errors_when_every_start_fails():
    def broken(params):
        raise ValueError("nope")

    with pytest.warns(UserWarning):
        with pytest.raises(RuntimeError, match="all optimizer starts failed"):
            optimize(broken, ["x"], {"x": (0.0, 1.0)}, n_starts=4, prescan=False)


def test_optimize_pf_chsh_reaches_tsirelson():
    objective, free, bounds = chsh_axes_objective(Model.PF_SAME_FRAME)
    result = optimize(objective, free, bounds, n_starts=16)
    ts = 2.0 * math.sqrt(2.0)
    assert ts - 1e-6 <= result.best_value <= ts + 1e-12
