import math

import numpy as np
import pytest

from pfepr.correlations import (
    Model,
    PairGeometry,
    PfGeometry,
    Spin,
    baseline,
    correlation,
    deviation,
    half_cm,
    half_nw,
    one_cm,
    one_nw,
    pf_exact,
    pf_same_frame,
    pf_small_u,
)
from pfepr.presets import fig2_geometry, fig5_geometry

X = np.array([1.0, 0.0, 0.0])
Y = np.array([0.0, 1.0, 0.0])
Z = np.array([0.0, 0.0, 1.0])


def random_axis(rng):
    vec = rng.normal(size=3)
    return vec / np.linalg.norm(vec)


def random_velocity(rng, vmax=0.99):
    vec = rng.normal(size=3)
    return vec * (rng.uniform(0.0, vmax) / np.linalg.norm(vec))


# Closed-form reduction of the Newton-Wigner spin-1/2 correlation in the
# coplanar two-observer geometry at theta = 0; used as an independent oracle.
def fig2_theta0_oracle(v):
    correction = (3.0 * v**4 / 4.0) / (
        (2.0 - 1.5 * v * v) * (1.0 + math.sqrt(1.0 - v * v)) ** 2
    )
    return -1.0 + correction


# c.m.-frame reduction of the center-of-mass spin-1/2 correlation: with
# v_A = -v_B the mixed term vanishes and only dot products survive.
def cm_frame_half_cm_oracle(a, b, v_vec):
    v2 = v_vec @ v_vec
    num = -(a @ b) * (1.0 - v2) - (a @ v_vec) * (b @ v_vec)
    den = math.sqrt(1.0 - v2 + (a @ v_vec) ** 2) * math.sqrt(1.0 - v2 + (b @ v_vec) ** 2)
    return num / den


# ---------------------------------------------------------------------------
# preferred-frame models
# ---------------------------------------------------------------------------


def test_pf_exact_same_frame_is_nonrelativistic_for_any_pf_speed():
    rng = np.random.default_rng(23)
    zero = np.zeros(3)
    for _ in range(1000):
        a = random_axis(rng)
        b = random_axis(rng)
        u_a = random_velocity(rng)
        geom = PfGeometry(a=a, b=b, u_A=u_a, v_rel=zero)
        assert pf_exact(geom) == pytest.approx(-(a @ b), abs=1e-12)
        assert pf_exact(geom) == pytest.approx(pf_same_frame(a, b, Spin.HALF), abs=1e-12)


def test_pf_exact_antiparallel_and_perpendicular():
    geom = PfGeometry(a=X, b=X, u_A=[0.2, 0.1, 0.0], v_rel=[0.0, 0.0, 0.0])
    assert pf_exact(geom) == pytest.approx(-1.0, abs=1e-12)
    geom = PfGeometry(a=Y, b=X, u_A=[0.2, 0.1, 0.0], v_rel=[0.0, 0.0, 0.0])
    assert pf_exact(geom) == pytest.approx(0.0, abs=1e-12)


def test_pf_exact_agrees_with_small_velocity_formula():
    geom = PfGeometry(a=Y, b=X, u_A=[1e-3, 0.0, 0.0], v_rel=[1e-3, -1e-3, 0.0])
    u_b = geom.u_B
    assert np.allclose(u_b, [0.0, 1e-3, 0.0], atol=1e-8)
    exact = pf_exact(geom)
    approx = pf_small_u(geom.a, geom.b, geom.u_A, u_b)
    assert abs(exact - approx) < 1e-8


def test_pf_small_u_hand_value():
    # a x b = (0,0,-1), u_A x u_B = (0,0,1e-6) -> C = 5e-7
    value = pf_small_u(Y, X, [1e-3, 0.0, 0.0], [0.0, 1e-3, 0.0])
    assert value == pytest.approx(5e-7, rel=1e-12)


def test_pf_small_u_parallel_pf_velocities():
    rng = np.random.default_rng(29)
    for _ in range(100):
        a, b = random_axis(rng), random_axis(rng)
        u = random_velocity(rng, vmax=0.05)
        assert pf_small_u(a, b, u, u) == pytest.approx(-(a @ b), abs=1e-15)


def test_pf_small_u_parallel_axes():
    value = pf_small_u(X, X, [0.01, 0.0, 0.0], [0.0, 0.01, 0.0])
    assert value == pytest.approx(-1.0, abs=1e-15)


def test_pf_small_u_warns_for_large_speeds():
    with pytest.warns(UserWarning, match="approximation degrades"):
        pf_small_u(X, Y, [0.5, 0.0, 0.0], [0.0, 0.01, 0.0])


def test_pf_same_frame_values():
    assert pf_same_frame(X, X, Spin.HALF) == -1.0
    assert pf_same_frame(X, X, Spin.ONE) == pytest.approx(-2.0 / 3.0, abs=1e-15)
    assert pf_same_frame(X, Y, Spin.HALF) == 0.0
    assert pf_same_frame(X, Y, Spin.ONE) == 0.0


# ---------------------------------------------------------------------------
# spin-1/2 relativistic models
# ---------------------------------------------------------------------------


def test_half_nw_reduces_in_cm_frame():
    rng = np.random.default_rng(31)
    for _ in range(10_000):
        a, b = random_axis(rng), random_axis(rng)
        v = random_velocity(rng, vmax=0.999)
        geom = PairGeometry(a=a, b=b, v_A=v, v_B=-v)
        assert abs(half_nw(geom) + a @ b) < 1e-12


def test_half_models_reduce_at_rest():
    rng = np.random.default_rng(37)
    zero = np.zeros(3)
    for _ in range(1000):
        a, b = random_axis(rng), random_axis(rng)
        geom = PairGeometry(a=a, b=b, v_A=zero, v_B=zero)
        assert abs(half_nw(geom) + a @ b) < 1e-12
        assert abs(half_cm(geom) + a @ b) < 1e-12


def test_half_nw_fig2_anchor():
    geom = fig2_geometry(theta=0.0, v=0.8)
    assert half_nw(geom) == pytest.approx(fig2_theta0_oracle(0.8), abs=1e-12)
    assert half_nw(geom) == pytest.approx(-0.884615, abs=1e-6)


def test_half_cm_matches_cm_frame_reduction():
    rng = np.random.default_rng(41)
    for _ in range(1000):
        a, b = random_axis(rng), random_axis(rng)
        v = random_velocity(rng, vmax=0.99)
        geom = PairGeometry(a=a, b=b, v_A=v, v_B=-v)
        assert half_cm(geom) == pytest.approx(cm_frame_half_cm_oracle(a, b, v), abs=1e-12)


def test_half_cm_anchor():
    a = (X + Y) / math.sqrt(2.0)
    geom = PairGeometry(a=a, b=X, v_A=0.8 * X, v_B=-0.8 * X)
    # exact value -5/sqrt(34)
    assert half_cm(geom) == pytest.approx(-5.0 / math.sqrt(34.0), abs=1e-12)
    assert half_cm(geom) == pytest.approx(-0.857491, abs=1e-5)


def test_half_cm_perpendicular_axes_stay_maximal():
    # a = b perpendicular to v_A = -v_B: numerator -(1 - v^2), denominators sqrt(1 - v^2)
    geom = PairGeometry(a=Z, b=Z, v_A=0.8 * X, v_B=-0.8 * X)
    assert half_cm(geom) == pytest.approx(-1.0, abs=1e-12)


def test_half_nw_exchange_symmetry():
    rng = np.random.default_rng(43)
    for _ in range(1000):
        a, b = random_axis(rng), random_axis(rng)
        v_a, v_b = random_velocity(rng), random_velocity(rng)
        forward = half_nw(PairGeometry(a=a, b=b, v_A=v_a, v_B=v_b))
        swapped = half_nw(PairGeometry(a=b, b=a, v_A=v_b, v_B=v_a))
        assert forward == pytest.approx(swapped, abs=1e-12)


def test_spin_half_range_stays_dichotomic():
    rng = np.random.default_rng(47)
    worst = 0.0
    for _ in range(20_000):
        a, b = random_axis(rng), random_axis(rng)
        geom = PairGeometry(
            a=a, b=b, v_A=random_velocity(rng, 0.999999), v_B=random_velocity(rng, 0.999999)
        )
        worst = max(worst, abs(half_nw(geom)), abs(half_cm(geom)))
    assert worst <= 1.0 + 1e-12


# ---------------------------------------------------------------------------
# spin-1 relativistic models
# ---------------------------------------------------------------------------


def test_one_models_reduce_at_rest():
    zero = np.zeros(3)
    assert one_nw(X, X, zero) == pytest.approx(-2.0 / 3.0, abs=1e-15)
    assert one_cm(X, X, zero) == pytest.approx(-2.0 / 3.0, abs=1e-15)


def test_one_nw_fig5_anchor():
    # a = b = vhat, v = 0.8: C = -2(1-v^2)^2/(3-2v^2+3v^4) = -162/1843
    assert one_nw(X, X, 0.8 * X) == pytest.approx(-162.0 / 1843.0, abs=1e-15)
    assert one_nw(X, X, 0.8 * X) == pytest.approx(-0.087900, abs=1e-6)


def test_one_nw_perpendicular_anchor():
    # dot-product terms vanish: C = -2(1-v^2)(1+v^2)/(3-2v^2+3v^4) = -738/1843
    assert one_nw(Z, Z, 0.8 * X) == pytest.approx(-738.0 / 1843.0, abs=1e-15)
    assert one_nw(Z, Z, 0.8 * X) == pytest.approx(-0.400434, abs=1e-6)


def test_one_cm_parallel_axes_match_nw():
    # at a = b = vhat both printed forms collapse to the same value
    assert one_cm(X, X, 0.8 * X) == pytest.approx(-162.0 / 1843.0, abs=1e-14)


def test_one_models_coincide_perpendicular_to_velocity():
    rng = np.random.default_rng(53)
    for _ in range(10_000):
        phi_a, phi_b = rng.uniform(0.0, 2.0 * math.pi, size=2)
        a = np.array([math.cos(phi_a), 0.0, math.sin(phi_a)])
        b = np.array([math.cos(phi_b), 0.0, math.sin(phi_b)])
        v = rng.uniform(0.0, 0.999) * Y
        assert one_nw(a, b, v) == pytest.approx(one_cm(a, b, v), abs=1e-12)


def test_one_cm_singularity_guard():
    v = math.sqrt(1.0 - 1e-15)
    with pytest.raises(ValueError, match="singular"):
        one_cm(Z, Z, v * X)


# ---------------------------------------------------------------------------
# model dispatch and deviations
# ---------------------------------------------------------------------------


def test_model_names_round_trip():
    for model in Model:
        assert Model.from_name(model.value) is model
    with pytest.raises(ValueError, match="unknown model"):
        Model.from_name("nw-two")


def test_model_spin_assignment():
    assert Model.NW_ONE.spin is Spin.ONE
    assert Model.CM_ONE.spin is Spin.ONE
    for model in (Model.PF_EXACT, Model.PF_SMALL_U, Model.PF_SAME_FRAME,
                  Model.NW_HALF, Model.CM_HALF):
        assert model.spin is Spin.HALF


def test_dispatch_rejects_mismatched_geometry():
    pair = fig2_geometry(0.0, 0.5)
    with pytest.raises(ValueError, match="preferred-frame geometry"):
        correlation(Model.PF_EXACT, pair)
    pf = PfGeometry(a=X, b=Y, u_A=[0.1, 0.0, 0.0], v_rel=[0.0, 0.1, 0.0])
    with pytest.raises(ValueError, match="particle-pair geometry"):
        correlation(Model.NW_HALF, pf)
    with pytest.raises(ValueError, match="c.m. frame"):
        correlation(Model.NW_ONE, pair)


def test_deviation_vanishes_at_rest():
    geom = fig2_geometry(theta=0.7, v=0.0)
    for model in (Model.NW_HALF, Model.CM_HALF, Model.PF_SAME_FRAME):
        assert deviation(model, geom) == pytest.approx(0.0, abs=1e-15)
    geom5 = fig5_geometry(omega=0.7, v=0.0)
    for model in (Model.NW_ONE, Model.CM_ONE):
        assert deviation(model, geom5) == pytest.approx(0.0, abs=1e-15)


def test_deviation_anchors():
    assert deviation(Model.NW_HALF, fig2_geometry(0.0, 0.8)) == pytest.approx(
        3.0 / 26.0, abs=1e-12
    )
    assert deviation(Model.NW_ONE, fig5_geometry(0.0, 0.8)) == pytest.approx(
        3200.0 / 5529.0, abs=1e-12
    )


def test_baseline_matches_same_frame_form():
    geom = fig2_geometry(0.3, 0.5)
    assert baseline(geom, Spin.HALF) == pytest.approx(-math.cos(0.3), abs=1e-15)
    assert baseline(geom, Spin.ONE) == pytest.approx(-2.0 / 3.0 * math.cos(0.3), abs=1e-15)


@pytest.mark.parametrize(
    "model, geometry_factory",
    [
        (Model.NW_HALF, lambda v: fig2_geometry(math.pi / 4.0, v)),
        (Model.CM_HALF, lambda v: fig2_geometry(math.pi / 4.0, v)),
        (Model.NW_ONE, lambda v: fig5_geometry(math.pi / 4.0, v)),
        (Model.CM_ONE, lambda v: fig5_geometry(math.pi / 4.0, v)),
    ],
)
def test_deviation_is_second_order_in_velocity(model, geometry_factory):
    speeds = [10.0**e for e in (-1.0, -1.5, -2.0, -2.5)]
    residuals = [abs(deviation(model, geometry_factory(v))) for v in speeds]
    slope = np.polyfit(np.log(speeds), np.log(residuals), 1)[0]
    assert slope >= 2.0
