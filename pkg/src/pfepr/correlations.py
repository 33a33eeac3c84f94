"""EPR spin-correlation functions for relativistic particle pairs.

Seven model variants are implemented.  Three cover quantum mechanics with a
preferred frame (PF): the exact Wigner-rotation form, its small-velocity
approximation, and the same-inertial-frame form (which is exactly the
non-relativistic -a.b, times 2/3 for spin one).  Four cover standard
relativistic quantum mechanics, distinguished by spin operator convention
(Newton-Wigner vs center-of-mass position operator) and spin sector
(1/2 vs 1).  The spin-1 forms are only available in the pair's
center-of-mass frame (v_A = -v_B), the only frame in which they are known
in closed form.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .kinematics import compose_velocity, direction, velocity, wigner_rotation

# |u| above which the small-velocity PF approximation is flagged as degraded.
SMALL_U_WARN_THRESHOLD = 0.1

# 1 - v^2 + (a.v)^2 below which the c.m. spin-1 denominator is treated as
# numerically singular.
CM_ONE_SINGULAR_EPS = 1e-14

_CM_FRAME_ATOL = 1e-9


class Spin(str, enum.Enum):
    HALF = "half"
    ONE = "one"


class Model(enum.Enum):
    """Correlation-function variants, keyed by their CLI names."""

    PF_EXACT = "pf-exact"
    PF_SMALL_U = "pf-small-u"
    PF_SAME_FRAME = "pf-same-frame"
    NW_HALF = "nw-half"
    CM_HALF = "cm-half"
    NW_ONE = "nw-one"
    CM_ONE = "cm-one"

    @property
    def spin(self) -> Spin:
        if self in (Model.NW_ONE, Model.CM_ONE):
            return Spin.ONE
        return Spin.HALF

    @classmethod
    def from_name(cls, name: str) -> "Model":
        for model in cls:
            if model.value == name:
                return model
        known = ", ".join(m.value for m in cls)
        raise ValueError(f"unknown model {name!r} (known: {known})")


@dataclass(frozen=True)
class PairGeometry:
    """Measurement axes a, b and particle velocities v_A, v_B (one frame)."""

    a: np.ndarray
    b: np.ndarray
    v_A: np.ndarray
    v_B: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "a", direction(self.a))
        object.__setattr__(self, "b", direction(self.b))
        object.__setattr__(self, "v_A", velocity(self.v_A))
        object.__setattr__(self, "v_B", velocity(self.v_B))


@dataclass(frozen=True)
class PfGeometry:
    """Axes plus preferred-frame velocity u_A and Bob's velocity relative to Alice.

    The preferred-frame velocity in Bob's frame, u_B, is derived.
    """

    a: np.ndarray
    b: np.ndarray
    u_A: np.ndarray
    v_rel: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "a", direction(self.a))
        object.__setattr__(self, "b", direction(self.b))
        object.__setattr__(self, "u_A", velocity(self.u_A))
        object.__setattr__(self, "v_rel", velocity(self.v_rel))

    @property
    def u_B(self) -> np.ndarray:
        return compose_velocity(self.u_A, -self.v_rel)


Geometry = PairGeometry | PfGeometry


def pf_exact(geometry: PfGeometry) -> float:
    """Exact preferred-frame correlation, C = -a . R^T b.

    R is the Wigner rotation built from the preferred frame's velocity in
    Alice's frame and the Alice-to-Bob transformation.
    """
    rot, _ = wigner_rotation(geometry.u_A, geometry.v_rel)
    return float(-(geometry.a @ rot.T @ geometry.b))


def pf_small_u(a, b, u_A, u_B) -> float:
    """Small-velocity preferred-frame correlation.

    C = -a.b - ((a x b).(u_A x u_B)) / 2, valid for |u_A|, |u_B| << 1.
    """
    a = direction(a)
    b = direction(b)
    u_A = velocity(u_A)
    u_B = velocity(u_B)
    for u in (u_A, u_B):
        if float(np.linalg.norm(u)) > SMALL_U_WARN_THRESHOLD:
            warnings.warn(
                "small-velocity approximation degrades above "
                f"|u| = {SMALL_U_WARN_THRESHOLD}, got |u| = {float(np.linalg.norm(u)):.4g}",
                stacklevel=2,
            )
    return float(-(a @ b) - (np.cross(a, b) @ np.cross(u_A, u_B)) / 2.0)


def pf_same_frame(a, b, spin: Spin | str = Spin.HALF) -> float:
    """Preferred-frame correlation for observers in one inertial frame.

    Exactly the non-relativistic form -a.b regardless of the frame's motion;
    for spin one the prefactor 2/3 applies.
    """
    a = direction(a)
    b = direction(b)
    spin = Spin(spin)
    prefactor = 2.0 / 3.0 if spin is Spin.ONE else 1.0
    return float(-prefactor * (a @ b))


def half_nw(geometry: PairGeometry) -> float:
    """Spin-1/2 correlation with the Newton-Wigner spin operator."""
    a, b = geometry.a, geometry.b
    v_A, v_B = geometry.v_A, geometry.v_B
    vA2 = float(v_A @ v_A)
    vB2 = float(v_B @ v_B)
    root_A = math.sqrt(1.0 - vA2)
    root_B = math.sqrt(1.0 - vB2)
    kernel = np.cross(v_A, v_B) / (1.0 - float(v_A @ v_B) + root_A * root_B)
    inner = np.cross(a, b) + (
        float(a @ v_A) * np.cross(b, v_B) - float(b @ v_B) * np.cross(a, v_A)
    ) / ((1.0 + root_A) * (1.0 + root_B))
    return float(-(a @ b) + kernel @ inner)


def half_cm(geometry: PairGeometry) -> float:
    """Spin-1/2 correlation with the center-of-mass spin operator."""
    a, b = geometry.a, geometry.b
    v_A, v_B = geometry.v_A, geometry.v_B
    vA2 = float(v_A @ v_A)
    vB2 = float(v_B @ v_B)
    root_A = math.sqrt(1.0 - vA2)
    root_B = math.sqrt(1.0 - vB2)
    a_vA = float(a @ v_A)
    b_vB = float(b @ v_B)
    mixed = v_A * root_B + v_B * root_A
    braced = (
        -(a @ b) * root_A * root_B
        + a_vA * b_vB
        - float(a @ mixed) * float(b @ mixed)
        / (1.0 - float(v_A @ v_B) + root_A * root_B)
    )
    norm = math.sqrt(1.0 - vA2 + a_vA**2) * math.sqrt(1.0 - vB2 + b_vB**2)
    return float(braced / norm)


def one_nw(a, b, v) -> float:
    """Spin-1 Newton-Wigner correlation in the pair's c.m. frame."""
    a = direction(a)
    b = direction(b)
    v = velocity(v)
    v2 = float(v @ v)
    prefactor = 2.0 * (1.0 - v2) / (3.0 - 2.0 * v2 + 3.0 * v2 * v2)
    return float(prefactor * (-(a @ b) * (1.0 + v2) + 2.0 * float(a @ v) * float(b @ v)))


def one_cm(a, b, v) -> float:
    """Spin-1 center-of-mass correlation in the pair's c.m. frame."""
    a = direction(a)
    b = direction(b)
    v = velocity(v)
    v2 = float(v @ v)
    a_v = float(a @ v)
    b_v = float(b @ v)
    den_a = 1.0 - v2 + a_v * a_v
    den_b = 1.0 - v2 + b_v * b_v
    if den_a < CM_ONE_SINGULAR_EPS or den_b < CM_ONE_SINGULAR_EPS:
        raise ValueError(
            "numerically singular geometry: 1 - v^2 + (axis.v)^2 below "
            f"{CM_ONE_SINGULAR_EPS}"
        )
    prefactor = 2.0 * (1.0 - v2) ** 2 / (3.0 - 2.0 * v2 + 3.0 * v2 * v2)
    bracket = -(a @ b) * (1.0 + v2) + a_v * b_v
    return float(prefactor * bracket / math.sqrt(den_a * den_b))


def cm_frame_velocity(geometry: PairGeometry) -> np.ndarray:
    """Extract the single c.m.-frame velocity, requiring v_A = -v_B."""
    if not np.allclose(geometry.v_A, -geometry.v_B, atol=_CM_FRAME_ATOL, rtol=0.0):
        raise ValueError(
            "spin-1 correlations are only defined in the pair's c.m. frame "
            "(v_A = -v_B)"
        )
    return geometry.v_A


def correlation(model: Model, geometry: Geometry) -> float:
    """Evaluate any model at a geometry of the matching kind."""
    if model is Model.PF_SAME_FRAME:
        return pf_same_frame(geometry.a, geometry.b, Spin.HALF)
    if model in (Model.PF_EXACT, Model.PF_SMALL_U):
        if not isinstance(geometry, PfGeometry):
            raise ValueError(f"model {model.value} requires a preferred-frame geometry")
        if model is Model.PF_EXACT:
            return pf_exact(geometry)
        return pf_small_u(geometry.a, geometry.b, geometry.u_A, geometry.u_B)
    if not isinstance(geometry, PairGeometry):
        raise ValueError(f"model {model.value} requires a particle-pair geometry")
    if model is Model.NW_HALF:
        return half_nw(geometry)
    if model is Model.CM_HALF:
        return half_cm(geometry)
    v = cm_frame_velocity(geometry)
    if model is Model.NW_ONE:
        return one_nw(geometry.a, geometry.b, v)
    return one_cm(geometry.a, geometry.b, v)


def baseline(geometry: Geometry, spin: Spin | str) -> float:
    """Preferred-frame baseline at the geometry's axes: -a.b, or -(2/3) a.b."""
    return pf_same_frame(geometry.a, geometry.b, spin)


def deviation(model: Model, geometry: Geometry) -> float:
    """Difference between a model's correlation and the preferred-frame baseline."""
    return correlation(model, geometry) - baseline(geometry, model.spin)
