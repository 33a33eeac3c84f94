"""CHSH and Bell-Mermin inequality evaluation for any correlation model.

CHSH = |C(a,b) - C(a,d) + C(c,b) + C(c,d)| <= 2 applies to the spin-1/2
models; the dichotomic quantum maximum is 2*sqrt(2).  The Bell-Mermin sum
C(a,b) + C(b,c) + C(c,a) <= 1 applies to the spin-1 models and to the
preferred-frame spin-1 baseline -(2/3) a.b.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .correlations import (
    Model,
    PairGeometry,
    PfGeometry,
    Spin,
    correlation,
    pf_same_frame,
)
from .kinematics import direction, velocity

CHSH_BOUND = 2.0
CHSH_QUANTUM_MAX = 2.0 * math.sqrt(2.0)
MERMIN_BOUND = 1.0

_ZERO = (0.0, 0.0, 0.0)


@dataclass(frozen=True)
class InequalityResult:
    value: float
    bound: float

    @property
    def margin(self) -> float:
        return self.value - self.bound

    @property
    def violated(self) -> bool:
        return self.margin > 0.0


@dataclass(frozen=True)
class ChshConfig:
    """Alice's axes a, c; Bob's axes b, d; plus the velocity geometry.

    v_A/v_B feed the relativistic spin-1/2 models, u_A/v_rel the
    preferred-frame models; all default to rest.
    """

    a: np.ndarray
    c: np.ndarray
    b: np.ndarray
    d: np.ndarray
    v_A: np.ndarray = field(default=_ZERO)
    v_B: np.ndarray = field(default=_ZERO)
    u_A: np.ndarray = field(default=_ZERO)
    v_rel: np.ndarray = field(default=_ZERO)

    def __post_init__(self):
        for name in ("a", "c", "b", "d"):
            object.__setattr__(self, name, direction(getattr(self, name)))
        for name in ("v_A", "v_B", "u_A", "v_rel"):
            object.__setattr__(self, name, velocity(getattr(self, name)))


@dataclass(frozen=True)
class MerminConfig:
    """Three axes and the single c.m.-frame velocity vector."""

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    v: np.ndarray = field(default=_ZERO)

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, direction(getattr(self, name)))
        object.__setattr__(self, "v", velocity(self.v))


def _pair_correlation(model: Model, x: np.ndarray, y: np.ndarray, cfg: ChshConfig) -> float:
    if model is Model.PF_SAME_FRAME:
        return pf_same_frame(x, y, Spin.HALF)
    if model in (Model.PF_EXACT, Model.PF_SMALL_U):
        return correlation(model, PfGeometry(a=x, b=y, u_A=cfg.u_A, v_rel=cfg.v_rel))
    return correlation(model, PairGeometry(a=x, b=y, v_A=cfg.v_A, v_B=cfg.v_B))


def chsh(model: Model, cfg: ChshConfig) -> InequalityResult:
    """CHSH combination under the given spin-1/2 model."""
    if model.spin is not Spin.HALF:
        raise ValueError(f"CHSH requires a spin-1/2 model, got {model.value}")
    value = abs(
        _pair_correlation(model, cfg.a, cfg.b, cfg)
        - _pair_correlation(model, cfg.a, cfg.d, cfg)
        + _pair_correlation(model, cfg.c, cfg.b, cfg)
        + _pair_correlation(model, cfg.c, cfg.d, cfg)
    )
    return InequalityResult(value=value, bound=CHSH_BOUND)


def _mermin_correlation(model: Model, x: np.ndarray, y: np.ndarray, cfg: MerminConfig) -> float:
    if model is Model.PF_SAME_FRAME:
        return pf_same_frame(x, y, Spin.ONE)
    geom = PairGeometry(a=x, b=y, v_A=cfg.v, v_B=-cfg.v)
    return correlation(model, geom)


def bell_mermin(model: Model, cfg: MerminConfig) -> InequalityResult:
    """Bell-Mermin sum under a spin-1 model or the preferred-frame baseline."""
    if model.spin is not Spin.ONE and model is not Model.PF_SAME_FRAME:
        raise ValueError(
            f"Bell-Mermin requires a spin-1 model or the preferred-frame "
            f"baseline, got {model.value}"
        )
    value = (
        _mermin_correlation(model, cfg.a, cfg.b, cfg)
        + _mermin_correlation(model, cfg.b, cfg.c, cfg)
        + _mermin_correlation(model, cfg.c, cfg.a, cfg)
    )
    return InequalityResult(value=value, bound=MERMIN_BOUND)
