"""Named measurement geometries used across the curve datasets.

``fig2``   coplanar spin-1/2 pair: v_A = v(-1/2, -sqrt3/2, 0),
           v_B = v(1/2, -sqrt3/2, 0), a = (cos th, sin th, 0), b = (1,0,0).
``fig5``   back-to-back spin-1 pair: v_A = -v_B = v(-1,0,0),
           a = b = (cos om, sin om, 0).
``fig9``   spin-1 Bell-Mermin triple a=(0,0,1), b=(sqrt3/2,0,-1/2),
           c=(-sqrt3/2,0,-1/2) with velocity direction (0,-1,0).
``fig10``  CHSH axes a=(-1,1,0)/sqrt2, c=(1,1,0)/sqrt2, b=(0,1,0), d=(1,0,0)
           maximizing the preferred-frame value; relativistic curves reuse
           the ``fig2`` velocity geometry (the only two-observer spin-1/2
           geometry defined here), which is recorded in dataset headers.
"""

from __future__ import annotations

import math

import numpy as np

from .correlations import PairGeometry
from .inequalities import ChshConfig, MerminConfig

PRESET_NAMES = ("fig2", "fig5", "fig9", "fig10")

_SQRT3_2 = math.sqrt(3.0) / 2.0
_INV_SQRT2 = 1.0 / math.sqrt(2.0)

FIG2_VA_HAT = np.array([-0.5, -_SQRT3_2, 0.0])
FIG2_VB_HAT = np.array([0.5, -_SQRT3_2, 0.0])

FIG5_VA_HAT = np.array([-1.0, 0.0, 0.0])
FIG5_VB_HAT = np.array([1.0, 0.0, 0.0])

FIG9_AXES = (
    np.array([0.0, 0.0, 1.0]),
    np.array([_SQRT3_2, 0.0, -0.5]),
    np.array([-_SQRT3_2, 0.0, -0.5]),
)
FIG9_V_HAT = np.array([0.0, -1.0, 0.0])

FIG10_AXES = {
    "a": np.array([-_INV_SQRT2, _INV_SQRT2, 0.0]),
    "c": np.array([_INV_SQRT2, _INV_SQRT2, 0.0]),
    "b": np.array([0.0, 1.0, 0.0]),
    "d": np.array([1.0, 0.0, 0.0]),
}


def fig2_geometry(theta: float, v: float) -> PairGeometry:
    return PairGeometry(
        a=np.array([math.cos(theta), math.sin(theta), 0.0]),
        b=np.array([1.0, 0.0, 0.0]),
        v_A=v * FIG2_VA_HAT,
        v_B=v * FIG2_VB_HAT,
    )


def fig5_geometry(omega: float, v: float) -> PairGeometry:
    axis = np.array([math.cos(omega), math.sin(omega), 0.0])
    return PairGeometry(a=axis, b=axis, v_A=v * FIG5_VA_HAT, v_B=v * FIG5_VB_HAT)


def fig9_config(v: float) -> MerminConfig:
    a, b, c = FIG9_AXES
    return MerminConfig(a=a, b=b, c=c, v=v * FIG9_V_HAT)


def fig10_config(v: float) -> ChshConfig:
    return ChshConfig(
        a=FIG10_AXES["a"],
        c=FIG10_AXES["c"],
        b=FIG10_AXES["b"],
        d=FIG10_AXES["d"],
        v_A=v * FIG2_VA_HAT,
        v_B=v * FIG2_VB_HAT,
    )
