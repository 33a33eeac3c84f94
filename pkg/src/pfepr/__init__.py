"""EPR spin correlations for relativistic particle pairs.

Closed-form correlation functions under preferred-frame quantum mechanics
and under standard relativistic quantum mechanics (Newton-Wigner and
center-of-mass spin operators), CHSH and Bell-Mermin inequality evaluation
and optimization, coincidence-count simulation, and experiment sample-size
planning.
"""

__version__ = "0.1.0"

from .kinematics import (
    PROTON_MASS_MEV,
    boost_matrix,
    compose_velocity,
    direction,
    kinetic_energy_to_speed,
    speed_to_kinetic_energy,
    velocity,
    wigner_rotation,
)
from .correlations import (
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
from .inequalities import (
    CHSH_BOUND,
    CHSH_QUANTUM_MAX,
    MERMIN_BOUND,
    ChshConfig,
    InequalityResult,
    MerminConfig,
    bell_mermin,
    chsh,
)
from .search import (
    OptResult,
    ScanRow,
    ScanSpec,
    model_gap,
    optimize,
    scan,
    sph_direction,
)
from .sampling import (
    PowerSpec,
    SampleBatch,
    estimate_correlation,
    required_events,
    sample,
)
from . import presets

__all__ = [
    "PROTON_MASS_MEV",
    "boost_matrix",
    "compose_velocity",
    "direction",
    "kinetic_energy_to_speed",
    "speed_to_kinetic_energy",
    "velocity",
    "wigner_rotation",
    "Model",
    "PairGeometry",
    "PfGeometry",
    "Spin",
    "baseline",
    "correlation",
    "deviation",
    "half_cm",
    "half_nw",
    "one_cm",
    "one_nw",
    "pf_exact",
    "pf_same_frame",
    "pf_small_u",
    "CHSH_BOUND",
    "CHSH_QUANTUM_MAX",
    "MERMIN_BOUND",
    "ChshConfig",
    "InequalityResult",
    "MerminConfig",
    "bell_mermin",
    "chsh",
    "OptResult",
    "ScanRow",
    "ScanSpec",
    "model_gap",
    "optimize",
    "scan",
    "sph_direction",
    "PowerSpec",
    "SampleBatch",
    "estimate_correlation",
    "required_events",
    "sample",
    "presets",
]
