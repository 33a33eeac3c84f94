"""Lorentz kinematics: pure boosts, velocity composition, Wigner rotations.

Conventions used throughout the package: metric signature (+,-,-,-), c = 1,
velocities in units of c.  A pure boost B(u) is the symmetric 4x4 matrix
mapping the rest four-velocity (1,0,0,0) to (gamma, gamma*u); its inverse is
B(-u).
"""

from __future__ import annotations

import math

import numpy as np

#: Proton mass in MeV (CODATA).
PROTON_MASS_MEV = 938.272

MINKOWSKI_METRIC = np.diag([1.0, -1.0, -1.0, -1.0])

# Accepted deviation from unit norm before a direction input is rejected.
# Wide enough to absorb text-file rounding, tight enough to catch wrong input.
UNIT_NORM_SLACK = 1e-6


def vec3(v) -> np.ndarray:
    """Coerce to a finite float 3-vector."""
    arr = np.asarray(v, dtype=float)
    if arr.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("vector components must be finite")
    return arr


def direction(v) -> np.ndarray:
    """Unit measurement axis.

    Inputs within ``UNIT_NORM_SLACK`` of unit norm are renormalized; anything
    farther off is rejected as genuinely non-unit.
    """
    arr = vec3(v)
    norm = float(np.linalg.norm(arr))
    if abs(norm - 1.0) > UNIT_NORM_SLACK:
        raise ValueError(f"direction must be a unit vector, got |v| = {norm}")
    return arr / norm


def velocity(v) -> np.ndarray:
    """Velocity 3-vector in units of c; must be strictly subluminal."""
    arr = vec3(v)
    if float(arr @ arr) >= 1.0:
        raise ValueError(
            f"superluminal velocity: |v| = {float(np.linalg.norm(arr))}"
        )
    return arr


def gamma_factor(u: np.ndarray) -> float:
    u = velocity(u)
    return 1.0 / math.sqrt(1.0 - float(u @ u))


def boost_matrix(u) -> np.ndarray:
    """Pure Lorentz boost with velocity u.

    B(0) is the identity and B(u) @ (1,0,0,0) = (gamma, gamma*u).
    """
    u = velocity(u)
    u2 = float(u @ u)
    g = 1.0 / math.sqrt(1.0 - u2)
    boost = np.eye(4)
    boost[0, 0] = g
    boost[0, 1:] = g * u
    boost[1:, 0] = g * u
    if u2 > 0.0:
        boost[1:, 1:] += (g - 1.0) * np.outer(u, u) / u2
    return boost


def compose_velocity(u, w) -> np.ndarray:
    """Relativistic velocity addition.

    Returns the velocity whose four-velocity is B(w) applied to the
    four-velocity of u, i.e. the velocity of an object moving at u (in some
    frame F) as seen from the frame in which F moves at w.
    """
    u = velocity(u)
    g = gamma_factor(u)
    four = boost_matrix(w) @ np.concatenate(([g], g * u))
    return four[1:] / four[0]


def wigner_rotation(u_A, v_rel) -> tuple[np.ndarray, np.ndarray]:
    """Wigner rotation relating two observers' views of a third velocity.

    ``u_A`` is a velocity in Alice's frame (here: the preferred frame's
    velocity) and ``v_rel`` is Bob's velocity in Alice's frame.  The
    coordinate transformation from Alice to Bob is Lambda = B(v_rel)^-1.

    Returns ``(R, u_B)`` where ``u_B`` is the same velocity seen in Bob's
    frame and ``R`` is the 3x3 spatial block of B(u_B)^-1 Lambda B(u_A).
    That matrix fixes the time axis, so R is a proper rotation.
    """
    u_A = velocity(u_A)
    v_rel = velocity(v_rel)
    lam = boost_matrix(-v_rel)
    u_B = compose_velocity(u_A, -v_rel)
    full = boost_matrix(-u_B) @ lam @ boost_matrix(u_A)
    return full[1:, 1:].copy(), u_B


def kinetic_energy_to_speed(kinetic_energy: float, mass: float) -> float:
    """Speed (units of c) of a particle of the given mass and kinetic energy (MeV)."""
    if kinetic_energy < 0.0:
        raise ValueError(f"kinetic energy must be non-negative, got {kinetic_energy}")
    if mass <= 0.0:
        raise ValueError(f"mass must be positive, got {mass}")
    ratio = mass / (mass + kinetic_energy)
    return math.sqrt(1.0 - ratio * ratio)


def speed_to_kinetic_energy(speed: float, mass: float) -> float:
    """Kinetic energy (MeV) of a particle of the given mass at the given speed."""
    if not 0.0 <= speed < 1.0:
        raise ValueError(f"speed must lie in [0, 1), got {speed}")
    if mass <= 0.0:
        raise ValueError(f"mass must be positive, got {mass}")
    return mass * (1.0 / math.sqrt(1.0 - speed * speed) - 1.0)
