"""Monte-Carlo coincidence sampling and sample-size planning.

Outcome pairs are drawn from the minimal dichotomic joint distribution
reproducing a spin-1/2 model's correlation C with uniform marginals,
p(alpha, beta) = (1 + alpha*beta*C) / 4.  The generator is numpy's PCG64
(identifier recorded in every batch record), so counts are reproducible
bit-for-bit for a given seed.  Spin-1 outcome sampling is deliberately
absent: a 3x3 joint distribution is not determined by C alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.stats import norm

from .correlations import (
    Geometry,
    Model,
    PairGeometry,
    PfGeometry,
    Spin,
    correlation,
)

RNG_ALGORITHM = "numpy-pcg64"


@dataclass(frozen=True)
class OutcomePair:
    """One coincidence: Alice's and Bob's dichotomic outcomes."""

    alpha: int
    beta: int

    def __post_init__(self):
        if self.alpha not in (1, -1) or self.beta not in (1, -1):
            raise ValueError("outcomes must be +1 or -1")


#: Canonical cell order for counts: (+,+), (+,-), (-,+), (-,-).
CELLS = (
    OutcomePair(1, 1),
    OutcomePair(1, -1),
    OutcomePair(-1, 1),
    OutcomePair(-1, -1),
)


def outcome_probabilities(c: float) -> tuple[float, float, float, float]:
    """Cell probabilities p(alpha, beta) = (1 + alpha*beta*C)/4 in CELLS order."""
    if abs(c) > 1.0:
        raise ValueError(
            f"model outside dichotomic-outcome representation: C = {c}"
        )
    same = (1.0 + c) / 4.0
    diff = (1.0 - c) / 4.0
    return (same, diff, diff, same)


def geometry_record(geometry: Geometry) -> dict:
    if isinstance(geometry, PairGeometry):
        return {
            "type": "pair",
            "a": geometry.a.tolist(),
            "b": geometry.b.tolist(),
            "v_A": geometry.v_A.tolist(),
            "v_B": geometry.v_B.tolist(),
        }
    if isinstance(geometry, PfGeometry):
        return {
            "type": "pf",
            "a": geometry.a.tolist(),
            "b": geometry.b.tolist(),
            "u_A": geometry.u_A.tolist(),
            "v_rel": geometry.v_rel.tolist(),
        }
    raise ValueError(f"unsupported geometry {type(geometry).__name__}")


@dataclass(frozen=True)
class SampleBatch:
    """Coincidence counts for one (model, geometry, seed, N) draw."""

    model: Model
    geometry: Geometry
    seed: int
    n: int
    counts: tuple[int, int, int, int]

    @property
    def n_pp(self) -> int:
        return self.counts[0]

    @property
    def n_pm(self) -> int:
        return self.counts[1]

    @property
    def n_mp(self) -> int:
        return self.counts[2]

    @property
    def n_mm(self) -> int:
        return self.counts[3]

    def to_record(self) -> dict:
        c_hat, stderr = estimate_correlation(self)
        return {
            "model": self.model.value,
            "geometry": geometry_record(self.geometry),
            "seed": self.seed,
            "N": self.n,
            "counts": list(self.counts),
            "C_hat": c_hat,
            "stderr": stderr,
            "rng": RNG_ALGORITHM,
        }


def _shard_rng(seed: int, shard: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(shard,)))


def sample(model: Model, geometry: Geometry, n: int, seed: int,
           shards: int = 1) -> SampleBatch:
    """Draw N coincidence outcomes under a spin-1/2 model.

    The default single-stream path is bit-reproducible for a given seed.
    With ``shards > 1`` the draw is split across per-shard derived seeds
    (suitable for parallel workers) and the counts are summed; the result
    is distributionally identical but a different exact sample.
    """
    if model.spin is not Spin.HALF:
        raise ValueError(f"outcome sampling requires a spin-1/2 model, got {model.value}")
    if n < 1:
        raise ValueError(f"need at least one event, got N = {n}")
    if shards < 1:
        raise ValueError(f"shard count must be positive, got {shards}")
    probs = outcome_probabilities(correlation(model, geometry))
    if shards == 1:
        counts = np.random.default_rng(seed).multinomial(n, probs)
    else:
        counts = np.zeros(4, dtype=np.int64)
        per_shard, remainder = divmod(n, shards)
        for shard in range(shards):
            shard_n = per_shard + (1 if shard < remainder else 0)
            if shard_n:
                counts += _shard_rng(seed, shard).multinomial(shard_n, probs)
    return SampleBatch(
        model=model,
        geometry=geometry,
        seed=seed,
        n=n,
        counts=tuple(int(c) for c in counts),
    )


def estimate_correlation(batch: SampleBatch) -> tuple[float, float]:
    """Correlation estimate and its standard error from coincidence counts."""
    n = sum(batch.counts)
    if n == 0:
        raise ValueError("cannot estimate a correlation from zero events")
    c_hat = (batch.n_pp + batch.n_mm - batch.n_pm - batch.n_mp) / n
    stderr = math.sqrt(max(1.0 - c_hat * c_hat, 0.0) / n)
    return c_hat, stderr


@dataclass(frozen=True)
class PowerSpec:
    """Two-hypothesis discrimination request: null vs alternative model."""

    model_null: Model
    model_alt: Model
    alpha: float = 0.05
    power: float = 0.8

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise ValueError(f"significance level must lie in (0, 1), got {self.alpha}")
        if not 0.0 < self.power < 1.0:
            raise ValueError(f"power must lie in (0, 1), got {self.power}")


def required_events(spec: PowerSpec, geometry: Geometry) -> int:
    """Events needed to distinguish the two models at the given geometry.

    Two-sided z-test on the correlation difference with the conservative
    variance (the larger of the two hypotheses'):
    N = ceil((z_{1-alpha/2} + z_{power})^2 * sigma^2 / dC^2).
    """
    c_null = correlation(spec.model_null, geometry)
    c_alt = correlation(spec.model_alt, geometry)
    delta = c_alt - c_null
    if delta == 0.0:
        raise ValueError("models indistinguishable at this geometry")
    z_alpha = float(norm.ppf(1.0 - spec.alpha / 2.0))
    z_power = float(norm.ppf(spec.power))
    sigma2 = max(1.0 - c_null * c_null, 1.0 - c_alt * c_alt)
    events = math.ceil((z_alpha + z_power) ** 2 * sigma2 / delta**2)
    return max(events, 1)
