"""Brute-force verification of the determinant bounds.

The functionals T2(2), T3(1) and |a3 - mu*a2^2| depend on a function in
the family only through (a2, a3), which in turn depend only on the first
two Schwarz coefficients (w1, w2).  The attainable set of those is exactly
the Schur-Pick region |w1| <= 1, |w2| <= 1 - |w1|^2, so maximizing over
that closed region computes the true supremum over the whole family.

The search is deterministic for a fixed seed: boundary-biased random
samples are drawn in independent shards (seed derived from the master seed
and the shard index), distinguished candidate points are always included,
and the best candidates are refined by projected coordinate ascent.
Results in the open hypothesis region are estimates, never bounds.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .bounds import ClassKind

REGION_TOL = 1e-12
SEED_ENV = "TOEPLITZ_BOUNDS_SEED"

_FUNCTIONALS = ("t22", "t31", "fs")
_KIND_ID = {ClassKind.STARLIKE: 0, ClassKind.CONVEX: 1}

# Always-evaluated candidates: the theorem witnesses sit at (+-i, 0) and
# (+-1, 0); the pure-w2 points pick up the middle Fekete-Szego branch.
DISTINGUISHED = (
    (1j, 0j), (-1j, 0j), (1 + 0j, 0j), (-1 + 0j, 0j),
    (0j, 1 + 0j), (0j, -1 + 0j), (0j, 1j), (0j, -1j),
)


def default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 7
    return int(raw)


@dataclass(frozen=True)
class SchwarzPoint:
    """First two Taylor coefficients of a Schwarz function."""

    w1: complex
    w2: complex

    def in_region(self, tol: float = REGION_TOL) -> bool:
        r = abs(self.w1)
        return r <= 1 + tol and abs(self.w2) <= 1 - r * r + tol


@dataclass(frozen=True)
class OracleConfig:
    samples: int = 200_000
    seed: int | None = None
    polish_steps: int = 40
    tol: float = 1e-3
    shards: int = 8
    top_candidates: int = 16

    def resolved_seed(self) -> int:
        return default_seed() if self.seed is None else self.seed


@dataclass(frozen=True)
class OracleResult:
    functional: str
    mu: float
    sup_estimate: float
    argmax: SchwarzPoint
    samples: int
    seed: int
    polish_steps: int


def a2a3_from_schwarz(kind: ClassKind, b1: float, b2: float,
                      p: SchwarzPoint) -> tuple[complex, complex]:
    """(a2, a3) of the family member realizing the Schwarz point."""
    if not p.in_region():
        raise ValueError(f"point outside the attainable region: {p}")
    w1, w2 = p.w1, p.w2
    if kind is ClassKind.STARLIKE:
        return b1 * w1, ((b1 * b1 + b2) * w1 * w1 + b1 * w2) / 2
    return b1 * w1 / 2, ((b1 * b1 + b2) * w1 * w1 + b1 * w2) / 6


def a2a3_from_caratheodory(kind: ClassKind, b1: float, b2: float,
                           c1: complex, c2: complex) -> tuple[complex, complex]:
    """(a2, a3) via the half-plane-function coefficients c1 = 2w1, c2 = 2(w2+w1^2)."""
    if kind is ClassKind.STARLIKE:
        a2 = b1 * c1 / 2
        a3 = ((b1 * b1 - b1 + b2) * c1 * c1 + 2 * b1 * c2) / 8
    else:
        a2 = b1 * c1 / 4
        a3 = ((-b1 + b1 * b1 + b2) * c1 * c1 + 2 * b1 * c2) / 24
    return a2, a3


def caratheodory_crosscheck(kind: ClassKind, b1: float, b2: float,
                            p: SchwarzPoint) -> float:
    """Discrepancy between the direct (w1,w2) route and the (c1,c2) route."""
    a2w, a3w = a2a3_from_schwarz(kind, b1, b2, p)
    c1 = 2 * p.w1
    c2 = 2 * (p.w2 + p.w1 * p.w1)
    a2c, a3c = a2a3_from_caratheodory(kind, b1, b2, c1, c2)
    return max(abs(a2w - a2c), abs(a3w - a3c))


def eval_functional(functional: str, a2: complex, a3: complex,
                    mu: float = 0.0) -> float:
    """|T2(2)|, |T3(1)| or |a3 - mu*a2^2| evaluated with complex arithmetic."""
    if functional == "t22":
        return abs(a3 * a3 - a2 * a2)
    if functional == "t31":
        return abs(1 - 2 * a2 * a2 - a3 * (a3 - 2 * a2 * a2))
    if functional == "fs":
        return abs(a3 - mu * a2 * a2)
    raise ValueError(f"unknown functional {functional!r}")


def _sample_shard(seed: int, shard: int, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Boundary-biased samples of the region, deterministic per (seed, shard).

    Half the points sit on |w1| = 1 (forcing w2 = 0), where the theorem
    extremals live; the rest bias |w1| toward the boundary and |w2| toward
    its cap 1 - |w1|^2.
    """
    rng = np.random.default_rng([seed, shard])
    nb = n // 2
    ni = n - nb
    theta = rng.uniform(0.0, 2.0 * np.pi, nb)
    w1b = np.exp(1j * theta)
    w2b = np.zeros(nb, dtype=np.complex128)

    r = rng.uniform(0.0, 1.0, ni) ** 0.25
    t1 = rng.uniform(0.0, 2.0 * np.pi, ni)
    rho = np.sqrt(rng.uniform(0.0, 1.0, ni)) * (1.0 - r * r)
    t2 = rng.uniform(0.0, 2.0 * np.pi, ni)
    w1i = r * np.exp(1j * t1)
    w2i = rho * np.exp(1j * t2)
    return np.concatenate([w1b, w1i]), np.concatenate([w2b, w2i])


def maximize(kind: ClassKind, b1: float, b2: float, functional: str,
             config: OracleConfig = OracleConfig(), mu: float = 0.0) -> OracleResult:
    """Deterministic maximum of a functional over the attainable region."""
    if functional not in _FUNCTIONALS:
        raise ValueError(f"unknown functional {functional!r}")
    if not b1 > 0:
        raise ValueError("B1 must be positive")
    if config.samples < 1:
        raise ValueError("sample budget must be at least 1")

    seed = config.resolved_seed()
    kind_id = _KIND_ID[kind]
    func_id = _FUNCTIONALS.index(functional)
    shards = max(1, config.shards)
    per_shard = max(1, config.samples // shards)

    candidates: list[tuple[float, complex, complex]] = []
    evaluated = 0
    for shard in range(shards):
        w1, w2 = _sample_shard(seed, shard, per_shard)
        if shard == 0:
            dw1 = np.array([p[0] for p in DISTINGUISHED], dtype=np.complex128)
            dw2 = np.array([p[1] for p in DISTINGUISHED], dtype=np.complex128)
            w1 = np.concatenate([dw1, w1])
            w2 = np.concatenate([dw2, w2])
        vals = _kernels.eval_batch(kind_id, b1, b2, func_id, mu, w1, w2)
        evaluated += len(vals)
        keep = min(config.top_candidates, len(vals))
        top = np.argpartition(vals, -keep)[-keep:]
        candidates.extend((vals[i], w1[i], w2[i]) for i in top)

    candidates.sort(key=lambda c: c[0], reverse=True)
    best_val, best_w1, best_w2 = candidates[0]
    best_val = float(best_val)
    for val0, w1, w2 in candidates[: config.top_candidates]:
        val, p1, p2 = _kernels.polish(
            kind_id, b1, b2, func_id, mu, w1, w2, config.polish_steps
        )
        if val > best_val:
            best_val, best_w1, best_w2 = float(val), p1, p2

    return OracleResult(
        functional=functional,
        mu=mu,
        sup_estimate=best_val,
        argmax=SchwarzPoint(complex(best_w1), complex(best_w2)),
        samples=evaluated,
        seed=seed,
        polish_steps=config.polish_steps,
    )
