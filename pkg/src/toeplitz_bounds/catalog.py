"""Catalog of target functions phi for the starlike/convex families.

Each catalog entry is a function phi with phi(0)=1 and phi'(0)>0 whose
first two Taylor coefficients (B1, B2) drive every bound in this package.
The catalog covers the classical half-plane map (1+Az)/(1+Bz) and its
order-alpha specialization, the alpha-exponential map, and the cardioid,
sine, lune, parabolic, limacon and nephroid regions, plus fully custom
coefficient lists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import series
from .series import Series

REAL_TOL = 1e-12

KINDS = (
    "janowski",
    "order-alpha",
    "exp",
    "cardioid",
    "sine",
    "lune",
    "parabolic",
    "limacon",
    "nephroid",
    "custom",
)


@dataclass(frozen=True)
class PhiSpec:
    """A target function selection with its parameters.

    kind:   one of KINDS.
    A, B:   janowski parameters (-1 <= B < A <= 1).
    alpha:  parameter of order-alpha / exp kinds, in [0, 1).
    custom: leading coefficients (B1, B2, ...) for kind "custom".
    """

    kind: str
    A: float | None = None
    B: float | None = None
    alpha: float | None = None
    custom: tuple[complex, ...] = field(default=())

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown phi kind {self.kind!r}")

    def describe_params(self) -> dict:
        out: dict = {}
        if self.kind == "janowski":
            out["A"] = self.A
            out["B"] = self.B
        elif self.kind in ("order-alpha", "exp"):
            out["alpha"] = self.alpha
        elif self.kind == "custom":
            for i, c in enumerate(self.custom, start=1):
                val = c.real if abs(c.imag) <= REAL_TOL else c
                out[f"b{i}"] = val
        return out


def janowski(A: float, B: float) -> PhiSpec:
    return PhiSpec("janowski", A=float(A), B=float(B))


def order_alpha(alpha: float) -> PhiSpec:
    return PhiSpec("order-alpha", alpha=float(alpha))


def alpha_exponential(alpha: float) -> PhiSpec:
    return PhiSpec("exp", alpha=float(alpha))


def custom(*coeffs: complex) -> PhiSpec:
    return PhiSpec("custom", custom=tuple(complex(c) for c in coeffs))


CARDIOID = PhiSpec("cardioid")
SINE = PhiSpec("sine")
LUNE = PhiSpec("lune")
PARABOLIC = PhiSpec("parabolic")
LIMACON = PhiSpec("limacon")
NEPHROID = PhiSpec("nephroid")


@dataclass(frozen=True)
class Admissibility:
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def validate(spec: PhiSpec) -> Admissibility:
    """Check parameter ranges and the defining constraints phi(0)=1, B1>0."""
    bad: list[str] = []
    if spec.kind == "janowski":
        if spec.A is None or spec.B is None:
            bad.append("janowski requires parameters A and B")
        elif not (-1.0 <= spec.B < spec.A <= 1.0):
            bad.append("janowski requires -1 <= B < A <= 1")
    elif spec.kind in ("order-alpha", "exp"):
        if spec.alpha is None:
            bad.append(f"{spec.kind} requires parameter alpha")
        elif not (0.0 <= spec.alpha < 1.0):
            bad.append(f"{spec.kind} requires 0 <= alpha < 1")
    elif spec.kind == "custom":
        if not spec.custom:
            bad.append("custom requires at least the coefficient b1")

    if not bad:
        s = phi_series(spec, order=3)
        if abs(s[0] - 1) > REAL_TOL:
            bad.append("phi(0) = 1 violated")
        b1 = s[1]
        if abs(b1.imag) > REAL_TOL or b1.real <= 0:
            bad.append("B1 > 0 violated")
    return Admissibility(tuple(bad))


def _janowski_series(A: float, B: float, order: int) -> Series:
    num = series.from_coeffs((1, A), order)
    den = series.from_coeffs((1, B), order)
    return series.div(num, den)


def _exp_series(alpha: float, order: int) -> Series:
    e = series.exp(series.z(order))
    return series.from_coeffs((alpha,), order) + e.scale(1 - alpha)


def _lune_series(order: int) -> Series:
    # z + sqrt(1 + z^2)
    root = series.sqrt1p(series.from_coeffs((1, 0, 1), order))
    return series.z(order) + root


def _parabolic_series(order: int) -> Series:
    # 1 + (2/pi^2) (log((1+t)/(1-t)))^2 with t = sqrt(z).  The log equals
    # 2t*g(t^2) with g(z) = sum z^k/(2k+1), so the square is an honest
    # series in z: 1 + (8/pi^2) * z * g(z)^2.
    g = Series(tuple(1.0 / (2 * k + 1) for k in range(order + 1)))
    g2 = series.mul(g, g)
    shifted = series.mul(g2, series.z(order))
    return series.one(order) + shifted.scale(8 / math.pi**2)


def phi_series(spec: PhiSpec, order: int = 10) -> Series:
    """Taylor expansion of phi to the requested order."""
    if order < 2:
        raise ValueError("order must be at least 2")
    if spec.kind == "janowski":
        if spec.A is None or spec.B is None:
            raise ValueError("janowski requires parameters A and B")
        return _janowski_series(spec.A, spec.B, order)
    if spec.kind == "order-alpha":
        if spec.alpha is None:
            raise ValueError("order-alpha requires parameter alpha")
        return _janowski_series(1 - 2 * spec.alpha, -1.0, order)
    if spec.kind == "exp":
        if spec.alpha is None:
            raise ValueError("exp requires parameter alpha")
        return _exp_series(spec.alpha, order)
    if spec.kind == "cardioid":
        return series.from_coeffs((1, 4 / 3, 2 / 3), order)
    if spec.kind == "sine":
        cs = [0.0] * (order + 1)
        cs[0] = 1.0
        for k in range(1, order + 1, 2):
            cs[k] = (-1.0) ** ((k - 1) // 2) / math.factorial(k)
        return Series(tuple(cs))
    if spec.kind == "lune":
        return _lune_series(order)
    if spec.kind == "parabolic":
        return _parabolic_series(order)
    if spec.kind == "limacon":
        return series.from_coeffs((1, math.sqrt(2), 0.5), order)
    if spec.kind == "nephroid":
        return series.from_coeffs((1, 1, 0, -1 / 3), order)
    # custom
    return series.from_coeffs((1,) + spec.custom, order)


def closed_form_b12(spec: PhiSpec) -> tuple[float, float] | None:
    """The documented (B1, B2) closed forms; None for custom specs."""
    if spec.kind == "janowski":
        return (spec.A - spec.B, -spec.B * (spec.A - spec.B))
    if spec.kind == "order-alpha":
        a = spec.alpha
        return (2 * (1 - a), 2 * (1 - a))
    if spec.kind == "exp":
        return (1 - spec.alpha, (1 - spec.alpha) / 2)
    if spec.kind == "cardioid":
        return (4 / 3, 2 / 3)
    if spec.kind == "sine":
        return (1.0, 0.0)
    if spec.kind == "lune":
        return (1.0, 0.5)
    if spec.kind == "parabolic":
        return (8 / math.pi**2, 16 / (3 * math.pi**2))
    if spec.kind == "limacon":
        return (math.sqrt(2), 0.5)
    if spec.kind == "nephroid":
        return (1.0, 0.0)
    return None


def b_coeffs(spec: PhiSpec) -> tuple[float, float]:
    """(B1, B2) read off the expansion; must be real for catalog kinds.

    For catalog kinds the values are cross-checked against the closed
    forms; a mismatch means the expansion machinery is broken.
    """
    s = phi_series(spec, order=3)
    b1, b2 = s[1], s[2]
    if abs(b1.imag) > REAL_TOL or abs(b2.imag) > REAL_TOL:
        raise ValueError("B1 and B2 must be real")
    known = closed_form_b12(spec)
    if known is not None:
        if abs(b1.real - known[0]) > 1e-11 or abs(b2.real - known[1]) > 1e-11:
            raise AssertionError(
                f"expansion disagrees with closed form for {spec.kind}: "
                f"({b1.real}, {b2.real}) vs {known}"
            )
    return (b1.real, b2.real)
