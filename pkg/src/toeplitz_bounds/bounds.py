"""Closed-form coefficient and Toeplitz determinant bounds.

Everything here is a pure function of the class kind (starlike/convex) and
the first two target coefficients (B1, B2).  Each determinant bound comes
with a hypothesis verdict: the formula value is always computed, but it is
only a proven sharp bound when the hypothesis inequalities hold.  Callers
must treat flagged values as estimates.

Hypothesis comparisons carry a 1e-12 slack toward acceptance because every
inequality admits equality (the sine family sits exactly on the T2(2)
boundary B1 = |B2 + B1^2|).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .catalog import PhiSpec, b_coeffs, validate

HYP_SLACK = 1e-12


class ClassKind(enum.Enum):
    STARLIKE = "starlike"
    CONVEX = "convex"

    @classmethod
    def parse(cls, text: str) -> "ClassKind":
        try:
            return cls(text.lower())
        except ValueError:
            raise ValueError(f"unknown class kind {text!r}") from None


@dataclass(frozen=True)
class BoundFragment:
    """A determinant bound value plus whether its hypothesis holds."""

    value: float
    hypothesis_ok: bool


@dataclass(frozen=True)
class BoundReport:
    kind: ClassKind
    b1: float
    b2: float
    a2_bound: float
    a3_bound: float
    t22: BoundFragment
    t31: BoundFragment
    notes: tuple[str, ...]


def _require_b1(b1: float) -> None:
    if not b1 > 0:
        raise ValueError("B1 must be positive")


def fekete_szego(kind: ClassKind, b1: float, b2: float, mu: float) -> float:
    """Sharp bound on |a3 - mu*a2^2| for real weight mu."""
    _require_b1(b1)
    if kind is ClassKind.STARLIKE:
        t = 2 * b1 * b1 * mu
        if t <= b2 + b1 * b1 - b1:
            return (b2 + b1 * b1 - 2 * mu * b1 * b1) / 2
        if t <= b2 + b1 * b1 + b1:
            return b1 / 2
        return (-b2 - b1 * b1 + 2 * mu * b1 * b1) / 2
    t = 3 * b1 * b1 * mu
    if t <= 2 * (b2 + b1 * b1 - b1):
        return (b2 + b1 * b1 - 1.5 * mu * b1 * b1) / 6
    if t <= 2 * (b2 + b1 * b1 + b1):
        return b1 / 6
    return (-b2 - b1 * b1 + 1.5 * mu * b1 * b1) / 6


def a2_bound(kind: ClassKind, b1: float) -> float:
    _require_b1(b1)
    return b1 if kind is ClassKind.STARLIKE else b1 / 2


def a3_bound(kind: ClassKind, b1: float, b2: float) -> float:
    return fekete_szego(kind, b1, b2, mu=0.0)


def t22_bound(kind: ClassKind, b1: float, b2: float) -> BoundFragment:
    """Bound on |a3^2 - a2^2|; proven sharp when B1 <= |B2 + B1^2|."""
    _require_b1(b1)
    hyp = b1 <= abs(b2 + b1 * b1) + HYP_SLACK
    s = b2 + b1 * b1
    if kind is ClassKind.STARLIKE:
        value = s * s / 4 + b1 * b1
    else:
        value = s * s / 36 + b1 * b1 / 4
    return BoundFragment(value, hyp)


def t31_bound(kind: ClassKind, b1: float, b2: float) -> BoundFragment:
    """Bound on |1 - 2*a2^2 - a3*(a3 - 2*a2^2)|.

    Proven sharp when B1 - B1^2 <= B2 <= 3*B1^2 - B1 (starlike) or
    B1 - B1^2 <= B2 <= 2*B1^2 - B1 (convex).
    """
    _require_b1(b1)
    lo = b1 - b1 * b1
    if kind is ClassKind.STARLIKE:
        hi = 3 * b1 * b1 - b1
        value = 1 + 2 * b1 * b1 + (b2 + b1 * b1) * (3 * b1 * b1 - b2) / 4
    else:
        hi = 2 * b1 * b1 - b1
        value = 1 + b1 * b1 / 2 + (b2 + b1 * b1) * (2 * b1 * b1 - b2) / 36
    hyp = (lo - HYP_SLACK <= b2) and (b2 <= hi + HYP_SLACK)
    return BoundFragment(value, hyp)


def _hypothesis_notes(kind: ClassKind, b1: float, b2: float,
                      t22: BoundFragment, t31: BoundFragment) -> list[str]:
    notes = []
    if not t22.hypothesis_ok:
        notes.append(
            f"t22: |B2 + B1^2| = {abs(b2 + b1 * b1):.6g} < B1 = {b1:.6g}; "
            "open case, value is the formula only"
        )
    if not t31.hypothesis_ok:
        lo = b1 - b1 * b1
        hi = (3 if kind is ClassKind.STARLIKE else 2) * b1 * b1 - b1
        if b2 < lo:
            notes.append(f"t31: B2 = {b2:.6g} < B1 - B1^2 = {lo:.6g}")
        else:
            notes.append(
                f"t31: B2 = {b2:.6g} > "
                f"{'3' if kind is ClassKind.STARLIKE else '2'}*B1^2 - B1 = {hi:.6g}"
            )
    return notes


def full_report(spec: PhiSpec, kind: ClassKind) -> BoundReport:
    """Aggregate every bound for one (phi, class kind) pair."""
    verdict = validate(spec)
    if not verdict.ok:
        raise ValueError("inadmissible spec: " + "; ".join(verdict.violations))
    b1, b2 = b_coeffs(spec)
    t22 = t22_bound(kind, b1, b2)
    t31 = t31_bound(kind, b1, b2)
    return BoundReport(
        kind=kind,
        b1=b1,
        b2=b2,
        a2_bound=a2_bound(kind, b1),
        a3_bound=a3_bound(kind, b1, b2),
        t22=t22,
        t31=t31,
        notes=tuple(_hypothesis_notes(kind, b1, b2, t22, t31)),
    )
