"""Extremal functions attaining the Toeplitz determinant bounds.

The starlike witness K solves z K'(z) = K(z) * phi(i z) and the convex
witness H solves z H''(z) = H'(z) * (phi(i z) - 1), both normalized by
f(0) = 0, f'(0) = 1.  Their coefficients follow from simple recursions in
the coefficients psi_n of the rotated target phi(i z); the first two are
a2 = i*B1, a3 = -(B1^2 + B2)/2 for K and a2 = i*B1/2, a3 = -(B1^2 + B2)/6
for H.  When the theorem hypotheses hold, |T2(2)| and |T3(1)| evaluated at
these coefficients equal the closed-form bounds exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import series
from .bounds import ClassKind
from .catalog import PhiSpec, phi_series, validate
from .series import Series


@dataclass(frozen=True)
class ExtremalFunction:
    kind: ClassKind
    coeffs: tuple[complex, ...]  # (a0, a1, a2, ...) with a0 = 0, a1 = 1
    psi: Series  # coefficients of phi(i z)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def a2(self) -> complex:
        return self.coeffs[2]

    @property
    def a3(self) -> complex:
        return self.coeffs[3]

    @property
    def t22_value(self) -> complex:
        return self.a3 * self.a3 - self.a2 * self.a2

    @property
    def t31_value(self) -> complex:
        a2, a3 = self.a2, self.a3
        return 1 - 2 * a2 * a2 - a3 * (a3 - 2 * a2 * a2)


def _psi(spec: PhiSpec, order: int) -> Series:
    rot = series.z(order).scale(1j)
    return series.compose(phi_series(spec, order), rot)


def _check(spec: PhiSpec, order: int) -> None:
    if order < 3:
        raise ValueError("order must be at least 3")
    verdict = validate(spec)
    if not verdict.ok:
        raise ValueError("inadmissible spec: " + "; ".join(verdict.violations))


def k_phi(spec: PhiSpec, order: int = 10) -> ExtremalFunction:
    """Starlike extremal: a_n = (1/(n-1)) * sum_{k=1}^{n-1} a_k psi_{n-k}."""
    _check(spec, order)
    psi = _psi(spec, order)
    a = [0j] * (order + 1)
    a[1] = 1
    for n in range(2, order + 1):
        acc = 0j
        for k in range(1, n):
            acc += a[k] * psi[n - k]
        a[n] = acc / (n - 1)
    return ExtremalFunction(ClassKind.STARLIKE, tuple(a), psi)


def h_phi(spec: PhiSpec, order: int = 10) -> ExtremalFunction:
    """Convex extremal via g = H': m g_m = sum_{k=0}^{m-1} g_k psi_{m-k}."""
    _check(spec, order)
    psi = _psi(spec, order)
    g = [0j] * order
    g[0] = 1
    for m in range(1, order):
        acc = 0j
        for k in range(m):
            acc += g[k] * psi[m - k]
        g[m] = acc / m
    a = [0j] * (order + 1)
    for m in range(order):
        a[m + 1] = g[m] / (m + 1)
    return ExtremalFunction(ClassKind.CONVEX, tuple(a), psi)


def residual(ef: ExtremalFunction, spec: PhiSpec) -> float:
    """Max coefficient magnitude of the defining-equation defect.

    Starlike: z K' - K * phi(iz), checked at every index up to the order.
    Convex: z H'' - H' * (phi(iz) - 1), checked up to order-1 because the
    last coefficient of H' is not determined at this truncation.
    """
    order = ef.order
    psi = _psi(spec, order)
    if ef.kind is ClassKind.STARLIKE:
        f = Series(ef.coeffs)
        zfp = Series(tuple(n * c for n, c in enumerate(ef.coeffs)))
        return series.max_abs_diff(zfp, series.mul(f, psi))
    g = [0j] * (order + 1)
    for m in range(order):
        g[m] = (m + 1) * ef.coeffs[m + 1]
    gs = Series(tuple(g))
    zgp = Series(tuple(m * c for m, c in enumerate(g)))
    rhs = series.mul(gs, psi - series.one(order))
    return series.max_abs_diff(zgp, rhs, upto=order - 1)
