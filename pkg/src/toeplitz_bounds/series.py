"""Truncated formal power series over complex coefficients.

A series of order N stores exactly the coefficients of z^0 .. z^N; every
operation truncates its result at the common order.  All values are
immutable and all operations are pure, so series can be shared freely.

Division, square root, exp and log use the direct coefficient recurrences
rather than Newton iteration: they are exact at the truncation order and
trivially testable against hand expansions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

COMPOSE_TOL = 1e-12


@dataclass(frozen=True)
class Series:
    """Coefficients (c0, c1, ..., cN) of a power series truncated at z^N."""

    coeffs: tuple[complex, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> complex:
        return self.coeffs[n]

    def __add__(self, other: "Series") -> "Series":
        return add(self, other)

    def __sub__(self, other: "Series") -> "Series":
        return sub(self, other)

    def __mul__(self, other: "Series") -> "Series":
        return mul(self, other)

    def __truediv__(self, other: "Series") -> "Series":
        return div(self, other)

    def scale(self, factor: complex) -> "Series":
        return Series(tuple(factor * c for c in self.coeffs))

    def truncate(self, order: int) -> "Series":
        """Copy at the given order, padding with zeros if it is larger."""
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = self.coeffs[: order + 1]
        return Series(cs + (0j,) * (order + 1 - len(cs)))


def from_coeffs(coeffs: Iterable[complex], order: int | None = None) -> Series:
    """Build a series from leading coefficients, zero-padded to `order`."""
    cs = tuple(complex(c) for c in coeffs)
    if order is None:
        return Series(cs)
    return Series(cs).truncate(order) if cs else zero(order)


def zero(order: int) -> Series:
    return Series((0j,) * (order + 1))


def one(order: int) -> Series:
    return from_coeffs((1,), order)


def z(order: int) -> Series:
    return from_coeffs((0, 1), order)


def _common_order(a: Series, b: Series) -> int:
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} != {b.order}")
    return a.order


def add(a: Series, b: Series) -> Series:
    _common_order(a, b)
    return Series(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def sub(a: Series, b: Series) -> Series:
    _common_order(a, b)
    return Series(tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))


def mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated at the common order."""
    n = _common_order(a, b)
    out = [0j] * (n + 1)
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j in range(n + 1 - i):
            out[i + j] += ai * b.coeffs[j]
    return Series(tuple(out))


def div(a: Series, b: Series) -> Series:
    """Quotient q with mul(q, b) == a at the truncation order."""
    n = _common_order(a, b)
    if b.coeffs[0] == 0:
        raise ValueError("division by a series with zero constant term")
    q = [0j] * (n + 1)
    for m in range(n + 1):
        acc = a.coeffs[m]
        for k in range(1, m + 1):
            acc -= b.coeffs[k] * q[m - k]
        q[m] = acc / b.coeffs[0]
    return Series(tuple(q))


def compose(outer: Series, inner: Series) -> Series:
    """Formal composition outer(inner(z)); inner must have zero constant term."""
    n = _common_order(outer, inner)
    if abs(inner.coeffs[0]) > COMPOSE_TOL:
        raise ValueError("compose requires inner series with zero constant term")
    # Horner accumulation: r = outer[N]; r = r*inner + outer[k] downwards.
    r = from_coeffs((outer.coeffs[n],), n)
    for k in range(n - 1, -1, -1):
        r = mul(r, inner)
        r = Series((r.coeffs[0] + outer.coeffs[k],) + r.coeffs[1:])
    return r


def derive(a: Series) -> Series:
    """Termwise derivative, zero-padded back to the input order."""
    n = a.order
    out = [(k + 1) * a.coeffs[k + 1] for k in range(n)]
    out.append(0j)
    return Series(tuple(out))


def sqrt1p(a: Series) -> Series:
    """Square root of a series with constant term 1, branch with s(0)=1."""
    n = a.order
    if a.coeffs[0] != 1:
        raise ValueError("sqrt1p requires constant term exactly 1")
    s = [0j] * (n + 1)
    s[0] = 1
    for m in range(1, n + 1):
        acc = a.coeffs[m]
        for k in range(1, m):
            acc -= s[k] * s[m - k]
        s[m] = acc / 2
    return Series(tuple(s))


def exp(a: Series) -> Series:
    """Formal exponential; requires zero constant term.

    Uses the recurrence m*e_m = sum_{k=1}^{m} k*a_k*e_{m-k} obtained from
    e' = a'*e.
    """
    n = a.order
    if a.coeffs[0] != 0:
        raise ValueError("exp requires zero constant term")
    e = [0j] * (n + 1)
    e[0] = 1
    for m in range(1, n + 1):
        acc = 0j
        for k in range(1, m + 1):
            acc += k * a.coeffs[k] * e[m - k]
        e[m] = acc / m
    return Series(tuple(e))


def log(a: Series) -> Series:
    """Formal logarithm; requires constant term 1.

    Integrates a'/a: the quotient is exact at indices <= N-1, which is all
    the integration consumes.
    """
    n = a.order
    if a.coeffs[0] != 1:
        raise ValueError("log requires constant term exactly 1")
    d = div(derive(a), a)
    out = [0j] * (n + 1)
    for m in range(1, n + 1):
        out[m] = d.coeffs[m - 1] / m
    return Series(tuple(out))


def max_abs_diff(a: Series, b: Series, upto: int | None = None) -> float:
    """Largest coefficient magnitude of a-b up to the given index."""
    n = _common_order(a, b)
    if upto is None:
        upto = n
    return max(abs(a.coeffs[k] - b.coeffs[k]) for k in range(upto + 1))
