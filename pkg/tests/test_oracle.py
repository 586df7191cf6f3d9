"""Tests for the brute-force maximization oracle."""

import numpy as np
import pytest

from toeplitz_bounds import catalog
from toeplitz_bounds.bounds import (
    ClassKind,
    fekete_szego,
    t22_bound,
    t31_bound,
)
from toeplitz_bounds.oracle import (
    OracleConfig,
    SchwarzPoint,
    a2a3_from_schwarz,
    caratheodory_crosscheck,
    eval_functional,
    maximize,
)

ST, CV = ClassKind.STARLIKE, ClassKind.CONVEX

FAST = OracleConfig(samples=20_000, seed=7, polish_steps=30)

CATALOG_B = [
    ("classical", 2.0, 2.0),
    ("exp", 1.0, 0.5),
    ("cardioid", 4 / 3, 2 / 3),
    ("sine", 1.0, 0.0),
    ("limacon", 2**0.5, 0.5),
]


def random_points(n, seed=0):
    rng = np.random.default_rng(seed)
    r = rng.uniform(0, 1, n)
    t1 = rng.uniform(0, 2 * np.pi, n)
    rho = rng.uniform(0, 1, n) * (1 - r * r)
    t2 = rng.uniform(0, 2 * np.pi, n)
    return [
        SchwarzPoint(complex(ri * np.exp(1j * a)), complex(pi * np.exp(1j * b)))
        for ri, a, pi, b in zip(r, t1, rho, t2)
    ]


class TestCoefficientMaps:
    def test_starlike_witness_point(self):
        a2, a3 = a2a3_from_schwarz(ST, 2, 2, SchwarzPoint(1j, 0))
        assert a2 == pytest.approx(2j)
        assert a3 == pytest.approx(-3)

    def test_convex_witness_point(self):
        a2, a3 = a2a3_from_schwarz(CV, 1, 0.5, SchwarzPoint(1j, 0))
        assert a2 == pytest.approx(0.5j)
        assert a3 == pytest.approx(-0.25)

    def test_zero_point(self):
        assert a2a3_from_schwarz(ST, 1.5, 0.2, SchwarzPoint(0, 0)) == (0, 0)

    def test_rejects_outside_region(self):
        with pytest.raises(ValueError, match="outside"):
            a2a3_from_schwarz(ST, 1, 0, SchwarzPoint(0.9, 0.9))


class TestEvalFunctional:
    def test_t22_classical(self):
        assert eval_functional("t22", 2j, -3) == pytest.approx(13.0)

    def test_t31_identity_row(self):
        assert eval_functional("t31", 0, 0) == pytest.approx(1.0)

    def test_t31_lune_extremal(self):
        assert eval_functional("t31", 1j, -0.75) == pytest.approx(63 / 16)

    def test_unknown(self):
        with pytest.raises(ValueError):
            eval_functional("t44", 0, 0)


class TestCrosscheck:
    def test_random_points(self):
        for p in random_points(10_000):
            assert caratheodory_crosscheck(ST, 2, 2, p) <= 1e-12
            assert caratheodory_crosscheck(CV, 1.3, -0.4, p) <= 1e-12

    def test_witness_point(self):
        p = SchwarzPoint(1j, 0)
        assert caratheodory_crosscheck(ST, 2, 2, p) <= 1e-14

    def test_real_boundary_point(self):
        assert caratheodory_crosscheck(CV, 1, 1e-9, SchwarzPoint(1, 0)) <= 1e-14

    def test_classical_c_bounds(self):
        # |c1| <= 2 and |c2| <= 2 on the whole region
        for p in random_points(2_000, seed=3):
            assert abs(2 * p.w1) <= 2 + 1e-12
            assert abs(2 * (p.w2 + p.w1 * p.w1)) <= 2 + 1e-12


class TestMaximize:
    def test_classical_t22(self):
        res = maximize(ST, 2, 2, "t22", FAST)
        assert res.sup_estimate == pytest.approx(13.0, abs=1e-3)

    def test_parabolic_convex_t22(self):
        b1, b2 = catalog.b_coeffs(catalog.PARABOLIC)
        res = maximize(CV, b1, b2, "t22", FAST)
        assert res.sup_estimate == pytest.approx(0.204083, abs=1e-3)

    def test_open_case_estimate(self):
        res = maximize(ST, 1, -0.9, "t22", FAST)
        # the witness point value is always attainable, bound or not
        assert res.sup_estimate >= 1.0025 - 1e-12

    def test_determinism(self):
        a = maximize(ST, 1.1, 0.3, "t31", FAST)
        b = maximize(ST, 1.1, 0.3, "t31", FAST)
        assert a == b

    def test_argmax_reproduces_value(self):
        res = maximize(CV, 1.2, 0.1, "t22", FAST)
        a2, a3 = a2a3_from_schwarz(CV, 1.2, 0.1, res.argmax)
        assert eval_functional("t22", a2, a3) == pytest.approx(
            res.sup_estimate, abs=1e-12
        )

    @pytest.mark.parametrize("label,b1,b2", CATALOG_B)
    def test_soundness_and_sharpness(self, label, b1, b2):
        for kind in (ST, CV):
            for name, frag in (
                ("t22", t22_bound(kind, b1, b2)),
                ("t31", t31_bound(kind, b1, b2)),
            ):
                if not frag.hypothesis_ok:
                    continue
                res = maximize(kind, b1, b2, name, FAST)
                assert res.sup_estimate <= frag.value + 1e-9
                assert res.sup_estimate >= frag.value - 1e-3

    @pytest.mark.parametrize("mu", [-1.0, 0.0, 0.5, 1.0, 2.0])
    def test_fekete_szego_agreement(self, mu):
        for label, b1, b2 in CATALOG_B:
            for kind in (ST, CV):
                res = maximize(kind, b1, b2, "fs", FAST, mu=mu)
                closed = fekete_szego(kind, b1, b2, mu)
                assert res.sup_estimate == pytest.approx(closed, abs=1e-3), (
                    label, kind, mu,
                )

    def test_rejects_zero_budget(self):
        with pytest.raises(ValueError, match="budget"):
            maximize(ST, 1, 0, "t22", OracleConfig(samples=0))

    def test_rejects_unknown_functional(self):
        with pytest.raises(ValueError):
            maximize(ST, 1, 0, "t23", FAST)


def test_in_region_predicate():
    assert SchwarzPoint(1j, 0).in_region()
    assert SchwarzPoint(0.5, 0.75).in_region()
    assert not SchwarzPoint(0.5, 0.76).in_region()
    assert not SchwarzPoint(1.1, 0).in_region()
