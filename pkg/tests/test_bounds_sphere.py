import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from buckle import bounds_sphere as bs
from buckle.core import SphericalCap, validate_spectrum
from buckle.errors import DegenerateGapsError, IncompatibleSpectrumError, ValidationError
from buckle.numerics.poly import Polynomial
from buckle.solver import solve_buckling


def sphere(values, n=2, l=2):
    return validate_spectrum("sphere", n, l, values)


def test_first_recursion_step():
    for n in range(2, 7):
        rec = bs.fg_polys(3, n)
        assert rec.F[1] == Polynomial((-(n + 2), 1))
        assert rec.G[1] == Polynomial((n - 2, 3))


def test_second_step_for_n2_by_both_routes():
    rec = bs.fg_polys(4, 2)
    assert rec.F[2] == Polynomial((8, -12, 1))
    assert rec.G[2] == Polynomial((0, -8, 5))
    F, G = bs._coupled(2, 2)
    assert F[2] == rec.F[2] and G[2] == rec.G[2]


def test_aj_examples():
    for n in range(2, 7):
        assert bs.aj_coefficients(2, n) == [-1]
    assert bs.aj_coefficients(3, 2) == [0, -7]
    assert bs.aj_coefficients(3, 3) == [-1, -8]


@pytest.mark.parametrize("l, n", [(1, 2), (2, 1), (2.5, 3)])
def test_fg_polys_rejects(l, n):
    with pytest.raises(ValueError):
        bs.fg_polys(l, n)


def test_wide_range_stays_exact():
    rec = bs.fg_polys(12, 10)
    assert rec.combined.leading == 1 and rec.combined.degree == 11
    assert all(isinstance(c, int) for c in rec.a)


def test_h_value_examples():
    assert bs.h_value(9, 2, 4) == pytest.approx(61 / 7, rel=1e-15)
    assert bs.h_value(2, 2, 2) == pytest.approx(2.0)
    with pytest.raises(IncompatibleSpectrumError):
        bs.h_value(2, 2, 4)


@given(st.integers(2, 8), st.floats(1e-3, 1e4))
def test_h_value_order_two_identity(n, gap):
    lam = (n - 2) + gap
    expected = 1 + lam * (1 - 1 / (lam - (n - 2)))
    assert bs.h_value(lam, 2, n) == pytest.approx(expected, rel=1e-12, abs=1e-12)


def test_weight_for_n2_is_two():
    assert bs.weight(0.01, 2, 2) == 2.0
    assert bs.weight(9.0, 2, 4) == pytest.approx(2 + 2 / 7)


def test_thm12_examples():
    s = sphere([2, 3])
    assert bs.thm12_residual(s, 1, 1.0) == pytest.approx(2.0)
    assert bs.thm12_residual(s, 1, 2.0) == pytest.approx(3.0)
    for d in (0.1, 1.0, 7.0):
        assert bs.thm12_residual(sphere([2, 2]), 1, d) == 0.0
    with pytest.raises(ValueError):
        bs.thm12_residual(s, 1, 0.0)
    with pytest.raises(IndexError):
        bs.thm12_residual(s, 2, 1.0)


def test_precondition_rejected():
    with pytest.raises(IncompatibleSpectrumError):
        bs.thm12_residual(sphere([2, 5], n=4), 1, 1.0)
    with pytest.raises(ValidationError):
        bs.thm12_residual(validate_spectrum("euclidean", 2, 2, [2, 3]), 1, 1.0)


def test_optimal_delta_examples():
    s = sphere([2, 3])
    assert bs.optimal_delta(s, 1) == pytest.approx(1.0)
    at_star = bs.thm12_residual(s, 1, 1.0)
    assert all(at_star <= bs.thm12_residual(s, 1, d) for d in np.linspace(0.1, 10, 100))
    with pytest.raises(DegenerateGapsError, match="degenerate gaps"):
        bs.optimal_delta(sphere([2, 2]), 1)


def test_delta_grid():
    grid = bs.delta_grid()
    assert len(grid) == 101
    assert grid[0] == pytest.approx(1e-2) and grid[-1] == pytest.approx(1e2)
    assert grid[25] == pytest.approx(1e-1)


sphere_values = st.lists(st.floats(0.5, 500), min_size=2, max_size=8)


@settings(max_examples=80, deadline=None)
@given(sphere_values, st.integers(2, 4), st.sampled_from([0.5, 3.0]), st.data())
def test_optimal_delta_is_grid_envelope(vals, l, t, data):
    s = sphere(vals, 2, l).scaled(t)
    k = data.draw(st.integers(1, len(s) - 1))
    try:
        star = bs.optimal_delta(s, k)
    except DegenerateGapsError:
        return
    r = bs.thm12_residual(s, k, star)
    for d in bs.delta_grid():
        assert r <= bs.thm12_residual(s, k, d) + 1e-10 * max(1.0, abs(r))


def test_cor12_example():
    res = bs.cor12_bound(sphere([2]), 1)
    assert (res.S, res.A, res.B) == pytest.approx((2.0, 4.0, 12.0))
    assert res.T == pytest.approx((4.0,))
    assert res.bound == pytest.approx(6.0)
    assert bs.cor12_bound(sphere([2, 3]), 1).bound >= 3.0


def test_cor12_bounds_solver_cap():
    spec = solve_buckling(SphericalCap(1.2), 2, 14, 10, m_max=10).spectrum()
    for k in range(1, len(spec)):
        assert bs.thm12_residual(spec, k, bs.optimal_delta(spec, k)) >= 0
        assert spec[k] <= bs.cor12_bound(spec, k).bound * (1 + 1e-10)


def test_comparator_examples():
    assert bs.factor_123(2.0, 2, 1.0) == pytest.approx(2.0)
    assert bs.factor_110(2.0, 2, 1.0) == pytest.approx(2.25)
    assert bs.factor_123(5.0, 2, 1e-14) == pytest.approx(0.0, abs=1e-12)
    assert bs.factor_110(5.0, 2, 1e-14) == pytest.approx(0.0, abs=1e-12)
    rhs_123, rhs_110 = bs.wx_comparator(sphere([2, 3]), 1, 1.0)
    assert rhs_123 == pytest.approx(2.0 + 2.0) and rhs_110 == pytest.approx(2.25 + 2.0)


def test_comparator_matches_residual_at_order_two():
    s = sphere([6.0, 7.5, 9.0, 12.0], n=3)
    k = 3
    for d in (0.3, 1.0, 4.0):
        rhs_123, _ = bs.wx_comparator(s, k, d)
        gap = s[k] - np.array(s.values[:k])
        lhs, _, _ = bs.thm12_parts(s, k)
        assert rhs_123 - 2 * np.sum(gap ** 2) == pytest.approx(
            bs.thm12_residual(s, k, d) + lhs - 2 * np.sum(gap ** 2) - np.sum(gap ** 2 * (
                np.array([bs.weight(x, 2, 3) for x in s.values[:k]]) - 2)), rel=1e-12)


def test_comparator_errors():
    with pytest.raises(ValidationError):
        bs.wx_comparator(sphere([2, 3], l=3), 1, 1.0)
    with pytest.raises(IncompatibleSpectrumError):
        bs.wx_comparator(sphere([0.5, 3], n=3), 1, 1.0)
    with pytest.raises(ValueError):
        bs.wx_comparator(sphere([2, 3]), 1, -1.0)


@given(st.integers(2, 12), st.fractions(Fraction(1, 1000), 1000), st.fractions(Fraction(1, 1000), 1000))
def test_sharpness_exact(n, gap, delta):
    lam = n - 2 + gap
    c = n - 2
    x = (delta * lam + c) / (lam - c)
    margin = bs.factor_110(lam, n, delta) - bs.factor_123(lam, n, delta)
    assert margin >= 0
    assert margin == delta * delta / (4 * x) - delta + x
