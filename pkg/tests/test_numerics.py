import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pauli_fierz.numerics import (
    BracketError,
    Interval,
    QuadratureError,
    find_root,
    integrate,
)


def _bisect(g, lo, hi, iters=200):
    glo = g(lo)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        gm = g(mid)
        if gm == 0:
            return mid
        if (gm > 0) == (glo > 0):
            lo, glo = mid, gm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def test_integrate_rational_against_antiderivative():
    res = integrate(lambda k: k * k / (k + 1), Interval(0.0, 1.0))
    exact = 0.5 - 1.0 + math.log(2.0)
    assert res.value == pytest.approx(0.1931472, abs=1e-7)
    assert abs(res.value - exact) <= max(1e-14, 1e-10 * abs(exact))
    assert res.abs_error_estimate >= 0
    assert res.subdivisions >= 1


def test_integrate_zero_integrand():
    res = integrate(lambda k: 0.0, (-3.0, 7.0))
    assert res.value == 0.0


def test_integrate_log_antiderivative():
    res = integrate(lambda p: p / (p * p + p), (0.0, 1.0))
    assert res.value == pytest.approx(math.log(2.0), rel=1e-12)


def test_vectorized_and_scalar_paths_agree():
    f = lambda x: np.exp(-x) * np.sin(3 * x)  # noqa: E731
    a = integrate(f, (0.0, 5.0), vectorized=True)
    b = integrate(lambda x: math.exp(-x) * math.sin(3 * x), (0.0, 5.0))
    assert a.value == b.value


def test_kronrod_rule_exact_for_degree_31():
    res = integrate(lambda x: x**30, (-1.0, 1.0), rel_tol=1.0)
    assert res.subdivisions == 1
    assert res.value == pytest.approx(2.0 / 31.0, rel=1e-13)


def test_empty_interval():
    assert integrate(math.exp, (2.0, 2.0)).value == 0.0


def test_nan_reports_abscissa():
    with pytest.raises(QuadratureError) as info:
        integrate(lambda x: math.nan if x > 0.5 else 1.0, (0.0, 1.0))
    assert info.value.abscissa is not None and info.value.abscissa > 0.5
    assert "x=" in str(info.value)


def test_nonconvergence_carries_best_estimate():
    with pytest.raises(QuadratureError) as info:
        integrate(lambda x: math.sin(1.0 / x) / x, (1e-6, 1.0), max_subdivisions=5)
    assert info.value.best is not None
    assert info.value.best.subdivisions == 5


@pytest.mark.parametrize("rng", [(1.0, 0.0), (0.0, math.inf)])
def test_bad_interval(rng):
    with pytest.raises(ValueError):
        Interval(*rng)


def test_bad_tolerance():
    with pytest.raises(ValueError):
        integrate(math.exp, (0, 1), rel_tol=0.0)


@settings(max_examples=30, deadline=None)
@given(c=st.sampled_from([-1.0, 3.0, 10.0]), lam=st.floats(0.05, 10.0))
def test_linearity(c, lam):
    f = lambda k: k * k / (k + 1)  # noqa: E731
    base = integrate(f, (0, lam)).value
    scaled = integrate(lambda k: c * f(k), (0, lam)).value
    tol = max(1e-14, 1e-10 * abs(scaled))
    assert abs(scaled - c * base) <= 2 * tol


@settings(max_examples=30, deadline=None)
@given(lam=st.floats(0.05, 20.0))
def test_interval_additivity(lam):
    f = lambda k: k**3 / (k * k + k + 0.3)  # noqa: E731
    whole = integrate(f, (0, lam)).value
    parts = integrate(f, (0, lam / 2)).value + integrate(f, (lam / 2, lam)).value
    assert abs(whole - parts) <= 2 * max(1e-14, 1e-10 * abs(whole))


def test_find_root_linear():
    assert find_root(lambda x: x - 2.0, (0.0, 5.0)) == pytest.approx(2.0, abs=1e-14)


def test_find_root_sqrt2_against_bisection():
    g = lambda x: x * x - 2.0  # noqa: E731
    oracle = _bisect(g, 1.0, 2.0)
    root = find_root(g, (1.0, 2.0), tol=1e-14)
    assert root == pytest.approx(1.4142136, abs=1e-7)
    assert abs(root - oracle) <= 1e-14


def test_find_root_requires_sign_change():
    with pytest.raises(BracketError):
        find_root(lambda x: x * x + 1, (-1.0, 1.0))


def test_find_root_bad_tol():
    with pytest.raises(ValueError):
        find_root(lambda x: x, (-1.0, 1.0), tol=0.0)


@settings(max_examples=40, deadline=None)
@given(shift=st.floats(-0.9, 0.9), lo=st.floats(-3, -1), hi=st.floats(1, 3))
def test_find_root_idempotent_and_inside_bracket(shift, lo, hi):
    g = lambda x: math.tanh(x - shift)  # noqa: E731
    r1 = find_root(g, (lo, hi))
    r2 = find_root(g, (lo, hi))
    assert r1 == r2
    assert lo <= r1 <= hi
    # narrowing the bracket around the root returns the same root
    r3 = find_root(g, (r1 - 0.5, r1 + 0.5))
    assert abs(r3 - r1) <= 1e-13
