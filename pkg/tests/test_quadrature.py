import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zerofield.quadrature import QuadratureError, gauss_kronrod


def test_polynomial_exact_on_one_panel():
    r = gauss_kronrod(lambda x: x ** 12, 0.0, 1.0)
    assert r.value == pytest.approx(1 / 13, rel=1e-15)
    assert r.panels == 1


def test_oscillatory():
    r = gauss_kronrod(lambda x: math.cos(50 * x), 0.0, math.pi / 2)
    assert r.value == pytest.approx(math.sin(25 * math.pi) / 50, abs=1e-13)


def test_log_endpoint_singularity():
    r = gauss_kronrod(lambda x: math.log(x), 0.0, 1.0, abs_tol=1e-10, rel_tol=1e-10)
    assert r.value == pytest.approx(-1.0, abs=1e-9)


def test_vectorized_matches_scalar():
    f = math.exp
    a = gauss_kronrod(f, -1.0, 2.0)
    b = gauss_kronrod(lambda xs: [f(x) for x in xs], -1.0, 2.0, vectorized=True)
    assert a.value == b.value


def test_panel_budget():
    with pytest.raises(QuadratureError):
        gauss_kronrod(lambda x: math.sin(1 / x), 1e-6, 1.0, abs_tol=1e-15, rel_tol=0, max_panels=10)


@settings(max_examples=50, deadline=None)
@given(a=st.floats(-5, 5), w=st.floats(0.1, 5))
def test_additivity(a, w):
    f = lambda x: math.exp(-x * x)
    m = a + 0.37 * w
    whole = gauss_kronrod(f, a, a + w).value
    parts = gauss_kronrod(f, a, m).value + gauss_kronrod(f, m, a + w).value
    assert whole == pytest.approx(parts, rel=1e-12, abs=1e-15)
