"""Integer-order Bessel and Hankel evaluators."""

import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from zerofield import specfun
from zerofield.specfun import SpecfunDomainError


def j_integral(n, x):
    f = lambda th: mpmath.cos(n * th - x * mpmath.sin(th))
    return float(mpmath.quad(f, [0, mpmath.pi]) / mpmath.pi)


def y_integral(n, x):
    # exp(-x sinh t) has underflowed well before t = 12 for x >= 0.5
    a = quad(lambda th: math.sin(x * math.sin(th) - n * th), 0.0, math.pi, epsabs=1e-14, epsrel=1e-12, limit=200)[0]
    b = quad(lambda t: (math.exp(n * t) + (-1) ** n * math.exp(-n * t)) * math.exp(-x * math.sinh(t)),
             0.0, 12.0, epsabs=1e-15, epsrel=1e-13, limit=200)[0]
    return (a - b) / math.pi


# -- examples ----------------------------------------------------------------

def test_j_at_origin():
    assert specfun.bessel_j(0, 0.0) == 1.0
    assert specfun.bessel_j(1, 0.0) == 0.0


@pytest.mark.parametrize("x", [0.5, 2.0, 10.0])
def test_j1_against_integral_representation(x):
    assert specfun.bessel_j(1, x) == pytest.approx(j_integral(1, x), rel=1e-12)


@pytest.mark.parametrize("x", [0.5, 2.0, 10.0])
def test_j1_against_multiprecision(x):
    ref = float(mpmath.besselj(1, x))
    assert specfun.bessel_j(1, x) == pytest.approx(ref, rel=1e-12)


def test_y1_against_integral_representation():
    assert specfun.bessel_y(1, 2.0) == pytest.approx(y_integral(1, 2.0), rel=1e-12)


def test_y1_small_argument_pole():
    for x in (1e-4, 1e-6, 1e-8):
        assert specfun.bessel_y(1, x) / (-2.0 / (math.pi * x)) == pytest.approx(1.0, abs=x)


def test_y_rejects_origin():
    with pytest.raises(SpecfunDomainError):
        specfun.bessel_y(0, 0.0)


@pytest.mark.parametrize("bad", [(-1, 1.0), (0, -1.0), (0, math.nan), (0, math.inf)])
def test_domain_errors(bad):
    with pytest.raises(SpecfunDomainError):
        specfun.bessel_j(*bad)


def test_negative_order_only_on_request():
    assert specfun.bessel_j(-1, 2.0, signed=True) == -specfun.bessel_j(1, 2.0)
    assert specfun.bessel_y(-2, 2.0, signed=True) == specfun.bessel_y(2, 2.0)


@pytest.mark.parametrize("x", [0.5, 2.0, 10.0, 30.0])
def test_hankel_is_j_minus_i_y(x):
    h = specfun.hankel2(1, x)
    assert h == complex(specfun.bessel_j(1, x), -specfun.bessel_y(1, x))


def test_hankel_envelope_at_50():
    assert abs(specfun.hankel2(0, 50.0)) == pytest.approx(math.sqrt(2.0 / (math.pi * 50.0)), rel=0.01)


def test_hankel_imaginary_part_positive_at_1():
    assert specfun.hankel2(1, 1.0).imag > 0


def test_hankel2_0_many_matches_scalar():
    xs = [0.1, 3.0, 13.0, 45.0]
    assert specfun.hankel2_0_many(xs) == [specfun.hankel2(0, x) for x in xs]


def test_first_zero():
    z = specfun.bessel_j0_first_zero()
    assert z == pytest.approx(2.4048255576957727686, rel=1e-15)
    assert abs(specfun.bessel_j(0, z)) <= 1e-10


# -- routes ------------------------------------------------------------------

@pytest.mark.parametrize("x", [0.5, 3.0, 8.0, 11.9])
def test_series_and_miller_agree_below_crossover(x):
    for n in (0, 1, 2, 5):
        a = specfun.j_ascending_series(n, x)
        b = specfun.j_backward_recurrence(n, x)
        assert a == pytest.approx(b, rel=1e-12, abs=1e-15)


@pytest.mark.parametrize("x", [6.0, 11.0, 14.0])
def test_y_series_and_neumann_agree(x):
    s0, s1 = specfun.y01_ascending_series(x)
    n0, n1 = specfun.y01_neumann_series(x)
    assert s0 == pytest.approx(n0, abs=1e-11)
    assert s1 == pytest.approx(n1, abs=1e-11)


def test_crossover_continuity():
    x = specfun.DEFAULT.crossover
    below = specfun.bessel_jy(1, math.nextafter(x, 0.0))
    above = specfun.bessel_jy(1, math.nextafter(x, math.inf))
    assert below[0] == pytest.approx(above[0], abs=1e-11)
    assert below[1] == pytest.approx(above[1], abs=1e-11)


@pytest.mark.parametrize("x", [0.01, 0.3, 1.0, 4.0])
def test_y1_small_argument_terms_recombine(x):
    t = specfun.y1_small_argument_terms(x)
    assert t["pole"] == pytest.approx(-2.0 / (math.pi * x), rel=1e-15)
    total = t["pole"] + t["log_term"] + t["correction"]
    assert total == pytest.approx(specfun.bessel_y(1, x), rel=1e-13, abs=1e-15)
    assert t["j1_series"] == pytest.approx(specfun.bessel_j(1, x), rel=1e-14)


def test_series_config_crossover_moves_route():
    cfg = specfun.SeriesConfig(crossover=5.0)
    assert specfun.bessel_j(1, 8.0, cfg) == pytest.approx(specfun.bessel_j(1, 8.0), rel=1e-13)


# -- properties --------------------------------------------------------------

xs = st.floats(min_value=0.1, max_value=50.0, allow_nan=False)
orders = st.integers(min_value=0, max_value=2)


@settings(max_examples=300, deadline=None)
@given(n=orders, x=xs)
def test_wronskian(n, x):
    j0, y0 = specfun.bessel_jy(n, x)
    j1, y1 = specfun.bessel_jy(n + 1, x)
    w = j1 * y0 - j0 * y1
    assert abs(w - 2.0 / (math.pi * x)) <= 1e-10 * (2.0 / (math.pi * x))


@settings(max_examples=300, deadline=None)
@given(n=st.integers(min_value=1, max_value=3), x=xs)
def test_three_term_recurrence(n, x):
    for f in (specfun.bessel_j, specfun.bessel_y):
        lhs = f(n - 1, x) + f(n + 1, x)
        rhs = 2.0 * n / x * f(n, x)
        scale = abs(f(n - 1, x)) + abs(f(n + 1, x)) + abs(rhs)
        assert abs(lhs - rhs) <= 1e-10 * scale


@settings(max_examples=100, deadline=None)
@given(n=st.integers(min_value=0, max_value=6), x=st.floats(min_value=0.01, max_value=60.0))
def test_j_matches_multiprecision(n, x):
    ref = float(mpmath.besselj(n, x))
    # near a sign change the meaningful scale is the oscillation envelope
    envelope = min(1.0, math.sqrt(2.0 / (math.pi * x)))
    assert abs(specfun.bessel_j(n, x) - ref) <= 1e-13 * abs(ref) + 1e-14 * envelope
