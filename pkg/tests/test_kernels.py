"""Kernel backends: frozen values and compiled/pure-Python parity."""

import importlib
import math
import random

import pytest

from zerofield import _kernels_py

# 20-digit references (independent multiprecision evaluation), frozen.
FROZEN_J = {
    (0, 0.5): 0.93846980724081290423, (0, 2.0): 0.22389077914123566805,
    (0, 10.0): -0.2459357644513483352, (0, 25.0): 0.096266783275958116174,
    (1, 0.5): 0.24226845767487388638, (1, 2.0): 0.5767248077568733872,
    (1, 10.0): 0.04347274616886143667, (1, 25.0): -0.12535024958028990465,
    (2, 0.5): 0.030604023458682641307, (2, 2.0): 0.35283402861563771915,
    (2, 10.0): 0.25463031368512062253, (2, 25.0): -0.10629480324238130855,
}
FROZEN_Y = {
    (0, 0.5): -0.44451873350670655715, (0, 2.0): 0.5103756726497451196,
    (0, 10.0): 0.055671167283599391424, (0, 25.0): -0.12724943226800613783,
    (1, 0.5): -1.4714723926702430692, (1, 2.0): -0.10703243154093754689,
    (1, 10.0): 0.24901542420695388392, (1, 25.0): -0.098829964783237410053,
    (2, 0.5): -5.4413708371742657196, (2, 2.0): -0.61740810419068266648,
    (2, 10.0): -0.0058680824422086146398, (2, 25.0): 0.11934303508534714503,
}


@pytest.mark.parametrize("key", sorted(FROZEN_J))
def test_frozen_j(kernels, key):
    n, x = key
    assert kernels.jy(n, x)[0] == pytest.approx(FROZEN_J[key], rel=1e-14)


@pytest.mark.parametrize("key", sorted(FROZEN_Y))
def test_frozen_y(kernels, key):
    n, x = key
    assert kernels.jy(n, x)[1] == pytest.approx(FROZEN_Y[key], rel=1e-12)


def test_miller_start_is_even(kernels):
    for x in (12.5, 30.0, 100.0):
        for n in (1, 5, 40):
            s = kernels.miller_start(x, n)
            assert s % 2 == 0 and s > max(x, n)


def test_miller_table_normalised(kernels):
    t = kernels.j_miller_table(20.0, 3)
    assert t[0] + 2.0 * math.fsum(t[2::2]) == pytest.approx(1.0, abs=1e-15)


def test_h0_many_matches_pointwise(kernels):
    xs = [0.3, 5.0, 12.0, 12.0000001, 40.0]
    re, im = kernels.h0_many(xs)
    for x, r, i in zip(xs, re, im):
        j, y = kernels.jy(0, x)
        assert (r, i) == (j, -y)


def test_compiled_matches_pure_python_bitwise():
    try:
        compiled = importlib.import_module("zerofield._kernels")
    except ImportError:
        pytest.skip("compiled kernels not built")
    rng = random.Random(7)
    for _ in range(2000):
        n = rng.randint(0, 12)
        x = rng.uniform(1e-3, 80.0)
        assert compiled.jy(n, x) == _kernels_py.jy(n, x)
