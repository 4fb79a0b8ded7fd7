"""Integer-order Bessel, Neumann and Hankel functions.

Below ``SeriesConfig.crossover`` the ascending power series are summed
directly (including the logarithmic series for Y_0 and Y_1). Above it J is
obtained by normalised Miller backward recurrence and Y_0, Y_1 from Neumann
series over the same table; higher Y orders always come from forward
recurrence, which is stable for Y.

The kernels come from the compiled ``_kernels`` extension when it is
importable, otherwise from ``_kernels_py``. ``BACKEND`` names the one in use.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

if os.environ.get("ZEROFIELD_PURE_PYTHON"):
    from . import _kernels_py as _k

    BACKEND = "python"
else:
    try:
        from . import _kernels as _k

        BACKEND = "cython"
    except ImportError:  # extension not built
        from . import _kernels_py as _k

        BACKEND = "python"

EULER_GAMMA = _k.EULER_GAMMA
MAX_ORDER = 64


@dataclass(frozen=True)
class SeriesConfig:
    """Numerical knobs shared by every special-function evaluation."""

    crossover: float = 12.0
    rtol: float = 1e-16
    max_terms: int = 60
    root_xtol: float = 1e-10


DEFAULT = SeriesConfig()


class SpecfunDomainError(ValueError):
    """Argument outside the domain of a special function."""


def _check_order(n: int, signed: bool = False) -> int:
    if int(n) != n:
        raise SpecfunDomainError(f"order must be an integer, got {n!r}")
    n = int(n)
    if n < 0 and not signed:
        raise SpecfunDomainError(f"order must be >= 0, got {n}")
    if abs(n) > MAX_ORDER:
        raise SpecfunDomainError(f"|order| {n} exceeds cap {MAX_ORDER}")
    return n


def _check_x(x: float, *, strict: bool) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise SpecfunDomainError(f"argument must be finite, got {x}")
    if x < 0.0 or (strict and x == 0.0):
        bound = "> 0" if strict else ">= 0"
        raise SpecfunDomainError(f"argument must be {bound}, got {x}")
    return x


def bessel_j(n: int, x: float, cfg: SeriesConfig = DEFAULT, *, signed: bool = False) -> float:
    """J_n(x) for integer n >= 0 and x >= 0.

    With ``signed=True`` negative orders are accepted via J_{-n} = (-1)^n J_n.
    """
    n = _check_order(n, signed)
    x = _check_x(x, strict=False)
    v = _k.jn(abs(n), x, cfg.crossover, cfg.rtol, cfg.max_terms)
    return -v if (n < 0 and n % 2) else v


def bessel_y(n: int, x: float, cfg: SeriesConfig = DEFAULT, *, signed: bool = False) -> float:
    """Y_n(x) for integer n >= 0 and x > 0."""
    n = _check_order(n, signed)
    x = _check_x(x, strict=True)
    v = _k.yn(abs(n), x, cfg.crossover, cfg.rtol, cfg.max_terms)
    return -v if (n < 0 and n % 2) else v


def bessel_jy(n: int, x: float, cfg: SeriesConfig = DEFAULT, *, signed: bool = False) -> tuple[float, float]:
    n = _check_order(n, signed)
    x = _check_x(x, strict=True)
    j, y = _k.jy(abs(n), x, cfg.crossover, cfg.rtol, cfg.max_terms)
    if n < 0 and n % 2:
        return -j, -y
    return j, y


def hankel2(n: int, x: float, cfg: SeriesConfig = DEFAULT, *, signed: bool = False) -> complex:
    """H_n^(2)(x) = J_n(x) - i Y_n(x)."""
    j, y = bessel_jy(n, x, cfg, signed=signed)
    return complex(j, -y)


def hankel2_0_many(xs, cfg: SeriesConfig = DEFAULT) -> list[complex]:
    """Vectorised H_0^(2) over a sequence of positive arguments."""
    xs = [float(x) for x in xs]
    if any(not (x > 0.0) or not math.isfinite(x) for x in xs):
        raise SpecfunDomainError("all arguments must be finite and > 0")
    re, im = _k.h0_many(xs, cfg.crossover, cfg.rtol, cfg.max_terms)
    return [complex(a, b) for a, b in zip(re, im)]


def j_ascending_series(n: int, x: float, cfg: SeriesConfig = DEFAULT) -> float:
    """J_n from the power series alone, regardless of the crossover."""
    return _k.j_series(_check_order(abs(n)), _check_x(x, strict=False), cfg.rtol, cfg.max_terms)


def j_backward_recurrence(n: int, x: float) -> float:
    """J_n from normalised Miller recurrence alone."""
    n = abs(_check_order(n))
    return _k.j_miller_table(_check_x(x, strict=True), n)[n]


def y01_ascending_series(x: float, cfg: SeriesConfig = DEFAULT) -> tuple[float, float]:
    return _k.y01_series(_check_x(x, strict=True), cfg.rtol, cfg.max_terms)


def y01_neumann_series(x: float) -> tuple[float, float]:
    x = _check_x(x, strict=True)
    return _k.y01_neumann(x, _k.j_miller_table(x, 1))


def y1_small_argument_terms(x: float, cfg: SeriesConfig = DEFAULT) -> dict[str, float]:
    """The separate pieces of the explicit series for Y_1.

    Y_1(x) = pole + log_term + correction, where ``pole`` is -2/(pi x),
    ``log_term`` is (2/pi)(ln(x/2) + C) J_1(x) and ``correction`` is the
    harmonic-number series. The exterior n = 0 potential is split along
    exactly these pieces.
    """
    x = _check_x(x, strict=True)
    half = 0.5 * x
    q = -half * half
    t = half
    j1 = half
    hm = 0.0
    corr = half
    for m in range(1, cfg.max_terms):
        t *= q / (m * (m + 1))
        hm += 1.0 / m
        w = 2.0 * hm + 1.0 / (m + 1)
        j1 += t
        corr += w * t
        if abs(t) * w <= cfg.rtol * (abs(j1) + abs(corr)):
            break
    return {
        "pole": -2.0 / (math.pi * x),
        "log_term": (2.0 / math.pi) * (math.log(half) + EULER_GAMMA) * j1,
        "correction": -corr / math.pi,
        "j1_series": j1,
    }


def bessel_j0_first_zero(cfg: SeriesConfig = DEFAULT) -> float:
    """Smallest positive zero of J_0 by bisection on this module's J_0.

    Bisection runs until the bracket stops shrinking in floating point,
    which is well below ``cfg.root_xtol``.
    """
    lo, hi = 2.0, 3.0
    flo = bessel_j(0, lo, cfg)
    fhi = bessel_j(0, hi, cfg)
    if flo * fhi > 0.0:
        raise SpecfunDomainError("J_0 has no sign change on [2, 3]")
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fmid = bessel_j(0, mid, cfg)
        if fmid == 0.0:
            return mid
        if (fmid > 0.0) == (flo > 0.0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return lo if abs(flo) <= abs(bessel_j(0, hi, cfg)) else hi
