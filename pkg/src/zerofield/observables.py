"""Flux, cyclic constant, spacetime loop integral and AB interference."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from . import specfun
from .decomposition import part_function, zerofield_phasor
from .potentials import PotentialError, interior_a_alpha
from .quadrature import gauss_kronrod
from .units import CONSTANTS, SolenoidConfig, derived

TWO_PI = 2.0 * math.pi


class NoBracketError(ValueError):
    """Search bracket does not straddle the target."""


class LoopIntegralError(ValueError):
    """Worldline not closed, or trapezoid doubling did not converge."""


def _require_n0(cfg: SolenoidConfig) -> None:
    if cfg.n_mode != 0:
        raise PotentialError("observables are defined for n_mode = 0 only")


# -- flux ---------------------------------------------------------------------

@dataclass(frozen=True)
class FluxResult:
    closed_form: complex
    quadrature: complex
    stokes: complex

    def max_rel_gap(self) -> float:
        ref = abs(self.closed_form)
        if ref == 0:
            return max(abs(self.quadrature), abs(self.stokes))
        return max(abs(self.quadrature - self.closed_form), abs(self.stokes - self.closed_form)) / ref


def static_flux(cfg: SolenoidConfig) -> float:
    """4 pi^2 R^2 I0 / c: the uniform interior field 4 pi I0 / c times pi R^2."""
    return 4.0 * math.pi ** 2 * cfg.R ** 2 * cfg.I0 / CONSTANTS.c


def flux_closed_form(cfg: SolenoidConfig) -> complex:
    _require_n0(cfg)
    if cfg.omega == 0:
        return complex(static_flux(cfg))
    kR = cfg.kR
    return (-4j * math.pi ** 3 * cfg.R ** 2 * cfg.I0 / CONSTANTS.c
            * specfun.bessel_j(1, kR) * specfun.hankel2(1, kR))


def flux(cfg: SolenoidConfig) -> FluxResult:
    """Enclosed flux three ways: closed form, disk quadrature of B_z, and 2 pi R A_alpha(R-)."""
    _require_n0(cfg)
    closed = flux_closed_form(cfg)
    if cfg.omega == 0:
        return FluxResult(closed, closed, closed)
    k, R = cfg.k, cfg.R
    # inside, A_alpha = P J_1(k rho) and (1/rho) d(rho J_1(k rho))/d rho = k J_0(k rho)
    amp = -2j * math.pi ** 2 * cfg.I0 * R / CONSTANTS.c * specfun.hankel2(1, cfg.kR)

    def ring(rho):
        return amp * k * specfun.bessel_j(0, k * rho) * rho

    scale = abs(amp) * k * R * R
    disk = TWO_PI * gauss_kronrod(ring, 0.0, R, abs_tol=1e-15 * scale, rel_tol=1e-14).value
    stokes = TWO_PI * R * interior_a_alpha(cfg, R)
    return FluxResult(closed, disk, stokes)


# -- cyclic constant ----------------------------------------------------------

@dataclass(frozen=True)
class CirculationResult:
    closed_form: float
    contour_integral: float
    contour_radius: float
    as_printed: float


def cyclic_constant(cfg: SolenoidConfig, contour_radius: float) -> CirculationResult:
    """Circulation of the zero-field A around a circle of radius > R.

    ``closed_form`` is 8 pi^2 I0 R J_1(kR)/(c k), which is what the line
    integral gives and what reduces to the static flux as k -> 0.
    ``as_printed`` carries 8 pi^3 in place of 8 pi^2 for comparison.
    """
    _require_n0(cfg)
    if not contour_radius > cfg.R:
        raise PotentialError(f"contour radius {contour_radius} must exceed R={cfg.R}")
    if cfg.omega == 0:
        v = static_flux(cfg)
        J = TWO_PI * cfg.R * cfg.I0
        line = TWO_PI * contour_radius * (J * cfg.R / (CONSTANTS.c * contour_radius))
        return CirculationResult(v, line, contour_radius, math.pi * v)
    base = cfg.I0 * cfg.R * specfun.bessel_j(1, cfg.kR) / (CONSTANTS.c * cfg.k)
    a0 = zerofield_phasor(cfg, contour_radius, 0.0).a_alpha
    line = TWO_PI * contour_radius * a0.real
    return CirculationResult(8.0 * math.pi ** 2 * base, line, contour_radius, 8.0 * math.pi ** 3 * base)


def static_limit_ratio(cfg: SolenoidConfig) -> float:
    """omega_1 / |Phi|; exactly 1 in the static case."""
    phi = abs(flux_closed_form(cfg))
    if phi == 0:
        raise PotentialError("flux vanishes; ratio undefined")
    return cyclic_constant(cfg, 2.0 * cfg.R).closed_form / phi


# -- spacetime loop -----------------------------------------------------------

Worldline = Callable[[float], tuple[float, float, float, float]]


def _one_form_sum(cfg: SolenoidConfig, part, worldline: Worldline, n: int) -> tuple[float, float]:
    c = CONSTANTS.c
    pts = [worldline(i / n) for i in range(n + 1)]
    vals = []
    for rho, alpha, z, t in pts:
        ph = part(rho, alpha)
        a_rho, a_alpha, phi = ph.at_time(cfg.omega, t)
        vals.append((a_rho, a_alpha * rho, phi))
    total = 0.0
    mag = 0.0
    for i in range(n):
        r0, a0, z0, t0 = pts[i]
        r1, a1, z1, t1 = pts[i + 1]
        g0, g1 = vals[i], vals[i + 1]
        dr = 0.5 * (g0[0] + g1[0]) * (r1 - r0)
        da = 0.5 * (g0[1] + g1[1]) * (a1 - a0)
        dt = -0.5 * (g0[2] + g1[2]) * c * (t1 - t0)
        total += dr + da + dt
        mag += abs(dr) + abs(da) + abs(dt)
    return total, mag


def spacetime_loop_integral(cfg: SolenoidConfig, worldline: Worldline, *, part: str = "zerofield",
                            samples: int = 64, rtol: float = 1e-10, max_doublings: int = 16,
                            return_samples: bool = False):
    """Closed-path integral of A.dr - phi c dt over a worldline s -> (rho, alpha, z, t).

    ``alpha`` along the worldline must be continuous (unwrapped); a closed
    path may end at alpha + 2 pi m and, for omega > 0, at t + m 2 pi / omega. The composite trapezoid rule is doubled
    until successive estimates agree to ``rtol`` of the integrand scale.
    """
    _require_n0(cfg)
    if samples < 64:
        raise LoopIntegralError("need at least 64 samples")
    r0, a0, z0, t0 = worldline(0.0)
    r1, a1, z1, t1 = worldline(1.0)
    turns = (a1 - a0) / TWO_PI
    # harmonic potentials are periodic in t, so whole periods also close the path
    if cfg.omega:
        periods = (t1 - t0) * cfg.omega / TWO_PI
        t_gap = abs(periods - round(periods)) / cfg.omega
        scale_t = max(abs(t0), abs(t1), 1.0 / cfg.omega)
    else:
        t_gap = abs(t1 - t0)
        scale_t = max(abs(t0), abs(t1), 1.0)
    if (abs(r1 - r0) > 1e-12 * max(r0, r1) or abs(z1 - z0) > 1e-12 * max(abs(z0), 1.0)
            or t_gap > 1e-12 * scale_t or abs(turns - round(turns)) > 1e-12):
        raise LoopIntegralError("worldline is not closed")
    fn = part_function(cfg, part)
    n = samples
    prev, mag = _one_form_sum(cfg, fn, worldline, n)
    for _ in range(max_doublings):
        n *= 2
        cur, mag = _one_form_sum(cfg, fn, worldline, n)
        if abs(cur - prev) <= rtol * max(mag, 1e-300):
            return (cur, n) if return_samples else cur
        prev = cur
    raise LoopIntegralError(f"trapezoid doubling did not converge by {n} samples")


def circular_worldline(rho: float, t: float = 0.0, turns: int = 1) -> Worldline:
    """Fixed-time circle of radius rho."""
    return lambda s: (rho, TWO_PI * turns * s, 0.0, t)


# -- interference -------------------------------------------------------------

@dataclass(frozen=True)
class InterferenceResult:
    s_param: float
    j0_of_s: float
    contrast: float
    intensity_profile: list[tuple[float, float]] = field(default_factory=list)


def s_parameter(cfg: SolenoidConfig) -> float:
    """S = 16 pi^3 I0 R J_1(kR) / (mu0 omega), with its omega -> 0 limit."""
    _require_n0(cfg)
    mu0 = derived(cfg).mu0
    if cfg.omega == 0:
        return 8.0 * math.pi ** 3 * cfg.I0 * cfg.R ** 2 / (mu0 * CONSTANTS.c)
    return 16.0 * math.pi ** 3 * cfg.I0 * cfg.R * specfun.bessel_j(1, cfg.kR) / (mu0 * cfg.omega)


def intensity_profile(s: float, phases: int = 64) -> list[tuple[float, float]]:
    """(omega_e tau, P/P0) = 0.5 (1 + J_0(S) cos(omega_e tau)) on an even grid over [0, 2 pi)."""
    j0 = specfun.bessel_j(0, abs(s))
    return [(TWO_PI * i / phases, 0.5 * (1.0 + j0 * math.cos(TWO_PI * i / phases))) for i in range(phases)]


def interference_from_s(s: float, phases: int = 64) -> InterferenceResult:
    j0 = specfun.bessel_j(0, abs(s))
    return InterferenceResult(s, j0, abs(j0), intensity_profile(s, phases))


def interference(cfg: SolenoidConfig, phases: int = 64) -> InterferenceResult:
    return interference_from_s(s_parameter(cfg), phases)


def contrast_zero_search(cfg_template: SolenoidConfig, vary: str = "I0",
                         bracket: tuple[float, float] | None = None) -> float:
    """Value of ``vary`` (I0 or R) at which S hits the first zero of J_0.

    The default bracket spans three decades either side of the template value.
    Bisection continues until the bracket cannot shrink further.
    """
    if vary not in ("I0", "R"):
        raise ValueError(f"vary must be 'I0' or 'R', got {vary!r}")
    target = specfun.bessel_j0_first_zero()
    if bracket is None:
        v0 = getattr(cfg_template, vary)
        if v0 <= 0:
            raise NoBracketError(f"template {vary} must be > 0 to derive a default bracket")
        bracket = (v0 * 1e-3, v0 * 1e3)
    lo, hi = sorted(bracket)

    def g(v):
        return s_parameter(cfg_template.replace(**{vary: v})) - target

    glo, ghi = g(lo), g(hi)
    if glo == 0:
        return lo
    if ghi == 0:
        return hi
    if (glo > 0) == (ghi > 0):
        raise NoBracketError(f"S - j01 has the same sign at {vary}={lo} and {vary}={hi}")
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            return mid
        gm = g(mid)
        if gm == 0:
            return mid
        if (gm > 0) == (glo > 0):
            lo, glo = mid, gm
        else:
            hi = mid
