"""Field / zero-field split of the exterior n = 0 potential.

Outside the solenoid A_alpha = Q H_1^(2)(k rho) with
Q = -2 i pi^2 I0 R J_1(kR) / c. The pole term of Y_1 contributes
Q * 2i / (pi k rho), which is curl-free and, together with the scalar
potential phi0 = -(4 pi i I0 R / c) J_1(kR) alpha, produces no E either.
That pair is the zero-field part; the remainder carries the fields.

Azimuth arguments named ``alpha`` in this module are *unwrapped*: phi0 and
the gauge function are linear in alpha, so alpha and alpha + 2 pi give
different values. ``winding`` arguments add whole turns explicitly.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

from . import specfun
from .potentials import (
    CylPoint,
    PotentialError,
    PotentialPhasor,
    Region,
    potential_closed_form,
)
from .quadrature import gauss_kronrod
from .units import CONSTANTS, SolenoidConfig

TWO_PI = 2.0 * math.pi
FD_REL_STEP = 1e-5


class StencilError(PotentialError):
    """Finite-difference stencil would cross the solenoid wall."""


def _require_n0(cfg: SolenoidConfig) -> None:
    if cfg.n_mode != 0:
        raise PotentialError("the field/zero-field split is defined for n_mode = 0 only")


def q_amplitude(cfg: SolenoidConfig) -> complex:
    """Q = -2 i pi^2 I0 R J_1(kR) / c."""
    return -2j * math.pi ** 2 * cfg.I0 * cfg.R * specfun.bessel_j(1, cfg.kR) / CONSTANTS.c


def w_amplitude(cfg: SolenoidConfig) -> float:
    """W = 2 pi I0 R J_1(kR) / c, the real amplitude used for time signals."""
    return TWO_PI * cfg.I0 * cfg.R * specfun.bessel_j(1, cfg.kR) / CONSTANTS.c


def phi0_coefficient(cfg: SolenoidConfig) -> complex:
    """d(phi0)/d(alpha) outside the solenoid."""
    return -4j * math.pi * cfg.I0 * cfg.R * specfun.bessel_j(1, cfg.kR) / CONSTANTS.c


@dataclass(frozen=True)
class DecomposedPotential:
    field_part: PotentialPhasor
    zerofield_part: PotentialPhasor
    total: PotentialPhasor
    rho: float
    alpha: float
    cfg: SolenoidConfig


def zerofield_phasor(cfg: SolenoidConfig, rho: float, alpha: float) -> PotentialPhasor:
    _require_n0(cfg)
    if rho <= cfg.R:
        return PotentialPhasor(0j, 0j, 0j, Region.INSIDE)
    a = q_amplitude(cfg) * 2j / (math.pi * cfg.k * rho)
    return PotentialPhasor(0j, a, phi0_coefficient(cfg) * alpha, Region.OUTSIDE)


def decompose_exterior(cfg: SolenoidConfig, p: CylPoint, winding: int = 0) -> DecomposedPotential:
    _require_n0(cfg)
    if not cfg.omega > 0:
        raise PotentialError("decomposition needs omega > 0")
    if p.rho <= cfg.R:
        raise PotentialError(f"decomposition is exterior only; rho={p.rho} <= R={cfg.R}")
    alpha = p.alpha + TWO_PI * winding
    q = q_amplitude(cfg)
    kr = cfg.k * p.rho
    zf = zerofield_phasor(cfg, p.rho, alpha)
    field_a = q * specfun.hankel2(1, kr) - zf.a_alpha
    field = PotentialPhasor(0j, field_a, 0j, Region.OUTSIDE)
    total = PotentialPhasor(0j, field.a_alpha + zf.a_alpha, field.phi + zf.phi, Region.OUTSIDE)
    return DecomposedPotential(field, zf, total, p.rho, alpha, cfg)


def reconstruction_residual(d: DecomposedPotential) -> float:
    """Relative gap between total A_alpha and the independent closed form."""
    ref = potential_closed_form(d.cfg, CylPoint(d.rho, d.alpha)).a_alpha
    return abs(d.total.a_alpha - ref) / abs(ref) if ref else abs(d.total.a_alpha)


def real_parts(d: DecomposedPotential, t: float) -> tuple[float, float]:
    """Physical (field, zero-field) A_alpha at time t from the explicit real forms."""
    cfg = d.cfg
    w = w_amplitude(cfg)
    kr = cfg.k * d.rho
    wt = cfg.omega * t
    j1, y1 = specfun.bessel_jy(1, kr)
    a_f = w * (math.pi * j1 * math.sin(wt) - (2.0 / kr + math.pi * y1) * math.cos(wt))
    a_0 = w * (2.0 / kr) * math.cos(wt)
    return a_f, a_0


def scalar_zero_potential(cfg: SolenoidConfig, p: CylPoint, winding: int = 0) -> complex:
    """phi0: zero inside, linear in the unwrapped azimuth outside."""
    _require_n0(cfg)
    if p.rho <= cfg.R:
        return 0j
    return phi0_coefficient(cfg) * (p.alpha + TWO_PI * winding)


@dataclass(frozen=True)
class GaugeFunction:
    """chi(alpha, t) = chi_coefficient * alpha * exp(i omega t), exterior only."""

    chi_coefficient: complex
    omega: float

    def value(self, alpha: float, t: float = 0.0) -> complex:
        return self.chi_coefficient * alpha * cmath.exp(1j * self.omega * t)

    def a_alpha(self, rho: float) -> complex:
        """(1/rho) d(chi)/d(alpha) phasor."""
        return self.chi_coefficient / rho

    def phi(self, alpha: float) -> complex:
        """-(1/c) d(chi)/dt phasor."""
        return -1j * self.omega / CONSTANTS.c * self.chi_coefficient * alpha

    def winding_jump(self) -> complex:
        """chi(alpha + 2 pi) - chi(alpha), i.e. the circulation of grad chi."""
        return TWO_PI * self.chi_coefficient


def gauge_function(cfg: SolenoidConfig) -> GaugeFunction:
    _require_n0(cfg)
    if not cfg.omega > 0:
        raise PotentialError("gauge function needs omega > 0")
    coeff = 4.0 * math.pi * cfg.I0 * cfg.R * specfun.bessel_j(1, cfg.kR) / (CONSTANTS.c * cfg.k)
    return GaugeFunction(coeff, cfg.omega)


def _richardson(g: Callable[[float], complex], x: float, h: float) -> complex:
    # divide by the spacing actually realised in floating point
    xp, xm = x + h, x - h
    d1 = (g(xp) - g(xm)) / (xp - xm)
    xp, xm = x + 0.5 * h, x - 0.5 * h
    d2 = (g(xp) - g(xm)) / (xp - xm)
    return (4.0 * d2 - d1) / 3.0


def curl_z_fd(a_alpha_field: Callable[[float], complex], rho: float, h: float | None = None,
              R: float | None = None) -> complex:
    """(1/rho) d(rho A_alpha)/d(rho) by Richardson-extrapolated central differences."""
    if h is None:
        h = FD_REL_STEP * rho
    if R is not None and rho - h <= R:
        raise StencilError(f"stencil [{rho - h}, {rho + h}] crosses the wall at R={R}")
    return _richardson(lambda r: r * a_alpha_field(r), rho, h) / rho


@dataclass(frozen=True)
class RealFieldSample:
    e_rho: float
    e_alpha: float
    b_z: float
    rho: float
    alpha: float
    z: float
    t: float


def e_field_fd(part: Callable[[float, float], PotentialPhasor], omega: float, rho: float,
               alpha: float, t: float, z: float = 0.0) -> RealFieldSample:
    """Physical E and B_z at (rho, alpha, t) from a potential-pair callable.

    ``part(rho, alpha)`` returns the phasor pair at an unwrapped azimuth.
    Time derivatives are analytic (factor i omega); spatial derivatives of
    phi and of rho*A_alpha use Richardson central differences.
    """
    c = CONSTANTS.c
    ph = cmath.exp(1j * omega * t)
    here = part(rho, alpha)
    h_r = FD_REL_STEP * rho
    h_a = FD_REL_STEP
    dphi_drho = _richardson(lambda r: part(r, alpha).phi, rho, h_r)
    dphi_dalpha = _richardson(lambda a: part(rho, a).phi, alpha, h_a)
    e_rho = -(1j * omega / c * here.a_rho * ph).real - (dphi_drho * ph).real
    e_alpha = -(1j * omega / c * here.a_alpha * ph).real - (dphi_dalpha * ph).real / rho
    d_ra = _richardson(lambda r: r * part(r, alpha).a_alpha, rho, h_r)
    d_ar = _richardson(lambda a: part(rho, a).a_rho, alpha, h_a)
    b_z = ((d_ra - d_ar) / rho * ph).real
    return RealFieldSample(e_rho, e_alpha, b_z, rho, alpha, z, t)


def part_function(cfg: SolenoidConfig, which: str) -> Callable[[float, float], PotentialPhasor]:
    """Exterior phasor callable for 'field', 'zerofield' or 'total'."""
    if which not in ("field", "zerofield", "total"):
        raise ValueError(f"unknown part {which!r}")
    if which == "zerofield":
        return lambda r, a: zerofield_phasor(cfg, r, a)

    def f(r, a):
        d = decompose_exterior(cfg, CylPoint(r, 0.0))
        zf_phi = phi0_coefficient(cfg) * a
        if which == "field":
            return d.field_part
        return PotentialPhasor(0j, d.total.a_alpha, zf_phi, Region.OUTSIDE)

    return f


# -- gauge equivalence ------------------------------------------------------

VectorField = Callable[[float, float], tuple[complex, complex]]


def circle_contour(radius: float, vertices: int = 64, center: tuple[float, float] = (0.0, 0.0)):
    cx, cy = center
    return [(cx + radius * math.cos(TWO_PI * i / vertices), cy + radius * math.sin(TWO_PI * i / vertices))
            for i in range(vertices)]


def _segment_clearance(p0, p1) -> float:
    """Distance from the origin to the segment p0-p1."""
    dx, dy = p1[0] - p0[0], p1[1] - p0[1]
    L2 = dx * dx + dy * dy
    s = 0.0 if L2 == 0 else max(0.0, min(1.0, -(p0[0] * dx + p0[1] * dy) / L2))
    return math.hypot(p0[0] + s * dx, p0[1] + s * dy)


def _cartesian(field: VectorField, x: float, y: float) -> tuple[complex, complex]:
    rho = math.hypot(x, y)
    a = math.atan2(y, x)
    ar, aa = field(rho, a)
    ca, sa = math.cos(a), math.sin(a)
    return ar * ca - aa * sa, ar * sa + aa * ca


def circulation(field: VectorField, contour, *, rel_tol: float = 1e-13) -> complex:
    """Line integral of ``field`` around the closed polyline ``contour``."""
    total = 0j
    n = len(contour)
    for i in range(n):
        p0 = contour[i]
        p1 = contour[(i + 1) % n]
        dx, dy = p1[0] - p0[0], p1[1] - p0[1]

        def f(s, p0=p0, dx=dx, dy=dy):
            ax, ay = _cartesian(field, p0[0] + s * dx, p0[1] + s * dy)
            return ax * dx + ay * dy

        total += gauss_kronrod(f, 0.0, 1.0, abs_tol=0.0, rel_tol=rel_tol, max_panels=200).value
    return total


def curl_z_vector_fd(field: VectorField, rho: float, alpha: float) -> complex:
    """(1/rho)[d(rho A_alpha)/d rho - d(A_rho)/d alpha] by finite differences."""
    h_r = FD_REL_STEP * rho
    d_ra = _richardson(lambda r: r * field(r, alpha)[1], rho, h_r)
    d_ar = _richardson(lambda a: field(rho, a)[0], alpha, FD_REL_STEP)
    return (d_ra - d_ar) / rho


def gauge_equivalence_check(A: VectorField, A_prime: VectorField, contour, *, rtol: float = 1e-8,
                            R: float | None = None) -> tuple[bool, bool]:
    """(local_ok, global_ok): equal curls at the contour vertices, equal circulations."""
    if len(contour) < 3:
        raise ValueError("contour needs at least three vertices")
    if R is not None:
        n = len(contour)
        if min(_segment_clearance(contour[i], contour[(i + 1) % n]) for i in range(n)) <= R:
            raise PotentialError("contour touches or crosses the solenoid wall")

    curl_gap = 0.0
    curl_scale = 0.0
    a_max = 0.0
    for x, y in contour:
        rho = math.hypot(x, y)
        a = math.atan2(y, x)
        c1 = curl_z_vector_fd(A, rho, a)
        c2 = curl_z_vector_fd(A_prime, rho, a)
        v1 = A(rho, a)
        v2 = A_prime(rho, a)
        mag = max(abs(v1[0]), abs(v1[1]), abs(v2[0]), abs(v2[1]))
        a_max = max(a_max, mag)
        curl_gap = max(curl_gap, abs(c1 - c2))
        curl_scale = max(curl_scale, abs(c1), abs(c2), mag / rho)
    local_ok = curl_gap <= rtol * curl_scale

    g1 = circulation(A, contour)
    g2 = circulation(A_prime, contour)
    perimeter = sum(math.dist(contour[i], contour[(i + 1) % len(contour)]) for i in range(len(contour)))
    circ_scale = max(abs(g1), abs(g2), a_max * perimeter)
    global_ok = abs(g1 - g2) <= rtol * circ_scale
    return local_ok, global_ok
