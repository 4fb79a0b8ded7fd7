"""Vector potential of a solenoid wall current I0 exp i(-n alpha + omega t).

Everything here is a complex phasor under the exp(+i omega t) convention:
the physical value of a component is Re[phasor * exp(i omega t)]. The
closed forms come from expanding the Hankel kernel with the addition
theorem; ``potential_quadrature_oracle`` integrates the Green-function
kernel around the wall directly and is what the closed forms are checked
against.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from . import specfun
from .quadrature import gauss_kronrod
from .units import CONSTANTS, SolenoidConfig

TWO_PI = 2.0 * math.pi
ADDITION_ORDER_CAP = 40
SINGULAR_REL = 1e-12


class PotentialError(ValueError):
    """Evaluation requested where the potential formulas do not apply."""


class WallError(PotentialError):
    """Point lies on the current sheet rho = R."""


class SingularityError(PotentialError):
    """Green function evaluated at coincident points."""


class Region(enum.Enum):
    INSIDE = "inside"
    OUTSIDE = "outside"
    ON_WALL = "on_wall"


def region_of(rho: float, R: float) -> Region:
    if rho < R:
        return Region.INSIDE
    if rho > R:
        return Region.OUTSIDE
    return Region.ON_WALL


@dataclass(frozen=True)
class CylPoint:
    rho: float
    alpha: float = 0.0
    z: float = 0.0

    def __post_init__(self):
        if not self.rho >= 0:
            raise PotentialError(f"rho must be >= 0, got {self.rho}")
        object.__setattr__(self, "alpha", math.fmod(self.alpha, TWO_PI) % TWO_PI)

    @property
    def xy(self) -> tuple[float, float]:
        return self.rho * math.cos(self.alpha), self.rho * math.sin(self.alpha)


@dataclass(frozen=True)
class PotentialPhasor:
    a_rho: complex
    a_alpha: complex
    phi: complex
    region: Region

    def __add__(self, other: "PotentialPhasor") -> "PotentialPhasor":
        if self.region is not other.region:
            raise PotentialError("cannot add phasors from different regions")
        return PotentialPhasor(self.a_rho + other.a_rho, self.a_alpha + other.a_alpha,
                               self.phi + other.phi, self.region)

    def scaled(self, factor: complex) -> "PotentialPhasor":
        return PotentialPhasor(self.a_rho * factor, self.a_alpha * factor, self.phi * factor, self.region)

    def norm(self) -> float:
        return math.sqrt(abs(self.a_rho) ** 2 + abs(self.a_alpha) ** 2 + abs(self.phi) ** 2)

    def at_time(self, omega: float, t: float) -> tuple[float, float, float]:
        """Physical (A_rho, A_alpha, phi) at time t."""
        ph = cmath.exp(1j * omega * t)
        return (self.a_rho * ph).real, (self.a_alpha * ph).real, (self.phi * ph).real


def distance(p: CylPoint, q: CylPoint) -> float:
    """Planar distance between two points (z ignored)."""
    return _chord(p.rho, q.rho, p.alpha - q.alpha)


def _chord(r1: float, r2: float, dalpha: float) -> float:
    # the half-angle form avoids the cancellation of r1^2 + r2^2 - 2 r1 r2 cos
    s = math.sin(0.5 * dalpha)
    return math.sqrt((r1 - r2) ** 2 + 4.0 * r1 * r2 * s * s)


def green(k: float, p: CylPoint, p_src: CylPoint, c: float = CONSTANTS.c) -> complex:
    """-(i pi / c) H_0^(2)(k |p - p_src|), the 2-D Helmholtz Green function."""
    if not k > 0:
        raise PotentialError(f"green requires k > 0, got {k}")
    d = distance(p, p_src)
    if d <= SINGULAR_REL * max(p.rho, p_src.rho, 1e-300):
        raise SingularityError("source and field points coincide")
    return -1j * math.pi / c * specfun.hankel2(0, k * d)


def addition_theorem_lhs_rhs(k: float, rho: float, R_src: float, dalpha: float,
                             m_max: int) -> tuple[complex, complex]:
    """Direct H_0^(2)(k d) and its truncated addition-theorem expansion."""
    if not k > 0:
        raise PotentialError(f"k must be > 0, got {k}")
    if rho == R_src:
        raise WallError("addition theorem needs rho != R_src")
    if m_max > ADDITION_ORDER_CAP or m_max < 0:
        raise PotentialError(f"m_max must lie in [0, {ADDITION_ORDER_CAP}], got {m_max}")
    d = _chord(rho, R_src, dalpha)
    lhs = specfun.hankel2(0, k * d)
    inner = rho < R_src
    small, big = (rho, R_src) if inner else (R_src, rho)
    total = 0j
    for m in range(-m_max, m_max + 1):
        jm = specfun.bessel_j(m, k * small, signed=True)
        if jm == 0.0:
            continue
        total += cmath.exp(-1j * m * dalpha) * jm * specfun.hankel2(m, k * big, signed=True)
    return lhs, total


def _mode_sums(cfg: SolenoidConfig, rho: float) -> tuple[complex, complex]:
    """(S_plus, S_minus) of the n +/- 1 product terms for the region of rho."""
    n = cfg.n_mode
    kR = cfg.kR
    kr = cfg.k * rho
    terms = []
    for m in (n + 1, n - 1):
        if rho < cfg.R:
            terms.append(specfun.hankel2(m, kR, signed=True) * specfun.bessel_j(m, kr, signed=True))
        else:
            terms.append(specfun.bessel_j(m, kR, signed=True) * specfun.hankel2(m, kr, signed=True))
    return terms[0] + terms[1], terms[0] - terms[1]


def interior_a_alpha(cfg: SolenoidConfig, rho: float) -> complex:
    """Interior-branch A_alpha at alpha = 0, usable up to and including rho = R."""
    if rho > cfg.R:
        raise PotentialError("interior branch requires rho <= R")
    n = cfg.n_mode
    s = 0j
    for m in (n + 1, n - 1):
        s += specfun.hankel2(m, cfg.kR, signed=True) * specfun.bessel_j(m, cfg.k * rho, signed=True)
    return alpha_prefactor(cfg) * s


def alpha_prefactor(cfg: SolenoidConfig) -> complex:
    return -1j * math.pi ** 2 * cfg.I0 * cfg.R / CONSTANTS.c


def rho_prefactor(cfg: SolenoidConfig, as_printed: bool = False) -> complex:
    """Prefactor of the A_rho closed form.

    The quadrature of the sin-kernel integral gives -pi^2 I0 R / c; the
    commonly printed form carries an extra 1/2, selectable with
    ``as_printed=True`` for comparison only.
    """
    v = -math.pi ** 2 * cfg.I0 * cfg.R / CONSTANTS.c
    return 0.5 * v if as_printed else v


def _check_dynamic(cfg: SolenoidConfig, p: CylPoint) -> Region:
    if not cfg.omega > 0:
        raise PotentialError("dynamic formulas need omega > 0; use potential_static")
    region = region_of(p.rho, cfg.R)
    if region is Region.ON_WALL:
        raise WallError("rho = R is excluded; sample at R(1 +/- eps)")
    return region


def potential_closed_form(cfg: SolenoidConfig, p: CylPoint, *, rho_as_printed: bool = False) -> PotentialPhasor:
    region = _check_dynamic(cfg, p)
    s_plus, s_minus = _mode_sums(cfg, p.rho)
    phase = cmath.exp(-1j * cfg.n_mode * p.alpha) if cfg.n_mode else 1.0
    a_alpha = alpha_prefactor(cfg) * phase * s_plus
    if cfg.n_mode == 0:
        a_rho = 0j
    else:
        a_rho = rho_prefactor(cfg, rho_as_printed) * phase * s_minus
    return PotentialPhasor(a_rho, a_alpha, 0j, region)


def potential_quadrature_oracle(cfg: SolenoidConfig, p: CylPoint, *, tol: float = 1e-10,
                                max_panels: int = 4000) -> PotentialPhasor:
    """Integrate the Green-function kernel over the wall current.

    ``tol`` is an absolute tolerance in units of pi^2 I0 R / c.
    """
    region = _check_dynamic(cfg, p)
    k, R, n = cfg.k, cfg.R, cfg.n_mode
    c = CONSTANTS.c
    rho, alpha = p.rho, p.alpha
    pref = -1j * math.pi / c * cfg.I0 * R

    def integrand(alphas):
        xs = []
        for a in alphas:
            xs.append(k * _chord(rho, R, alpha - a))
        hs = specfun.hankel2_0_many(xs)
        out = []
        for a, h in zip(alphas, hs):
            src = cmath.exp(-1j * n * a) * h
            out.append((src * math.cos(alpha - a), src * math.sin(alpha - a)))
        return out

    scale = abs(alpha_prefactor(cfg))
    abs_tol = tol * scale / abs(pref) if scale else 0.0
    # the two components share nodes; integrate the pair as one vector by
    # running the rule on each projection with a cached evaluation
    cache: dict[float, tuple[complex, complex]] = {}

    def component(idx):
        def f(alphas):
            missing = [a for a in alphas if a not in cache]
            if missing:
                for a, v in zip(missing, integrand(missing)):
                    cache[a] = v
            return [cache[a][idx] for a in alphas]
        return f

    ia = gauss_kronrod(component(0), 0.0, TWO_PI, abs_tol=abs_tol, rel_tol=0.0,
                       max_panels=max_panels, initial_panels=4, vectorized=True)
    ir = gauss_kronrod(component(1), 0.0, TWO_PI, abs_tol=abs_tol, rel_tol=0.0,
                       max_panels=max_panels, initial_panels=4, vectorized=True)
    return PotentialPhasor(pref * ir.value, pref * ia.value, 0j, region)


def potential_static(cfg: SolenoidConfig, p: CylPoint) -> PotentialPhasor:
    """Magnetostatic potential J rho/(c R) inside and J R/(c rho) outside."""
    if cfg.omega != 0:
        raise PotentialError("potential_static needs omega = 0")
    if cfg.n_mode != 0:
        raise PotentialError("static solution is only defined for n_mode = 0")
    J = TWO_PI * cfg.R * cfg.I0
    c = CONSTANTS.c
    region = region_of(p.rho, cfg.R)
    if region is Region.OUTSIDE:
        a = J * cfg.R / (c * p.rho)
    else:
        a = J * p.rho / (c * cfg.R)
    return PotentialPhasor(0j, complex(a), 0j, region)


def potential(cfg: SolenoidConfig, p: CylPoint) -> PotentialPhasor:
    """Static or dynamic closed form depending on omega."""
    if cfg.omega == 0:
        return potential_static(cfg, p)
    return potential_closed_form(cfg, p)
