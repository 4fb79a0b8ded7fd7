"""Potentials of an infinite solenoid driven by harmonic current.

Closed-form and quadrature vector potentials, the exterior split into field
and zero-field parts, and the flux / cyclic-constant / Aharonov-Bohm
interference observables built on them. All quantities are Gaussian CGS.
"""

__version__ = "0.1.0"

from .specfun import BACKEND, bessel_j, bessel_j0_first_zero, bessel_y, hankel2
from .units import PhysicalConstants, SolenoidConfig, derived, from_si, to_si
from .potentials import (
    CylPoint,
    PotentialPhasor,
    Region,
    potential,
    potential_closed_form,
    potential_quadrature_oracle,
    potential_static,
)
from .decomposition import decompose_exterior, gauge_function, real_parts, scalar_zero_potential
from .observables import contrast_zero_search, cyclic_constant, flux, interference, s_parameter

__all__ = [
    "BACKEND",
    "CylPoint",
    "PhysicalConstants",
    "PotentialPhasor",
    "Region",
    "SolenoidConfig",
    "bessel_j",
    "bessel_j0_first_zero",
    "bessel_y",
    "contrast_zero_search",
    "cyclic_constant",
    "decompose_exterior",
    "derived",
    "flux",
    "from_si",
    "gauge_function",
    "hankel2",
    "interference",
    "potential",
    "potential_closed_form",
    "potential_quadrature_oracle",
    "potential_static",
    "real_parts",
    "s_parameter",
    "scalar_zero_potential",
    "to_si",
]
