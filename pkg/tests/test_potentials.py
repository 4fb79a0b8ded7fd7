import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zerofield import specfun
from zerofield.potentials import (
    CylPoint,
    PotentialError,
    Region,
    SingularityError,
    WallError,
    addition_theorem_lhs_rhs,
    green,
    potential,
    potential_closed_form,
    potential_quadrature_oracle,
    potential_static,
    region_of,
    rho_prefactor,
)
from zerofield.units import CONSTANTS, SolenoidConfig

C = CONSTANTS.c


def rel(a, b):
    return (a + b.scaled(-1)).norm() / max(b.norm(), 1e-300)


# -- Green function ------------------------------------------------------------

def test_green_coincident_angles():
    g = green(1.0, CylPoint(2.0, 0.4), CylPoint(1.0, 0.4))
    assert g == pytest.approx(-1j * math.pi / C * specfun.hankel2(0, 1.0), rel=1e-14)


def test_green_symmetric():
    p, q = CylPoint(1.3, 0.2), CylPoint(0.7, 2.9)
    assert green(2.0, p, q) == green(2.0, q, p)


def test_green_log_growth_and_singularity():
    src = CylPoint(1.0, 0.0)
    mags = [abs(green(1.0, CylPoint(1.0 + d, 0.0), src)) for d in (1e-3, 1e-6, 1e-9)]
    assert mags[0] < mags[1] < mags[2]
    with pytest.raises(SingularityError):
        green(1.0, CylPoint(1.0, 0.0), src)


# -- addition theorem ------------------------------------------------------------

def test_addition_collapses_at_origin():
    for da in (0.0, 1.0, 3.0):
        lhs, rhs = addition_theorem_lhs_rhs(1.0, 0.0, 1.3, da, 12)
        assert rhs == specfun.hankel2(0, 1.3)
        assert lhs == pytest.approx(rhs, rel=1e-15)


def test_addition_example_m8():
    lhs, rhs = addition_theorem_lhs_rhs(1.0, 0.3, 1.0, math.pi / 3, 8)
    assert abs(lhs - rhs) <= 1e-9


@pytest.mark.parametrize("small,big", [(0.3, 1.0), (0.2, 2.0), (0.1, 1.0)])
def test_addition_converges_geometrically(small, big):
    # the truncation tail is dominated by the m = m_max + 1 terms, which
    # shrink by about (small/big) per order
    res = [abs(complex.__sub__(*addition_theorem_lhs_rhs(1.0, small, big, 0.0, m))) for m in (2, 4, 6)]
    ratio = (res[2] / res[1]) ** 0.5
    assert ratio < 1.5 * small / big
    assert res[2] < res[1] < res[0]


def test_addition_rejects_equal_radii():
    with pytest.raises(WallError):
        addition_theorem_lhs_rhs(1.0, 1.0, 1.0, 0.5, 4)


# -- closed form ---------------------------------------------------------------

def test_axisymmetric_mode_has_no_radial_component():
    cfg = SolenoidConfig.from_kR(0.7)
    for r in (0.3, 2.0):
        assert potential_closed_form(cfg, CylPoint(r, 1.1)).a_rho == 0


def test_zero_current_gives_zero():
    cfg = SolenoidConfig.from_kR(0.7, I0=0.0, n_mode=2)
    ph = potential_closed_form(cfg, CylPoint(2.0, 0.3))
    assert ph.norm() == 0.0


@pytest.mark.parametrize("r", [0.5, 2.0])
def test_closed_form_vs_oracle_example(r):
    cfg = SolenoidConfig.from_kR(0.7)
    p = CylPoint(r, 0.0)
    assert rel(potential_closed_form(cfg, p), potential_quadrature_oracle(cfg, p)) <= 1e-8


@settings(max_examples=25, deadline=None)
@given(kR=st.floats(0.05, 3.0), r=st.sampled_from([0.2, 0.6, 0.95, 1.05, 1.7, 4.0]),
       n=st.integers(0, 4), alpha=st.floats(0.0, 6.28))
def test_closed_form_vs_oracle_property(kR, r, n, alpha):
    cfg = SolenoidConfig.from_kR(kR, n_mode=n)
    p = CylPoint(r, alpha)
    assert rel(potential_closed_form(cfg, p), potential_quadrature_oracle(cfg, p)) <= 1e-8


def test_radial_prefactor_validated_by_quadrature():
    cfg = SolenoidConfig.from_kR(0.7, n_mode=1)
    p = CylPoint(2.0, 0.4)
    quad = potential_quadrature_oracle(cfg, p).a_rho
    closed = potential_closed_form(cfg, p).a_rho
    printed = potential_closed_form(cfg, p, rho_as_printed=True).a_rho
    assert abs(closed - quad) <= 1e-9 * abs(quad)
    assert abs(printed / quad - 0.5) <= 1e-9
    assert rho_prefactor(cfg, as_printed=True) == 0.5 * rho_prefactor(cfg)


def test_oracle_radial_vanishes_for_n0():
    cfg = SolenoidConfig.from_kR(0.7)
    ph = potential_quadrature_oracle(cfg, CylPoint(2.0, 0.9))
    assert abs(ph.a_rho) <= 1e-10 * abs(ph.a_alpha)


def test_outgoing_wave_decay():
    cfg = SolenoidConfig.from_kR(1.0)
    rs = [50.0 * 10 ** (i / 8) for i in range(9)]
    # envelope of H_1: |A| sqrt(rho) is flat to O(1/(k rho))
    env = [abs(potential_closed_form(cfg, CylPoint(r)).a_alpha) * math.sqrt(r) for r in rs]
    slope = math.log(env[-1] / env[0]) / math.log(rs[-1] / rs[0])
    assert abs(slope) < 0.01


def test_phase_convention_outgoing():
    # exp(+i omega t) with H^(2): phase fronts move outward, so the phase of
    # A_alpha decreases with rho
    cfg = SolenoidConfig.from_kR(1.0)
    a1 = potential_closed_form(cfg, CylPoint(20.0)).a_alpha
    a2 = potential_closed_form(cfg, CylPoint(20.1)).a_alpha
    assert cmath.phase(a2 / a1) == pytest.approx(-0.1, abs=1e-3)


def test_wall_is_excluded():
    cfg = SolenoidConfig.from_kR(0.7)
    with pytest.raises(WallError):
        potential_closed_form(cfg, CylPoint(1.0))
    with pytest.raises(WallError):
        potential_quadrature_oracle(cfg, CylPoint(1.0))
    assert region_of(1.0 + 1e-6, 1.0) is Region.OUTSIDE
    assert region_of(1.0 - 1e-6, 1.0) is Region.INSIDE


def test_dynamic_requires_omega():
    with pytest.raises(PotentialError):
        potential_closed_form(SolenoidConfig(1.0, 1.0, 0.0), CylPoint(2.0))


# -- static ------------------------------------------------------------------

def test_static_examples():
    cfg = SolenoidConfig(I0=2.0, R=1.5, omega=0.0)
    J = 2 * math.pi * cfg.R * cfg.I0
    assert potential_static(cfg, CylPoint(0.0)).a_alpha == 0
    assert potential_static(cfg, CylPoint(1.5)).a_alpha == pytest.approx(J / C, rel=1e-15)
    assert potential_static(cfg, CylPoint(3.0)).a_alpha == pytest.approx(J * 1.5 / (C * 3.0), rel=1e-15)
    assert potential(cfg, CylPoint(3.0)) == potential_static(cfg, CylPoint(3.0))


def test_static_rejects_dynamic_and_modes():
    with pytest.raises(PotentialError):
        potential_static(SolenoidConfig(1.0, 1.0, 1.0), CylPoint(2.0))
    with pytest.raises(PotentialError):
        potential_static(SolenoidConfig(1.0, 1.0, 0.0, n_mode=1), CylPoint(2.0))


def test_dynamic_continuous_across_wall():
    cfg = SolenoidConfig.from_kR(0.7)
    a = potential_closed_form(cfg, CylPoint(1 - 1e-9)).a_alpha
    b = potential_closed_form(cfg, CylPoint(1 + 1e-9)).a_alpha
    assert abs(a - b) <= 1e-7 * abs(a)


def test_cylpoint_normalises_alpha():
    assert CylPoint(1.0, -math.pi / 2).alpha == pytest.approx(1.5 * math.pi)
    with pytest.raises(ValueError):
        CylPoint(-1.0)
