"""Gaussian-CGS constants, SI ingestion and the solenoid parameter record."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from pathlib import Path

MAX_MODE = 8


@dataclass(frozen=True)
class PhysicalConstants:
    c: float = 2.99792458e10  # cm/s
    h: float = 6.62607015e-27  # erg s
    e_abs: float = 4.80320471e-10  # esu


CONSTANTS = PhysicalConstants()

# 1 A = c/10 statA with c in cm/s
STATAMP_PER_AMP = CONSTANTS.c / 10.0
CM_PER_UM = 1e-4


class ConfigError(ValueError):
    """Invalid solenoid parameters or configuration file."""


@dataclass(frozen=True)
class SolenoidConfig:
    """Driven solenoid in Gaussian-CGS units.

    I0 is the surface current density amplitude (statA/cm), R the radius
    (cm), omega the angular frequency (rad/s) and n_mode the azimuthal mode.
    """

    I0: float
    R: float
    omega: float
    n_mode: int = 0

    def __post_init__(self):
        for name in ("I0", "R", "omega"):
            v = getattr(self, name)
            if not isinstance(v, (int, float)) or not math.isfinite(v):
                raise ConfigError(f"{name} must be a finite number, got {v!r}")
        if self.I0 < 0:
            raise ConfigError(f"I0 must be >= 0, got {self.I0}")
        if self.R <= 0:
            raise ConfigError(f"R must be > 0, got {self.R}")
        if self.omega < 0:
            raise ConfigError(f"omega must be >= 0, got {self.omega}")
        if int(self.n_mode) != self.n_mode or not 0 <= self.n_mode <= MAX_MODE:
            raise ConfigError(f"n_mode must be an integer in [0, {MAX_MODE}], got {self.n_mode}")
        object.__setattr__(self, "n_mode", int(self.n_mode))

    @property
    def k(self) -> float:
        return self.omega / CONSTANTS.c

    @property
    def kR(self) -> float:
        return self.k * self.R

    def replace(self, **changes) -> "SolenoidConfig":
        d = asdict(self)
        d.update(changes)
        return SolenoidConfig(**d)

    @classmethod
    def from_kR(cls, kR: float, *, I0: float = 1.0, R: float = 1.0, n_mode: int = 0) -> "SolenoidConfig":
        """Config with the given dimensionless kR, mostly for sweeps and tests."""
        return cls(I0=I0, R=R, omega=kR * CONSTANTS.c / R, n_mode=n_mode)


@dataclass(frozen=True)
class DerivedQuantities:
    k: float
    J_total: float
    mu0: float


def derived(cfg: SolenoidConfig, consts: PhysicalConstants = CONSTANTS) -> DerivedQuantities:
    return DerivedQuantities(
        k=cfg.omega / consts.c,
        J_total=2.0 * math.pi * cfg.R * cfg.I0,
        mu0=consts.c * consts.h / consts.e_abs,
    )


def from_si(I0_mA_per_cm: float, R_um: float, freq_Hz: float, n_mode: int = 0) -> SolenoidConfig:
    """Build a config from lab units: mA/cm, micrometres and hertz."""
    if R_um is None or not R_um > 0:
        raise ConfigError(f"radius must be > 0, got {R_um}")
    if I0_mA_per_cm < 0:
        raise ConfigError(f"current amplitude must be >= 0, got {I0_mA_per_cm}")
    if freq_Hz < 0:
        raise ConfigError(f"frequency must be >= 0, got {freq_Hz}")
    return SolenoidConfig(
        I0=I0_mA_per_cm * 1e-3 * STATAMP_PER_AMP,
        R=R_um * CM_PER_UM,
        omega=2.0 * math.pi * freq_Hz,
        n_mode=n_mode,
    )


def to_si(cfg: SolenoidConfig) -> dict:
    """Inverse of :func:`from_si`."""
    return {
        "i0_mA_per_cm": cfg.I0 / STATAMP_PER_AMP * 1e3,
        "radius_um": cfg.R / CM_PER_UM,
        "freq_hz": cfg.omega / (2.0 * math.pi),
        "n_mode": cfg.n_mode,
    }


CONFIG_KEYS = {
    "i0_mA_per_cm": float,
    "radius_um": float,
    "freq_hz": float,
    "n_mode": int,
}


def read_config_file(path) -> dict:
    """Parse a flat ``key = value`` file. Blank lines and ``#`` comments are skipped."""
    lookup = {k.lower(): k for k in CONFIG_KEYS}
    out = {}
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        canon = lookup.get(key.lower())
        if canon is None:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        try:
            out[canon] = CONFIG_KEYS[canon](value)
        except ValueError:
            raise ConfigError(f"{path}:{lineno}: bad value {value!r} for {key}") from None
    return out
