"""Unit scheme and dimensionless couplings.

Every solver in this package works in natural problem units: energies in
multiples of the rest energy m0*c^2 and lengths in multiples of the reduced
Compton wavelength hbar/(m0*c).  This module owns the CODATA-2018 constants,
the conversion scheme back to physical units, and the two dimensionless
couplings (Coulomb G and oscillator lambda), so no other module ever touches
SI quantities.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

# CODATA 2018 (SI)
SPEED_OF_LIGHT = 299792458.0            # m/s, exact
PLANCK_HBAR = 1.054571817e-34           # J s
ELEMENTARY_CHARGE = 1.602176634e-19     # C, exact
VACUUM_PERMITTIVITY = 8.8541878128e-12  # F/m
EV_TO_JOULE = 1.602176634e-19           # J per eV, exact
ELECTRON_REST_ENERGY_EV = 510998.95000  # eV

#: Environment variable naming an optional key=value constants file.
CONFIG_ENV_VAR = "PFSPEC_CONFIG"

_CONFIG_KEYS = ("rest_energy_ev", "hbar", "c", "g")


@dataclass(frozen=True)
class UnitScheme:
    """Rest-energy / Compton-length unit system for one particle species.

    The closure identity compton_length * rest_energy = hbar * c holds by
    construction; `closure_residual` reports the floating-point error.
    """

    rest_energy_ev: float
    hbar: float = PLANCK_HBAR
    c: float = SPEED_OF_LIGHT
    ev_to_joule: float = EV_TO_JOULE

    def __post_init__(self):
        for name in ("rest_energy_ev", "hbar", "c", "ev_to_joule"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be strictly positive")

    @property
    def rest_energy_joule(self) -> float:
        return self.rest_energy_ev * self.ev_to_joule

    @property
    def compton_length(self) -> float:
        """Reduced Compton wavelength hbar/(m0 c), in metres."""
        return self.hbar * self.c / self.rest_energy_joule

    @property
    def closure_residual(self) -> float:
        rhs = self.hbar * self.c
        return abs(self.compton_length * self.rest_energy_joule - rhs) / rhs

    def to_ev(self, energy_dimensionless: float) -> float:
        """Convert an energy in units of m0*c^2 to eV."""
        return energy_dimensionless * self.rest_energy_ev

    def to_dimensionless(self, energy_ev: float) -> float:
        """Convert an energy in eV to units of m0*c^2."""
        return energy_ev / self.rest_energy_ev


def make_unit_scheme(rest_energy_ev: float, *, hbar: float = PLANCK_HBAR,
                     c: float = SPEED_OF_LIGHT,
                     ev_to_joule: float = EV_TO_JOULE) -> UnitScheme:
    """Build a unit scheme from the rest energy in eV.

    Overriding hbar, c and ev_to_joule with 1.0 yields natural units in
    which the Compton length is exactly 1.
    """
    if not rest_energy_ev > 0:
        raise ValueError("rest energy must be strictly positive")
    return UnitScheme(rest_energy_ev, hbar=hbar, c=c, ev_to_joule=ev_to_joule)


def electron_scheme() -> UnitScheme:
    return make_unit_scheme(ELECTRON_REST_ENERGY_EV)


@dataclass(frozen=True)
class CouplingG:
    """Dimensionless Coulomb coupling G = e^2/(4 pi eps0 hbar c).

    G < 1/2 is required so that (l + 1/2)^2 - G^2 stays positive for every
    orbital quantum number l >= 0.
    """

    g: float

    def __post_init__(self):
        if not 0.0 <= self.g < 0.5:
            raise ValueError("coupling must satisfy 0 <= G < 1/2")

    @property
    def gsq(self) -> float:
        return self.g * self.g

    @classmethod
    def from_gsq(cls, gsq: float) -> "CouplingG":
        if gsq < 0:
            raise ValueError("G^2 must be non-negative")
        return cls(math.sqrt(gsq))


def hydrogen_coupling() -> CouplingG:
    """Coulomb coupling of the hydrogen problem from CODATA constants.

    Numerically this is the fine-structure constant, G ~ 7.2974e-3,
    G^2 ~ 5.33e-5.
    """
    g = ELEMENTARY_CHARGE ** 2 / (
        4.0 * math.pi * VACUUM_PERMITTIVITY * PLANCK_HBAR * SPEED_OF_LIGHT
    )
    return CouplingG(g)


@dataclass(frozen=True)
class OscillatorCoupling:
    """Dimensionless oscillator coupling lambda = hbar*w0 / (m0 c^2)."""

    lam: float

    #: level scale above which the weak-coupling expansions degrade
    REGIME_LIMIT = 0.1

    def __post_init__(self):
        if self.lam < 0:
            raise ValueError("oscillator coupling must be non-negative")

    def level_scale(self, n: int) -> float:
        """Harmonic level lambda*(n + 1/2) in units of m0*c^2."""
        return self.lam * (n + 0.5)

    def check_regime(self, n: int) -> float:
        """Return the level scale, warning when it is no longer small."""
        e0 = self.level_scale(n)
        if e0 >= self.REGIME_LIMIT:
            warnings.warn(
                f"lambda*(n+1/2) = {e0:.3g} is not small against the rest "
                "energy; weak-coupling results are unreliable here",
                stacklevel=2,
            )
        return e0


def non_rel_hydrogen_level(n: int, coupling: CouplingG) -> float:
    """Nonrelativistic bound level -G^2/(2 n^2) in units of m0*c^2."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("principal quantum number must be an integer >= 1")
    return -coupling.gsq / (2.0 * n * n)


def load_config(path: str) -> dict[str, float]:
    """Parse a key=value constants file.

    Recognised keys: rest_energy_ev, hbar, c, g.  Blank lines and lines
    starting with '#' are ignored.
    """
    values: dict[str, float] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {line!r}")
            key, _, value = line.partition("=")
            key = key.strip().lower()
            if key not in _CONFIG_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = float(value.strip())
    return values


def scheme_from_config(config: dict[str, float]) -> UnitScheme:
    return make_unit_scheme(
        config.get("rest_energy_ev", ELECTRON_REST_ENERGY_EV),
        hbar=config.get("hbar", PLANCK_HBAR),
        c=config.get("c", SPEED_OF_LIGHT),
    )


def coupling_from_config(config: dict[str, float]) -> CouplingG:
    if "g" in config:
        return CouplingG(config["g"])
    return hydrogen_coupling()
