"""Closed-form spectra and eigenfunctions of the two relativistic
harmonic-oscillator variants.

In rest-energy and Compton units both variants reduce to

    chi''(x) + (beta - alpha^2 x^2) chi(x) = 0,    beta = E^2 - 1,

with a variant-specific coefficient:

    mass-dependent potential:    alpha   = E * lambda
    mass-independent potential:  alpha^2 = E * lambda^2

where lambda = hbar*w0/(m0 c^2).  The harmonic quantization
2*alpha*(n + 1/2) = beta turns each into a secular equation for E:

    mass-dependent:    E^2 - 2*E*e0 - 1 = 0          (exact root here)
    mass-independent:  E^2 - 2*sqrt(E)*e0 - 1 = 0    (root by bracketing)

with e0 = lambda*(n + 1/2).  Substituting E ~ 1 inside the square root of
the second equation gives the square-root spectrum E = sqrt(1 + 2*e0),
which coincides with the Klein-Gordon result for a nonrelativistic
harmonic potential.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np

from .oracle import bracketed_root
from .units import OscillatorCoupling


class OscillatorVariant(Enum):
    MASS_DEPENDENT = "mass-dependent"
    MASS_INDEPENDENT = "mass-independent"


@dataclass(frozen=True)
class OscillatorLevel:
    """One solved oscillator level in rest-energy units.

    alpha_sq stores the squared coefficient of the reduced equation, so the
    quantization identity reads 2*sqrt(alpha_sq)*(n + 1/2) = beta.  For the
    minus branch (negative-energy root) the identity does not hold and
    `physical` is False.
    """

    n: int
    e0: float
    energy: float
    alpha_sq: float
    beta: float
    variant: OscillatorVariant
    branch: int
    physical: bool

    @property
    def quantization_residual(self) -> float:
        return 2.0 * math.sqrt(abs(self.alpha_sq)) * (self.n + 0.5) - self.beta


def _check_level_args(n: int, branch: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError("quantum number n must be a non-negative integer")
    if branch not in (+1, -1):
        raise ValueError("branch must be +1 or -1")


def energy_mass_dependent(n: int, coupling: OscillatorCoupling,
                          branch: int = +1) -> OscillatorLevel:
    """Exact root of E^2 - 2*E*e0 - 1 = 0 for the chosen sign branch.

    The plus branch satisfies E >= 1 and expands as
    E = 1 + e0 + e0^2/2 - e0^4/8 + ...
    """
    _check_level_args(n, branch)
    e0 = coupling.level_scale(n)
    energy = e0 + branch * math.sqrt(1.0 + e0 * e0)
    return OscillatorLevel(
        n=n, e0=e0, energy=energy,
        alpha_sq=(energy * coupling.lam) ** 2,
        beta=energy * energy - 1.0,
        variant=OscillatorVariant.MASS_DEPENDENT,
        branch=branch, physical=(branch == +1),
    )


def energy_mass_independent(n: int, coupling: OscillatorCoupling,
                            branch: int = +1) -> OscillatorLevel:
    """Square-root spectrum E = +-sqrt(1 + 2*e0) of the mass-independent
    variant (the Klein-Gordon-coinciding result).

    Warns when e0 = lambda*(n+1/2) is not small, where the in-radical
    substitution behind this closed form degrades.
    """
    _check_level_args(n, branch)
    e0 = coupling.check_regime(n)
    radicand = 1.0 + 2.0 * e0
    if radicand < 0:
        raise ValueError("1 + 2*lambda*(n+1/2) must be non-negative")
    energy = branch * math.sqrt(radicand)
    return OscillatorLevel(
        n=n, e0=e0, energy=energy,
        alpha_sq=energy * coupling.lam ** 2,
        beta=energy * energy - 1.0,
        variant=OscillatorVariant.MASS_INDEPENDENT,
        branch=branch, physical=(branch == +1),
    )


def mass_independent_secular_root(n: int, coupling: OscillatorCoupling) -> OscillatorLevel:
    """Unapproximated root of E^2 - 2*sqrt(E)*e0 - 1 = 0 by bracketing.

    Differs from the square-root spectrum at second order: the secular
    root is E = 1 + e0 - e0^3/8 + O(e0^4) while sqrt(1 + 2*e0) carries an
    extra -e0^2/2.
    """
    _check_level_args(n, +1)
    e0 = coupling.level_scale(n)
    if e0 == 0.0:
        energy = 1.0
    else:
        f = lambda en: en * en - 2.0 * math.sqrt(en) * e0 - 1.0
        energy = bracketed_root(f, 1.0, 1.0 + 2.0 * e0 + 1e-9, tol=1e-15)
    return OscillatorLevel(
        n=n, e0=e0, energy=energy,
        alpha_sq=energy * coupling.lam ** 2,
        beta=energy * energy - 1.0,
        variant=OscillatorVariant.MASS_INDEPENDENT,
        branch=+1, physical=True,
    )


def reduced_equation_coefficients(variant: OscillatorVariant, energy: float,
                                  coupling: OscillatorCoupling) -> tuple[float, float]:
    """(alpha_sq, beta) of the reduced equation chi'' + (beta - alpha^2 x^2) chi = 0."""
    if not energy > 0:
        raise ValueError("energy must be positive")
    beta = energy * energy - 1.0
    if variant is OscillatorVariant.MASS_DEPENDENT:
        alpha_sq = (energy * coupling.lam) ** 2
    elif variant is OscillatorVariant.MASS_INDEPENDENT:
        alpha_sq = energy * coupling.lam ** 2
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return alpha_sq, beta


def hermite_polynomial(n: int, z):
    """Physicists' Hermite H_n by the three-term recurrence
    H_0 = 1, H_1 = 2z, H_{k+1} = 2z H_k - 2k H_{k-1}."""
    z = np.asarray(z, dtype=float)
    h_prev = np.ones_like(z)
    if n == 0:
        return h_prev
    h = 2.0 * z
    for k in range(1, n):
        h, h_prev = 2.0 * z * h - 2.0 * k * h_prev, h
    return h


def eigenfunction(n: int, alpha: float) -> Callable:
    """Normalized Hermite-Gaussian level function

        chi_n(x) = (2^n n!)^(-1/2) (alpha/pi)^(1/4)
                   * exp(-alpha x^2 / 2) * H_n(sqrt(alpha) x)

    with x in Compton units and alpha the (linear) coefficient of the
    reduced equation.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError("quantum number n must be a non-negative integer")
    if not alpha > 0:
        raise ValueError("alpha must be strictly positive")
    norm = (alpha / math.pi) ** 0.25 / math.sqrt(2.0 ** n * math.factorial(n))
    sqrt_a = math.sqrt(alpha)

    def chi(x):
        x = np.asarray(x, dtype=float)
        return norm * np.exp(-0.5 * alpha * x * x) * hermite_polynomial(n, sqrt_a * x)

    return chi


def level_eigenfunction(level: OscillatorLevel, *,
                        rest_energy_alpha: bool = False) -> Callable:
    """Eigenfunction of a solved level.

    By default alpha is the self-consistent sqrt(alpha_sq) of the level.
    With rest_energy_alpha=True the coefficient is evaluated at E = 1
    instead (alpha = lambda for both variants), reproducing the common
    weak-coupling simplification.
    """
    if not level.physical:
        raise ValueError("minus-branch levels have no normalizable eigenfunction")
    if rest_energy_alpha:
        alpha = level.e0 / (level.n + 0.5)
    else:
        alpha = math.sqrt(level.alpha_sq)
    return eigenfunction(level.n, alpha)
