"""Particle-field kinematics: joint trajectories, the relativistic joint
rate, interval invariance, field forces, and the kinetic/energy split.

Everything is dimensionless: speeds are fractions of c, positions are in
Compton units, energies in rest-energy units (m0 = c = 1 internally).
The field slope chi' couples the particle motion to the field motion; a
vanishing slope reduces every quantity to the bare-particle value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy import integrate


@dataclass(frozen=True)
class PFKinematics:
    """Instantaneous state: position x, particle speed fraction v_p,
    field slope chi_prime, and the joint proportionality factor g_pf."""

    x: float = 0.0
    v_p: float = 0.0
    chi_prime: float = 0.0
    g_pf: float = 1.0

    def __post_init__(self):
        if not 0.0 <= self.v_p < 1.0:
            raise ValueError("particle speed fraction must lie in [0, 1)")
        if not self.g_pf > 0:
            raise ValueError("proportionality factor g_pf must be positive")

    @property
    def gamma_p(self) -> float:
        return 1.0 / math.sqrt((1.0 - self.v_p) * (1.0 + self.v_p))

    @property
    def gamma_p_minus_one(self) -> float:
        # v^2/(s(1+s)) avoids cancellation at small speeds
        s = math.sqrt((1.0 - self.v_p) * (1.0 + self.v_p))
        return self.v_p * self.v_p / (s * (1.0 + s))


def trajectory_q(chi: Callable, x_range: tuple[float, float], g_pf: float = 1.0,
                 chi_prime: Optional[Callable] = None,
                 fd_step: float = 1e-5) -> Callable:
    """Joint displacement q(x) = g_pf * int_x0^x sqrt(1 + chi'(t)^2) dt.

    chi must be differentiable on x_range; pass chi_prime to use an
    analytic slope, otherwise a 5-point difference of chi is used.
    The result is strictly increasing with q'(x) = g_pf*sqrt(1+chi'^2).
    """
    if not g_pf > 0:
        raise ValueError("g_pf must be positive")
    x0, x1 = float(x_range[0]), float(x_range[1])
    if not x0 < x1:
        raise ValueError("x_range must be increasing")

    if chi_prime is None:
        h = fd_step

        def slope(x):
            return (-chi(x + 2 * h) + 8.0 * chi(x + h)
                    - 8.0 * chi(x - h) + chi(x - 2 * h)) / (12.0 * h)
    else:
        slope = chi_prime

    def integrand(x):
        dchi = slope(x)
        return math.sqrt(1.0 + dchi * dchi)

    def q(x):
        def one(xv):
            val, _ = integrate.quad(integrand, x0, float(xv),
                                    epsabs=1e-13, epsrel=1e-12, limit=200)
            return g_pf * val

        arr = np.asarray(x, dtype=float)
        if arr.ndim == 0:
            return one(arr)
        return np.array([one(v) for v in arr.ravel()]).reshape(arr.shape)

    return q


@dataclass(frozen=True)
class QdotResult:
    """Joint rate q̇/c under both readings of the exponent.

    value:          +1/2 exponent (recovers v_p at chi' = 0, stays below c)
    printed_value:  -1/2 exponent as printed (>= 1; diverges at rest)
    """

    value: float
    printed_value: float
    superluminal: bool
    at_rest: bool


def relativistic_qdot(kin: PFKinematics, convention: str = "plus-half") -> QdotResult:
    """Joint rate from 1 - 1/[(gamma_p - 1)(1 + chi'^2) + 1]^2.

    Both exponent conventions of the closing power are evaluated; the
    printed -1/2 form yields a rate at or above c (flagged superluminal)
    and is singular at rest, so the +1/2 reading is the default `value`.
    """
    if convention not in ("plus-half", "printed"):
        raise ValueError("convention must be 'plus-half' or 'printed'")
    d = kin.gamma_p_minus_one * (1.0 + kin.chi_prime ** 2)
    at_rest = d == 0.0
    if at_rest:
        plus_half = 0.0
        printed = math.inf
    else:
        # 1 - 1/(1+d)^2 = d(2+d)/(1+d)^2, no cancellation
        root = math.sqrt(d * (2.0 + d))
        plus_half = root / (1.0 + d)
        printed = (1.0 + d) / root
    value = plus_half if convention == "plus-half" else printed
    return QdotResult(value=value, printed_value=printed,
                      superluminal=printed > 1.0 or at_rest, at_rest=at_rest)


def interval_check(dt: float, qdot: float, boost: float) -> tuple[float, float]:
    """Interval ds^2 = dt^2 - dq^2 before and after a standard boost
    (c = 1): dt' = gw(dt - w dq), dq' = gw(dq - w dt)."""
    if not abs(qdot) < 1.0:
        raise ValueError("|qdot| must be below 1")
    if not abs(boost) < 1.0:
        raise ValueError("|boost| must be below 1")
    dq = qdot * dt
    gw = 1.0 / math.sqrt((1.0 - boost) * (1.0 + boost))
    dt_b = gw * (dt - boost * dq)
    dq_b = gw * (dq - boost * dt)
    return dt * dt - dq * dq, dt_b * dt_b - dq_b * dq_b


def field_force(kin: PFKinematics, chi_value: float, chi_pp: float,
                f_particle: float, regime: str = "nonrel",
                k_sq: Optional[float] = None) -> float:
    """Force on a stationary real field (dimensionless, m0 = c = 1).

    nonrel: v_p^2 * chi'' + f_p * chi'   -- the oscillator-like term written
            through chi'' (with an explicit k_sq it is -v_p^2 k^2 chi instead,
            equivalent when chi'' = -k^2 chi)
    rel:    f_p * chi' + gamma_p * v_p^2 * chi''
    The two regimes agree as gamma_p -> 1.
    """
    if regime == "nonrel":
        if k_sq is None:
            oscillating = kin.v_p ** 2 * chi_pp
        else:
            oscillating = -kin.v_p ** 2 * k_sq * chi_value
        return oscillating + f_particle * kin.chi_prime
    if regime == "rel":
        return f_particle * kin.chi_prime + kin.gamma_p * kin.v_p ** 2 * chi_pp
    raise ValueError("regime must be 'nonrel' or 'rel'")


@dataclass(frozen=True)
class EnergyDecomposition:
    """Nonrelativistic energy bookkeeping: the field kinetic part rides on
    the particle kinetic part, K_F = K_P * chi'^2."""

    particle_kinetic: float
    field_kinetic: float
    particle_potential: float
    total: float
    field_potential_residual: float = 0.0


def energy_split(kin: PFKinematics, particle_potential: float,
                 total_energy: Optional[float] = None) -> EnergyDecomposition:
    """K_P = v_p^2/2, K_F = K_P chi'^2; with a supplied total energy the
    leftover E - V_P - K_P - K_F is reported as the field potential."""
    k_p = 0.5 * kin.v_p ** 2
    k_f = k_p * kin.chi_prime ** 2
    if total_energy is None:
        total = particle_potential + k_p + k_f
        residual = 0.0
    else:
        total = total_energy
        residual = total_energy - particle_potential - k_p - k_f
    return EnergyDecomposition(particle_kinetic=k_p, field_kinetic=k_f,
                               particle_potential=particle_potential,
                               total=total, field_potential_residual=residual)


def boost_consistency_diagnostic(v_p: float, chi_prime: float,
                                 boost: float) -> dict[str, float]:
    """Diagnostic only: compare the velocity-addition boost of the joint
    rate against recomputing the rate from the boosted particle speed while
    holding chi' fixed.  The slope's transformation law is not specified
    here, so no equality is asserted."""
    qd = relativistic_qdot(PFKinematics(v_p=v_p, chi_prime=chi_prime)).value
    boosted_direct = (qd - boost) / (1.0 - qd * boost)
    v_boosted = (v_p - boost) / (1.0 - v_p * boost)
    recomputed = relativistic_qdot(
        PFKinematics(v_p=abs(v_boosted), chi_prime=chi_prime)).value
    recomputed = math.copysign(recomputed, v_boosted)
    return {
        "boosted_direct": boosted_direct,
        "recomputed_from_boosted_speed": recomputed,
        "difference": boosted_direct - recomputed,
    }
